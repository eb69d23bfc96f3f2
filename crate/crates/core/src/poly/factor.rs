//! Factorization over the rationals: squarefree decomposition, then
//! Zassenhaus (modular factorization, Hensel lifting, recombination of
//! lifted factors) on each squarefree part.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{modp, Poly, Q};

/// Monic irreducible factors of `p` with multiplicities, sorted by degree
/// then coefficients. Constants factor to the empty list.
pub fn factor(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    // Yun's squarefree decomposition.
    let f = p.monic();
    let fp = f.derivative();
    let a0 = Poly::gcd(&f, &fp);
    let mut b = f.div_rem(&a0).0;
    let mut c = fp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = Poly::gcd(&b, &d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            for g in factor_squarefree_int(&a.primitive_int()) {
                out.push((Poly::from_int(&g).monic(), i));
            }
        }
        i += 1;
    }
    out.sort_by(|(x, _), (y, _)| {
        x.degree()
            .cmp(&y.degree())
            .then_with(|| x.coeffs().cmp(y.coeffs()))
    });
    out
}

/// Irreducible factors of a primitive squarefree integer polynomial, each
/// primitive with positive leading coefficient.
pub fn factor_squarefree_int(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // x | f splits off trivially and keeps the modular images well behaved.
    if f[0].is_zero() {
        let mut rest = factor_squarefree_int(&f[1..]);
        rest.push(vec![BigInt::zero(), BigInt::one()]);
        return rest;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let lc = f.last().unwrap().clone();

    // Pick the prime (among a few good ones) with the fewest modular factors.
    let mut best: Option<(u64, Vec<modp::FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fm = modp::reduce_int(f, p);
        if fm.len() != f.len() || !modp::is_squarefree(&fm, p) {
            continue;
        }
        let facs = modp::factor_squarefree(&modp::monic(&fm, p), p, &mut rng);
        if facs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (p, local) = best.expect("no suitable prime for factorization");

    // Coefficients of any factor scaled by lc are bounded by
    // |lc| * 2^n * ||f||_1; lift past twice that.
    let norm: BigInt = f.iter().map(|a| a.abs()).sum();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &local, p, k);
    recombine(f.to_vec(), lifted, &pk)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..2000).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn to_int(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn int_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|x| x.mod_floor(m)).collect();
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn to_fp(a: &[BigInt], p: u64) -> modp::FpPoly {
    modp::reduce_int(a, p)
}

/// Lifts `f ≡ lc · Π g_i (mod p)` to the same shape modulo `p^k`, keeping
/// every lifted `g_i` monic.
fn hensel_lift(f: &[BigInt], local: &[modp::FpPoly], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let pk = BigInt::from(p).pow(k);
    let mut out = Vec::new();
    let mut target = int_mod(f, &pk);
    for (i, g) in local.iter().enumerate() {
        if i == local.len() - 1 {
            // target ≡ lc · g; normalize to monic.
            let lc = target.last().unwrap().clone();
            let inv = mod_inverse(&lc, &pk);
            out.push(int_mod(&target.iter().map(|c| c * &inv).collect::<Vec<_>>(), &pk));
            break;
        }
        let lc_p = to_fp(&[target.last().unwrap().clone()], p)[0];
        let rest = local[i + 1..]
            .iter()
            .fold(vec![lc_p], |acc, h| modp::mul(&acc, h, p));
        let (gl, hl) = lift_pair(&target, g, &rest, p, k);
        out.push(gl);
        target = hl;
    }
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible modulo p^k");
    e.x.mod_floor(m)
}

/// Linear Hensel lifting of `f ≡ g h (mod p)`, `g` monic, up to `p^k`.
fn lift_pair(
    f: &[BigInt],
    g: &modp::FpPoly,
    h: &modp::FpPoly,
    p: u64,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, s, t) = modp::ext_gcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut gl = to_int(g);
    let mut hl = to_int(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let prod = int_mul(&gl, &hl);
        let n = f.len().max(prod.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| {
                f.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default()
            })
            .collect();
        let pj_next = &pj * &pb;
        if diff.iter().all(|c| (c % &pj_next).is_zero()) {
            pj = pj_next;
            continue;
        }
        let e: Vec<BigInt> = diff.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, p);
        let (qt, dg) = modp::div_rem(&modp::mul(&e, &t, p), g, p);
        let dh = modp::add(&modp::mul(&e, &s, p), &modp::mul(&qt, h, p), p);
        gl = add_scaled(&gl, &dg, &pj);
        hl = add_scaled(&hl, &dh, &pj);
        pj = pj_next;
        gl = int_mod(&gl, &pj);
        hl = int_mod(&hl, &pj);
    }
    (int_mod(&gl, &pj), int_mod(&hl, &pj))
}

fn add_scaled(a: &[BigInt], d: &[u64], scale: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(d.len());
    (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_default()
                + BigInt::from(d.get(i).copied().unwrap_or(0)) * scale
        })
        .collect()
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    a.iter()
        .map(|x| {
            let r = x.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn primitive(a: Vec<BigInt>) -> Vec<BigInt> {
    let mut a = a;
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    let c = a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if a.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    a.into_iter().map(|x| x / &c * &sign).collect()
}

/// Exact division in `Z[x]`; `None` when `d` does not divide `f`.
fn int_div_exact(f: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    let (qt, r) = Poly::from_int(f).div_rem(&Poly::from_int(d));
    if !r.is_zero() || qt.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(qt.coeffs().iter().map(Q::to_integer).collect())
}

fn recombine(mut f: Vec<BigInt>, mut local: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<Vec<BigInt>> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= local.len() {
        let mut hit = None;
        for subset in combinations(local.len(), size) {
            let lc = f.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc], |acc, &i| int_mod(&int_mul(&acc, &local[i]), pk));
            let cand = primitive(symmetric(&prod, pk));
            if cand.len() < 2 {
                continue;
            }
            if let Some(qt) = int_div_exact(&f, &cand) {
                hit = Some((subset, cand, qt));
                break;
            }
        }
        match hit {
            Some((subset, cand, qt)) => {
                found.push(cand);
                f = primitive(qt);
                local = local
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    found.push(f);
    found
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
