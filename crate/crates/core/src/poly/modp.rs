//! Dense polynomials over a small prime field `F_p` (odd `p < 2^31`).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

pub type FpPoly = Vec<u64>;

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn reduce_int(c: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    trim(c.iter().map(|a| a.mod_floor(&pb).to_u64().unwrap()).collect())
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow_u64(a, p - 2, p)
}

fn pow_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    trim(c)
}

pub fn scale(a: &[u64], k: u64, p: u64) -> FpPoly {
    trim(a.iter().map(|&x| x * k % p).collect())
}

pub fn monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv(lc, p), p),
    }
}

pub fn div_rem(a: &[u64], d: &[u64], p: u64) -> (FpPoly, FpPoly) {
    assert!(!d.is_empty());
    let dd = d.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= dd {
        return (Vec::new(), trim(r));
    }
    let li = inv(*d.last().unwrap(), p);
    let mut quo = vec![0u64; r.len() - dd];
    for i in (dd..r.len()).rev() {
        if r[i] == 0 {
            continue;
        }
        let f = r[i] * li % p;
        for (j, &dj) in d.iter().enumerate() {
            r[i - dd + j] = (r[i - dd + j] + p - f * dj % p) % p;
        }
        quo[i - dd] = f;
    }
    r.truncate(dd);
    (trim(quo), trim(r))
}

pub fn rem(a: &[u64], d: &[u64], p: u64) -> FpPoly {
    div_rem(a, d, p).1
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s a + t b = g` monic.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (qt, r) = div_rem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&qt, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = sub(&t0, &mul(&qt, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let li = inv(*r0.last().expect("ext_gcd of zeros"), p);
    (scale(&r0, li, p), scale(&s0, li, p), scale(&t0, li, p))
}

pub fn derivative(a: &[u64], p: u64) -> FpPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &x)| (i as u64 % p) * x % p).collect())
}

pub fn pow_mod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FpPoly {
    let mut acc = vec![1u64];
    let b = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
    }
    rem(&acc, m, p)
}

pub fn is_squarefree(a: &[u64], p: u64) -> bool {
    let d = derivative(a, p);
    !d.is_empty() && gcd(a, &d, p).len() == 1
}

/// Factors a monic squarefree polynomial into monic irreducibles.
pub fn factor_squarefree<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<FpPoly> {
    let mut out = Vec::new();
    for (d, g) in distinct_degree(f, p) {
        equal_degree(&g, d, p, rng, &mut out);
    }
    out
}

fn distinct_degree(f: &[u64], p: u64) -> Vec<(usize, FpPoly)> {
    let mut out = Vec::new();
    let mut f = monic(f, p);
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            out.push((f.len() - 1, f.clone()));
            break;
        }
        h = pow_mod(&h, &pe, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if g.len() > 1 {
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((d, g));
        }
    }
    out
}

fn equal_degree<R: Rng>(g: &[u64], d: usize, p: u64, rng: &mut R, out: &mut Vec<FpPoly>) {
    let n = g.len() - 1;
    if n == d {
        out.push(monic(g, p));
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::from(1u32)) / BigUint::from(2u32);
    loop {
        let a: FpPoly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub(&pow_mod(&a, &e, g, p), &[1], p);
        let h = gcd(g, &b, p);
        if h.len() > 1 && h.len() < g.len() {
            let rest = div_rem(g, &h, p).0;
            equal_degree(&h, d, p, rng, out);
            equal_degree(&rest, d, p, rng, out);
            return;
        }
    }
}

pub fn is_zero(a: &[u64]) -> bool {
    a.iter().all(Zero::is_zero)
}
