//! Univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector and structural equality is polynomial
//! equality.

mod factor;
pub mod modp;

pub use factor::{factor, factor_squarefree_int};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn x() -> Self {
        Poly { c: vec![Q::zero(), Q::one()] }
    }

    pub fn constant(v: Q) -> Self {
        Poly::new(vec![v])
    }

    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| q(v)).collect())
    }

    pub fn from_int(c: &[BigInt]) -> Self {
        Poly::new(c.iter().map(|v| Q::from_integer(v.clone())).collect())
    }

    /// `x^k`
    pub fn monomial(k: usize, v: Q) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = v;
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.c.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, k: &Q) -> Poly {
        Poly::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        self.scale(&(Q::one() / lc))
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * q(i as i64))
                .collect(),
        )
    }

    /// `self(other(x))`
    pub fn compose(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(a.clone());
        }
        acc
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Q::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] / &lc;
            for (j, dj) in d.c.iter().enumerate() {
                r[i - dd + j] -= &f * dj;
            }
            quo[i - dd] = f;
        }
        r.truncate(dd);
        (Poly::new(quo), Poly::new(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (qt, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&qt * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&qt * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Q::one() / r0.leading();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = Poly::gcd(self, &self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Clears denominators and content: a primitive integer polynomial with
    /// positive leading coefficient and the same roots.
    pub fn primitive_int(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .c
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let mut ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|a| (a * Q::from_integer(den.clone())).to_integer())
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, a| acc.gcd(a));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        for a in ints.iter_mut() {
            *a = &*a / &content * &sign;
        }
        ints
    }

    /// Sturm chain `p, p', -rem(p, p'), ...`
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        chain
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Q, hi: &Q) -> usize {
        let chain = self.sturm_chain();
        let v = |x: &Q| sign_changes(chain.iter().map(|p| p.eval(x)));
        v(lo).saturating_sub(v(hi))
    }

    /// Number of distinct real roots strictly greater than `lo`.
    pub fn count_roots_above(&self, lo: &Q) -> usize {
        let chain = self.sturm_chain();
        let at_lo = sign_changes(chain.iter().map(|p| p.eval(lo)));
        let at_inf = sign_changes(chain.iter().map(|p| p.leading()));
        at_lo.saturating_sub(at_inf)
    }
}

fn sign_changes(vals: impl Iterator<Item = Q>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for v in vals {
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.c.into_iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if a.is_negative() { '-' } else { '+' })?;
            } else if a.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let abs = a.abs();
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{abs}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{abs}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Normalized Chebyshev polynomials: `C_k(2 cos a) = 2 cos(k a)`.
pub fn chebyshev_c(k: usize) -> Poly {
    let mut prev = Poly::from_i64(&[2]);
    if k == 0 {
        return prev;
    }
    let mut cur = Poly::x();
    for _ in 1..k {
        let next = &(&Poly::x() * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Cyclotomic polynomial `Φ_n` over the integers.
pub fn cyclotomic(n: usize) -> Poly {
    assert!(n >= 1);
    let mut p = &Poly::monomial(n, Q::one()) - &Poly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.div_rem(&cyclotomic(d)).0;
        }
    }
    p
}

/// Minimal polynomial of `2 cos(2π / n)` over the rationals.
pub fn real_cyclotomic_minpoly(n: usize) -> Poly {
    match n {
        1 => return Poly::from_i64(&[-2, 1]),
        2 => return Poly::from_i64(&[2, 1]),
        _ => {}
    }
    let phi = cyclotomic(n);
    let k = phi.degree().unwrap() / 2;
    let mut psi = Poly::constant(phi.coeff(k));
    for j in 1..=k {
        psi = &psi + &chebyshev_c(j).scale(&phi.coeff(k + j));
    }
    psi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let a = Poly::from_i64(&[1, 2, 3, 4, 5]);
        let b = Poly::from_i64(&[-1, 0, 2]);
        let (qt, r) = a.div_rem(&b);
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_and_bezout() {
        let a = &Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[2, 1]);
        let b = &Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[3, 0, 1]);
        let (g, s, t) = Poly::ext_gcd(&a, &b);
        assert_eq!(g, Poly::from_i64(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), Poly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(4), Poly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), Poly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), Poly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn real_cyclotomic_values() {
        // 2cos(2π/5) = (√5 - 1)/2 is a root of y^2 + y - 1
        assert_eq!(real_cyclotomic_minpoly(5), Poly::from_i64(&[-1, 1, 1]));
        // 2cos(π/5) = 2cos(2π/10) is a root of y^2 - y - 1
        assert_eq!(real_cyclotomic_minpoly(10), Poly::from_i64(&[-1, -1, 1]));
        assert_eq!(real_cyclotomic_minpoly(6), Poly::from_i64(&[-1, 1]));
        assert_eq!(real_cyclotomic_minpoly(12), Poly::from_i64(&[-3, 0, 1]));
        for n in 3..40 {
            let p = real_cyclotomic_minpoly(n);
            let root = 2.0 * (2.0 * std::f64::consts::PI / n as f64).cos();
            let v: f64 = p
                .coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, a| acc * root + to_f64(a));
            assert!(v.abs() < 1e-6, "n = {n}: {v}");
        }
    }

    #[test]
    fn sturm_counts() {
        // (x - 1)(x - 2)(x + 3)
        let p = &(&Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[-2, 1])) * &Poly::from_i64(&[3, 1]);
        assert_eq!(p.count_roots(&q(0), &q(5)), 2);
        assert_eq!(p.count_roots(&q(-5), &q(5)), 3);
        assert_eq!(p.count_roots(&qf(3, 2), &q(5)), 1);
        assert_eq!(p.count_roots_above(&q(0)), 2);
    }

    #[test]
    fn chebyshev_matches_cosine() {
        for k in 0..8 {
            let a = 0.37f64;
            let v: f64 = chebyshev_c(k)
                .coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * (2.0 * a.cos()) + to_f64(c));
            assert!((v - 2.0 * (k as f64 * a).cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn primitive_integer_form() {
        let p = Poly::new(vec![qf(-1, 4), qf(-1, 2), q(1)]);
        assert_eq!(p.primitive_int(), vec![BigInt::from(-1), BigInt::from(-2), BigInt::from(4)]);
    }

    fn to_f64(a: &Q) -> f64 {
        use num_traits::ToPrimitive;
        a.to_f64().unwrap()
    }
}
