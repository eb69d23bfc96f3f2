//! The group `A3` of matrices
//!
//! ```text
//! [1 x z]
//! [0 u y]
//! [0 0 1]
//! ```
//!
//! with `x, y, z` in `Z[1/p]` and `u` a unit, its quotient `Γ = A3 / Z` by
//! the integer points of the centre, and the acentrality computation for
//! the image of the diagonal subgroup.

mod laurent;

pub use laurent::Laurent;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::Q;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelsError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("the diagonal element needs a nonzero exponent")]
    ZeroExponent,
}

/// Commutative ring operations needed by `A3`; `inv_unit` is `None` for
/// non-units.
pub trait UnitRing: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv_unit(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A rational whose reduced denominator is a power of `p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZInvP {
    p: u64,
    v: Q,
}

impl ZInvP {
    pub fn new(p: u64, v: Q) -> Option<Self> {
        let mut d = v.denom().clone();
        let bp = BigInt::from(p);
        while d.is_multiple_of(&bp) {
            d /= &bp;
        }
        d.is_one().then_some(ZInvP { p, v })
    }

    pub fn int(p: u64, a: i64) -> Self {
        ZInvP { p, v: Q::from_integer(a.into()) }
    }

    /// `a / p^k`.
    pub fn frac(p: u64, a: i64, k: u32) -> Self {
        ZInvP { p, v: Q::new(a.into(), BigInt::from(p).pow(k)) }
    }

    /// `sign * p^n`.
    pub fn unit(p: u64, sign: i8, n: i64) -> Self {
        let pk = BigInt::from(p).pow(n.unsigned_abs() as u32);
        let s = BigInt::from(sign.signum());
        let v = if n >= 0 { Q::from_integer(s * pk) } else { Q::new(s, pk) };
        ZInvP { p, v }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> &Q {
        &self.v
    }

    pub fn is_integer(&self) -> bool {
        self.v.is_integer()
    }

    /// Representative of the class mod `Z` in `[0, 1)`.
    pub fn fract(&self) -> ZInvP {
        ZInvP { p: self.p, v: &self.v - self.v.floor() }
    }

    /// `(sign, n)` with `self = sign * p^n`, if `self` is a unit.
    pub fn unit_parts(&self) -> Option<(i8, i64)> {
        if self.v.is_zero() {
            return None;
        }
        let bp = BigInt::from(self.p);
        let strip = |mut a: BigInt| {
            let mut k = 0i64;
            while a.is_multiple_of(&bp) {
                a /= &bp;
                k += 1;
            }
            (a, k)
        };
        let (num, a) = strip(self.v.numer().abs());
        let (den, b) = strip(self.v.denom().clone());
        (num.is_one() && den.is_one()).then(|| (if self.v.is_negative() { -1 } else { 1 }, a - b))
    }

    pub fn div_p_power(&self, k: u32) -> ZInvP {
        ZInvP { p: self.p, v: &self.v / Q::from_integer(BigInt::from(self.p).pow(k)) }
    }
}

impl fmt::Debug for ZInvP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl UnitRing for ZInvP {
    fn zero_like(&self) -> Self {
        ZInvP::int(self.p, 0)
    }

    fn one_like(&self) -> Self {
        ZInvP::int(self.p, 1)
    }

    fn add(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p, "mixed primes");
        ZInvP { p: self.p, v: &self.v + &o.v }
    }

    fn neg(&self) -> Self {
        ZInvP { p: self.p, v: -self.v.clone() }
    }

    fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p, "mixed primes");
        ZInvP { p: self.p, v: &self.v * &o.v }
    }

    fn inv_unit(&self) -> Option<Self> {
        self.unit_parts().map(|(s, n)| ZInvP::unit(self.p, s, -n))
    }

    fn is_zero(&self) -> bool {
        self.v.is_zero()
    }
}

#[derive(Clone, PartialEq)]
pub struct A3<R> {
    pub x: R,
    pub y: R,
    pub z: R,
    pub u: R,
}

impl<R: UnitRing> A3<R> {
    /// `None` unless `u` is a unit.
    pub fn new(x: R, y: R, z: R, u: R) -> Option<Self> {
        u.inv_unit()?;
        Some(A3 { x, y, z, u })
    }

    pub fn identity_like(r: &R) -> Self {
        A3 { x: r.zero_like(), y: r.zero_like(), z: r.zero_like(), u: r.one_like() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        A3 {
            x: o.x.add(&self.x.mul(&o.u)),
            y: self.u.mul(&o.y).add(&self.y),
            z: o.z.add(&self.x.mul(&o.y)).add(&self.z),
            u: self.u.mul(&o.u),
        }
    }

    pub fn inv(&self) -> Self {
        let ui = self.u.inv_unit().expect("u is a unit");
        A3 {
            x: self.x.mul(&ui).neg(),
            y: self.y.mul(&ui).neg(),
            z: self.z.neg().add(&self.x.mul(&self.y).mul(&ui)),
            u: ui,
        }
    }

    /// `g h g^-1`.
    pub fn conj(&self, h: &Self) -> Self {
        self.mul(h).mul(&self.inv())
    }

    /// `g h g^-1 h^-1`.
    pub fn commutator(&self, h: &Self) -> Self {
        self.conj(h).mul(&h.inv())
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero() && self.u == self.u.one_like()
    }

    /// Centre of `A3`: `u = 1`, `x = y = 0`.
    pub fn is_central(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.u == self.u.one_like()
    }
}

impl<R: fmt::Debug> fmt::Debug for A3<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[x={:?}, y={:?}, z={:?}, u={:?}]", self.x, self.y, self.z, self.u)
    }
}

impl A3<ZInvP> {
    pub fn diagonal(p: u64, sign: i8, n: i64) -> Self {
        A3::identity_like(&ZInvP::int(p, 0)).with_u(ZInvP::unit(p, sign, n))
    }

    fn with_u(mut self, u: ZInvP) -> Self {
        self.u = u;
        self
    }

    pub fn to_json(&self) -> Value {
        json!({"x": self.x.v.to_string(), "y": self.y.v.to_string(), "z": self.z.v.to_string(), "u": self.u.v.to_string()})
    }
}

/// An element of `Γ = A3 / Z`, stored with `z` in `[0, 1)`.
#[derive(Clone, PartialEq, Debug)]
pub struct GammaElement(A3<ZInvP>);

impl GammaElement {
    pub fn new(a: A3<ZInvP>) -> Self {
        let z = a.z.fract();
        GammaElement(A3 { z, ..a })
    }

    pub fn lift(&self) -> &A3<ZInvP> {
        &self.0
    }

    pub fn mul(&self, o: &Self) -> Self {
        GammaElement::new(self.0.mul(&o.0))
    }
}

/// Whether `g` and `h` commute in `Γ`: the commutator of the lifts is an
/// integer point of the centre.
pub fn gamma_commutes(g: &GammaElement, h: &GammaElement) -> bool {
    let c = g.0.commutator(&h.0);
    c.is_central() && c.z.is_integer()
}

/// Whether the images commute in `Γ / C(Γ)`: the commutator of the lifts
/// is central in `A3`.
pub fn commutes_mod_centre(g: &GammaElement, h: &GammaElement) -> bool {
    g.0.commutator(&h.0).is_central()
}

/// `x, y, z` uniform over `a / p^k` with `|a| <= 10 p^k`, `k <= 4`, and
/// `u = ±p^n` with `|n| <= 3`. Each of `x`, `y` is forced to zero with
/// probability 1/4 so that commuting samples occur.
pub fn sample_element(p: u64, rng: &mut impl Rng) -> A3<ZInvP> {
    let mut coord = |force_zero: bool| {
        if force_zero && rng.gen_bool(0.25) {
            return ZInvP::int(p, 0);
        }
        let k = rng.gen_range(0..=4u32);
        let bound = 10 * (p as i64).pow(k);
        ZInvP::frac(p, rng.gen_range(-bound..=bound), k)
    };
    let (x, y, z) = (coord(true), coord(true), coord(false));
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let u = ZInvP::unit(p, sign, rng.gen_range(-3..=3));
    A3 { x, y, z, u }
}

#[derive(Clone, Debug)]
pub struct AcentralReport {
    pub prime: u64,
    pub g: A3<ZInvP>,
    pub symbolic_pass: bool,
    pub symbolic_detail: String,
    pub trials: usize,
    /// Samples whose image commutes with `g` modulo the centre.
    pub commuting_samples: usize,
    pub counterexamples: Vec<A3<ZInvP>>,
}

impl AcentralReport {
    pub fn passed(&self) -> bool {
        self.symbolic_pass && self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let pf = |b: bool| if b { "pass" } else { "fail" };
        json!({
            "prime": self.prime,
            "g": self.g.to_json(),
            "symbolic": pf(self.symbolic_pass),
            "symbolic_detail": self.symbolic_detail,
            "randomized": pf(self.counterexamples.is_empty()),
            "trials": self.trials,
            "commuting_samples": self.commuting_samples,
            "counterexamples": self.counterexamples.iter().map(A3::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Symbolic part: over Laurent polynomials in `x, y, z, u, v` the
/// commutator of `diag(1, u, 1)` with `(x, y, z, v)` has `x`-entry
/// `x (u^-1 - 1) v^-1`, `y`-entry `y (u - 1)` and `u`-entry `1`.
pub fn symbolic_commutator_check() -> Result<(), String> {
    let var = |i, e| Laurent::var(5, i, e);
    let one = Laurent::constant(5, Q::one());
    let (x, y, z, u, v) = (var(0, 1), var(1, 1), var(2, 1), var(3, 1), var(4, 1));
    let g = A3 { x: one.zero_like(), y: one.zero_like(), z: one.zero_like(), u: u.clone() };
    let h = A3 { x: x.clone(), y: y.clone(), z: z.clone(), u: v.clone() };
    let conj = g.conj(&h);
    let expected = A3 { x: x.mul(&var(3, -1)), y: u.mul(&y), z: z.clone(), u: v.clone() };
    if conj != expected {
        return Err(format!("conjugate is {conj:?}"));
    }
    let c = g.commutator(&h);
    let cx = x.mul(&var(3, -1).sub(&one)).mul(&var(4, -1));
    let cy = y.mul(&u.sub(&one));
    if c.x != cx || c.y != cy || c.u != one {
        return Err(format!("commutator is {c:?}"));
    }
    Ok(())
}

pub fn acentral_check(p: u64, sign: i8, n: i64, trials: usize, seed: u64) -> Result<AcentralReport, AbelsError> {
    if !is_prime(p) {
        return Err(AbelsError::NotPrime(p));
    }
    if n == 0 {
        return Err(AbelsError::ZeroExponent);
    }
    let g = A3::diagonal(p, sign, n);
    let (symbolic_pass, symbolic_detail) = match symbolic_commutator_check() {
        Ok(()) => (
            true,
            "conjugation by g maps (x, y) to (x/u, u y); a central commutator needs x (1 - 1/u) = 0 and y (u - 1) = 0, so x = y = 0 as u != 1".to_string(),
        ),
        Err(e) => (false, e),
    };
    let gg = GammaElement::new(g.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut commuting = 0;
    let mut counterexamples = Vec::new();
    for _ in 0..trials {
        let h = GammaElement::new(sample_element(p, &mut rng));
        if commutes_mod_centre(&gg, &h) {
            commuting += 1;
            if !(h.0.x.is_zero() && h.0.y.is_zero()) {
                counterexamples.push(h.0.clone());
            }
        }
    }
    Ok(AcentralReport {
        prime: p,
        g,
        symbolic_pass,
        symbolic_detail,
        trials,
        commuting_samples: commuting,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(p: u64, x: (i64, u32), y: (i64, u32), z: (i64, u32), u: (i8, i64)) -> A3<ZInvP> {
        A3::new(ZInvP::frac(p, x.0, x.1), ZInvP::frac(p, y.0, y.1), ZInvP::frac(p, z.0, z.1), ZInvP::unit(p, u.0, u.1))
            .unwrap()
    }

    #[test]
    fn zinvp_membership() {
        assert!(ZInvP::new(3, Q::new(1.into(), 9.into())).is_some());
        assert!(ZInvP::new(3, Q::new(1.into(), 6.into())).is_none());
        assert_eq!(ZInvP::frac(2, 3, 2).unit_parts(), None);
        assert_eq!(ZInvP::frac(2, -1, 3).unit_parts(), Some((-1, -3)));
        assert_eq!(ZInvP::frac(5, 7, 1).fract().value(), &Q::new(2.into(), 5.into()));
        assert_eq!(ZInvP::frac(5, -1, 1).fract().value(), &Q::new(4.into(), 5.into()));
    }

    #[test]
    fn group_laws() {
        let p = 3;
        let m = elem(p, (1, 1), (-2, 0), (5, 2), (-1, 2));
        let id = A3::identity_like(&ZInvP::int(p, 0));
        assert_eq!(id.mul(&m), m);
        assert!(m.mul(&m.inv()).is_identity());
        let d = A3::diagonal(p, 1, 1).inv();
        assert_eq!(d.u, ZInvP::frac(p, 1, 1));
        assert!(A3::new(ZInvP::int(p, 0), ZInvP::int(p, 0), ZInvP::int(p, 0), ZInvP::int(p, 2)).is_none());
    }

    #[test]
    fn gamma_examples() {
        let p = 3;
        let g = GammaElement::new(A3::diagonal(p, 1, 1));
        let h = GammaElement::new(elem(p, (1, 0), (0, 0), (0, 0), (1, 0)));
        assert!(!gamma_commutes(&g, &h));
        let d = GammaElement::new(A3::diagonal(p, -1, 2));
        assert!(gamma_commutes(&g, &d));
        let c = GammaElement::new(elem(p, (0, 0), (0, 0), (7, 3), (1, 0)));
        assert!(gamma_commutes(&g, &c));
        let p5 = GammaElement::new(A3::diagonal(5, 1, 1));
        let y = GammaElement::new(elem(5, (0, 0), (1, 1), (0, 0), (1, 0)));
        assert!(!gamma_commutes(&p5, &y));
        assert_eq!(p5.lift().commutator(y.lift()).y, ZInvP::frac(5, 4, 1));
    }

    #[test]
    fn z_is_reduced_mod_one() {
        let a = GammaElement::new(elem(2, (1, 0), (0, 0), (7, 1), (1, 0)));
        assert_eq!(a.lift().z, ZInvP::frac(2, 1, 1));
    }

    #[test]
    fn symbolic_passes() {
        assert_eq!(symbolic_commutator_check(), Ok(()));
    }

    #[test]
    fn small_randomized_run() {
        let r = acentral_check(3, 1, 1, 500, 1).unwrap();
        assert!(r.passed());
        assert!(r.commuting_samples > 0);
        assert!(acentral_check(4, 1, 1, 1, 1).is_err());
        assert!(acentral_check(3, 1, 0, 1, 1).is_err());
    }
}
