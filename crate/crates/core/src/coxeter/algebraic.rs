//! Real algebraic numbers as (minimal polynomial, isolating interval).

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::poly::{factor, q, Poly, Q};

use super::field::{FieldElem, RealCyclotomicField};
use super::CoxeterError;

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicReal {
    /// Primitive, irreducible, positive leading coefficient.
    minpoly: Vec<BigInt>,
    lo: Q,
    hi: Q,
}

impl AlgebraicReal {
    pub fn from_rational(v: Q) -> Self {
        let p = Poly::new(vec![-v.clone(), Q::one()]).primitive_int();
        AlgebraicReal { minpoly: p, lo: v.clone(), hi: v }
    }

    /// The unique root of the irreducible `minpoly` in `(lo, hi]`.
    pub fn new(minpoly: &Poly, lo: Q, hi: Q) -> Result<Self, CoxeterError> {
        let p = Poly::from_int(&minpoly.primitive_int());
        if p.degree() == Some(1) {
            let r = -p.coeff(0) / p.coeff(1);
            if r <= lo || r > hi {
                return Err(CoxeterError::NotIsolating);
            }
            return Ok(AlgebraicReal::from_rational(r));
        }
        if factor(&p).len() != 1 || p.count_roots(&lo, &hi) != 1 {
            return Err(CoxeterError::NotIsolating);
        }
        Ok(AlgebraicReal { minpoly: p.primitive_int(), lo, hi })
    }

    /// Converts a field element: the minimal polynomial is the irreducible
    /// factor of the characteristic polynomial of multiplication that
    /// vanishes at the element, and the interval is shrunk until it isolates.
    pub fn from_field(f: &RealCyclotomicField, a: &FieldElem) -> Result<Self, CoxeterError> {
        if let Some(r) = a.as_rational() {
            return Ok(AlgebraicReal::from_rational(r));
        }
        let cp = f.multiplication_matrix(a).charpoly();
        let min = factor(&cp)
            .into_iter()
            .map(|(g, _)| g)
            .find(|g| f.eval_poly(g, a).is_zero())
            .expect("element is a root of its characteristic polynomial");
        let mut width = q(1);
        loop {
            let (lo, hi) = f.enclosure(a, &width)?;
            // widen on the left so the half-open interval contains the root
            let lo = &lo - (&hi - &lo);
            if min.count_roots(&lo, &hi) == 1 {
                return AlgebraicReal::new(&min, lo, hi);
            }
            width /= q(1 << 16);
            if width < Q::new(BigInt::one(), BigInt::one() << 400u32) {
                return Err(CoxeterError::PrecisionExhausted);
            }
        }
    }

    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    pub fn minpoly_poly(&self) -> Poly {
        Poly::from_int(&self.minpoly)
    }

    pub fn interval(&self) -> (&Q, &Q) {
        (&self.lo, &self.hi)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    /// A new value with interval width at most `width`.
    pub fn refine(&self, width: &Q) -> AlgebraicReal {
        if self.is_rational() {
            return self.clone();
        }
        let p = self.minpoly_poly();
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) / q(2);
            if p.count_roots(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        AlgebraicReal { minpoly: self.minpoly.clone(), lo, hi }
    }

    pub fn sign(&self) -> Ordering {
        if self.is_rational() {
            return self.hi.cmp(&Q::zero());
        }
        let p = self.minpoly_poly();
        // irreducible of degree >= 2, so 0 is not a root
        if p.count_roots(&self.lo, &Q::zero()) == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.refine(&Q::new(BigInt::one(), BigInt::one() << 60u32));
        ((&r.lo + &r.hi) / q(2)).to_f64().unwrap()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct J {
            minpoly: Vec<String>,
            interval: [String; 2],
            approx: f64,
        }
        serde_json::to_value(J {
            minpoly: self.minpoly.iter().map(|c| c.to_string()).collect(),
            interval: [self.lo.to_string(), self.hi.to_string()],
            approx: self.to_f64(),
        })
        .unwrap()
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.hi);
        }
        write!(f, "root of {} in ({}, {}]", self.minpoly_poly(), self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cos_pi_over_five() {
        let f = RealCyclotomicField::new(5);
        let c = AlgebraicReal::from_field(&f, &f.cos_pi_over(5)).unwrap();
        assert_eq!(c.minpoly_poly(), Poly::from_i64(&[-1, -2, 4]));
        assert!((c.to_f64() - 0.809_016_994_374_947_4).abs() < 1e-12);
        let neg = AlgebraicReal::from_field(&f, &f.neg(&f.cos_pi_over(5))).unwrap();
        assert_eq!(neg.minpoly_poly(), Poly::from_i64(&[-1, 2, 4]));
        assert_eq!(neg.sign(), Ordering::Less);
    }

    #[test]
    fn rational_entries() {
        let f = RealCyclotomicField::new(6);
        let c = AlgebraicReal::from_field(&f, &f.cos_pi_over(3)).unwrap();
        assert!(c.is_rational());
        assert_eq!(c.interval().0, &crate::poly::qf(1, 2));
    }

    #[test]
    fn rejects_non_isolating() {
        let p = Poly::from_i64(&[-2, 0, 1]);
        assert!(AlgebraicReal::new(&p, q(-2), q(2)).is_err());
        assert!(AlgebraicReal::new(&p, q(0), q(2)).is_ok());
    }
}
