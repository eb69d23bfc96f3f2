//! The real cyclotomic field `Q(θ)`, `θ = 2cos(π/N)`, with certified signs.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{chebyshev_c, q, real_cyclotomic_minpoly, Poly, Q};

use super::CoxeterError;

const MAX_BISECTIONS: usize = 400;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealCyclotomicField {
    n: usize,
    modulus: Poly,
    lo: Q,
    hi: Q,
}

/// An element of a [`RealCyclotomicField`]: a polynomial in `θ` of degree
/// below the field degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem(Poly);

impl FieldElem {
    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self.0.degree() {
            None => Some(Q::zero()),
            Some(0) => Some(self.0.coeff(0)),
            _ => None,
        }
    }
}

pub fn f64_to_q(x: f64) -> Q {
    Q::from_float(x).expect("finite float")
}

impl RealCyclotomicField {
    /// `Q(2cos(π/n))`; `n = 1, 2` give the rationals.
    pub fn new(n: usize) -> Self {
        let n = n.max(2);
        let modulus = real_cyclotomic_minpoly(2 * n);
        let theta = 2.0 * (std::f64::consts::PI / n as f64).cos();
        let (lo, hi) = if modulus.degree() == Some(1) {
            let r = -modulus.coeff(0) / modulus.coeff(1);
            (r.clone(), r)
        } else {
            let d = Q::new(BigInt::one(), BigInt::from(1u64 << 20));
            let mut lo = f64_to_q(theta) - &d;
            let mut hi = f64_to_q(theta) + &d;
            assert_eq!(modulus.count_roots(&lo, &hi), 1, "isolating interval for 2cos(pi/{n})");
            let lo_sign = modulus.eval(&lo).is_positive();
            for _ in 0..100 {
                let mid = (&lo + &hi) / q(2);
                if modulus.eval(&mid).is_positive() != lo_sign {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            (lo, hi)
        };
        RealCyclotomicField { n, modulus, lo, hi }
    }

    /// The smallest field containing every `cos(π/m)` for the given `m`.
    pub fn for_orders(ms: impl IntoIterator<Item = u32>) -> Self {
        let n = ms.into_iter().fold(1usize, |acc, m| acc.lcm(&(m as usize)));
        RealCyclotomicField::new(n)
    }

    pub fn conductor(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn theta_interval(&self) -> (&Q, &Q) {
        (&self.lo, &self.hi)
    }

    pub fn elem(&self, p: Poly) -> FieldElem {
        FieldElem(p.rem(&self.modulus))
    }

    pub fn rational(&self, v: Q) -> FieldElem {
        FieldElem(Poly::constant(v))
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(Poly::zero())
    }

    pub fn one(&self) -> FieldElem {
        self.rational(Q::one())
    }

    /// `cos(π/m)`; panics unless `m` divides the conductor.
    pub fn cos_pi_over(&self, m: u32) -> FieldElem {
        let m = m as usize;
        assert!(self.n.is_multiple_of(m), "cos(pi/{m}) is not in Q(2cos(pi/{}))", self.n);
        self.elem(chebyshev_c(self.n / m).scale(&crate::poly::qf(1, 2)))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldElem(&a.0 - &b.0)
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldElem(-a.0.clone())
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.elem(&a.0 * &b.0)
    }

    pub fn inv(&self, a: &FieldElem) -> FieldElem {
        assert!(!a.is_zero(), "inverse of zero");
        let (g, s, _) = Poly::ext_gcd(&a.0, &self.modulus);
        debug_assert_eq!(g, Poly::one());
        self.elem(s)
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.mul(a, &self.inv(b))
    }

    pub fn to_f64(&self, a: &FieldElem) -> f64 {
        let t = ((&self.lo + &self.hi) / q(2)).to_f64().unwrap();
        a.0.coeffs().iter().rev().fold(0.0, |acc, c| acc * t + c.to_f64().unwrap())
    }

    /// Closed interval containing `a`, from interval Horner evaluation over
    /// the given enclosure of `θ`.
    fn enclose(a: &Poly, lo: &Q, hi: &Q) -> (Q, Q) {
        let mut acc = (Q::zero(), Q::zero());
        for c in a.coeffs().iter().rev() {
            let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
            let mn = prods.iter().min().unwrap().clone();
            let mx = prods.iter().max().unwrap().clone();
            acc = (mn + c, mx + c);
        }
        acc
    }

    /// Certified sign. Zero is decided exactly; otherwise the enclosure of
    /// `θ` is bisected until the enclosure of `a` excludes zero.
    pub fn sign(&self, a: &FieldElem) -> Result<Ordering, CoxeterError> {
        if a.is_zero() {
            return Ok(Ordering::Equal);
        }
        if let Some(r) = a.as_rational() {
            return Ok(r.cmp(&Q::zero()));
        }
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let lo_sign = self.modulus.eval(&lo).is_positive();
        for _ in 0..MAX_BISECTIONS {
            let (a_lo, a_hi) = Self::enclose(&a.0, &lo, &hi);
            if a_lo.is_positive() {
                return Ok(Ordering::Greater);
            }
            if a_hi.is_negative() {
                return Ok(Ordering::Less);
            }
            let mid = (&lo + &hi) / q(2);
            if self.modulus.eval(&mid).is_positive() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Err(CoxeterError::PrecisionExhausted)
    }

    /// Interval enclosing `a` of width at most `width`.
    pub fn enclosure(&self, a: &FieldElem, width: &Q) -> Result<(Q, Q), CoxeterError> {
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let lo_sign = self.modulus.eval(&lo).is_positive();
        for _ in 0..MAX_BISECTIONS {
            let (a_lo, a_hi) = Self::enclose(&a.0, &lo, &hi);
            if &(&a_hi - &a_lo) <= width {
                return Ok((a_lo, a_hi));
            }
            let mid = (&lo + &hi) / q(2);
            if self.modulus.eval(&mid).is_positive() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Err(CoxeterError::PrecisionExhausted)
    }

    /// Matrix of multiplication by `a` in the power basis of `θ`.
    pub fn multiplication_matrix(&self, a: &FieldElem) -> crate::linalg::QMatrix {
        let d = self.degree();
        let mut m = crate::linalg::QMatrix::zeros(d, d);
        for j in 0..d {
            let col = self.elem(&a.0 * &Poly::monomial(j, Q::one()));
            for i in 0..d {
                m[(i, j)] = col.0.coeff(i);
            }
        }
        m
    }

    /// Evaluates a rational polynomial at a field element.
    pub fn eval_poly(&self, p: &Poly, a: &FieldElem) -> FieldElem {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, a), &self.rational(c.clone()));
        }
        acc
    }
}
