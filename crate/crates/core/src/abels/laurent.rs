//! Laurent polynomials over Q in a fixed number of variables.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::poly::Q;

use super::UnitRing;

#[derive(Clone, PartialEq, Eq)]
pub struct Laurent {
    vars: usize,
    terms: BTreeMap<Vec<i32>, Q>,
}

impl Laurent {
    pub fn constant(vars: usize, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars], c);
        }
        Laurent { vars, terms }
    }

    /// The monomial `v_i^e`.
    pub fn var(vars: usize, i: usize, e: i32) -> Self {
        let mut m = vec![0; vars];
        m[i] = e;
        Laurent { vars, terms: BTreeMap::from([(m, Q::one())]) }
    }

    fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Vec<i32>, Q)>) -> Self {
        let mut out: BTreeMap<Vec<i32>, Q> = BTreeMap::new();
        for (m, c) in terms {
            *out.entry(m).or_insert_with(Q::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Laurent { vars, terms: out }
    }
}

impl UnitRing for Laurent {
    fn zero_like(&self) -> Self {
        Laurent::constant(self.vars, Q::zero())
    }

    fn one_like(&self) -> Self {
        Laurent::constant(self.vars, Q::one())
    }

    fn add(&self, o: &Self) -> Self {
        Laurent::from_terms(self.vars, self.terms.iter().chain(&o.terms).map(|(m, c)| (m.clone(), c.clone())))
    }

    fn neg(&self) -> Self {
        Laurent { vars: self.vars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out = Vec::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.push((m1.iter().zip(m2).map(|(a, b)| a + b).collect(), c1 * c2));
            }
        }
        Laurent::from_terms(self.vars, out)
    }

    /// Only monomials are units.
    fn inv_unit(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        Some(Laurent {
            vars: self.vars,
            terms: BTreeMap::from([(m.iter().map(|e| -e).collect(), Q::one() / c)]),
        })
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e != 0)
                    .map(|(i, e)| if *e == 1 { format!("v{i}") } else { format!("v{i}^{e}") })
                    .collect();
                format!("({c}){}", mono.join(""))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
