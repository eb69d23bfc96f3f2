//! Baumslag-Solitar groups `BS(m, n) = <s, t | t s^m t^-1 = s^n>`.

mod witness;

pub use witness::{pi_image, verify_witness, witness_subgroup, Check, SubgroupWitness, WitnessReport};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;
use thiserror::Error;

use crate::cite;
use crate::linalg::QMatrix;
use crate::poly::Q;
use crate::presentation::{FinitePresentation, Word};
use crate::verdict::Verdict;

pub const S: usize = 0;
pub const T: usize = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BsError {
    #[error("BS parameters must be nonzero")]
    ZeroParameter,
    #[error("requires |m| = |n|, got ({0}, {1})")]
    UnequalModuli(i64, i64),
    #[error("requires m >= 2, got {0}")]
    SmallModulus(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BsGroup {
    m: i64,
    n: i64,
}

impl BsGroup {
    pub fn new(m: i64, n: i64) -> Result<Self, BsError> {
        if m == 0 || n == 0 {
            return Err(BsError::ZeroParameter);
        }
        Ok(BsGroup { m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn presentation(&self) -> FinitePresentation {
        FinitePresentation::baumslag_solitar(self.m, self.n)
    }

    pub fn relator(&self) -> Word {
        self.presentation().relators()[0].clone()
    }
}

/// `s^k0 t^e1 s^k1 ... t^el s^kl`, pinch free, with every exponent after a
/// `t` in `0..|m|` and after a `t^-1` in `0..|n|`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BrittonForm {
    pub head: BigInt,
    pub tail: Vec<(i8, BigInt)>,
}

impl BrittonForm {
    pub fn identity() -> Self {
        BrittonForm { head: BigInt::zero(), tail: Vec::new() }
    }

    pub fn t_length(&self) -> usize {
        self.tail.len()
    }

    pub fn is_identity(&self) -> bool {
        self.head.is_zero() && self.tail.is_empty()
    }

    /// Back to a word; `None` if some exponent does not fit in `i64`.
    pub fn to_word(&self) -> Option<Word> {
        let mut syl = vec![(S, self.head.to_i64()?)];
        for (e, k) in &self.tail {
            syl.push((T, *e as i64));
            syl.push((S, k.to_i64()?));
        }
        Some(Word::from_syllables(&syl))
    }
}

impl fmt::Display for BrittonForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.head.is_zero() {
            parts.push(format!("s^{}", self.head));
        }
        for (e, k) in &self.tail {
            parts.push(if *e > 0 { "t".into() } else { "t^-1".into() });
            if !k.is_zero() {
                parts.push(format!("s^{k}"));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Removes pinches `t s^(cm) t^-1 -> s^(cn)` and `t^-1 s^(cn) t -> s^(cm)`
/// with a stack, then pushes multiples of `m` (resp. `n`) leftwards
/// through each `t` (resp. `t^-1`).
pub fn britton_reduce(b: &BsGroup, w: &Word) -> BrittonForm {
    let (m, n) = (BigInt::from(b.m), BigInt::from(b.n));
    let mut head = BigInt::zero();
    let mut tail: Vec<(i8, BigInt)> = Vec::new();
    for &(g, e) in w.letters() {
        if g == S {
            *tail.last_mut().map_or(&mut head, |x| &mut x.1) += e as i32;
            continue;
        }
        let pinch = match tail.last() {
            Some((prev, k)) if *prev == -e => {
                let (from, to) = if *prev > 0 { (&m, &n) } else { (&n, &m) };
                k.is_multiple_of(from).then(|| k / from * to)
            }
            _ => None,
        };
        match pinch {
            Some(v) => {
                tail.pop();
                *tail.last_mut().map_or(&mut head, |x| &mut x.1) += v;
            }
            None => tail.push((e, BigInt::zero())),
        }
    }
    for i in (0..tail.len()).rev() {
        let (e, ref k) = tail[i];
        let (from, to) = if e > 0 { (&m, &n) } else { (&n, &m) };
        let r = k.mod_floor(&from.abs());
        let q = (k - &r) / from;
        tail[i].1 = r;
        if !q.is_zero() {
            let carry = q * to;
            if i == 0 {
                head += carry;
            } else {
                tail[i - 1].1 += carry;
            }
        }
    }
    BrittonForm { head, tail }
}

pub fn bs_presentable(m: i64, n: i64) -> Result<Verdict, BsError> {
    let b = BsGroup::new(m, n)?;
    let (am, an) = (m.unsigned_abs(), n.unsigned_abs());
    if am == 1 && an == 1 {
        return Ok(if m == n {
            Verdict::yes(Some(json!({"kind": "direct-product", "factors": ["Z", "Z"]})))
                .cite("bs.equal-moduli", cite::BS_ISO_Z2)
                .cite("infinite-centre", cite::INFINITE_CENTRE)
        } else {
            Verdict::yes(Some(json!({"kind": "finite-index", "index": 2, "subgroup": "Z^2 = <s, t^2>"})))
                .cite("bs.equal-moduli", cite::BS_KLEIN)
                .cite("finite-index", cite::FINITE_INDEX)
        });
    }
    if am == an {
        let eta = if m == n { 1 } else { -1 };
        let w = witness_subgroup(am as i64, eta)?;
        let cert = json!({"kind": "bs-witness", "group": [b.m, b.n], "witness": w.to_json()});
        return Ok(Verdict::yes(Some(cert))
            .cite("bs.equal-moduli", cite::BS_EQUAL)
            .cite("direct-product", cite::DIRECT_PRODUCT)
            .cite("finite-index", cite::FINITE_INDEX));
    }
    let route = if am.min(an) == 1 {
        ("bs.soluble", cite::BS_SOLUBLE)
    } else {
        ("bs.moldavanskii", cite::BS_MOLDAVANSKII)
    };
    Ok(Verdict::no().cite("bs.criterion", cite::BS_CRITERION).cite(route.0, route.1))
}

/// Image of a word of `BS(1, n)` under `s -> [[1,1],[0,1]]`, `t -> [[n,0],[0,1]]`.
pub fn affine_rep(n: i64, w: &Word) -> QMatrix {
    let s = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
    let s_inv = QMatrix::from_i64(&[&[1, -1], &[0, 1]]);
    let t = QMatrix::from_i64(&[&[n, 0], &[0, 1]]);
    let mut t_inv = QMatrix::identity(2);
    t_inv[(0, 0)] = Q::new(BigInt::one(), BigInt::from(n));
    w.letters().iter().fold(QMatrix::identity(2), |acc, &(g, e)| {
        let m = match (g, e > 0) {
            (S, true) => &s,
            (S, false) => &s_inv,
            (_, true) => &t,
            (_, false) => &t_inv,
        };
        acc.mul(m)
    })
}
