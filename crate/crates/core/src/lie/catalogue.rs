//! Named Lie algebras.

use crate::coxeter::{of_algebra, Signature};
use crate::poly::{q, Q};

use super::{LieAlgebra, LieError};

fn build(labels: &[&str], brackets: &[(usize, usize, &[(usize, Q)])]) -> LieAlgebra {
    LieAlgebra::from_brackets(labels, brackets).expect("catalogue entries are Lie algebras")
}

/// `[e, f] = e`: the Lie algebra of the affine group of the line.
pub fn af() -> LieAlgebra {
    build(&["e", "f"], &[(1, 0, &[(0, q(1))])])
}

/// `[g, e] = e`, `[g, f] = -f`.
pub fn sol() -> LieAlgebra {
    build(&["e", "f", "g"], &[(2, 0, &[(0, q(1))]), (2, 1, &[(1, q(-1))])])
}

/// Basis `e, f, h` with `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    build(
        &["e", "f", "h"],
        &[(2, 0, &[(0, q(2))]), (2, 1, &[(1, q(-2))]), (0, 1, &[(2, q(1))])],
    )
}

pub fn heisenberg() -> LieAlgebra {
    build(&["x", "y", "z"], &[(0, 1, &[(2, q(1))])])
}

pub fn abelian(n: usize) -> LieAlgebra {
    let labels: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    build(&refs, &[])
}

pub fn so(p: usize, q: usize) -> LieAlgebra {
    of_algebra(Signature { p, q, r: 0 })
}

/// `(Q^(p+q))^r` semidirect `so(p, q)`.
pub fn vr_semidirect(p: usize, q: usize, r: usize) -> LieAlgebra {
    of_algebra(Signature { p, q, r })
}

/// Parses names such as `af`, `sl2`, `so(2,1)`, `vr(3,1,1)`, `abelian(2)`
/// and sums `a + b`.
pub fn by_name(name: &str) -> Result<LieAlgebra, LieError> {
    let name = name.trim();
    if let Some((a, b)) = name.split_once('+') {
        return Ok(by_name(a)?.direct_sum(&by_name(b)?));
    }
    let bad = || LieError::UnsupportedParams(name.to_string());
    let (head, args) = match name.split_once('(') {
        Some((h, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let args = inner
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            (h.trim(), args)
        }
        None => (name, Vec::new()),
    };
    match (head, args.as_slice()) {
        ("af", []) => Ok(af()),
        ("sol", []) => Ok(sol()),
        ("sl2", []) => Ok(sl2()),
        ("heisenberg", []) => Ok(heisenberg()),
        ("abelian", [n]) => Ok(abelian(*n)),
        ("so", [p, q]) if p + q >= 2 => Ok(so(*p, *q)),
        ("vr", [p, q, r]) if p + q >= 2 => Ok(vr_semidirect(*p, *q, *r)),
        _ => Err(bad()),
    }
}
