//! Finite-dimensional Lie algebras over Q given by structure constants.

pub mod catalogue;
mod lattice;
mod module;
mod presentable;

pub use lattice::{ideal_lattice, Budget, Completeness, IdealLattice};
pub use module::Module;
pub use presentable::{centroid, centroid_decomposes, lie_presentable, lie_presentable_with, LieVerdict};

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::linalg::{axpy, QMatrix, Subspace, Vector};
use crate::poly::Q;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("not a Lie algebra: {0}")]
    InvalidAlgebra(Violation),
    #[error("unsupported catalogue entry: {0}")]
    UnsupportedParams(String),
    #[error("json: {0}")]
    Json(String),
    #[error("certificate re-verification failed: {0}")]
    Verification(String),
}

/// First failed Lie axiom, with 0-based basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    Antisymmetry { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, k: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Shape(s) => write!(f, "malformed constants: {s}"),
            Violation::Antisymmetry { i, j, k } => write!(f, "antisymmetry fails at ({i},{j},{k})"),
            Violation::Jacobi { i, j, k } => write!(f, "Jacobi identity fails for ({i},{j},{k})"),
        }
    }
}

/// Checks shape, antisymmetry `c[i][j][k] = -c[j][i][k]` and the Jacobi
/// identity on all basis triples.
pub fn validate(c: &[Vec<Vec<Q>>]) -> Result<(), Violation> {
    let n = c.len();
    for (i, row) in c.iter().enumerate() {
        if row.len() != n || row.iter().any(|v| v.len() != n) {
            return Err(Violation::Shape(format!("row {i}")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if c[i][j][k] != -c[j][i][k].clone() {
                    return Err(Violation::Antisymmetry { i, j, k });
                }
            }
        }
    }
    let br = |x: &[Q], y: &[Q]| bracket_with(c, x, y);
    let e = |i: usize| {
        let mut v = vec![Q::zero(); n];
        v[i] = Q::one();
        v
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, d) = (e(i), e(j), e(k));
                let mut s = br(&a, &br(&b, &d));
                axpy(&mut s, &Q::one(), &br(&b, &br(&d, &a)));
                axpy(&mut s, &Q::one(), &br(&d, &br(&a, &b)));
                if s.iter().any(|v| !v.is_zero()) {
                    return Err(Violation::Jacobi { i, j, k });
                }
            }
        }
    }
    Ok(())
}

fn bracket_with(c: &[Vec<Vec<Q>>], x: &[Q], y: &[Q]) -> Vector {
    let n = c.len();
    let mut out = vec![Q::zero(); n];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let k = xi * yj;
            axpy(&mut out, &k, &c[i][j]);
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    labels: Vec<String>,
    c: Vec<Vec<Vec<Q>>>,
}

impl LieAlgebra {
    pub fn new(labels: Vec<String>, c: Vec<Vec<Vec<Q>>>) -> Result<Self, LieError> {
        if labels.len() != c.len() {
            return Err(LieError::InvalidAlgebra(Violation::Shape("label count".into())));
        }
        validate(&c).map_err(LieError::InvalidAlgebra)?;
        Ok(LieAlgebra { labels, c })
    }

    /// From the brackets `[e_i, e_j] = Σ v_k e_k` for some pairs; the
    /// remaining ones follow by antisymmetry or are zero.
    pub fn from_brackets(labels: &[&str], brackets: &[(usize, usize, &[(usize, Q)])]) -> Result<Self, LieError> {
        let n = labels.len();
        let mut c = vec![vec![vec![Q::zero(); n]; n]; n];
        let mut set = vec![vec![false; n]; n];
        for &(i, j, v) in brackets {
            for (k, val) in v {
                c[i][j][*k] = val.clone();
            }
            set[i][j] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if set[i][j] && !set[j][i] {
                    c[j][i] = c[i][j].iter().map(|v| -v.clone()).collect();
                }
            }
        }
        LieAlgebra::new(labels.iter().map(|s| s.to_string()).collect(), c)
    }

    /// `{"dim": 3, "basis": ["e","f","g"], "brackets": [{"x":"g","y":"e","value":{"e":"1"}}]}`
    pub fn from_json(text: &str) -> Result<Self, LieError> {
        #[derive(Deserialize)]
        struct Entry {
            x: String,
            y: String,
            value: HashMap<String, String>,
        }
        #[derive(Deserialize)]
        struct Raw {
            dim: Option<usize>,
            basis: Vec<String>,
            #[serde(default)]
            brackets: Vec<Entry>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| LieError::Json(e.to_string()))?;
        if let Some(d) = raw.dim {
            if d != raw.basis.len() {
                return Err(LieError::Json(format!("dim {d} but {} basis labels", raw.basis.len())));
            }
        }
        let idx = |s: &str| {
            raw.basis
                .iter()
                .position(|b| b == s)
                .ok_or_else(|| LieError::Json(format!("unknown basis label `{s}`")))
        };
        let mut entries = Vec::new();
        for e in &raw.brackets {
            let mut v = Vec::new();
            for (k, val) in &e.value {
                let q: Q = val.parse().map_err(|_| LieError::Json(format!("bad rational `{val}`")))?;
                v.push((idx(k)?, q));
            }
            entries.push((idx(&e.x)?, idx(&e.y)?, v));
        }
        let labels: Vec<&str> = raw.basis.iter().map(String::as_str).collect();
        let refs: Vec<(usize, usize, &[(usize, Q)])> = entries.iter().map(|(i, j, v)| (*i, *j, v.as_slice())).collect();
        LieAlgebra::from_brackets(&labels, &refs)
    }

    pub fn to_json(&self) -> Value {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let v = &self.c[i][j];
                if v.iter().all(Zero::is_zero) {
                    continue;
                }
                let value: serde_json::Map<String, Value> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (self.labels[k].clone(), json!(x.to_string())))
                    .collect();
                brackets.push(json!({"x": self.labels[i], "y": self.labels[j], "value": value}));
            }
        }
        json!({"dim": self.dim(), "basis": self.labels, "brackets": brackets})
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &[Vec<Vec<Q>>] {
        &self.c
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        bracket_with(&self.c, x, y)
    }

    /// Matrix of `ad x` acting on column vectors.
    pub fn ad(&self, x: &[Q]) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            let col = self.bracket(x, &self.basis_vector(j));
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn adjoint_module(&self) -> Module {
        Module::new((0..self.dim()).map(|i| self.ad(&self.basis_vector(i))).collect(), self.dim())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `[A, B]` as a subspace.
    pub fn bracket_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vs.push(self.bracket(x, y));
            }
        }
        Subspace::span(self.dim(), vs)
    }

    pub fn is_ideal(&self, a: &Subspace) -> bool {
        a.contains_space(&self.bracket_space(&self.whole(), a))
    }

    pub fn is_subalgebra(&self, a: &Subspace) -> bool {
        a.contains_space(&self.bracket_space(a, a))
    }

    pub fn commute(&self, a: &Subspace, b: &Subspace) -> bool {
        self.bracket_space(a, b).is_zero()
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let next = cur.sum(&self.bracket_space(&self.whole(), &cur));
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// `{y : [y, a] = 0 for all a in A}`.
    pub fn centralizer(&self, a: &Subspace) -> Subspace {
        let n = self.dim();
        if a.is_zero() {
            return self.whole();
        }
        // rows indexed by (a_j, k), columns by the coordinate of y
        let mut rows = Vec::with_capacity(a.dim() * n);
        for aj in a.basis() {
            let images: Vec<Vector> = (0..n).map(|i| self.bracket(&self.basis_vector(i), aj)).collect();
            for k in 0..n {
                rows.push((0..n).map(|i| images[i][k].clone()).collect::<Vector>());
            }
        }
        Subspace::span(n, QMatrix::from_rows(&rows, n).nullspace())
    }

    pub fn centre(&self) -> Subspace {
        self.centralizer(&self.whole())
    }

    pub fn derived(&self) -> Subspace {
        self.bracket_space(&self.whole(), &self.whole())
    }

    pub fn direct_sum(&self, o: &LieAlgebra) -> LieAlgebra {
        let (n1, n) = (self.dim(), self.dim() + o.dim());
        let mut c = vec![vec![vec![Q::zero(); n]; n]; n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    c[i][j][k] = self.c[i][j][k].clone();
                }
            }
        }
        for i in 0..o.dim() {
            for j in 0..o.dim() {
                for k in 0..o.dim() {
                    c[n1 + i][n1 + j][n1 + k] = o.c[i][j][k].clone();
                }
            }
        }
        let mut labels = Vec::with_capacity(n);
        for (side, l) in [(1, &self.labels), (2, &o.labels)] {
            for s in l {
                labels.push(format!("{s}_{side}"));
            }
        }
        LieAlgebra { labels, c }
    }

    /// Renders a vector as a combination of basis labels.
    pub fn render(&self, v: &[Q]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| {
                if x.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({x}){}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn render_space(&self, s: &Subspace) -> String {
        let b: Vec<String> = s.basis().iter().map(|v| self.render(v)).collect();
        format!("span{{{}}}", b.join(", "))
    }
}

/// Two commuting subalgebras spanning the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieCertificate {
    pub g1: Subspace,
    pub g2: Subspace,
}

impl LieCertificate {
    pub fn to_json(&self, l: &LieAlgebra) -> Value {
        let enc = |s: &Subspace| -> Vec<Vec<String>> {
            s.basis().iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect()
        };
        json!({
            "kind": "lie-commuting-subalgebras",
            "g1": enc(&self.g1),
            "g2": enc(&self.g2),
            "g1_text": l.render_space(&self.g1),
            "g2_text": l.render_space(&self.g2),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    WrongAmbient,
    Zero(&'static str),
    NotSubalgebra(&'static str),
    DoNotCommute,
    SumTooSmall { dim: usize, expected: usize },
    NotIdeal(&'static str),
}

impl std::fmt::Display for Rejection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rejection::WrongAmbient => write!(f, "subspaces live in the wrong ambient space"),
            Rejection::Zero(w) => write!(f, "{w} is zero"),
            Rejection::NotSubalgebra(w) => write!(f, "{w} is not a subalgebra"),
            Rejection::DoNotCommute => write!(f, "[g1, g2] != 0"),
            Rejection::SumTooSmall { dim, expected } => write!(f, "sum has dimension {dim} < {expected}"),
            Rejection::NotIdeal(w) => write!(f, "{w} is not an ideal"),
        }
    }
}

pub fn verify_product_certificate(l: &LieAlgebra, cert: &LieCertificate) -> Result<(), Rejection> {
    let n = l.dim();
    if cert.g1.ambient() != n || cert.g2.ambient() != n {
        return Err(Rejection::WrongAmbient);
    }
    for (s, w) in [(&cert.g1, "g1"), (&cert.g2, "g2")] {
        if s.is_zero() {
            return Err(Rejection::Zero(w));
        }
        if !l.is_subalgebra(s) {
            return Err(Rejection::NotSubalgebra(w));
        }
    }
    if !l.commute(&cert.g1, &cert.g2) {
        return Err(Rejection::DoNotCommute);
    }
    let sum = cert.g1.sum(&cert.g2);
    if !sum.is_full() {
        return Err(Rejection::SumTooSmall { dim: sum.dim(), expected: n });
    }
    // consequence: both are ideals
    for (s, w) in [(&cert.g1, "g1"), (&cert.g2, "g2")] {
        if !l.is_ideal(s) {
            return Err(Rejection::NotIdeal(w));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::catalogue::*;
    use super::*;
    use crate::poly::q;

    fn span(l: &LieAlgebra, idx: &[usize]) -> Subspace {
        Subspace::coordinates(l.dim(), idx)
    }

    #[test]
    fn validate_examples() {
        assert!(validate(af().constants()).is_ok());
        assert!(validate(sol().constants()).is_ok());
        let mut c = vec![vec![vec![q(0); 3]; 3]; 3];
        c[1][2][1] = q(1);
        c[2][1][1] = q(1);
        assert_eq!(validate(&c), Err(Violation::Antisymmetry { i: 1, j: 2, k: 1 }));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [a,b] = a, [a,c] = a, [b,c] = b is antisymmetric but not Lie
        let l = LieAlgebra::from_brackets(
            &["a", "b", "c"],
            &[(0, 1, &[(0, q(1))]), (0, 2, &[(0, q(1))]), (1, 2, &[(1, q(1))])],
        );
        assert!(matches!(l, Err(LieError::InvalidAlgebra(Violation::Jacobi { .. }))));
    }

    #[test]
    fn closure_examples() {
        let af = af();
        assert_eq!(af.ideal_closure(&span(&af, &[0])), span(&af, &[0]));
        assert!(af.ideal_closure(&span(&af, &[1])).is_full());
        let ab = abelian(3);
        let s = Subspace::span(3, vec![vec![q(1), q(2), q(3)]]);
        assert_eq!(ab.ideal_closure(&s), s);
    }

    #[test]
    fn centralizer_examples() {
        let af = af();
        assert_eq!(af.centralizer(&span(&af, &[0])), span(&af, &[0]));
        let sol = sol();
        let d = sol.derived();
        assert_eq!(d, span(&sol, &[0, 1]));
        assert_eq!(sol.centralizer(&d), d);
        assert!(sol.centralizer(&Subspace::zero(3)).is_full());
    }

    #[test]
    fn certificate_checks() {
        let ab = abelian(2);
        let c = LieCertificate { g1: span(&ab, &[0]), g2: span(&ab, &[1]) };
        assert_eq!(verify_product_certificate(&ab, &c), Ok(()));
        let s = sl2().direct_sum(&sl2());
        let c = LieCertificate { g1: span(&s, &[0, 1, 2]), g2: span(&s, &[3, 4, 5]) };
        assert_eq!(verify_product_certificate(&s, &c), Ok(()));
        let af = af();
        let c = LieCertificate { g1: span(&af, &[0]), g2: span(&af, &[0]) };
        assert_eq!(
            verify_product_certificate(&af, &c),
            Err(Rejection::SumTooSmall { dim: 1, expected: 2 })
        );
    }

    #[test]
    fn json_load_completes_antisymmetry() {
        let l = LieAlgebra::from_json(
            r#"{"dim":3,"basis":["e","f","g"],"brackets":[{"x":"g","y":"e","value":{"e":"1"}},{"x":"g","y":"f","value":{"f":"-1"}}]}"#,
        )
        .unwrap();
        assert_eq!(l, sol());
        assert_eq!(LieAlgebra::from_json(&l.to_json().to_string()).unwrap(), l);
        assert!(LieAlgebra::from_json(r#"{"basis":["e"],"brackets":[{"x":"e","y":"z","value":{}}]}"#).is_err());
    }

    #[test]
    fn duality_of_centralizers() {
        for l in [af(), sol(), sl2(), heisenberg()] {
            let subs: Vec<Subspace> = (0..l.dim()).map(|i| span(&l, &[i])).chain([l.derived(), l.whole()]).collect();
            for a in &subs {
                for b in &subs {
                    let c1 = l.centralizer(a).contains_space(b);
                    let c2 = l.commute(a, b);
                    let c3 = l.centralizer(b).contains_space(a);
                    assert_eq!(c1, c2);
                    assert_eq!(c2, c3);
                }
            }
        }
    }
}
