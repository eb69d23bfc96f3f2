//! Coxeter matrices, exact Tits forms and their signatures.

mod algebraic;
pub mod catalogue;
mod field;

pub use algebraic::AlgebraicReal;
pub use field::{FieldElem, RealCyclotomicField};

use std::cmp::Ordering;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cite;
use crate::lie::LieAlgebra;
use crate::linalg::QMatrix;
use crate::poly::Q;
use crate::verdict::Verdict;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("sign certification failed within the refinement limit")]
    PrecisionExhausted,
    #[error("interval does not isolate a single root")]
    NotIsolating,
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("json: {0}")]
    Json(String),
    #[error("irreducible affine component {component:?} has nullity {r}, expected 1")]
    AffineNullity { component: Vec<usize>, r: usize },
}

/// Off-diagonal Coxeter labels; `None` is ∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    n: usize,
    m: Vec<Vec<Option<u32>>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<Option<u32>>>) -> Result<Self, CoxeterError> {
        let n = m.len();
        if n == 0 {
            return Err(CoxeterError::InvalidMatrix("empty matrix".into()));
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(CoxeterError::InvalidMatrix(format!("row {i} has length {}", row.len())));
            }
            if row[i] != Some(1) {
                return Err(CoxeterError::InvalidMatrix(format!("diagonal entry {i} is not 1")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if row[j] != m[j][i] {
                    return Err(CoxeterError::InvalidMatrix(format!("not symmetric at ({i},{j})")));
                }
                if matches!(row[j], Some(v) if v < 2) {
                    return Err(CoxeterError::InvalidMatrix(format!("entry ({i},{j}) below 2")));
                }
            }
        }
        Ok(CoxeterMatrix { n, m })
    }

    /// All labels 2 except those given; `None` is ∞.
    pub fn from_edges(n: usize, edges: &[(usize, usize, Option<u32>)]) -> Self {
        let mut m = vec![vec![Some(2); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for &(i, j, v) in edges {
            m[i][j] = v;
            m[j][i] = v;
        }
        CoxeterMatrix::new(m).expect("well-formed edge list")
    }

    /// `{"n": 3, "m": [[1,3,2],[3,1,3],[2,3,1]]}` with `"inf"` allowed.
    pub fn from_json(text: &str) -> Result<Self, CoxeterError> {
        let v: Value = serde_json::from_str(text).map_err(|e| CoxeterError::Json(e.to_string()))?;
        CoxeterMatrix::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self, CoxeterError> {
        let rows = v
            .get("m")
            .and_then(Value::as_array)
            .ok_or_else(|| CoxeterError::Json("missing array `m`".into()))?;
        let mut m = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_array().ok_or_else(|| CoxeterError::Json("row is not an array".into()))?;
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                out.push(match e {
                    Value::String(s) if s == "inf" => None,
                    Value::Number(x) => Some(
                        x.as_u64()
                            .and_then(|x| u32::try_from(x).ok())
                            .ok_or_else(|| CoxeterError::InvalidMatrix(format!("bad entry {x}")))?,
                    ),
                    other => return Err(CoxeterError::InvalidMatrix(format!("bad entry {other}"))),
                });
            }
            m.push(out);
        }
        if let Some(n) = v.get("n") {
            if n.as_u64() != Some(m.len() as u64) {
                return Err(CoxeterError::InvalidMatrix("`n` does not match the matrix size".into()));
            }
        }
        CoxeterMatrix::new(m)
    }

    pub fn to_json(&self) -> Value {
        let m: Vec<Vec<Value>> = self
            .m
            .iter()
            .map(|r| r.iter().map(|e| e.map_or(json!("inf"), |v| json!(v))).collect())
            .collect();
        json!({ "n": self.n, "m": m })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        self.m[i][j]
    }

    pub fn submatrix(&self, idx: &[usize]) -> CoxeterMatrix {
        CoxeterMatrix {
            n: idx.len(),
            m: idx.iter().map(|&i| idx.iter().map(|&j| self.m[i][j]).collect()).collect(),
        }
    }

    /// Block-diagonal union.
    pub fn disjoint_union(&self, o: &CoxeterMatrix) -> CoxeterMatrix {
        let n = self.n + o.n;
        let mut m = vec![vec![Some(2); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i < self.n && j < self.n {
                    m[i][j] = self.m[i][j];
                } else if i >= self.n && j >= self.n {
                    m[i][j] = o.m[i - self.n][j - self.n];
                }
            }
        }
        CoxeterMatrix { n, m }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

/// A symmetric matrix over a real cyclotomic field.
#[derive(Clone, Debug)]
pub struct SymmetricForm {
    field: RealCyclotomicField,
    entries: Vec<Vec<FieldElem>>,
}

impl SymmetricForm {
    pub fn new(field: RealCyclotomicField, entries: Vec<Vec<FieldElem>>) -> Self {
        let n = entries.len();
        for i in 0..n {
            assert_eq!(entries[i].len(), n);
            for j in 0..i {
                assert_eq!(entries[i][j], entries[j][i], "form is not symmetric");
            }
        }
        SymmetricForm { field, entries }
    }

    pub fn from_rational(m: &QMatrix) -> Self {
        let f = RealCyclotomicField::new(2);
        let entries = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| f.rational(m[(i, j)].clone())).collect())
            .collect();
        SymmetricForm::new(f, entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn field(&self) -> &RealCyclotomicField {
        &self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i][j]
    }

    pub fn entry_real(&self, i: usize, j: usize) -> Result<AlgebraicReal, CoxeterError> {
        AlgebraicReal::from_field(&self.field, &self.entries[i][j])
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries.iter().map(|r| r.iter().map(|e| self.field.to_f64(e)).collect()).collect()
    }

    /// Unit diagonal and off-diagonal entries in `[-1, 0]`.
    pub fn is_admissible(&self) -> Result<bool, CoxeterError> {
        let f = &self.field;
        for i in 0..self.dim() {
            if self.entries[i][i] != f.one() {
                return Ok(false);
            }
            for j in 0..self.dim() {
                if i == j {
                    continue;
                }
                let e = &self.entries[i][j];
                if f.sign(e)? == Ordering::Greater || f.sign(&f.add(e, &f.one()))? == Ordering::Less {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn determinant(&self) -> FieldElem {
        let f = &self.field;
        let n = self.dim();
        let mut a = self.entries.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return f.zero();
            };
            if p != c {
                a.swap(p, c);
                det = f.neg(&det);
            }
            det = f.mul(&det, &a[c][c]);
            let inv = f.inv(&a[c][c]);
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let k = f.mul(&a[i][c], &inv);
                for j in c..n {
                    let d = f.mul(&k, &a[c][j]);
                    a[i][j] = f.sub(&a[i][j], &d);
                }
            }
        }
        det
    }
}

/// `B[i][j] = -cos(π / m[i][j])`, with `-1` for ∞, exact in the real
/// cyclotomic field of the lcm of the finite labels.
pub fn tits_form(m: &CoxeterMatrix) -> SymmetricForm {
    let labels = m.m.iter().flatten().filter_map(|&v| v.filter(|&v| v >= 2));
    let f = RealCyclotomicField::for_orders(labels);
    let n = m.n;
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match m.m[i][j] {
                    _ if i == j => f.one(),
                    None => f.neg(&f.one()),
                    Some(v) => f.neg(&f.cos_pi_over(v)),
                })
                .collect()
        })
        .collect();
    SymmetricForm::new(f, entries)
}

/// Connected components of the Coxeter graph (edge iff `m >= 3`), each
/// sorted, ordered by least element.
pub fn components(m: &CoxeterMatrix) -> Vec<Vec<usize>> {
    let n = m.n;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && i != j && m.m[i][j].is_none_or(|v| v >= 3) {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Signature by exact congruence diagonalization. Any nonzero diagonal
/// entry is a pivot; if the remaining diagonal is zero but some
/// off-diagonal entry is not, a hyperbolic pair is split off, contributing
/// one positive and one negative direction.
pub fn signature(form: &SymmetricForm) -> Result<Signature, CoxeterError> {
    let f = &form.field;
    let mut a = form.entries.clone();
    let mut sig = Signature { p: 0, q: 0, r: 0 };
    loop {
        let n = a.len();
        if n == 0 {
            return Ok(sig);
        }
        if let Some(i) = (0..n).find(|&i| !a[i][i].is_zero()) {
            match f.sign(&a[i][i])? {
                Ordering::Greater => sig.p += 1,
                _ => sig.q += 1,
            }
            let inv = f.inv(&a[i][i]);
            let rest: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            a = rest
                .iter()
                .map(|&k| {
                    rest.iter()
                        .map(|&l| {
                            let t = f.mul(&f.mul(&a[k][i], &a[i][l]), &inv);
                            f.sub(&a[k][l], &t)
                        })
                        .collect()
                })
                .collect();
            continue;
        }
        let pair = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((i, j)) = pair else {
            sig.r += n;
            return Ok(sig);
        };
        sig.p += 1;
        sig.q += 1;
        let inv = f.inv(&a[i][j]);
        let rest: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
        a = rest
            .iter()
            .map(|&k| {
                rest.iter()
                    .map(|&l| {
                        let t = f.add(&f.mul(&a[k][i], &a[j][l]), &f.mul(&a[k][j], &a[i][l]));
                        f.sub(&a[k][l], &f.mul(&t, &inv))
                    })
                    .collect()
            })
            .collect();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ComponentType {
    Finite,
    Affine,
    Indefinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub generators: Vec<usize>,
    pub signature: Signature,
    pub label: ComponentType,
}

pub fn classify(m: &CoxeterMatrix) -> Result<Vec<ComponentReport>, CoxeterError> {
    components(m)
        .into_iter()
        .map(|c| {
            let sig = signature(&tits_form(&m.submatrix(&c)))?;
            let label = match (sig.q, sig.r) {
                (0, 0) => ComponentType::Finite,
                (0, r) => {
                    if r != 1 {
                        return Err(CoxeterError::AffineNullity { component: c, r });
                    }
                    ComponentType::Affine
                }
                _ => ComponentType::Indefinite,
            };
            Ok(ComponentReport { generators: c, signature: sig, label })
        })
        .collect()
}

pub fn coxeter_presentable(m: &CoxeterMatrix) -> Result<Verdict, CoxeterError> {
    let comps = classify(m)?;
    let infinite: Vec<&ComponentReport> =
        comps.iter().filter(|c| c.label != ComponentType::Finite).collect();
    let summary = json!(comps);
    let v = match infinite.as_slice() {
        [] => Verdict::not_applicable()
            .cite("coxeter.tits-form", cite::TITS_CRITERION)
            .cite("finite-group", cite::FINITE_GROUP),
        [c] => {
            let v = match c.label {
                ComponentType::Affine => Verdict::yes(Some(json!({
                    "kind": "virtually-abelian",
                    "component": c.generators,
                    "rank": c.generators.len() - 1,
                    "components": summary,
                })))
                .cite("coxeter.tits-form", cite::TITS_CRITERION)
                .cite("coxeter.affine", cite::COXETER_AFFINE),
                _ => Verdict::no()
                    .cite("coxeter.tits-form", cite::TITS_CRITERION)
                    .cite("coxeter.indefinite", cite::COXETER_INDEFINITE),
            };
            if comps.len() > 1 {
                v.cite("finite-index", cite::FINITE_INDEX)
            } else {
                v
            }
        }
        [first, ..] => {
            let rest: Vec<usize> = comps
                .iter()
                .filter(|c| c.generators != first.generators)
                .flat_map(|c| c.generators.iter().copied())
                .collect();
            let mut rest = rest;
            rest.sort_unstable();
            Verdict::yes(Some(json!({
                "kind": "direct-product",
                "factors": [first.generators, rest],
                "components": summary,
            })))
            .cite("coxeter.tits-form", cite::TITS_CRITERION)
            .cite("direct-product", cite::DIRECT_PRODUCT)
        }
    };
    Ok(v)
}

/// The Lie algebra `(Q^(p+q))^r ⋊ so(p,q)`. The `so(p,q)` basis is
/// `M_ij = E_ij - J_ii J_jj E_ji` for `i < j` with `J = diag(I_p, -I_q)`;
/// `so(p,q)` acts on each copy of `Q^(p+q)` by matrix multiplication.
pub fn of_algebra(sig: Signature) -> LieAlgebra {
    let n = sig.p + sig.q;
    assert!(n >= 1, "of_algebra needs p + q >= 1");
    let j = |i: usize| if i < sig.p { 1i64 } else { -1 };
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    let mats: Vec<QMatrix> = pairs
        .iter()
        .map(|&(a, b)| {
            let mut m = QMatrix::zeros(n, n);
            m[(a, b)] = crate::poly::q(1);
            m[(b, a)] = crate::poly::q(-j(a) * j(b));
            m
        })
        .collect();
    let k = pairs.len();
    let dim = k + n * sig.r;
    let mut labels: Vec<String> = pairs.iter().map(|(a, b)| format!("M{}{}", a + 1, b + 1)).collect();
    for copy in 0..sig.r {
        for c in 0..n {
            labels.push(format!("v{}_{}", copy + 1, c + 1));
        }
    }
    let mut c = vec![vec![vec![Q::default(); dim]; dim]; dim];
    for x in 0..k {
        for y in 0..k {
            let br = mats[x].mul(&mats[y]).add(&mats[y].mul(&mats[x]).scale(&crate::poly::q(-1)));
            for (z, &(a, b)) in pairs.iter().enumerate() {
                c[x][y][z] = br[(a, b)].clone();
            }
        }
        for copy in 0..sig.r {
            for col in 0..n {
                let v = k + copy * n + col;
                for row in 0..n {
                    let w = k + copy * n + row;
                    let val = mats[x][(row, col)].clone();
                    c[v][x][w] = -val.clone();
                    c[x][v][w] = val;
                }
            }
        }
    }
    LieAlgebra::new(labels, c).expect("semidirect product satisfies the Lie axioms")
}
