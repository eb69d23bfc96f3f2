//! Finite-dimensional modules over the associative algebra generated by a
//! list of matrices, with a Norton-style irreducibility test.

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{axpy, QMatrix, Subspace, Vector};
use crate::poly::{factor, q, Q};

/// Matrices acting on column vectors of `Q^dim`.
#[derive(Clone, Debug)]
pub struct Module {
    dim: usize,
    gens: Vec<QMatrix>,
}

pub(crate) enum Split {
    Proper(Subspace),
    Irreducible,
    GaveUp,
}

/// One isotypic block of the socle.
pub(crate) struct SocleBlock {
    pub homs: Vec<QMatrix>,
    pub multiplicity: usize,
}

impl Module {
    pub fn new(gens: Vec<QMatrix>, dim: usize) -> Self {
        Module { dim, gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[QMatrix] {
        &self.gens
    }

    /// Smallest submodule containing `vs`.
    pub fn spin(&self, vs: Vec<Vector>) -> Subspace {
        let mut space = Subspace::span(self.dim, vs.clone());
        let mut queue: Vec<Vector> = space.basis().to_vec();
        while let Some(v) = queue.pop() {
            for g in &self.gens {
                let w = g.apply(&v);
                if !space.contains(&w) {
                    space = space.sum(&Subspace::span(self.dim, vec![w.clone()]));
                    queue.push(w);
                }
            }
        }
        space
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| self.gens.iter().all(|g| s.contains(&g.apply(v))))
    }

    /// Action on a submodule in the coordinates of its echelon basis.
    pub fn restrict(&self, s: &Subspace) -> Module {
        let piv = s.pivots();
        let k = s.dim();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = QMatrix::zeros(k, k);
                for (j, b) in s.basis().iter().enumerate() {
                    let w = g.apply(b);
                    for (i, &p) in piv.iter().enumerate() {
                        m[(i, j)] = w[p].clone();
                    }
                }
                m
            })
            .collect();
        Module::new(gens, k)
    }

    /// Action on `self / s`, in the coordinates left free by the pivots of `s`.
    pub fn quotient(&self, s: &Subspace) -> Module {
        let free = free_columns(s);
        let k = free.len();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut m = QMatrix::zeros(k, k);
                for (j, &c) in free.iter().enumerate() {
                    let w = reduce(s, g.apply(&unit(self.dim, c)));
                    for (i, &r) in free.iter().enumerate() {
                        m[(i, j)] = w[r].clone();
                    }
                }
                m
            })
            .collect();
        Module::new(gens, k)
    }

    pub fn dual(&self) -> Module {
        Module { dim: self.dim, gens: self.gens.iter().map(QMatrix::transpose).collect() }
    }

    /// Basis of module maps `self -> other` for two actions of the same
    /// generator list, as `other.dim x self.dim` matrices `X` with
    /// `B_i X = X A_i`.
    pub fn hom(&self, other: &Module) -> Vec<QMatrix> {
        let (d1, d2) = (self.dim, other.dim);
        if d1 == 0 || d2 == 0 {
            return Vec::new();
        }
        let mut basis: Vec<QMatrix> = (0..d1 * d2)
            .map(|t| {
                let mut m = QMatrix::zeros(d2, d1);
                m[(t / d1, t % d1)] = Q::one();
                m
            })
            .collect();
        assert_eq!(self.gens.len(), other.gens.len());
        for (a, b) in self.gens.iter().zip(other.gens.iter()) {
            if a.is_zero() && b.is_zero() {
                continue;
            }
            basis = constrain(&basis, a, b);
            if basis.is_empty() {
                return basis;
            }
        }
        basis
    }

    fn random_element(&self, rng: &mut ChaCha8Rng) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim, self.dim);
        if self.gens.is_empty() {
            return m;
        }
        let g = self.gens.len();
        for a in &self.gens {
            m = m.add(&a.scale(&q(rng.gen_range(-3..=3))));
        }
        for _ in 0..3 {
            let (i, j) = (rng.gen_range(0..g), rng.gen_range(0..g));
            let c = q(rng.gen_range(1..=3));
            m = m.add(&self.gens[i].mul(&self.gens[j]).scale(&c));
        }
        let (i, j, k) = (rng.gen_range(0..g), rng.gen_range(0..g), rng.gen_range(0..g));
        m.add(&self.gens[i].mul(&self.gens[j]).mul(&self.gens[k]))
    }

    /// A proper nonzero submodule, a proof of irreducibility, or neither
    /// after `attempts` random algebra elements.
    pub(crate) fn split(&self, rng: &mut ChaCha8Rng, attempts: usize) -> Split {
        if self.dim <= 1 {
            return Split::Irreducible;
        }
        let dual = self.dual();
        for _ in 0..attempts {
            let theta = self.random_element(rng);
            for (p, _) in factor(&theta.charpoly()) {
                let pt = theta.eval_poly(&p);
                let null = pt.nullspace();
                let u = self.spin(vec![null[0].clone()]);
                if !u.is_full() {
                    return Split::Proper(u);
                }
                let w = dual.spin(vec![pt.transpose().nullspace()[0].clone()]);
                if !w.is_full() {
                    return Split::Proper(Subspace::span(self.dim, w.matrix().nullspace()));
                }
                if Some(null.len()) == p.degree() {
                    return Split::Irreducible;
                }
            }
        }
        Split::GaveUp
    }

    /// Composition factors, bottom first; `None` if the irreducibility test
    /// gave up somewhere.
    pub(crate) fn composition_factors(&self, rng: &mut ChaCha8Rng, attempts: usize) -> Option<Vec<Module>> {
        if self.dim == 0 {
            return Some(Vec::new());
        }
        match self.split(rng, attempts) {
            Split::Irreducible => Some(vec![self.clone()]),
            Split::GaveUp => None,
            Split::Proper(u) => {
                let mut out = self.restrict(&u).composition_factors(rng, attempts)?;
                out.extend(self.quotient(&u).composition_factors(rng, attempts)?);
                Some(out)
            }
        }
    }

    /// The socle split into isotypic blocks, each with a basis of maps from
    /// a simple module of that type.
    pub(crate) fn socle(&self, rng: &mut ChaCha8Rng, attempts: usize) -> Option<Vec<SocleBlock>> {
        let mut types: Vec<Module> = Vec::new();
        for f in self.composition_factors(rng, attempts)? {
            if !types.iter().any(|t| t.dim == f.dim && !t.hom(&f).is_empty()) {
                types.push(f);
            }
        }
        let mut out = Vec::new();
        for s in types {
            let homs = s.hom(self);
            if homs.is_empty() {
                continue;
            }
            let e = s.hom(&s).len();
            out.push(SocleBlock { multiplicity: homs.len() / e, homs });
        }
        Some(out)
    }
}

/// Column space of a map.
pub(crate) fn image(x: &QMatrix) -> Subspace {
    Subspace::span(x.nrows(), x.transpose().rows())
}

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

fn free_columns(s: &Subspace) -> Vec<usize> {
    let piv = s.pivots();
    (0..s.ambient()).filter(|c| !piv.contains(c)).collect()
}

/// Representative of `v + s` vanishing on the pivots of `s`.
fn reduce(s: &Subspace, mut v: Vector) -> Vector {
    for (b, p) in s.basis().iter().zip(s.pivots()) {
        let k = -v[p].clone();
        axpy(&mut v, &k, b);
    }
    v
}

/// Preimage in the ambient space of a subspace of the quotient by `s`.
pub(crate) fn preimage(s: &Subspace, w: &Subspace) -> Subspace {
    let free = free_columns(s);
    let lifts = w.basis().iter().map(|u| {
        let mut v = vec![Q::zero(); s.ambient()];
        for (&c, x) in free.iter().zip(u) {
            v[c] = x.clone();
        }
        v
    });
    s.sum(&Subspace::span(s.ambient(), lifts))
}

/// Solutions within `span(basis)` of `B X = X A`.
fn constrain(basis: &[QMatrix], a: &QMatrix, b: &QMatrix) -> Vec<QMatrix> {
    let residues: Vec<QMatrix> = basis.iter().map(|x| b.mul(x).add(&x.mul(a).scale(&q(-1)))).collect();
    let (r, c) = (basis[0].nrows(), basis[0].ncols());
    let mut m = QMatrix::zeros(r * c, basis.len());
    for (t, res) in residues.iter().enumerate() {
        for i in 0..r {
            for j in 0..c {
                m[(i * c + j, t)] = res[(i, j)].clone();
            }
        }
    }
    m.nullspace()
        .into_iter()
        .map(|coef| {
            let mut x = QMatrix::zeros(r, c);
            for (k, y) in coef.iter().zip(basis) {
                if !k.is_zero() {
                    x = x.add(&y.scale(k));
                }
            }
            x
        })
        .collect()
}
