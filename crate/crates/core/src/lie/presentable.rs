//! Deciding whether a Lie algebra is presentable by a product.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cite;
use crate::linalg::QMatrix;
use crate::poly::{factor, q, Poly};
use crate::verdict::Verdict;

use super::lattice::{ideal_lattice, Budget, Completeness, IdealLattice};
use super::module::image;
use super::{verify_product_certificate, LieAlgebra, LieCertificate, LieError};

#[derive(Clone, Debug)]
pub struct LieVerdict {
    pub verdict: Verdict,
    pub certificate: Option<LieCertificate>,
    pub lattice: Option<IdealLattice>,
}

/// Endomorphisms of the adjoint module: maps `φ` with `φ[x, y] = [x, φy]`.
pub fn centroid(l: &LieAlgebra) -> Vec<QMatrix> {
    let adj = l.adjoint_module();
    adj.hom(&adj)
}

enum CentroidOutcome {
    Idempotent(QMatrix),
    Local,
    Undecided,
}

/// For centreless `l` the centroid is commutative, its radical is the
/// kernel of the trace form, and it is local iff some element has a
/// characteristic polynomial that is a power of one irreducible of degree
/// `dim(centroid / radical)`. Two coprime factors give an idempotent.
fn decide_centroid(l: &LieAlgebra, budget: &Budget) -> CentroidOutcome {
    if l.dim() > budget.max_centroid_dim {
        return CentroidOutcome::Undecided;
    }
    let gamma = centroid(l);
    let t = gamma.len();
    if t == 0 {
        return CentroidOutcome::Undecided;
    }
    let mut form = QMatrix::zeros(t, t);
    for i in 0..t {
        for j in 0..t {
            form[(i, j)] = gamma[i].mul(&gamma[j]).trace();
        }
    }
    let semisimple_dim = t - form.nullspace().len();
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed ^ 0xce);
    for attempt in 0..budget.attempts {
        let g = if attempt == 0 && t == 1 {
            gamma[0].clone()
        } else {
            gamma
                .iter()
                .fold(QMatrix::zeros(l.dim(), l.dim()), |acc, m| acc.add(&m.scale(&q(rng.gen_range(-4..=4)))))
        };
        let chi = g.charpoly();
        let fs = factor(&chi);
        if fs.len() >= 2 {
            let (p, e) = &fs[0];
            let a = p.pow(*e as u32);
            let b = chi.div_rem(&a).0;
            let (_, _, tb) = Poly::ext_gcd(&a, &b);
            return CentroidOutcome::Idempotent(g.eval_poly(&(&tb * &b)));
        }
        if fs[0].0.degree() == Some(semisimple_dim) {
            return CentroidOutcome::Local;
        }
    }
    CentroidOutcome::Undecided
}

pub fn lie_presentable(l: &LieAlgebra) -> Result<LieVerdict, LieError> {
    lie_presentable_with(l, &Budget::default())
}

/// Every YES carries a certificate that has been re-verified.
pub fn lie_presentable_with(l: &LieAlgebra, budget: &Budget) -> Result<LieVerdict, LieError> {
    let yes = |cert: LieCertificate, lattice: Option<IdealLattice>, rule: &str, c: &str| {
        verify_product_certificate(l, &cert).map_err(|r| LieError::Verification(r.to_string()))?;
        let verdict = Verdict::yes(Some(cert.to_json(l))).cite(rule, c);
        Ok(LieVerdict { verdict, certificate: Some(cert), lattice })
    };
    let z = l.centre();
    if !z.is_zero() {
        return yes(LieCertificate { g1: z, g2: l.whole() }, None, "lie.centre", cite::LIE_CENTRE);
    }
    let lattice = ideal_lattice(l, budget);
    let mut trace = Vec::new();
    for a in lattice.nonzero() {
        let za = l.centralizer(a);
        let sum = a.sum(&za);
        if !za.is_zero() && sum.is_full() {
            let cert = LieCertificate { g1: a.clone(), g2: za };
            return yes(cert, Some(lattice.clone()), "lie.ideal-pair", cite::LIE_IDEAL_PAIR);
        }
        trace.push((
            "lie.ideal",
            format!(
                "{} (dim {}): centralizer dim {}, a + z(a) dim {} of {}",
                l.render_space(a),
                a.dim(),
                za.dim(),
                sum.dim(),
                l.dim()
            ),
        ));
    }
    match &lattice.completeness {
        Completeness::Complete => {
            let verdict = with_trace(Verdict::no(), &trace, &[("lie.no-pair", cite::LIE_NO_PAIR.to_string())]);
            return Ok(LieVerdict { verdict, certificate: None, lattice: Some(lattice) });
        }
        Completeness::InfiniteFamilyDetected { first, second } => {
            trace.push((
                "lie.infinite-family",
                format!(
                    "{} and {} are isomorphic and minimal over a common ideal; centralizers {} and {}",
                    l.render_space(first),
                    l.render_space(second),
                    l.render_space(&l.centralizer(first)),
                    l.render_space(&l.centralizer(second)),
                ),
            ));
        }
        Completeness::Unknown(reason) => trace.push(("lie.lattice-incomplete", reason.clone())),
    }
    match decide_centroid(l, budget) {
        CentroidOutcome::Idempotent(e) => {
            let one_minus = QMatrix::identity(l.dim()).add(&e.scale(&q(-1)));
            let cert = LieCertificate { g1: image(&e), g2: image(&one_minus) };
            yes(cert, Some(lattice), "lie.centroid", cite::LIE_CENTROID)
        }
        CentroidOutcome::Local => {
            let verdict = with_trace(Verdict::no(), &trace, &[("lie.centroid", cite::LIE_CENTROID.to_string())]);
            Ok(LieVerdict { verdict, certificate: None, lattice: Some(lattice) })
        }
        CentroidOutcome::Undecided => {
            if l.dim() > budget.max_centroid_dim {
                trace.push(("lie.budget", format!("dimension {} exceeds the centroid budget {}", l.dim(), budget.max_centroid_dim)));
            }
            let verdict = with_trace(Verdict::unknown(), &trace, &[]);
            Ok(LieVerdict { verdict, certificate: None, lattice: Some(lattice) })
        }
    }
}

fn with_trace(mut v: Verdict, trace: &[(&str, String)], extra: &[(&str, String)]) -> Verdict {
    for (r, c) in trace.iter().chain(extra) {
        v = v.cite(r, c);
    }
    v
}

/// Whether some nontrivial idempotent splits `l`; independent of the
/// ideal lattice and used to cross-check it.
pub fn centroid_decomposes(l: &LieAlgebra) -> Option<bool> {
    match decide_centroid(l, &Budget::default()) {
        CentroidOutcome::Idempotent(_) => Some(true),
        CentroidOutcome::Local => Some(false),
        CentroidOutcome::Undecided => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::catalogue::*;
    use crate::verdict::Answer;

    fn answer(l: &LieAlgebra) -> Answer {
        lie_presentable(l).unwrap().verdict.answer
    }

    #[test]
    fn corpus() {
        assert_eq!(answer(&af()), Answer::No);
        assert_eq!(answer(&sol()), Answer::No);
        assert_eq!(answer(&sl2()), Answer::No);
        assert_eq!(answer(&abelian(2)), Answer::Yes);
        assert_eq!(answer(&heisenberg()), Answer::Yes);
        assert_eq!(answer(&sl2().direct_sum(&sl2())), Answer::Yes);
        assert_eq!(answer(&so(2, 1)), Answer::No);
    }

    #[test]
    fn semidirect_products_are_not_presentable() {
        for (p, q, r) in [(2, 1, 1), (3, 1, 1), (2, 1, 2)] {
            let v = lie_presentable(&vr_semidirect(p, q, r)).unwrap();
            assert_eq!(v.verdict.answer, Answer::No, "({p},{q},{r})");
        }
    }

    #[test]
    fn sol_trace_lists_each_ideal() {
        let v = lie_presentable(&sol()).unwrap();
        assert_eq!(v.verdict.trace.iter().filter(|t| t.rule == "lie.ideal").count(), 4);
    }

    #[test]
    fn centroid_agrees_with_lattice() {
        let s = sl2().direct_sum(&so(3, 0));
        assert_eq!(centroid_decomposes(&s), Some(true));
        for l in [af(), sol(), sl2(), so(3, 1), vr_semidirect(2, 1, 1), vr_semidirect(2, 1, 2)] {
            assert_eq!(centroid_decomposes(&l), Some(false));
        }
        // so(3,1) is simple over Q but its centroid is a quadratic field
        assert_eq!(centroid(&so(3, 1)).len(), 2);
    }

    #[test]
    fn centroid_route_certificate_is_accepted() {
        // a tiny dimension bound leaves the lattice unknown
        let l = sl2().direct_sum(&sl2());
        let v = lie_presentable_with(&l, &Budget { max_dim: 1, ..Budget::default() }).unwrap();
        assert_eq!(v.verdict.answer, Answer::Yes);
        assert_eq!(v.verdict.trace.last().unwrap().rule, "lie.centroid");
    }
}
