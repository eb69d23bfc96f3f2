mod common;

use nalgebra::DMatrix;
use proptest::prelude::*;

use pbp_core::coxeter::{
    catalogue, classify, coxeter_presentable, of_algebra, signature, tits_form, ComponentType, CoxeterMatrix,
};
use pbp_core::lie::{lie_presentable, Budget};
use pbp_core::verdict::Answer;

fn label() -> impl Strategy<Value = Option<u32>> {
    prop_oneof![Just(Some(2)), Just(Some(3)), Just(Some(4)), Just(Some(5)), Just(Some(6)), Just(None)]
}

fn matrix(max_n: usize) -> impl Strategy<Value = CoxeterMatrix> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(label(), n * (n - 1) / 2).prop_map(move |labels| {
            let mut edges = Vec::new();
            let mut it = labels.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j, it.next().unwrap()));
                }
            }
            CoxeterMatrix::from_edges(n, &edges)
        })
    })
}

fn float_counts(m: &CoxeterMatrix) -> (usize, usize, usize) {
    let rows = tits_form(m).to_f64();
    let n = rows.len();
    let eig = DMatrix::from_fn(n, n, |i, j| rows[i][j]).symmetric_eigenvalues();
    let p = eig.iter().filter(|&&x| x > 1e-9).count();
    let q = eig.iter().filter(|&&x| x < -1e-9).count();
    (p, q, n - p - q)
}

proptest! {
    #![proptest_config(common::config(128))]

    #[test]
    fn signature_matches_float_oracle(m in matrix(5)) {
        let s = signature(&tits_form(&m)).unwrap();
        prop_assert_eq!(s.p + s.q + s.r, m.rank());
        prop_assert_eq!((s.p, s.q, s.r), float_counts(&m));
        for c in classify(&m).unwrap() {
            if c.label == ComponentType::Affine {
                prop_assert_eq!(c.signature.r, 1);
            }
        }
    }

    #[test]
    fn rank_two(l in label()) {
        let m = CoxeterMatrix::from_edges(2, &[(0, 1, l)]);
        let s = signature(&tits_form(&m)).unwrap();
        match l {
            Some(_) => prop_assert_eq!((s.p, s.q, s.r, classify(&m).unwrap()[0].label), (2, 0, 0, ComponentType::Finite)),
            None => prop_assert_eq!((s.p, s.q, s.r, classify(&m).unwrap()[0].label), (1, 0, 1, ComponentType::Affine)),
        }
    }
}

// The Lie algebra of an irreducible indefinite Coxeter group of rank >= 3
// is judged not presentable, outside the signatures where so(p, q) splits.
#[test]
fn indefinite_groups_have_non_presentable_algebras() {
    let mut corpus = vec![
        catalogue::triangle(2, 3, 7),
        catalogue::triangle(2, 4, 5),
        catalogue::triangle(3, 3, 4),
        catalogue::triangle(3, 3, 7),
        catalogue::t_shape(2, 3, 7),
        CoxeterMatrix::from_edges(4, &[(0, 1, Some(3)), (1, 2, Some(3)), (2, 3, Some(3)), (0, 3, Some(3)), (0, 2, Some(3)), (1, 3, Some(3))]),
        CoxeterMatrix::from_edges(4, &[(0, 1, Some(5)), (1, 2, Some(3)), (2, 3, Some(5))]),
    ];
    corpus.push(CoxeterMatrix::from_edges(3, &[(0, 1, None), (1, 2, None), (0, 2, None)]));
    for m in corpus {
        let comps = classify(&m).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].label, ComponentType::Indefinite);
        assert_eq!(coxeter_presentable(&m).unwrap().answer, Answer::No);
        let s = comps[0].signature;
        let n = s.p + s.q;
        if n >= 3 && ![(4, 0), (2, 2), (0, 4)].contains(&(s.p, s.q)) {
            let l = of_algebra(s);
            let v = lie_presentable(&l).unwrap();
            // Past the centroid budget the answer may only be withheld.
            if l.dim() <= Budget::default().max_centroid_dim {
                assert_eq!(v.verdict.answer, Answer::No, "{s:?}");
            } else {
                assert_ne!(v.verdict.answer, Answer::Yes, "{s:?}");
            }
        }
    }
}
