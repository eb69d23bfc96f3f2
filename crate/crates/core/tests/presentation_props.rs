mod common;

use proptest::prelude::*;

use pbp_core::presentation::{
    abelianization, coset_enumerate, reidemeister_schreier, rs_counts, FinitePresentation, PermutationHom, Word,
};

fn word(a: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..a, prop_oneof![Just(1i8), Just(-1i8)]), 1..=max_len).prop_map(Word::new)
}

fn presentation() -> impl Strategy<Value = FinitePresentation> {
    (1usize..=3)
        .prop_flat_map(|a| (Just(a), prop::collection::vec(word(a, 8), 1..=4)))
        .prop_filter_map("empty relator", |(a, rs)| {
            if rs.iter().any(|r| r.is_empty()) {
                return None;
            }
            FinitePresentation::with_rank(a, rs).ok()
        })
}

/// Regular action of `Z_k x Z_l` on itself; point `i * l + j` is `(i, j)`.
fn translation(k: usize, l: usize, (di, dj): (usize, usize)) -> Vec<usize> {
    (0..k * l).map(|x| ((x / l + di) % k) * l + (x % l + dj) % l).collect()
}

proptest! {
    #![proptest_config(common::config(64))]

    #[test]
    fn abelianization_ignores_relator_order_inversion_and_rotation(
        p in presentation(),
        seed in any::<u64>(),
    ) {
        let base = abelianization(&p);
        let mut rs: Vec<Word> = p.relators().to_vec();
        let n = rs.len();
        rs.rotate_left((seed as usize) % n);
        let rs: Vec<Word> = rs
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                let r = r.rotate((seed as usize >> 8).wrapping_add(i) % r.len().max(1));
                if (seed >> (16 + i)) & 1 == 1 { r.inverse() } else { r }
            })
            .collect();
        let q = FinitePresentation::with_rank(p.generator_count(), rs).unwrap();
        prop_assert_eq!(abelianization(&q), base);
    }

    #[test]
    fn finite_index_subgroups_of_z2_are_z2(
        k in 1usize..=4,
        l in 1usize..=4,
        a in (0usize..4, 0usize..4),
        b in (0usize..4, 0usize..4),
    ) {
        let p = FinitePresentation::from_json(r#"{"generators": ["a", "b"], "relators": ["a b a^-1 b^-1"]}"#).unwrap();
        let hom = PermutationHom::new(vec![translation(k, l, a), translation(k, l, b)]).unwrap();
        let t = coset_enumerate(&p, &hom).unwrap();
        let sub = reidemeister_schreier(&p, &t).unwrap();
        let ab = abelianization(&sub.presentation);
        prop_assert_eq!(ab.free_rank, 2);
        prop_assert!(ab.torsion.is_empty());
        let d = t.index() as u64;
        prop_assert_eq!(
            (sub.presentation.generator_count() as u64, sub.presentation.relator_count() as u64),
            rs_counts(2, 1, d)
        );
    }
}
