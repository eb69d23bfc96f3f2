mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pbp_core::abels::{commutes_mod_centre, gamma_commutes, sample_element, GammaElement, UnitRing, ZInvP, A3};

fn prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7)]
}

fn zinvp(p: u64) -> impl Strategy<Value = ZInvP> {
    (-200i64..=200, 0u32..=4).prop_map(move |(a, k)| ZInvP::frac(p, a, k))
}

fn element(p: u64) -> impl Strategy<Value = A3<ZInvP>> {
    any::<u64>().prop_map(move |s| sample_element(p, &mut ChaCha8Rng::seed_from_u64(s)))
}

fn in_ring(p: u64, x: &ZInvP) -> bool {
    ZInvP::new(p, x.value().clone()).is_some()
}

proptest! {
    #![proptest_config(common::config(256))]

    #[test]
    fn ring_operations_stay_in_the_ring(
        (p, a, b, k) in prime().prop_flat_map(|p| (Just(p), zinvp(p), zinvp(p), 0u32..=3)),
    ) {
        for c in [a.add(&b), a.sub(&b), a.mul(&b), a.div_p_power(k), a.neg()] {
            prop_assert!(in_ring(p, &c));
        }
    }

    #[test]
    fn a3_is_a_group(
        (g, h, k) in prime().prop_flat_map(|p| (element(p), element(p), element(p))),
    ) {
        prop_assert_eq!(g.mul(&h).mul(&k), g.mul(&h.mul(&k)));
        prop_assert!(g.mul(&g.inv()).is_identity());
        prop_assert!(g.inv().mul(&g).is_identity());
    }

    // X = (1, 0, 0, 1) forces u = 1 and y = 0, D = diag(1, p, 1) forces x = 0.
    #[test]
    fn centralizer_of_a_generating_pair_is_the_centre(
        (p, h) in prime().prop_flat_map(|p| (Just(p), element(p))),
    ) {
        let one = ZInvP::int(p, 1);
        let zero = ZInvP::int(p, 0);
        let x = A3::new(one.clone(), zero.clone(), zero.clone(), one.clone()).unwrap();
        let d = A3::new(zero.clone(), zero.clone(), zero.clone(), ZInvP::unit(p, 1, 1)).unwrap();
        let commutes = |a: &A3<ZInvP>| a.mul(&h) == h.mul(a);
        let central = h.u == one && h.x.is_zero() && h.y.is_zero();
        prop_assert_eq!(commutes(&x) && commutes(&d), central);
        prop_assert_eq!(h.is_central(), central);
    }

    #[test]
    fn diagonal_elements_are_acentral(
        (p, h, sign, n) in prime().prop_flat_map(|p| (
            Just(p),
            element(p),
            prop_oneof![Just(1i8), Just(-1i8)],
            prop_oneof![-3i64..=-1, 1i64..=3],
        )),
    ) {
        let g = GammaElement::new(A3::diagonal(p, sign, n));
        let h = GammaElement::new(h);
        if commutes_mod_centre(&g, &h) {
            prop_assert!(h.lift().x.is_zero() && h.lift().y.is_zero());
        }
        if gamma_commutes(&g, &h) {
            prop_assert!(commutes_mod_centre(&g, &h));
        }
    }
}
