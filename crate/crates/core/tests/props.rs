//! Property tests for the algebraic invariants.

use proptest::prelude::*;

use trifactor_core::cosets::build_coset_space;
use trifactor_core::factor;
use trifactor_core::perm::{parse_cycles, PermGroup, Permutation};

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        // Fisher-Yates off the proptest rng keeps shrinking sane
        for i in (1..degree).rev() {
            let j = (rng.next_u32() as usize) % (i + 1);
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    })
}

proptest! {
    #[test]
    fn product_inverse_reverses_factors(p in arb_perm(9), q in arb_perm(9)) {
        let lhs = (&p * &q).inverse();
        let rhs = &q.inverse() * &p.inverse();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_is_an_involution(p in arb_perm(11)) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert!((&p * &p.inverse()).is_identity());
    }

    #[test]
    fn conjugation_preserves_cycle_count(p in arb_perm(8), x in arb_perm(8)) {
        let conj = p.conjugate_by(&x).unwrap();
        prop_assert_eq!(conj.cycles().len(), p.cycles().len());
    }
}

fn s4_space() -> trifactor_core::CosetSpace {
    let g = PermGroup::new(
        4,
        vec![
            parse_cycles(4, "(1,2)").unwrap(),
            parse_cycles(4, "(1,2,3,4)").unwrap(),
        ],
    )
    .unwrap();
    let a = PermGroup::new(4, vec![parse_cycles(4, "(1,2)").unwrap()]).unwrap();
    build_coset_space(&g, &a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dc_label_is_constant_on_double_cosets(g in arb_perm(4), a1_idx in 0usize..2, a2_idx in 0usize..2) {
        let cs = s4_space();
        let a_elems = [Permutation::identity(4), parse_cycles(4, "(1,2)").unwrap()];
        let moved = &(&a_elems[a1_idx] * &g) * &a_elems[a2_idx];
        prop_assert_eq!(cs.dc_index(&moved).unwrap(), cs.dc_index(&g).unwrap());
    }

    #[test]
    fn triple_check_constant_on_double_cosets(g in arb_perm(4), a1_idx in 0usize..2, a2_idx in 0usize..2) {
        let cs = s4_space();
        let a_elems = [Permutation::identity(4), parse_cycles(4, "(1,2)").unwrap()];
        let moved = &(&a_elems[a1_idx] * &g) * &a_elems[a2_idx];
        prop_assert_eq!(
            factor::triple_check(&cs, &moved).unwrap(),
            factor::triple_check(&cs, &g).unwrap()
        );
    }

    #[test]
    fn act_right_is_an_action(g in arb_perm(4), h in arb_perm(4), c in 0u32..12) {
        let cs = s4_space();
        let via_product = cs.act_right(c, &(&g * &h)).unwrap();
        let stepwise = cs.act_right(cs.act_right(c, &g).unwrap(), &h).unwrap();
        prop_assert_eq!(via_product, stepwise);
    }
}
