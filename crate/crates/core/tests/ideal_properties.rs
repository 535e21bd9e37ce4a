//! Algebraic laws of the monomial-ideal operations on random inputs.

mod common;

use common::{arb_exponent, arb_ideal, brute_force_members_in_box, embed};
use monoreg::{Exponent, MonomialIdeal};
use proptest::prelude::*;

/// Checks that the stored generators form a divisibility antichain.
fn is_antichain(i: &MonomialIdeal) -> bool {
    let gens = i.gens();
    for (k, g) in gens.iter().enumerate() {
        for (l, h) in gens.iter().enumerate() {
            if k != l && g.divides(h) {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn construction_yields_antichain(i in arb_ideal(5, 5, 8)) {
        prop_assert!(is_antichain(&i));
    }

    #[test]
    fn operations_preserve_antichain(
        i in arb_ideal(4, 4, 6),
        j in arb_ideal(4, 4, 6),
        a in arb_exponent(4, 4),
    ) {
        let (i, j) = (embed(&i, 4), embed(&j, 4));
        prop_assert!(is_antichain(&i.sum(&j).unwrap()));
        prop_assert!(is_antichain(&i.intersect(&j).unwrap()));
        prop_assert!(is_antichain(&i.colon(&a).unwrap()));
        prop_assert!(is_antichain(&i.radical()));
    }

    #[test]
    fn colon_composes_additively(
        i in arb_ideal(4, 4, 6),
        coords_a in proptest::collection::vec(0u32..=3, 4),
        coords_b in proptest::collection::vec(0u32..=3, 4),
    ) {
        let n = i.n();
        let a = Exponent::new(coords_a[..n].to_vec());
        let b = Exponent::new(coords_b[..n].to_vec());
        let lhs = i.colon(&a).unwrap().colon(&b).unwrap();
        let rhs = i.colon(&a.mul(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn radical_laws(i in arb_ideal(4, 4, 6), j in arb_ideal(4, 4, 6)) {
        let (i, j) = (embed(&i, 4), embed(&j, 4));
        prop_assert_eq!(i.radical().radical(), i.radical());
        prop_assert_eq!(
            i.intersect(&j).unwrap().radical(),
            i.radical().intersect(&j.radical()).unwrap()
        );
    }

    #[test]
    fn sum_distributes_over_intersection(
        i in arb_ideal(4, 3, 5),
        j in arb_ideal(4, 3, 5),
        k in arb_ideal(4, 3, 5),
    ) {
        let (i, j, k) = (embed(&i, 4), embed(&j, 4), embed(&k, 4));
        let lhs = i.sum(&j.intersect(&k).unwrap()).unwrap();
        let rhs = i.sum(&j).unwrap().intersect(&i.sum(&k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_agrees_with_brute_force(i in arb_ideal(3, 3, 5)) {
        let bounds: Vec<u32> = i.rho_vector().iter().map(|&r| r + 1).collect();
        let members = brute_force_members_in_box(&i, &bounds);
        for b in common::box_points_inclusive(&bounds) {
            prop_assert_eq!(i.contains(&b), members.contains(b.coords()));
        }
    }
}
