//! Soundness of the Newton-polyhedron machinery on random ideals.

mod common;

use common::{arb_ideal, arb_squarefree_ideal, vs};
use monoreg::{
    closure_restriction_check, integral_closure, is_integrally_closed, np_membership, Exponent,
    MonomialIdeal, VarSet,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn closure_contains_and_is_idempotent(i in arb_ideal(5, 6, 6)) {
        let closure = integral_closure(&i).unwrap();
        for g in i.gens() {
            prop_assert!(closure.contains(g), "I must sit inside its closure");
        }
        prop_assert!(is_integrally_closed(&closure).unwrap());
    }

    #[test]
    fn squarefree_ideals_are_integrally_closed(i in arb_squarefree_ideal(5, 6)) {
        prop_assert!(is_integrally_closed(&i).unwrap());
    }

    #[test]
    fn certificates_hold_exactly(i in arb_ideal(4, 4, 5)) {
        // Probe every point in a small box around the generators.
        let bounds: Vec<u32> = i.rho_vector().iter().map(|&r| (r + 1).min(4)).collect();
        for a in common::box_points_inclusive(&bounds) {
            let (member, cert) = np_membership(&i, &a).unwrap();
            match cert {
                Some(c) => {
                    prop_assert!(member);
                    prop_assert!(c.verify(&i, &a), "certificate at {a:?} must verify");
                }
                None => prop_assert!(!member),
            }
        }
    }

    #[test]
    fn membership_is_stable_above_the_rho_box(
        i in arb_ideal(4, 4, 5),
        j0 in 0usize..4,
        bump in 1u32..3,
        coords in proptest::collection::vec(0u32..=5, 4),
    ) {
        let n = i.n();
        let j = (j0 % n) + 1;
        let rho_j = i.rho(j).unwrap();
        let mut coords = coords[..n].to_vec();
        coords[j - 1] = rho_j + bump; // strictly above the box
        let a = Exponent::new(coords);
        let mut reduced = a.coords().to_vec();
        reduced[j - 1] -= 1;
        let b = Exponent::new(reduced);
        let (in_a, _) = np_membership(&i, &a).unwrap();
        let (in_b, _) = np_membership(&i, &b).unwrap();
        prop_assert_eq!(in_a, in_b, "a = {:?}, j = {}", a, j);
    }

    #[test]
    fn restriction_commutes_with_closure(
        i in arb_ideal(4, 4, 5),
        mask in 0u64..16,
    ) {
        let v = VarSet::from_mask(mask & VarSet::full(i.n()).as_mask());
        prop_assert!(closure_restriction_check(&i, v).unwrap());
    }
}

#[test]
fn closure_certificate_of_worked_restriction() {
    // Restricting the 10-variable worked ideal to {2, 7, 10} keeps exactly
    // the two generators supported there.
    let i: MonomialIdeal = serde_json::from_str(
        r#"{"n":10,"gens":[
            [1,1,0,0,0,0,0,0,0,0],[1,0,1,0,0,0,0,0,0,0],[1,0,0,1,0,0,0,0,0,0],
            [0,1,0,0,1,0,0,0,0,0],[0,1,0,0,0,1,0,0,0,0],[0,1,0,0,0,0,4,0,0,0],
            [0,1,0,0,0,0,0,0,0,6],[0,0,1,0,0,0,4,0,0,0],[0,0,0,1,0,0,4,0,0,0],
            [0,0,0,1,0,0,0,7,0,0],[0,0,0,0,1,0,0,7,0,0],[0,0,0,0,1,0,0,0,4,0],
            [0,0,0,0,0,1,0,0,0,6]]}"#,
    )
    .unwrap();
    let restricted = i.restrict(vs(&[2, 7, 10])).unwrap();
    let mut x2x7 = vec![0u32; 10];
    x2x7[1] = 1;
    x2x7[6] = 4;
    let mut x2x10 = vec![0u32; 10];
    x2x10[1] = 1;
    x2x10[9] = 6;
    assert_eq!(
        restricted,
        MonomialIdeal::new(10, vec![Exponent::new(x2x7), Exponent::new(x2x10)]).unwrap()
    );
}
