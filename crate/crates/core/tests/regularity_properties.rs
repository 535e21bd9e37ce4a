//! Engine versus oracle, and the variable-addition lemmas, on random ideals.

mod common;

use common::arb_ideal;
use monoreg::{
    check_variable_addition, critical_pairs, degree_complex, reduced_homology_dims, regularity,
    regularity_oracle_koszul, Field,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn engine_agrees_with_koszul_oracle(i in arb_ideal(3, 3, 5)) {
        for field in [Field::Rationals, Field::gf(2).unwrap()] {
            let engine = regularity(&i, field).unwrap();
            let oracle = regularity_oracle_koszul(&i, field).unwrap();
            prop_assert_eq!(
                engine.reg_ideal, oracle.reg_ideal,
                "engine {} vs oracle {} over {} on {}",
                engine.reg_ideal, oracle.reg_ideal, field, i
            );
        }
    }

    #[test]
    fn variable_addition_never_increases_regularity(
        i in arb_ideal(3, 3, 4),
        j0 in 0usize..3,
    ) {
        let j = (j0 % i.n()) + 1;
        prop_assert!(check_variable_addition(&i, j, Field::Rationals).unwrap());
    }

    #[test]
    fn reported_witness_is_a_real_critical_pair(i in arb_ideal(4, 3, 5)) {
        let report = regularity(&i, Field::Rationals).unwrap();
        let w = &report.witness;
        prop_assert_eq!(report.reg_module, w.a.total_degree() + w.i);
        prop_assert!(w.face.is_disjoint(w.a.support()));
        // Nonvanishing of the witnessed link homology, recomputed directly.
        let delta = degree_complex(&i, &w.a).unwrap();
        prop_assert!(delta.has_face(w.face));
        let link = delta.link(w.face).unwrap();
        let profile = reduced_homology_dims(&link, Field::Rationals);
        prop_assert!(profile.dim_at(w.i as i64 - 1) > 0);
    }

    #[test]
    fn no_critical_pair_beats_the_reported_maximum(i in arb_ideal(3, 3, 4)) {
        let report = regularity(&i, Field::Rationals).unwrap();
        let pairs = critical_pairs(&i, Field::Rationals).unwrap();
        prop_assert!(!pairs.is_empty());
        let max = pairs
            .iter()
            .map(|p| p.a.total_degree() + p.i)
            .max()
            .unwrap();
        prop_assert_eq!(max, report.reg_module);
    }
}
