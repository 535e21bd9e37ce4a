//! Fixed golden checks: the worked examples with known exact answers.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::traits::One;
use serde_json::json;

use monoreg::{
    degree_complex, integral_closure, np_membership, parse_ideal_text, reduced_homology_dims,
    regularity, regularity_oracle_koszul, stanley_reisner_complex, Exponent, Field, MonomialIdeal,
    RationalCertificate, SimplicialComplex, VarSet, WeightedOrientedGraph,
};

use crate::suites::{FailureRecord, VerificationRun};

/// The weighted 3-cycle with weights (6, 3, 5).
pub fn golden_cycle() -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(
        3,
        vec![(1, 2), (2, 3), (3, 1)],
        BTreeMap::from([(1, 6), (2, 3), (3, 5)]),
    )
    .expect("golden cycle is valid")
}

/// The 10-vertex worked example with sinks 7, 8, 9, 10.
pub fn worked_graph() -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(
        10,
        vec![
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 5),
            (2, 6),
            (2, 7),
            (2, 10),
            (3, 7),
            (4, 7),
            (4, 8),
            (5, 8),
            (5, 9),
            (6, 10),
        ],
        BTreeMap::from([(7, 4), (8, 7), (9, 4), (10, 6)]),
    )
    .expect("worked graph is valid")
}

/// The exponent x7^2 x8^3 x9 x10^3 in ten variables.
pub fn worked_exponent() -> Exponent {
    Exponent::new(vec![0, 0, 0, 0, 0, 0, 2, 3, 1, 3])
}

/// Integral closure of the worked edge ideal, computed once and shared by
/// the checks that need it.
fn worked_closure() -> &'static MonomialIdeal {
    static CLOSURE: std::sync::OnceLock<MonomialIdeal> = std::sync::OnceLock::new();
    CLOSURE.get_or_init(|| {
        integral_closure(&worked_graph().edge_ideal()).expect("closure of the worked ideal")
    })
}

fn vs(indices: &[usize]) -> VarSet {
    VarSet::from_indices(indices.iter().copied())
}

type CheckFn = fn() -> Result<(), String>;

fn check_cycle_edge_ideal() -> Result<(), String> {
    let expected = parse_ideal_text("x1*x2^3, x2*x3^5, x3*x1^6", None).map_err(err)?;
    let got = golden_cycle().edge_ideal();
    expect_eq("cycle edge ideal", &got, &expected)
}

fn check_strictness_pair() -> Result<(), String> {
    let ideal = golden_cycle().edge_ideal();
    let reg = regularity(&ideal, Field::Rationals).map_err(err)?;
    expect_eq("reg of the cycle ideal", &reg.reg_ideal, &12)?;
    let closure = integral_closure(&ideal).map_err(err)?;
    let reg_closure = regularity(&closure, Field::Rationals).map_err(err)?;
    expect_eq("reg of its closure", &reg_closure.reg_ideal, &7)?;
    // Independent oracle confirms both.
    expect_eq(
        "oracle reg of the cycle ideal",
        &regularity_oracle_koszul(&ideal, Field::Rationals).map_err(err)?.reg_ideal,
        &12,
    )?;
    expect_eq(
        "oracle reg of the closure",
        &regularity_oracle_koszul(&closure, Field::Rationals).map_err(err)?.reg_ideal,
        &7,
    )
}

fn check_complete_formulas_on_cycle() -> Result<(), String> {
    let g = golden_cycle();
    expect_eq("closed-form reg", &g.complete_graph_reg().map_err(err)?, &12)?;
    expect_eq("closed-form closure reg", &g.complete_closure_reg().map_err(err)?, &7)?;
    expect_eq("the cycle is not of type 1", &g.is_type_one().map_err(err)?, &false)
}

fn check_worked_graph_shape() -> Result<(), String> {
    let g = worked_graph();
    expect_eq("vertex count", &g.vertex_count(), &10)?;
    expect_eq("edge count", &g.edge_count(), &13)?;
    expect_eq("generator count", &g.edge_ideal().num_gens(), &13)?;
    expect_eq("in-neighbors of 7", &g.in_neighbors(7), &vs(&[2, 3, 4]))?;
    expect_eq("in-neighbors of 8", &g.in_neighbors(8), &vs(&[4, 5]))?;
    expect_eq("in-neighbors of 9", &g.in_neighbors(9), &vs(&[5]))?;
    expect_eq("in-neighbors of 10", &g.in_neighbors(10), &vs(&[2, 6]))
}

fn check_worked_capacities() -> Result<(), String> {
    let g = worked_graph();
    let a = worked_exponent();
    let c = g.capacity(&a, vs(&[7, 10])).map_err(err)?;
    expect_eq("c({7,10})", &c, &BigRational::one())?;
    let family: Vec<VarSet> = g
        .minimal_capacity_sets(&a)
        .map_err(err)?
        .into_iter()
        .map(|cs| cs.vertices)
        .collect();
    expect_eq(
        "minimal capacity family",
        &family,
        &vec![vs(&[7, 8, 9]), vs(&[7, 10]), vs(&[8, 9, 10])],
    )
}

fn check_worked_radical_identity() -> Result<(), String> {
    let g = worked_graph();
    let ideal = g.edge_ideal();
    let a = worked_exponent();
    let extra = parse_ideal_text("x2, x3*x5, x3*x6, x4*x5, x4*x6, x5*x6", Some(10)).map_err(err)?;
    let expected = ideal.radical().sum(&extra).map_err(err)?;

    let closed_form = g.closure_radical_formula(&a).map_err(err)?;
    expect_eq("closed form", &closed_form, &expected)?;

    let direct = worked_closure().colon(&a).map_err(err)?.radical();
    expect_eq("direct pipeline", &direct, &expected)?;

    // Same identity read through the degree complex.
    let delta = degree_complex(worked_closure(), &a).map_err(err)?;
    expect_eq(
        "Stanley-Reisner ideal of the degree complex",
        &monoreg::stanley_reisner_ideal(&delta),
        &expected,
    )
}

fn check_worked_restriction_commutes() -> Result<(), String> {
    // closure(I restricted to V) = closure(I) restricted to V, with V the
    // support of an intersection-ideal generator joined with its sink set.
    let ideal = worked_graph().edge_ideal();
    for v in [vs(&[3, 6, 7, 10]), vs(&[2, 3, 4, 7, 10]), vs(&[4, 5, 8, 9])] {
        let lhs = integral_closure(&ideal.restrict(v).map_err(err)?).map_err(err)?;
        let rhs = worked_closure().restrict(v).map_err(err)?;
        if lhs != rhs {
            return Err(format!("restriction to {v} does not commute with closure"));
        }
    }
    Ok(())
}

fn check_worked_restriction() -> Result<(), String> {
    let ideal = worked_graph().edge_ideal();
    let restricted = ideal.restrict(vs(&[2, 7, 10])).map_err(err)?;
    let expected = parse_ideal_text("x2*x7^4, x2*x10^6", Some(10)).map_err(err)?;
    expect_eq("restriction to {2,7,10}", &restricted, &expected)
}

fn check_two_vertex_rule() -> Result<(), String> {
    for w in 2u32..=4 {
        let g = WeightedOrientedGraph::new(2, vec![(1, 2)], BTreeMap::from([(2, w)]))
            .map_err(err)?;
        let ideal = g.edge_ideal();
        let total = 1 + w as u64;
        let reg = regularity(&ideal, Field::Rationals).map_err(err)?.reg_ideal;
        expect_eq("edge reg equals |w|", &reg, &total)?;
        let closure = integral_closure(&ideal).map_err(err)?;
        let reg_c = regularity(&closure, Field::Rationals).map_err(err)?.reg_ideal;
        expect_eq("closure reg equals |w|", &reg_c, &total)?;
    }
    Ok(())
}

fn check_empty_complex_conventions() -> Result<(), String> {
    let maximal = MonomialIdeal::variables(3, VarSet::full(3)).map_err(err)?;
    let delta = stanley_reisner_complex(&maximal).map_err(err)?;
    if !delta.is_empty_complex() {
        return Err("complex of the maximal ideal is not {∅}".into());
    }
    let profile = reduced_homology_dims(&delta, Field::Rationals);
    expect_eq("homology lives in degree -1", &profile.dim_at(-1), &1)?;
    // Any cone is acyclic.
    let cone = SimplicialComplex::from_faces(4, vec![vs(&[1, 2, 4]), vs(&[2, 3, 4])])
        .map_err(err)?;
    if !monoreg::is_acyclic(&cone, Field::Rationals) {
        return Err("cone has nonvanishing reduced homology".into());
    }
    Ok(())
}

fn check_saturated_critical_pair() -> Result<(), String> {
    // a = w - 1 on the no-source cycle: the degree complex collapses to {∅}
    // and (a, 0) is critical; the engine's extremal witness is exactly that.
    let ideal = golden_cycle().edge_ideal();
    let a = Exponent::new(vec![5, 2, 4]);
    let delta = degree_complex(&ideal, &a).map_err(err)?;
    if !delta.is_empty_complex() {
        return Err(format!("degree complex at {a:?} is {delta:?}, not {{∅}}"));
    }
    let report = regularity(&ideal, Field::Rationals).map_err(err)?;
    expect_eq("extremal exponent", &report.witness.a, &a)?;
    expect_eq("extremal index", &report.witness.i, &0)
}

fn check_cycle_membership_certificate() -> Result<(), String> {
    // The 3-cycle with the maximum weight on vertex 3 admits the explicit
    // certificate solving c1 + w1·c3 = 1, w2·c1 + c2 = 1, c1 + c2 + c3 = 1
    // at a = (1, 1, max-1).
    for (w1, w2, w3) in [(3i64, 5i64, 6i64), (2, 2, 4), (6, 3, 6)] {
        let g = WeightedOrientedGraph::new(
            3,
            vec![(1, 2), (2, 3), (3, 1)],
            BTreeMap::from([(1, w1 as u32), (2, w2 as u32), (3, w3 as u32)]),
        )
        .map_err(err)?;
        let ideal = g.edge_ideal();
        let a = Exponent::new(vec![1, 1, (w3 - 1) as u32]);

        let c3 = BigRational::new((w2 - 1).into(), (w2 * w1 - w1 + 1).into());
        let c2 = BigRational::from_integer((w1 - 1).into()) * &c3;
        let c1 = BigRational::one() - &c2 - &c3;
        let index_of = |gen: &Exponent| {
            ideal
                .gens()
                .iter()
                .position(|g| g == gen)
                .expect("generator present")
        };
        let mut coefficients = BTreeMap::new();
        coefficients.insert(index_of(&Exponent::new(vec![1, w2 as u32, 0])), c1);
        coefficients.insert(index_of(&Exponent::new(vec![0, 1, w3 as u32])), c2);
        coefficients.insert(index_of(&Exponent::new(vec![w1 as u32, 0, 1])), c3);
        let cert = RationalCertificate { coefficients };
        if !cert.verify(&ideal, &a) {
            return Err(format!("closed-form certificate fails at weights ({w1},{w2},{w3})"));
        }

        let (member, engine_cert) = np_membership(&ideal, &a).map_err(err)?;
        if !member {
            return Err(format!("(1,1,{}) not recognized as a member", w3 - 1));
        }
        let engine_cert = engine_cert.ok_or("membership without certificate")?;
        if !engine_cert.verify(&ideal, &a) {
            return Err("engine certificate fails verification".into());
        }
    }
    Ok(())
}

fn check_rho_equals_weights() -> Result<(), String> {
    for g in [golden_cycle(), worked_graph()] {
        let ideal = g.edge_ideal();
        for j in g.vertex_set().iter() {
            let rho = ideal.rho(j).map_err(err)?;
            let w = g.weight(j).map_err(err)?;
            if rho != w {
                return Err(format!("rho_{j} = {rho} but w({j}) = {w}"));
            }
        }
    }
    Ok(())
}

fn check_trivial_weights_give_underlying_ideal() -> Result<(), String> {
    let g = WeightedOrientedGraph::new(
        4,
        vec![(1, 2), (2, 3), (3, 4), (4, 1)],
        BTreeMap::new(),
    )
    .map_err(err)?;
    let ideal = g.edge_ideal();
    if !ideal.is_squarefree() {
        return Err("trivial weights must give a squarefree ideal".into());
    }
    expect_eq("edge ideal equals its radical", &ideal, &g.underlying_edge_ideal())
}

fn check_single_sink_cone() -> Result<(), String> {
    // I(G) + n({u}) for a single sink u has a Stanley-Reisner complex that
    // is a cone over u.
    let g = worked_graph();
    for u in [7usize, 8, 9, 10] {
        let ideal = g
            .underlying_edge_ideal()
            .sum(&g.neighbor_intersection_ideal(VarSet::singleton(u)).map_err(err)?)
            .map_err(err)?;
        let delta = stanley_reisner_complex(&ideal).map_err(err)?;
        if !delta.is_cone_over(u) {
            return Err(format!("complex is not a cone over sink {u}"));
        }
        if !monoreg::is_acyclic(&delta, Field::Rationals) {
            return Err(format!("cone over sink {u} is not acyclic"));
        }
    }
    Ok(())
}

fn check_worked_exponent_criticality() -> Result<(), String> {
    // Derived fact: the worked exponent is not a critical exponent of the
    // closure; every admissible link is acyclic, consistent with the
    // acyclicity of capacity-family complexes.
    let a = worked_exponent();
    let delta = degree_complex(worked_closure(), &a).map_err(err)?;
    let avoid = a.support();
    for face in delta.faces() {
        if !face.is_disjoint(avoid) {
            continue;
        }
        let link = delta.link(face).map_err(err)?;
        let profile = reduced_homology_dims(&link, Field::Rationals);
        if !profile.is_trivial() {
            return Err(format!(
                "unexpected critical pair at F = {face}: {:?}",
                profile.dims
            ));
        }
    }
    Ok(())
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: &T, want: &T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

const CHECKS: &[(&str, CheckFn)] = &[
    ("cycle-edge-ideal", check_cycle_edge_ideal),
    ("strictness-pair-12-7", check_strictness_pair),
    ("complete-formulas-on-cycle", check_complete_formulas_on_cycle),
    ("worked-graph-shape", check_worked_graph_shape),
    ("worked-capacities", check_worked_capacities),
    ("worked-radical-identity", check_worked_radical_identity),
    ("worked-restriction", check_worked_restriction),
    ("worked-restriction-commutes", check_worked_restriction_commutes),
    ("two-vertex-rule", check_two_vertex_rule),
    ("empty-complex-conventions", check_empty_complex_conventions),
    ("saturated-critical-pair", check_saturated_critical_pair),
    ("cycle-membership-certificate", check_cycle_membership_certificate),
    ("rho-equals-weights", check_rho_equals_weights),
    ("trivial-weights", check_trivial_weights_give_underlying_ideal),
    ("single-sink-cone", check_single_sink_cone),
    ("worked-exponent-criticality", check_worked_exponent_criticality),
];

/// Runs every golden check and reports them as a verification run.
pub fn run_golden() -> VerificationRun {
    let mut failures = Vec::new();
    let mut timings = Vec::new();
    for (index, (name, check)) in CHECKS.iter().enumerate() {
        let start = std::time::Instant::now();
        if let Err(detail) = check() {
            failures.push(FailureRecord {
                index,
                instance: json!({ "check": name }),
                detail,
            });
        }
        timings.push(start.elapsed().as_millis() as u64);
    }
    let passed = failures.is_empty();
    VerificationRun {
        suite: "golden".into(),
        seed: 0,
        instances: CHECKS.len(),
        failures,
        notes: vec![],
        timings_ms: timings,
        passed,
    }
}

/// Names of the golden checks, in execution order.
pub fn golden_check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}
