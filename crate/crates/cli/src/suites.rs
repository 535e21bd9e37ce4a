//! Randomized verification suites.
//!
//! Every suite draws its instances up front from a seeded ChaCha stream, so
//! the same seed and parameters reproduce the same instance list; checks
//! then run in a work pool and results are assembled by instance index. A
//! failure record carries the full instance JSON, enough to replay it alone.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use monoreg::random::{
    all_tournaments, random_gamma_exponent, random_graph, random_ideal,
    random_independent_sink_set, random_sink_support_exponent, random_squarefree_ideal,
    random_tournament, with_random_weights_in,
};
use monoreg::{
    integral_closure, is_integrally_closed, np_membership, regularity, regularity_oracle_koszul,
    Exponent, Field, MonomialIdeal, VarSet, WeightedOrientedGraph,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    MainInequality,
    CompleteFormulas,
    RadicalFormulas,
    Acyclicity,
    OracleCrosscheck,
    ClosureIdempotence,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::MainInequality,
        Suite::CompleteFormulas,
        Suite::RadicalFormulas,
        Suite::Acyclicity,
        Suite::OracleCrosscheck,
        Suite::ClosureIdempotence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainInequality => "main-inequality",
            Suite::CompleteFormulas => "complete-formulas",
            Suite::RadicalFormulas => "radical-formulas",
            Suite::Acyclicity => "acyclicity",
            Suite::OracleCrosscheck => "oracle-crosscheck",
            Suite::ClosureIdempotence => "closure-idempotence",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    /// Upper bound on the vertex / variable count.
    pub n: usize,
    /// Upper bound on weights (or exponents, for ideal suites).
    pub w_max: u32,
    /// Number of instances.
    pub count: usize,
    pub seed: u64,
    pub field: Field,
    /// Enumerate all orientations instead of sampling (complete-formulas).
    pub exhaustive: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: 5,
            w_max: 4,
            count: 100,
            seed: crate::DEFAULT_SEED,
            field: Field::Rationals,
            exhaustive: false,
        }
    }
}

/// Machine-readable record of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationRun {
    pub suite: String,
    pub seed: u64,
    pub instances: usize,
    pub failures: Vec<FailureRecord>,
    /// Informational findings that are not failures (known-regime reports).
    pub notes: Vec<String>,
    pub timings_ms: Vec<u64>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub index: usize,
    pub instance: serde_json::Value,
    pub detail: String,
}

enum Check {
    Pass,
    Note(String),
    Fail(String),
}

fn assemble<I: Serialize + Sync>(
    suite: Suite,
    params: &SuiteParams,
    instances: Vec<I>,
    check: impl Fn(&I) -> Check + Sync,
) -> VerificationRun {
    let outcomes: Vec<(Check, u64)> = instances
        .par_iter()
        .map(|inst| {
            let start = Instant::now();
            let outcome = check(inst);
            (outcome, start.elapsed().as_millis() as u64)
        })
        .collect();

    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let mut timings = Vec::with_capacity(outcomes.len());
    for (index, (outcome, ms)) in outcomes.into_iter().enumerate() {
        timings.push(ms);
        match outcome {
            Check::Pass => {}
            Check::Note(text) => notes.push(format!("instance {index}: {text}")),
            Check::Fail(detail) => failures.push(FailureRecord {
                index,
                instance: serde_json::to_value(&instances[index])
                    .unwrap_or_else(|_| json!("unserializable instance")),
                detail,
            }),
        }
    }
    let passed = failures.is_empty();
    VerificationRun {
        suite: suite.name().to_string(),
        seed: params.seed,
        instances: instances.len(),
        failures,
        notes,
        timings_ms: timings,
        passed,
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> VerificationRun {
    match suite {
        Suite::MainInequality => main_inequality(params),
        Suite::CompleteFormulas => complete_formulas(params),
        Suite::RadicalFormulas => radical_formulas(params),
        Suite::Acyclicity => acyclicity(params),
        Suite::OracleCrosscheck => oracle_crosscheck(params),
        Suite::ClosureIdempotence => closure_idempotence(params),
    }
}

/// reg(closure(I(D,w))) <= reg(I(D,w)) on random graphs. A failure here
/// would be a counterexample to the inequality and is dumped verbatim.
fn main_inequality(params: &SuiteParams) -> VerificationRun {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let instances: Vec<WeightedOrientedGraph> = (0..params.count)
        .map(|_| {
            let n = rng.gen_range(2..=params.n.max(2));
            random_graph(&mut rng, n, params.w_max)
        })
        .collect();
    let field = params.field;
    assemble(Suite::MainInequality, params, instances, |g| {
        let ideal = g.edge_ideal();
        let closure = match integral_closure(&ideal) {
            Ok(c) => c,
            Err(e) => return Check::Fail(format!("closure failed: {e}")),
        };
        let reg_i = match regularity(&ideal, field) {
            Ok(r) => r.reg_ideal,
            Err(e) => return Check::Fail(format!("regularity failed: {e}")),
        };
        let reg_c = match regularity(&closure, field) {
            Ok(r) => r.reg_ideal,
            Err(e) => return Check::Fail(format!("closure regularity failed: {e}")),
        };
        if reg_c <= reg_i {
            Check::Pass
        } else {
            Check::Fail(format!(
                "reg(closure) = {reg_c} exceeds reg(ideal) = {reg_i}"
            ))
        }
    })
}

#[derive(Serialize)]
struct CompleteInstance {
    graph: WeightedOrientedGraph,
    /// Whether every non-source weight is at least 2, the regime in which
    /// the closed regularity formula is exact. Outside it only the closure
    /// formula is asserted; a regularity mismatch becomes a note.
    formula_regime: bool,
}

/// Closed formulas on complete oriented graphs: regularity from |w|, n, and
/// type, and closure regularity max w + 1.
fn complete_formulas(params: &SuiteParams) -> VerificationRun {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let w_lo = 2u32.min(params.w_max);
    let mut instances: Vec<CompleteInstance> = Vec::new();
    if params.exhaustive {
        for base in all_tournaments(params.n) {
            for _ in 0..3 {
                instances.push(CompleteInstance {
                    graph: with_random_weights_in(&mut rng, &base, w_lo, params.w_max),
                    formula_regime: true,
                });
            }
            instances.push(CompleteInstance {
                graph: with_random_weights_in(&mut rng, &base, 1, params.w_max),
                formula_regime: false,
            });
        }
    } else {
        for _ in 0..params.count {
            let base = random_tournament(&mut rng, params.n, 1);
            instances.push(CompleteInstance {
                graph: with_random_weights_in(&mut rng, &base, w_lo, params.w_max),
                formula_regime: true,
            });
        }
        for _ in 0..params.count.div_ceil(4) {
            let base = random_tournament(&mut rng, params.n, 1);
            instances.push(CompleteInstance {
                graph: with_random_weights_in(&mut rng, &base, 1, params.w_max),
                formula_regime: false,
            });
        }
    }
    let field = params.field;
    assemble(Suite::CompleteFormulas, params, instances, |inst| {
        let g = &inst.graph;
        let ideal = g.edge_ideal();
        let engine_reg = match regularity(&ideal, field) {
            Ok(r) => r.reg_ideal,
            Err(e) => return Check::Fail(format!("regularity failed: {e}")),
        };
        let formula_reg = g.complete_graph_reg().expect("instances are complete");
        let closure = match integral_closure(&ideal) {
            Ok(c) => c,
            Err(e) => return Check::Fail(format!("closure failed: {e}")),
        };
        let engine_closure_reg = match regularity(&closure, field) {
            Ok(r) => r.reg_ideal,
            Err(e) => return Check::Fail(format!("closure regularity failed: {e}")),
        };
        let formula_closure_reg = g.complete_closure_reg().expect("instances are complete");

        if engine_closure_reg != formula_closure_reg {
            return Check::Fail(format!(
                "closure reg {engine_closure_reg} != max-weight formula {formula_closure_reg}"
            ));
        }
        if engine_reg != formula_reg {
            if inst.formula_regime {
                return Check::Fail(format!(
                    "engine reg {engine_reg} != closed formula {formula_reg}"
                ));
            }
            // Known limitation: with weight-1 non-sources the closed
            // regularity formula can overshoot. Reported, not failed.
            return Check::Note(format!(
                "weight-1 regime: engine reg {engine_reg}, closed formula {formula_reg} on {}",
                serde_json::to_string(g).unwrap_or_default()
            ));
        }
        Check::Pass
    })
}

#[derive(Serialize)]
#[serde(tag = "kind")]
enum RadicalInstance {
    Colon {
        graph: WeightedOrientedGraph,
        a: Exponent,
    },
    ClosureColon {
        graph: WeightedOrientedGraph,
        a: Exponent,
    },
}

/// Closed forms for radical colons, against the direct pipeline. `count`
/// instances of the edge-ideal identity and `count/2` of the closure
/// identity.
fn radical_formulas(params: &SuiteParams) -> VerificationRun {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut instances = Vec::new();
    for _ in 0..params.count {
        let n = rng.gen_range(2..=params.n.max(2));
        let graph = random_graph(&mut rng, n, params.w_max);
        let a = random_gamma_exponent(&mut rng, &graph);
        instances.push(RadicalInstance::Colon { graph, a });
    }
    let mut closure_instances = 0;
    while closure_instances < params.count / 2 {
        let n = rng.gen_range(3..=params.n.max(3));
        let graph = random_graph(&mut rng, n, params.w_max);
        if let Some(a) = random_sink_support_exponent(&mut rng, &graph) {
            instances.push(RadicalInstance::ClosureColon { graph, a });
            closure_instances += 1;
        }
    }
    assemble(Suite::RadicalFormulas, params, instances, |inst| {
        match inst {
            RadicalInstance::Colon { graph, a } => {
                let closed = match graph.radical_colon_formula(a) {
                    Ok(i) => i,
                    Err(e) => return Check::Fail(format!("closed form failed: {e}")),
                };
                let direct = match graph.edge_ideal().colon(a) {
                    Ok(c) => c.radical(),
                    Err(e) => return Check::Fail(format!("direct colon failed: {e}")),
                };
                if closed == direct {
                    Check::Pass
                } else {
                    Check::Fail(format!("closed form {closed} != direct {direct}"))
                }
            }
            RadicalInstance::ClosureColon { graph, a } => {
                let closed = match graph.closure_radical_formula(a) {
                    Ok(i) => i,
                    Err(e) => return Check::Fail(format!("closed form failed: {e}")),
                };
                let direct = match integral_closure(&graph.edge_ideal())
                    .and_then(|c| c.colon(a))
                    .map(|c| c.radical())
                {
                    Ok(d) => d,
                    Err(e) => return Check::Fail(format!("direct pipeline failed: {e}")),
                };
                if closed == direct {
                    Check::Pass
                } else {
                    Check::Fail(format!("closed form {closed} != direct {direct}"))
                }
            }
        }
    })
}

#[derive(Serialize)]
struct AcyclicityInstance {
    graph: WeightedOrientedGraph,
    family: Vec<VarSet>,
}

/// The Stanley-Reisner complex of I(G) plus any family of in-neighborhood
/// intersection ideals over independent sinks is acyclic.
fn acyclicity(params: &SuiteParams) -> VerificationRun {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut instances = Vec::new();
    while instances.len() < params.count {
        let n = rng.gen_range(3..=params.n.max(3));
        let graph = random_graph(&mut rng, n, params.w_max);
        let sink_set = match random_independent_sink_set(&mut rng, &graph) {
            Some(s) => s,
            None => continue,
        };
        let members: Vec<VarSet> = sink_set
            .subsets()
            .filter(|s| !s.is_empty() && rng.gen_bool(0.5))
            .collect();
        let family = if members.is_empty() {
            vec![sink_set]
        } else {
            members
        };
        instances.push(AcyclicityInstance { graph, family });
    }
    let field = params.field;
    assemble(Suite::Acyclicity, params, instances, |inst| {
        match inst.graph.acyclicity_check(&inst.family, field) {
            Ok(true) => Check::Pass,
            Ok(false) => Check::Fail("complex has nonvanishing reduced homology".into()),
            Err(e) => Check::Fail(format!("check failed: {e}")),
        }
    })
}

/// Degree-complex regularity equals the Betti-number oracle over the
/// rationals and over GF(2).
fn oracle_crosscheck(params: &SuiteParams) -> VerificationRun {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let instances: Vec<MonomialIdeal> = (0..params.count)
        .map(|_| {
            let n = rng.gen_range(1..=params.n.max(1));
            random_ideal(&mut rng, n, params.w_max, 6)
        })
        .collect();
    assemble(Suite::OracleCrosscheck, params, instances, |ideal| {
        for field in [Field::Rationals, Field::gf(2).expect("2 is prime")] {
            let engine = match regularity(ideal, field) {
                Ok(r) => r.reg_ideal,
                Err(e) => return Check::Fail(format!("engine failed: {e}")),
            };
            let oracle = match regularity_oracle_koszul(ideal, field) {
                Ok(r) => r.reg_ideal,
                Err(e) => return Check::Fail(format!("oracle failed: {e}")),
            };
            if engine != oracle {
                return Check::Fail(format!(
                    "engine {engine} != oracle {oracle} over {field}"
                ));
            }
        }
        Check::Pass
    })
}

/// Closure soundness: containment, idempotence, squarefree fixed points,
/// and exact certificate verification on every minimal closure generator.
fn closure_idempotence(params: &SuiteParams) -> VerificationRun {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let instances: Vec<MonomialIdeal> = (0..params.count)
        .map(|k| {
            let n = rng.gen_range(1..=params.n.max(1));
            if k % 2 == 0 {
                random_ideal(&mut rng, n, params.w_max, 6)
            } else {
                random_squarefree_ideal(&mut rng, n, 6)
            }
        })
        .collect();
    assemble(Suite::ClosureIdempotence, params, instances, |ideal| {
        let closure = match integral_closure(ideal) {
            Ok(c) => c,
            Err(e) => return Check::Fail(format!("closure failed: {e}")),
        };
        for g in ideal.gens() {
            if !closure.contains(g) {
                return Check::Fail(format!("generator {g} missing from the closure"));
            }
        }
        match is_integrally_closed(&closure) {
            Ok(true) => {}
            Ok(false) => return Check::Fail("closure is not integrally closed".into()),
            Err(e) => return Check::Fail(format!("idempotence check failed: {e}")),
        }
        if ideal.is_squarefree() && closure != *ideal {
            return Check::Fail("squarefree ideal moved under closure".into());
        }
        // Every emitted certificate must verify in exact arithmetic.
        for g in closure.gens() {
            match np_membership(ideal, g) {
                Ok((true, Some(cert))) => {
                    if !cert.verify(ideal, g) {
                        return Check::Fail(format!("certificate at {g} fails its inequalities"));
                    }
                }
                Ok((true, None)) => {
                    return Check::Fail(format!("member {g} came back without a certificate"))
                }
                Ok((false, _)) => {
                    return Check::Fail(format!("closure generator {g} not a member"))
                }
                Err(e) => return Check::Fail(format!("membership failed: {e}")),
            }
        }
        Check::Pass
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(suite: Suite) -> VerificationRun {
        let params = SuiteParams {
            n: 4,
            w_max: 3,
            count: 6,
            seed: 5,
            field: Field::Rationals,
            exhaustive: false,
        };
        run_suite(suite, &params)
    }

    #[test]
    fn every_suite_passes_at_small_size() {
        for suite in Suite::ALL {
            let run = small(suite);
            assert!(
                run.passed,
                "suite {} failed: {:?}",
                run.suite, run.failures
            );
            assert_eq!(run.timings_ms.len(), run.instances);
        }
    }

    #[test]
    fn replay_is_deterministic_modulo_timing() {
        for suite in Suite::ALL {
            let a = small(suite);
            let b = small(suite);
            let strip = |r: &VerificationRun| {
                let mut v = serde_json::to_value(r).unwrap();
                v.as_object_mut().unwrap().remove("timings_ms");
                v
            };
            assert_eq!(strip(&a), strip(&b), "suite {}", a.suite);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_name(suite.name()), Some(suite));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }
}
