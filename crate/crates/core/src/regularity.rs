//! Castelnuovo-Mumford regularity of monomial ideals.
//!
//! The engine evaluates the combinatorial formula
//!
//! ```text
//! reg(S/I) = max { |a| + i : H~_{i-1}(lk_{Δ_a(I)} F; k) != 0
//!                            for some F in Δ_a(I) with F ∩ supp a = ∅ }
//! ```
//!
//! where `Δ_a(I)` is the Stanley-Reisner complex of `sqrt(I : x^a)` and `a`
//! ranges over the finite box `Γ(I)` of exponents with `a_j < rho_j(I)`.
//! An independent oracle recomputes `reg(I)` from multigraded Betti numbers
//! via upper Koszul simplicial complexes; the two must always agree.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::{stanley_reisner_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exponent::{Exponent, VarSet};
use crate::homology::{reduced_homology_dims, Field, HomologyProfile};
use crate::ideal::{box_iter_exclusive, MonomialIdeal};

/// A witnessed nonvanishing: `H~_{i-1}(lk_{Δ_a(I)} F) != 0` with
/// `F ∩ supp a = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalPair {
    pub a: Exponent,
    pub i: u64,
    #[serde(rename = "F")]
    pub face: VarSet,
}

/// Result of a regularity computation, with the extremal witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub reg_ideal: u64,
    pub reg_module: u64,
    pub witness: CriticalPair,
    pub field: Field,
    pub pairs_examined: u64,
}

/// Result of the independent Betti-number computation. Its witness lives in
/// a different coordinate system: `reg(I) = |a| - i` at a nonzero `β_{i,a}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulReport {
    pub reg_ideal: u64,
    pub reg_module: u64,
    pub witness_degree: Exponent,
    pub witness_index: u64,
    pub field: Field,
    pub degrees_examined: u64,
}

/// The degree complex `Δ_a(I) = Δ(sqrt(I : x^a))`.
///
/// Proper ideals only: the input being the unit ideal is an error. When
/// `x^a` lies in `I` the colon is the unit ideal and the result is the void
/// complex.
pub fn degree_complex(ideal: &MonomialIdeal, a: &Exponent) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    a.check_len(ideal.n())?;
    stanley_reisner_complex(&ideal.colon(a)?.radical())
}

fn require_nonzero_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// Memo table for link homology, keyed by the canonical facet list.
struct HomologyMemo {
    field: Field,
    table: HashMap<Vec<u64>, HomologyProfile>,
}

impl HomologyMemo {
    fn new(field: Field) -> HomologyMemo {
        HomologyMemo {
            field,
            table: HashMap::new(),
        }
    }

    fn profile(&mut self, complex: &SimplicialComplex) -> &HomologyProfile {
        let key = complex.canonical_key();
        self.table
            .entry(key)
            .or_insert_with(|| reduced_homology_dims(complex, self.field))
    }
}

/// All critical pairs of `I`: for each `a` in `Γ(I)` and each face `F` of
/// `Δ_a(I)` disjoint from `supp a`, every homological degree where the link
/// has nonzero reduced homology.
pub fn critical_pairs(ideal: &MonomialIdeal, field: Field) -> Result<Vec<CriticalPair>> {
    require_nonzero_proper(ideal)?;
    let mut memo = HomologyMemo::new(field);
    let mut pairs = Vec::new();
    for a in ideal.gamma_box().iter() {
        let delta = degree_complex(ideal, &a)?;
        if delta.is_void() {
            continue;
        }
        let avoid = a.support();
        for face in delta.faces() {
            if !face.is_disjoint(avoid) {
                continue;
            }
            let link = delta.link(face)?;
            let profile = memo.profile(&link).clone();
            for q in profile.nonzero_degrees() {
                pairs.push(CriticalPair {
                    a: a.clone(),
                    i: (q + 1) as u64,
                    face,
                });
            }
        }
    }
    Ok(pairs)
}

/// Largest witnessed `i` with its smallest face, or `None` when the complex
/// yields no critical pair at all.
type BestPair = Option<(u64, VarSet)>;

/// Best contribution of one degree complex: the largest `i` with a witness
/// face, and the smallest such face. Memoized on (complex, supp mask): many
/// exponents share their degree complex.
struct SweepMemo {
    homology: HomologyMemo,
    best: HashMap<(Vec<u64>, u64), BestPair>,
}

impl SweepMemo {
    fn new(field: Field) -> SweepMemo {
        SweepMemo {
            homology: HomologyMemo::new(field),
            best: HashMap::new(),
        }
    }

    /// Returns `(i, F)` maximizing `i`, tie-broken by the smallest face, or
    /// `None` when no face of the complex yields a critical pair. Also
    /// reports how many candidate faces were examined.
    fn best_pair(&mut self, delta: &SimplicialComplex, avoid: VarSet) -> (BestPair, u64) {
        let key = (delta.canonical_key(), avoid.as_mask());
        if let Some(cached) = self.best.get(&key) {
            return (*cached, 0);
        }
        let mut examined = 0;
        let mut best: BestPair = None;
        for face in delta.faces() {
            if !face.is_disjoint(avoid) {
                continue;
            }
            examined += 1;
            let link = delta.link(face).expect("faces come from the complex");
            let profile = self.homology.profile(&link);
            if let Some(&q) = profile.nonzero_degrees().iter().max() {
                let i = (q + 1) as u64;
                let candidate = (i, face);
                best = Some(match best {
                    None => candidate,
                    Some(cur) => {
                        // Larger i wins; equal i prefers the smaller face.
                        if candidate.0 > cur.0
                            || (candidate.0 == cur.0 && face_order(candidate.1, cur.1))
                        {
                            candidate
                        } else {
                            cur
                        }
                    }
                });
            }
        }
        self.best.insert(key, best);
        (best, examined)
    }
}

/// "Smaller face" in the deterministic witness order: compare sorted vertex
/// lists lexicographically (the empty face is smallest).
fn face_order(lhs: VarSet, rhs: VarSet) -> bool {
    lhs.to_vec() < rhs.to_vec()
}

/// Regularity by the degree-complex formula over the `Γ(I)` box.
///
/// The reported witness is deterministic: among the extremal pairs it has
/// the lexicographically smallest exponent, then the smallest face.
pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<RegularityReport> {
    let bounds: Vec<u32> = ideal.rho_vector().iter().map(|&r| r.max(1)).collect();
    regularity_over_box(ideal, field, bounds)
}

/// Same search over an explicit exclusive box; `regularity` uses the
/// `Γ(I)` bounds, tests may widen them to validate the restriction.
pub(crate) fn regularity_over_box(
    ideal: &MonomialIdeal,
    field: Field,
    bounds_exclusive: Vec<u32>,
) -> Result<RegularityReport> {
    require_nonzero_proper(ideal)?;
    let mut memo = SweepMemo::new(field);
    let mut best: Option<(u64, CriticalPair)> = None;
    let mut pairs_examined = 0u64;

    for a in box_iter_exclusive(bounds_exclusive) {
        let delta = degree_complex(ideal, &a)?;
        if delta.is_void() {
            continue;
        }
        let (pair, examined) = memo.best_pair(&delta, a.support());
        pairs_examined += examined;
        if let Some((i, face)) = pair {
            let value = a.total_degree() + i;
            let candidate = CriticalPair {
                a: a.clone(),
                i,
                face,
            };
            let replace = match &best {
                None => true,
                Some((cur_value, cur)) => {
                    value > *cur_value
                        || (value == *cur_value
                            && (candidate.a.coords() < cur.a.coords()
                                || (candidate.a == cur.a && face_order(candidate.face, cur.face))))
                }
            };
            if replace {
                best = Some((value, candidate));
            }
        }
    }

    let (value, witness) =
        best.expect("a nonzero proper monomial ideal always has a critical pair");
    Ok(RegularityReport {
        reg_ideal: value + 1,
        reg_module: value,
        witness,
        field,
        pairs_examined,
    })
}

/// Independent oracle: `reg(I)` from multigraded Betti numbers.
///
/// For each multidegree `a` dividing the lcm of the generators,
/// `β_{i,a}(I)` is the dimension of `H~_{i-1}` of the upper Koszul complex
/// `{ F ⊆ supp a : x^(a-F) ∈ I }`, and `reg(I) = max |a| - i` over nonzero
/// Betti numbers.
pub fn regularity_oracle_koszul(ideal: &MonomialIdeal, field: Field) -> Result<KoszulReport> {
    require_nonzero_proper(ideal)?;
    let n = ideal.n();
    let lcm = ideal.lcm_of_gens();
    let bounds: Vec<u32> = lcm.coords().iter().map(|&c| c + 1).collect();

    let mut best: Option<(u64, Exponent, u64)> = None;
    let mut degrees_examined = 0u64;
    for a in box_iter_exclusive(bounds) {
        if !ideal.contains(&a) {
            // Koszul complex is void: no faces, no Betti numbers.
            continue;
        }
        degrees_examined += 1;
        let supp = a.support();
        let faces = supp
            .subsets()
            .filter(|&f| ideal.contains(&a.saturated_sub(&Exponent::from_set(n, f))));
        let koszul = SimplicialComplex::from_faces(n, faces)?;
        let profile = reduced_homology_dims(&koszul, field);
        for q in profile.nonzero_degrees() {
            let i = (q + 1) as u64;
            let value = a.total_degree() - i;
            let better = match &best {
                None => true,
                Some((cur, cur_a, cur_i)) => {
                    value > *cur
                        || (value == *cur
                            && (a.coords() < cur_a.coords()
                                || (a == *cur_a && i < *cur_i)))
                }
            };
            if better {
                best = Some((value, a.clone(), i));
            }
        }
    }

    let (value, witness_degree, witness_index) =
        best.expect("a nonzero proper monomial ideal has a nonzero Betti number");
    Ok(KoszulReport {
        reg_ideal: value,
        reg_module: value - 1,
        witness_degree,
        witness_index,
        field,
        degrees_examined,
    })
}

/// Checks `reg(I + (x_j)) <= reg(I)`, and—when the extremal witness face of
/// `I` contains `j`—that equality `reg(S/I) = reg(S/(I, x_j))` holds too.
pub fn check_variable_addition(ideal: &MonomialIdeal, j: usize, field: Field) -> Result<bool> {
    require_nonzero_proper(ideal)?;
    if j == 0 || j > ideal.n() {
        return Err(Error::VariableOutOfRange(j, ideal.n()));
    }
    let base = regularity(ideal, field)?;
    let enlarged = ideal.sum(&MonomialIdeal::variables(
        ideal.n(),
        VarSet::singleton(j),
    )?)?;
    let with_var = regularity(&enlarged, field)?;

    let inequality = with_var.reg_ideal <= base.reg_ideal;
    let equality_when_witnessed = if base.witness.face.contains(j) {
        with_var.reg_module == base.reg_module
    } else {
        true
    };
    Ok(inequality && equality_when_witnessed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Exponent::new(g.to_vec())).collect()).unwrap()
    }

    fn cycle_ideal() -> MonomialIdeal {
        ideal(3, &[&[1, 3, 0], &[0, 1, 5], &[6, 0, 1]])
    }

    fn vs(indices: &[usize]) -> VarSet {
        VarSet::from_indices(indices.iter().copied())
    }

    #[test]
    fn degree_complex_by_colon_and_radical() {
        // I : x3^4 has radical (x1, x2 x3); its complex is two points {2},{3}.
        let delta = degree_complex(&cycle_ideal(), &Exponent::new(vec![0, 0, 4])).unwrap();
        assert_eq!(delta.facets().collect::<Vec<_>>(), vec![vs(&[2]), vs(&[3])]);
    }

    #[test]
    fn degree_complex_at_zero_is_radical_complex() {
        let i = cycle_ideal();
        let at_zero = degree_complex(&i, &Exponent::zero(3)).unwrap();
        assert_eq!(at_zero, stanley_reisner_complex(&i.radical()).unwrap());
    }

    #[test]
    fn degree_complex_rejects_unit_ideal() {
        assert_eq!(
            degree_complex(&MonomialIdeal::unit(2), &Exponent::zero(2)).unwrap_err(),
            Error::UnitIdeal
        );
    }

    #[test]
    fn critical_pair_of_single_edge() {
        let i = ideal(2, &[&[1, 1]]);
        let pairs = critical_pairs(&i, Field::Rationals).unwrap();
        assert!(pairs.contains(&CriticalPair {
            a: Exponent::zero(2),
            i: 1,
            face: VarSet::EMPTY,
        }));
    }

    #[test]
    fn saturated_exponent_gives_empty_complex_pair() {
        // a = w - 1 on the no-source 3-cycle: the radical colon is maximal,
        // the degree complex is {∅}, and (a, 0) is critical.
        let i = cycle_ideal();
        let a = Exponent::new(vec![5, 2, 4]);
        let delta = degree_complex(&i, &a).unwrap();
        assert!(delta.is_empty_complex());
        let pairs = critical_pairs(&i, Field::Rationals).unwrap();
        assert!(pairs.contains(&CriticalPair {
            a: a.clone(),
            i: 0,
            face: VarSet::EMPTY,
        }));
    }

    #[test]
    fn regularity_of_single_edge_ideals() {
        let edge = ideal(2, &[&[1, 1]]);
        let report = regularity(&edge, Field::Rationals).unwrap();
        assert_eq!(report.reg_ideal, 2);
        assert_eq!(report.reg_module, 1);

        // Weighted edge x1 x2^3: reg equals |w| = 4.
        let weighted = ideal(2, &[&[1, 3]]);
        assert_eq!(regularity(&weighted, Field::Rationals).unwrap().reg_ideal, 4);
    }

    #[test]
    fn regularity_of_weighted_cycle_is_twelve() {
        let report = regularity(&cycle_ideal(), Field::Rationals).unwrap();
        assert_eq!(report.reg_ideal, 12);
        assert_eq!(report.reg_module, 11);
        // The witness is the saturated exponent with i = 0.
        assert_eq!(report.witness.a, Exponent::new(vec![5, 2, 4]));
        assert_eq!(report.witness.i, 0);
    }

    #[test]
    fn witness_invariant_holds() {
        let report = regularity(&cycle_ideal(), Field::Rationals).unwrap();
        assert_eq!(
            report.reg_module,
            report.witness.a.total_degree() + report.witness.i
        );
        // Recompute the witnessed link homology from scratch.
        let delta = degree_complex(&cycle_ideal(), &report.witness.a).unwrap();
        let link = delta.link(report.witness.face).unwrap();
        let profile = reduced_homology_dims(&link, Field::Rationals);
        assert!(profile.dim_at(report.witness.i as i64 - 1) > 0);
    }

    #[test]
    fn zero_and_unit_ideals_are_domain_errors() {
        assert_eq!(
            regularity(&MonomialIdeal::zero(2), Field::Rationals).unwrap_err(),
            Error::ZeroIdeal
        );
        assert_eq!(
            regularity(&MonomialIdeal::unit(2), Field::Rationals).unwrap_err(),
            Error::UnitIdeal
        );
        assert!(regularity_oracle_koszul(&MonomialIdeal::zero(2), Field::Rationals).is_err());
    }

    #[test]
    fn koszul_oracle_on_path_ideal() {
        let path = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let report = regularity_oracle_koszul(&path, Field::Rationals).unwrap();
        assert_eq!(report.reg_ideal, 2);
    }

    #[test]
    fn koszul_oracle_on_principal_ideal() {
        let principal = ideal(3, &[&[2, 1, 3]]);
        let report = regularity_oracle_koszul(&principal, Field::Rationals).unwrap();
        assert_eq!(report.reg_ideal, 6);
        assert_eq!(report.witness_index, 0);
        assert_eq!(report.witness_degree, Exponent::new(vec![2, 1, 3]));
    }

    #[test]
    fn koszul_oracle_matches_engine_on_cycle() {
        let oracle = regularity_oracle_koszul(&cycle_ideal(), Field::Rationals).unwrap();
        assert_eq!(oracle.reg_ideal, 12);
    }

    #[test]
    fn widening_the_box_does_not_change_the_maximum() {
        // Search-space soundness: extending the exclusive bounds from rho
        // to rho + 1 (so a_j <= rho_j becomes reachable) finds nothing
        // larger, on fixed ideals and a random batch.
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        let mut ideals = vec![
            cycle_ideal(),
            ideal(2, &[&[1, 1]]),
            ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[1, 1, 1]]),
            ideal(3, &[&[1, 2, 0], &[0, 1, 2], &[3, 0, 1]]),
        ];
        for _ in 0..20 {
            ideals.push(crate::random::random_ideal(&mut rng, 3, 3, 5));
        }
        for i in ideals {
            let narrow = regularity(&i, Field::Rationals).unwrap();
            let wide_bounds: Vec<u32> = i.rho_vector().iter().map(|&r| r + 1).collect();
            let wide = regularity_over_box(&i, Field::Rationals, wide_bounds).unwrap();
            assert_eq!(narrow.reg_ideal, wide.reg_ideal, "ideal {i}");
        }
    }

    #[test]
    fn witnessed_equality_under_variable_addition() {
        // I = (x1 x2) in three variables: the extremal witness face is {3},
        // so adding x3 must keep reg(S/I) unchanged, not just bounded.
        let i = ideal(3, &[&[1, 1, 0]]);
        let report = regularity(&i, Field::Rationals).unwrap();
        assert_eq!(report.witness.face, vs(&[3]));
        assert_eq!(report.witness.i, 1);
        assert!(check_variable_addition(&i, 3, Field::Rationals).unwrap());
        let enlarged = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            regularity(&enlarged, Field::Rationals).unwrap().reg_module,
            report.reg_module
        );
    }

    #[test]
    fn variable_addition_is_monotone() {
        let i = ideal(2, &[&[1, 1]]);
        assert!(check_variable_addition(&i, 2, Field::Rationals).unwrap());
        assert!(check_variable_addition(&cycle_ideal(), 1, Field::Rationals).unwrap());
        assert!(check_variable_addition(&cycle_ideal(), 2, Field::Rationals).unwrap());
        assert!(check_variable_addition(&cycle_ideal(), 3, Field::Rationals).unwrap());
    }
}
