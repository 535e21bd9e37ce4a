//! Newton polyhedron membership and integral closures of monomial ideals.
//!
//! A lattice point `a` lies in `NP(I)` exactly when nonnegative rationals
//! `c_i` exist with `sum c_i >= 1` and `sum c_i b_i <= a` componentwise,
//! over the minimal generators `b_i`. That feasibility question is decided
//! by exact rational LP: maximize `sum c_i` under the componentwise
//! constraints and compare the optimum with 1. The integral closure is the
//! set of lattice points of `NP(I)`, generated by the points of the box
//! `prod [0, rho_j(I)]`.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exponent::{Exponent, VarSet};
use crate::ideal::{box_iter_exclusive, MonomialIdeal};
use crate::simplex::{maximize, Outcome, StandardLp};

/// Witness that `a` lies in the Newton polyhedron: nonnegative rational
/// weights on generators with `sum c_i >= 1` and `sum c_i b_i <= a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCertificate {
    /// Nonzero coefficients, keyed by position in the minimal generator list.
    pub coefficients: BTreeMap<usize, BigRational>,
}

impl RationalCertificate {
    /// Checks both defining inequalities in exact arithmetic.
    pub fn verify(&self, ideal: &MonomialIdeal, a: &Exponent) -> bool {
        if a.len() != ideal.n() {
            return false;
        }
        let mut total = BigRational::zero();
        let mut combo = vec![BigRational::zero(); ideal.n()];
        for (&idx, c) in &self.coefficients {
            if c.is_negative() {
                return false;
            }
            let gen = match ideal.gens().get(idx) {
                Some(g) => g,
                None => return false,
            };
            total += c;
            for (slot, &e) in combo.iter_mut().zip(gen.coords()) {
                *slot += c * BigRational::from_integer(e.into());
            }
        }
        if total < BigRational::one() {
            return false;
        }
        combo
            .iter()
            .zip(a.coords())
            .all(|(s, &e)| *s <= BigRational::from_integer(e.into()))
    }
}

/// Decides `x^a in closure(I)` and, on success, returns a certificate.
///
/// The zero ideal has an empty Newton polyhedron, so every query is `false`;
/// the unit ideal contains everything.
pub fn np_membership(
    ideal: &MonomialIdeal,
    a: &Exponent,
) -> Result<(bool, Option<RationalCertificate>)> {
    a.check_len(ideal.n())?;
    if ideal.is_zero() {
        return Ok((false, None));
    }

    // Divisibility fast path: a generator below `a` certifies with weight 1.
    if let Some(idx) = ideal.gens().iter().position(|g| g.divides(a)) {
        let mut coefficients = BTreeMap::new();
        coefficients.insert(idx, BigRational::one());
        return Ok((true, Some(RationalCertificate { coefficients })));
    }

    // Degree bound: sum of all constraint rows gives
    // sum_i c_i |b_i| <= |a|, so |a| below the least generator degree is out.
    let min_gen_degree = ideal
        .gens()
        .iter()
        .map(Exponent::total_degree)
        .min()
        .unwrap();
    if a.total_degree() < min_gen_degree {
        return Ok((false, None));
    }

    let m = ideal.num_gens();
    let n = ideal.n();
    let lp = StandardLp {
        objective: vec![BigRational::one(); m],
        rows: (0..n)
            .map(|row| {
                ideal
                    .gens()
                    .iter()
                    .map(|g| BigRational::from_integer(g.coords()[row].into()))
                    .collect()
            })
            .collect(),
        rhs: a
            .coords()
            .iter()
            .map(|&e| BigRational::from_integer(e.into()))
            .collect(),
    };

    let one = BigRational::one();
    match maximize(&lp, Some(&one)) {
        Outcome::ThresholdReached { value, point } => {
            debug_assert!(value >= one);
            let coefficients = point
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            Ok((true, Some(RationalCertificate { coefficients })))
        }
        Outcome::Optimal { value, point } => {
            if value >= one {
                let coefficients = point
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                Ok((true, Some(RationalCertificate { coefficients })))
            } else {
                Ok((false, None))
            }
        }
        // A zero generator would be the unit ideal, which the fast path
        // already certified.
        Outcome::Unbounded => unreachable!("columns of a minimalized nonunit ideal are nonzero"),
    }
}

/// The integral closure as a minimal generating set.
///
/// Every minimal generator of the closure lies in the box
/// `prod [0, rho_j(I)]`: a point of `NP(I)` with `a_j > rho_j(I)` stays in
/// `NP(I)` after subtracting `e_j`. The box is scanned in degree order so
/// that a point divisible by an accepted generator can be skipped.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(ideal.clone());
    }

    let bounds: Vec<u32> = ideal.rho_vector().iter().map(|&r| r + 1).collect();
    let mut points: Vec<Exponent> = box_iter_exclusive(bounds).collect();
    points.sort_by_key(|p| (p.total_degree(), p.coords().to_vec()));

    let mut accepted: Vec<Exponent> = Vec::new();
    for point in points {
        if accepted.iter().any(|g| g.divides(&point)) {
            continue;
        }
        let (member, _) = np_membership(ideal, &point)?;
        if member {
            accepted.push(point);
        }
    }
    MonomialIdeal::new(ideal.n(), accepted)
}

/// True iff `I` equals its integral closure.
pub fn is_integrally_closed(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(integral_closure(ideal)? == *ideal)
}

/// Computes `closure(I restricted to V)` and `closure(I) restricted to V`
/// independently and reports whether they agree (they always should).
pub fn closure_restriction_check(ideal: &MonomialIdeal, v: VarSet) -> Result<bool> {
    let lhs = integral_closure(&ideal.restrict(v)?)?;
    let rhs = integral_closure(ideal)?.restrict(v)?;
    Ok(lhs == rhs)
}
