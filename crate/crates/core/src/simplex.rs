//! Dense primal simplex over exact rationals.
//!
//! Solves `max c^T x` subject to `A x <= b`, `x >= 0` with `b >= 0`, so the
//! slack basis is feasible and no phase-one is needed. Pivoting uses Bland's
//! rule, which rules out cycling; every number is a `BigRational`, so the
//! optimum and the returned point are exact.

use num::rational::BigRational;
use num::traits::{Signed, Zero};

pub struct StandardLp {
    /// Objective coefficients, one per structural variable.
    pub objective: Vec<BigRational>,
    /// Constraint rows; each has one entry per structural variable.
    pub rows: Vec<Vec<BigRational>>,
    /// Right-hand sides, componentwise nonnegative.
    pub rhs: Vec<BigRational>,
}

pub enum Outcome {
    /// Proved optimal.
    Optimal {
        value: BigRational,
        point: Vec<BigRational>,
    },
    /// Stopped early: the objective reached the requested threshold.
    /// The point is feasible but not necessarily optimal.
    ThresholdReached {
        value: BigRational,
        point: Vec<BigRational>,
    },
    Unbounded,
}

/// Maximizes the program; when `stop_at` is given, returns as soon as the
/// objective value reaches it.
pub fn maximize(lp: &StandardLp, stop_at: Option<&BigRational>) -> Outcome {
    let m = lp.objective.len();
    let n = lp.rows.len();
    debug_assert!(lp.rhs.iter().all(|b| !b.is_negative()));
    debug_assert!(lp.rows.iter().all(|r| r.len() == m));
    debug_assert_eq!(lp.rhs.len(), n);

    let cols = m + n; // structural then slack
    let zero = BigRational::zero();

    // tableau[r] = constraint row r over all columns plus rhs cell.
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for r in 0..n {
        let mut row = Vec::with_capacity(cols + 1);
        row.extend(lp.rows[r].iter().cloned());
        for s in 0..n {
            row.push(if s == r {
                BigRational::from_integer(1.into())
            } else {
                zero.clone()
            });
        }
        row.push(lp.rhs[r].clone());
        tableau.push(row);
    }
    // Reduced-cost row; its rhs cell holds minus the objective value.
    let mut cost: Vec<BigRational> = lp
        .objective
        .iter()
        .cloned()
        .chain(std::iter::repeat_n(zero.clone(), n + 1))
        .collect();

    let mut basis: Vec<usize> = (m..m + n).collect();

    loop {
        if let Some(target) = stop_at {
            if -&cost[cols] >= *target {
                return Outcome::ThresholdReached {
                    value: -&cost[cols],
                    point: extract_point(&tableau, &basis, m, cols),
                };
            }
        }

        // Bland: entering column is the lowest index with positive reduced cost.
        let entering = match (0..cols).find(|&j| cost[j] > zero) {
            Some(j) => j,
            None => {
                return Outcome::Optimal {
                    value: -&cost[cols],
                    point: extract_point(&tableau, &basis, m, cols),
                };
            }
        };

        // Ratio test; ties broken by the smallest basis variable index.
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..n {
            if tableau[r][entering] > zero {
                let ratio = &tableau[r][cols] / &tableau[r][entering];
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && basis[r] < basis[*best_r])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let (pivot_row, _) = match leave {
            Some(l) => l,
            None => return Outcome::Unbounded,
        };

        // Pivot: normalize the row, eliminate the column elsewhere.
        let pivot = tableau[pivot_row][entering].clone();
        for cell in tableau[pivot_row].iter_mut() {
            *cell /= &pivot;
        }
        let pivot_cells = tableau[pivot_row].clone();
        for (r, row) in tableau.iter_mut().enumerate() {
            if r != pivot_row && !row[entering].is_zero() {
                let factor = row[entering].clone();
                for (cell, pv) in row.iter_mut().zip(&pivot_cells) {
                    let delta = &factor * pv;
                    *cell -= delta;
                }
            }
        }
        if !cost[entering].is_zero() {
            let factor = cost[entering].clone();
            for (cell, pv) in cost.iter_mut().zip(&pivot_cells) {
                let delta = &factor * pv;
                *cell -= delta;
            }
        }
        basis[pivot_row] = entering;
    }
}

fn extract_point(
    tableau: &[Vec<BigRational>],
    basis: &[usize],
    m: usize,
    cols: usize,
) -> Vec<BigRational> {
    let mut point = vec![BigRational::zero(); m];
    for (r, &var) in basis.iter().enumerate() {
        if var < m {
            point[var] = tableau[r][cols].clone();
        }
    }
    point
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn int(p: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(p))
    }

    #[test]
    fn midpoint_program() {
        // max c1 + c2 s.t. 2c1 <= 1, 2c2 <= 1.
        let lp = StandardLp {
            objective: vec![int(1), int(1)],
            rows: vec![vec![int(2), int(0)], vec![int(0), int(2)]],
            rhs: vec![int(1), int(1)],
        };
        match maximize(&lp, None) {
            Outcome::Optimal { value, point } => {
                assert_eq!(value, int(1));
                assert_eq!(point, vec![rat(1, 2), rat(1, 2)]);
            }
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn threshold_stops_early_with_feasible_point() {
        let lp = StandardLp {
            objective: vec![int(1)],
            rows: vec![vec![int(1)]],
            rhs: vec![int(5)],
        };
        match maximize(&lp, Some(&int(1))) {
            Outcome::ThresholdReached { value, point } | Outcome::Optimal { value, point } => {
                assert!(value >= int(1));
                assert!(point[0] <= int(5));
            }
            Outcome::Unbounded => panic!("bounded program"),
        }
    }

    #[test]
    fn unbounded_detected() {
        // Zero column and positive objective.
        let lp = StandardLp {
            objective: vec![int(1)],
            rows: vec![vec![int(0)]],
            rhs: vec![int(1)],
        };
        assert!(matches!(maximize(&lp, None), Outcome::Unbounded));
    }

    #[test]
    fn degenerate_program_terminates() {
        // Degenerate rhs zeros exercise Bland's anti-cycling rule.
        let lp = StandardLp {
            objective: vec![int(3), int(2), int(1)],
            rows: vec![
                vec![int(1), int(1), int(1)],
                vec![int(1), int(-1), int(0)],
                vec![int(0), int(1), int(-1)],
            ],
            rhs: vec![int(1), int(0), int(0)],
        };
        match maximize(&lp, None) {
            Outcome::Optimal { value, .. } => assert_eq!(value, int(2)),
            _ => panic!("expected optimum"),
        }
    }
}
