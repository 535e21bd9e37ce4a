//! Reduced simplicial homology over the rationals or a prime field.
//!
//! Dimensions are read off the augmented chain complex: faces are sorted
//! vertex lists, boundary signs alternate by position, and ranks are
//! computed by exact Gaussian elimination (rational arithmetic over Q,
//! modular arithmetic over GF(p)).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::rational::BigRational;
use num::traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exponent::VarSet;

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Rationals,
    Gf(u64),
}

impl Field {
    /// Prime field of characteristic `p`; rejects composite `p`.
    pub fn gf(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Gf(p))
        } else {
            Err(Error::NonPrimeCharacteristic(p))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Gf(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dimensions of the reduced homology groups of one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: Field,
    /// `dims[q] = dim H~_q`; keys run over `-1 ..= dim`, absent for the
    /// void complex.
    pub dims: BTreeMap<i64, usize>,
}

impl HomologyProfile {
    pub fn dim_at(&self, q: i64) -> usize {
        self.dims.get(&q).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.values().all(|&d| d == 0)
    }

    /// Degrees with nonvanishing homology.
    pub fn nonzero_degrees(&self) -> Vec<i64> {
        self.dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&q, _)| q)
            .collect()
    }
}

/// Reduced homology dimensions of the augmented chain complex.
///
/// The void complex has every group zero; the empty complex `{∅}` has
/// exactly `dim H~_{-1} = 1`; cones are acyclic.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: Field) -> HomologyProfile {
    if complex.is_void() {
        return HomologyProfile {
            field,
            dims: BTreeMap::new(),
        };
    }

    let top = complex.dim().expect("nonvoid complex has a dimension");

    // Faces grouped by dimension, with an index map per level.
    let mut by_dim: Vec<Vec<VarSet>> = vec![Vec::new(); (top + 2) as usize];
    for face in complex.faces() {
        by_dim[face.len()].push(face);
    }
    let index: Vec<HashMap<VarSet, usize>> = by_dim
        .iter()
        .map(|faces| {
            faces
                .iter()
                .enumerate()
                .map(|(i, &f)| (f, i))
                .collect()
        })
        .collect();

    // boundary[k]: C_{q} -> C_{q-1} with q = k - 1, i.e. level k to level k-1.
    let mut ranks: Vec<usize> = vec![0; (top + 3) as usize];
    for k in 1..by_dim.len() {
        let rows = by_dim[k - 1].len();
        let cols = by_dim[k].len();
        if rows == 0 || cols == 0 {
            ranks[k] = 0;
            continue;
        }
        let mut matrix: Vec<Vec<i64>> = vec![vec![0; cols]; rows];
        for (c, &face) in by_dim[k].iter().enumerate() {
            let verts = face.to_vec();
            for (pos, &v) in verts.iter().enumerate() {
                let mut sub = face;
                sub.remove(v);
                let r = index[k - 1][&sub];
                matrix[r][c] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        ranks[k] = match field {
            Field::Rationals => rank_rational(matrix),
            Field::Gf(p) => rank_mod_p(matrix, p),
        };
    }

    let mut dims = BTreeMap::new();
    for q in -1..=top {
        let level = (q + 1) as usize;
        let f_q = by_dim[level].len();
        let d = f_q - ranks[level] - ranks[level + 1];
        dims.insert(q, d);
    }
    HomologyProfile { field, dims }
}

/// True when every reduced homology group vanishes.
pub fn is_acyclic(complex: &SimplicialComplex, field: Field) -> bool {
    reduced_homology_dims(complex, field).is_trivial()
}

fn rank_rational(matrix: Vec<Vec<i64>>) -> usize {
    let mut m: Vec<Vec<BigRational>> = matrix
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| BigRational::from_integer(e.into()))
                .collect()
        })
        .collect();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let pivot = match (rank..rows).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        m.swap(rank, pivot);
        let lead = m[rank][col].clone();
        for cell in m[rank][col..].iter_mut() {
            *cell /= &lead;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (cell, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    let delta = &factor * p;
                    *cell -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn rank_mod_p(matrix: Vec<Vec<i64>>, p: u64) -> usize {
    let reduce = |e: i64| -> u64 { e.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = matrix
        .into_iter()
        .map(|row| row.into_iter().map(reduce).collect())
        .collect();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut rank = 0;
    for col in 0..cols {
        let pivot = match (rank..rows).find(|&r| m[r][col] != 0) {
            Some(pv) => pv,
            None => continue,
        };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col], p);
        for cell in m[rank][col..].iter_mut() {
            *cell = mulmod(*cell, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (cell, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    let sub = mulmod(factor, pv);
                    *cell = (*cell + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p for prime p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(indices: &[usize]) -> VarSet {
        VarSet::from_indices(indices.iter().copied())
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_faces(3, vec![vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 3])]).unwrap()
    }

    #[test]
    fn circle_has_one_loop() {
        let profile = reduced_homology_dims(&hollow_triangle(), Field::Rationals);
        assert_eq!(profile.dim_at(-1), 0);
        assert_eq!(profile.dim_at(0), 0);
        assert_eq!(profile.dim_at(1), 1);
    }

    #[test]
    fn empty_complex_lives_in_degree_minus_one() {
        let profile = reduced_homology_dims(&SimplicialComplex::empty(3), Field::Rationals);
        assert_eq!(profile.dims, BTreeMap::from([(-1, 1)]));
        assert!(!is_acyclic(&SimplicialComplex::empty(3), Field::Rationals));
    }

    #[test]
    fn void_complex_is_acyclic() {
        let profile = reduced_homology_dims(&SimplicialComplex::void(3), Field::Rationals);
        assert!(profile.dims.is_empty());
        assert!(is_acyclic(&SimplicialComplex::void(3), Field::Rationals));
    }

    #[test]
    fn cones_are_acyclic() {
        // Cone over the hollow triangle: a solid-boundary fan around vertex 4.
        let cone = SimplicialComplex::from_faces(
            4,
            vec![vs(&[1, 2, 4]), vs(&[2, 3, 4]), vs(&[1, 3, 4])],
        )
        .unwrap();
        assert!(cone.is_cone_over(4));
        assert!(is_acyclic(&cone, Field::Rationals));
        assert!(is_acyclic(&SimplicialComplex::simplex(4), Field::Rationals));
    }

    #[test]
    fn two_points_have_reduced_h0() {
        let two = SimplicialComplex::from_faces(2, vec![vs(&[1]), vs(&[2])]).unwrap();
        let profile = reduced_homology_dims(&two, Field::Rationals);
        assert_eq!(profile.dim_at(0), 1);
        assert_eq!(profile.dim_at(-1), 0);
    }

    #[test]
    fn sphere_boundary_of_tetrahedron() {
        let faces: Vec<VarSet> = vec![
            vs(&[1, 2, 3]),
            vs(&[1, 2, 4]),
            vs(&[1, 3, 4]),
            vs(&[2, 3, 4]),
        ];
        let sphere = SimplicialComplex::from_faces(4, faces).unwrap();
        let profile = reduced_homology_dims(&sphere, Field::Rationals);
        assert_eq!(profile.dims, BTreeMap::from([(-1, 0), (0, 0), (1, 0), (2, 1)]));
    }

    #[test]
    fn gf2_matches_rationals_on_circle() {
        let q = reduced_homology_dims(&hollow_triangle(), Field::Rationals);
        let f2 = reduced_homology_dims(&hollow_triangle(), Field::gf(2).unwrap());
        assert_eq!(q.dims, f2.dims);
    }

    #[test]
    fn non_prime_characteristic_rejected() {
        assert_eq!(
            Field::gf(4).unwrap_err(),
            Error::NonPrimeCharacteristic(4)
        );
        assert_eq!(Field::gf(1).unwrap_err(), Error::NonPrimeCharacteristic(1));
        assert!(Field::gf(2).is_ok());
        assert!(Field::gf(7919).is_ok());
    }

    #[test]
    fn rank_nullity_accounting() {
        // For each q: rank d_q + rank d_{q+1} + dim H~_q = f_q.
        // With the profile built from exactly that identity, spot-check the
        // raw ranks on the hollow triangle by hand: d_1 has rank 2, d_0 rank 1.
        let profile = reduced_homology_dims(&hollow_triangle(), Field::Rationals);
        // f_0 = 3 vertices = rank d_0 (1) + rank d_1 (2) + dim H~_0 (0).
        assert_eq!(profile.dim_at(0), 3 - 1 - 2);
        // f_1 = 3 edges = rank d_1 (2) + 0 + dim H~_1 (1).
        assert_eq!(profile.dim_at(1), 3 - 2);
    }
}
