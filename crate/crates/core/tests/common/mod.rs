//! Shared helpers for the integration tests.

#![allow(dead_code)]

use proptest::prelude::*;

use monoreg::{Exponent, MonomialIdeal, VarSet};

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|g| Exponent::new(g.to_vec())).collect()).unwrap()
}

pub fn vs(indices: &[usize]) -> VarSet {
    VarSet::from_indices(indices.iter().copied())
}

/// Nonzero proper random ideal, up to `max_n` variables.
pub fn arb_ideal(
    max_n: usize,
    max_exp: u32,
    max_gens: usize,
) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            proptest::collection::vec(0..=max_exp, n).prop_filter("nonzero generator", |g| {
                g.iter().any(|&c| c > 0)
            }),
            1..=max_gens,
        )
        .prop_map(move |gens| {
            MonomialIdeal::new(n, gens.into_iter().map(Exponent::new).collect()).unwrap()
        })
    })
}

/// Random exponent of the same ambient size as an ideal.
pub fn arb_exponent(n: usize, max_exp: u32) -> impl Strategy<Value = Exponent> {
    proptest::collection::vec(0..=max_exp, n).prop_map(Exponent::new)
}

/// Squarefree variant of [`arb_ideal`].
pub fn arb_squarefree_ideal(max_n: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    arb_ideal(max_n, 1, max_gens)
}

/// All exponents with `b_j <= bounds[j]`, in mixed-radix order.
pub fn box_points_inclusive(bounds: &[u32]) -> Vec<Exponent> {
    let mut points = Vec::new();
    let mut counter = vec![0u32; bounds.len()];
    loop {
        points.push(Exponent::new(counter.clone()));
        let mut k = bounds.len();
        loop {
            if k == 0 {
                return points;
            }
            k -= 1;
            counter[k] += 1;
            if counter[k] <= bounds[k] {
                break;
            }
            counter[k] = 0;
        }
    }
}

/// Re-embeds an ideal into `n` variables by zero-padding its generators.
pub fn embed(x: &MonomialIdeal, n: usize) -> MonomialIdeal {
    let gens = x
        .gens()
        .iter()
        .map(|g| {
            let mut coords = g.coords().to_vec();
            coords.resize(n, 0);
            Exponent::new(coords)
        })
        .collect();
    MonomialIdeal::new(n, gens).unwrap()
}

/// Independent membership oracle: enumerates the exponent set of the ideal
/// inside the inclusive box by adding every fitting offset to every
/// generator, with no componentwise comparisons involved.
pub fn brute_force_members_in_box(
    i: &MonomialIdeal,
    bounds_inclusive: &[u32],
) -> std::collections::HashSet<Vec<u32>> {
    let mut members = std::collections::HashSet::new();
    for g in i.gens() {
        let room: Option<Vec<u32>> = g
            .coords()
            .iter()
            .zip(bounds_inclusive)
            .map(|(&a, &b)| b.checked_sub(a))
            .collect();
        let room = match room {
            Some(r) => r,
            None => continue, // generator sticks out of the box
        };
        let mut offset = vec![0u32; room.len()];
        loop {
            members.insert(
                g.coords()
                    .iter()
                    .zip(&offset)
                    .map(|(a, c)| a + c)
                    .collect::<Vec<u32>>(),
            );
            let mut k = room.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                offset[k] += 1;
                if offset[k] <= room[k] {
                    break;
                }
                offset[k] = 0;
            }
            if offset.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    members
}
