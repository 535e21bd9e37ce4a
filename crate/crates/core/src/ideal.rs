//! Monomial ideals as antichains of exponent vectors.
//!
//! A [`MonomialIdeal`] stores the minimal generating set in a fixed ambient
//! variable count `n`. Generators are minimalized and sorted at construction,
//! so ideal equality is plain structural equality. The zero ideal is the
//! empty generator set; the unit ideal is the single zero exponent.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::{Exponent, VarSet, MAX_VARS};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal", into = "RawIdeal")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Exponent>,
}

/// JSON form: `{"n": 3, "gens": [[1,3,0],[0,1,5],[6,0,1]]}`.
#[derive(Serialize, Deserialize)]
struct RawIdeal {
    n: usize,
    gens: Vec<Vec<u32>>,
}

impl TryFrom<RawIdeal> for MonomialIdeal {
    type Error = Error;
    fn try_from(raw: RawIdeal) -> Result<MonomialIdeal> {
        MonomialIdeal::new(raw.n, raw.gens.into_iter().map(Exponent::new).collect())
    }
}

impl From<MonomialIdeal> for RawIdeal {
    fn from(ideal: MonomialIdeal) -> RawIdeal {
        RawIdeal {
            n: ideal.n,
            gens: ideal.gens.iter().map(|g| g.coords().to_vec()).collect(),
        }
    }
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing them to the
    /// divisibility antichain (the minimal generating set) and sorting
    /// lexicographically. This is the canonical form used for equality.
    pub fn new(n: usize, gens: Vec<Exponent>) -> Result<MonomialIdeal> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables(n, MAX_VARS));
        }
        for g in &gens {
            g.check_len(n)?;
        }
        let gens = antichain(gens);
        Ok(MonomialIdeal { n, gens })
    }

    /// The zero ideal in `n` variables.
    pub fn zero(n: usize) -> MonomialIdeal {
        MonomialIdeal { n, gens: vec![] }
    }

    /// The unit ideal in `n` variables.
    pub fn unit(n: usize) -> MonomialIdeal {
        MonomialIdeal {
            n,
            gens: vec![Exponent::zero(n)],
        }
    }

    /// The ideal `(x_j | j in set)`.
    pub fn variables(n: usize, set: VarSet) -> Result<MonomialIdeal> {
        for j in set.iter() {
            if j > n {
                return Err(Error::VariableOutOfRange(j, n));
            }
        }
        MonomialIdeal::new(n, set.iter().map(|j| Exponent::unit(n, j)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, sorted lexicographically.
    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// Nonzero and proper.
    pub fn is_nonzero_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Exponent::is_squarefree)
    }

    /// Monomial membership: `x^a` lies in the ideal iff some minimal
    /// generator divides it.
    pub fn contains(&self, a: &Exponent) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    fn check_same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.n, other.n))
        }
    }

    /// The colon ideal `(I : x^a)`, computed generator by generator as
    /// `u - min(u, a)`.
    pub fn colon(&self, a: &Exponent) -> Result<MonomialIdeal> {
        a.check_len(self.n)?;
        MonomialIdeal::new(
            self.n,
            self.gens.iter().map(|u| u.saturated_sub(a)).collect(),
        )
    }

    /// The radical: squarefree supports of the generators, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            gens: antichain(self.gens.iter().map(Exponent::radical).collect()),
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.n, gens)
    }

    /// Intersection via pairwise lcm of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    /// Restriction to `V`: the generators whose support lies in `V`,
    /// in the same ambient ring.
    pub fn restrict(&self, v: VarSet) -> Result<MonomialIdeal> {
        if !v.is_subset(VarSet::full(self.n)) {
            let bad = v.difference(VarSet::full(self.n)).iter().next().unwrap();
            return Err(Error::VariableOutOfRange(bad, self.n));
        }
        MonomialIdeal::new(
            self.n,
            self.gens
                .iter()
                .filter(|g| g.support().is_subset(v))
                .cloned()
                .collect(),
        )
    }

    /// `rho_j(I)`: the largest degree of `x_j` over the minimal generators
    /// (0 when `x_j` divides none of them). `j` is 1-based.
    pub fn rho(&self, j: usize) -> Result<u32> {
        if j == 0 || j > self.n {
            return Err(Error::VariableOutOfRange(j, self.n));
        }
        Ok(self.gens.iter().map(|g| g.deg(j)).max().unwrap_or(0))
    }

    /// All `rho_j(I)` at once.
    pub fn rho_vector(&self) -> Vec<u32> {
        (1..=self.n).map(|j| self.rho(j).unwrap()).collect()
    }

    /// The finite search box containing every critical exponent.
    pub fn gamma_box(&self) -> GammaBox {
        GammaBox {
            rho: self.rho_vector(),
        }
    }

    /// lcm of all minimal generators (zero exponent for the zero ideal).
    pub fn lcm_of_gens(&self) -> Exponent {
        let mut acc = Exponent::zero(self.n);
        for g in &self.gens {
            acc = acc.lcm(g);
        }
        acc
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, {})", self.n, self)
    }
}

/// Renders the ideal in the text grammar: comma-separated monomials,
/// `0` for the zero ideal, `1` for the unit ideal.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// The exponent box `Gamma(I) = { a : a_j < rho_j(I) }`. Variables with
/// `rho_j = 0` contribute the single value `a_j = 0`, so the box is never
/// empty; when every `rho_j >= 1` its cardinality is the product of the
/// `rho_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaBox {
    rho: Vec<u32>,
}

impl GammaBox {
    pub fn bounds(&self) -> &[u32] {
        &self.rho
    }

    fn effective(&self) -> Vec<u32> {
        self.rho.iter().map(|&r| r.max(1)).collect()
    }

    pub fn len(&self) -> u64 {
        self.effective().iter().map(|&r| r as u64).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Enumerates the box in mixed-radix order (last coordinate fastest).
    pub fn iter(&self) -> impl Iterator<Item = Exponent> + '_ {
        box_iter_exclusive(self.effective())
    }
}

/// Enumerates all exponents with `a_j < bounds[j]` (bounds of 0 are treated
/// as 1 so the coordinate is pinned to 0).
pub(crate) fn box_iter_exclusive(bounds: Vec<u32>) -> impl Iterator<Item = Exponent> {
    let bounds: Vec<u32> = bounds.into_iter().map(|b| b.max(1)).collect();
    let n = bounds.len();
    let mut cur: Option<Vec<u32>> = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        // Mixed-radix increment.
        let mut next = out.clone();
        let mut k = n;
        loop {
            if k == 0 {
                cur = None;
                break;
            }
            k -= 1;
            next[k] += 1;
            if next[k] < bounds[k] {
                cur = Some(next);
                break;
            }
            next[k] = 0;
        }
        Some(Exponent::new(out))
    })
}

/// Reduces a generator list to the divisibility antichain, deduplicated and
/// sorted lexicographically.
fn antichain(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort_by_key(|g| (g.total_degree(), g.coords().to_vec()));
    gens.dedup();
    let mut minimal: Vec<Exponent> = Vec::with_capacity(gens.len());
    for g in gens {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    minimal.sort_by(|a, b| a.coords().cmp(b.coords()));
    minimal
}
