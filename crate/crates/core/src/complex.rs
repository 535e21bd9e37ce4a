//! Simplicial complexes on `[n]` and the Stanley-Reisner correspondence.
//!
//! Complexes are facet-represented. Three states matter and are kept
//! distinct: the void complex (no faces at all), the empty complex `{∅}`
//! (only the empty face), and everything else. The void complex corresponds
//! to the unit Stanley-Reisner ideal, the empty complex to the maximal
//! ideal `(x_1, ..., x_n)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::{Exponent, VarSet, MAX_VARS};
use crate::ideal::MonomialIdeal;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawComplex", into = "RawComplex")]
pub struct SimplicialComplex {
    n: usize,
    facets: BTreeSet<VarSet>,
}

/// JSON form: `{"n": 3, "facets": [[1,2],[2,3],[1,3]]}`; `[]` is the void
/// complex and `[[]]` the empty complex.
#[derive(Serialize, Deserialize)]
struct RawComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = Error;
    fn try_from(raw: RawComplex) -> Result<SimplicialComplex> {
        SimplicialComplex::from_faces(raw.n, raw.facets)
    }
}

impl From<SimplicialComplex> for RawComplex {
    fn from(complex: SimplicialComplex) -> RawComplex {
        RawComplex {
            n: complex.n,
            facets: complex.facets.iter().copied().collect(),
        }
    }
}

impl SimplicialComplex {
    /// The void complex: no faces, not even the empty one.
    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex {
            n,
            facets: BTreeSet::new(),
        }
    }

    /// The empty complex `{∅}`.
    pub fn empty(n: usize) -> SimplicialComplex {
        let mut facets = BTreeSet::new();
        facets.insert(VarSet::EMPTY);
        SimplicialComplex { n, facets }
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> SimplicialComplex {
        let mut facets = BTreeSet::new();
        facets.insert(VarSet::full(n));
        SimplicialComplex { n, facets }
    }

    /// Builds the complex generated by the given faces (maximal ones are
    /// kept). An empty list yields the void complex.
    pub fn from_faces<I: IntoIterator<Item = VarSet>>(
        n: usize,
        faces: I,
    ) -> Result<SimplicialComplex> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables(n, MAX_VARS));
        }
        let ambient = VarSet::full(n);
        let mut candidates: Vec<VarSet> = Vec::new();
        for f in faces {
            if !f.is_subset(ambient) {
                let bad = f.difference(ambient).iter().next().unwrap();
                return Err(Error::VariableOutOfRange(bad, n));
            }
            candidates.push(f);
        }
        let mut facets = BTreeSet::new();
        for &f in &candidates {
            if !candidates.iter().any(|&g| f != g && f.is_subset(g)) {
                facets.insert(f);
            }
        }
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.facets.iter().copied()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets.contains(&VarSet::EMPTY)
    }

    /// `dim` of the complex; `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    pub fn has_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    /// Every face, the empty face included (for nonvoid complexes).
    pub fn faces(&self) -> Vec<VarSet> {
        let mut seen = BTreeSet::new();
        for &facet in &self.facets {
            for sub in facet.subsets() {
                seen.insert(sub);
            }
        }
        seen.into_iter().collect()
    }

    /// Faces of a fixed dimension `q` (so `q = -1` is the empty face).
    pub fn faces_of_dim(&self, q: i64) -> Vec<VarSet> {
        self.faces()
            .into_iter()
            .filter(|f| f.len() as i64 == q + 1)
            .collect()
    }

    /// Vertices that occur in some face.
    pub fn vertex_set(&self) -> VarSet {
        self.facets
            .iter()
            .fold(VarSet::EMPTY, |acc, &f| acc.union(f))
    }

    /// `lk_Δ F = { G : G ∪ F ∈ Δ, G ∩ F = ∅ }`, on the same ambient `[n]`.
    pub fn link(&self, face: VarSet) -> Result<SimplicialComplex> {
        if !self.has_face(face) {
            return Err(Error::NotAFace(face.to_vec()));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.difference(face));
        // Facets over a fixed F never nest, so no re-minimalization is needed.
        Ok(SimplicialComplex {
            n: self.n,
            facets: facets.collect(),
        })
    }

    /// True when `t` lies in every facet (void complexes have no apex).
    pub fn is_cone_over(&self, t: usize) -> bool {
        !self.is_void() && self.facets.iter().all(|f| f.contains(t))
    }

    /// All cone apexes: the intersection of the facets.
    pub fn cone_apexes(&self) -> VarSet {
        if self.is_void() {
            return VarSet::EMPTY;
        }
        self.facets
            .iter()
            .fold(VarSet::full(self.n), |acc, &f| acc.intersection(f))
    }

    /// Faces shared by both complexes.
    pub fn intersection(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut pieces = Vec::new();
        for &f in &self.facets {
            for &g in &other.facets {
                pieces.push(f.intersection(g));
            }
        }
        SimplicialComplex::from_faces(self.n, pieces)
    }

    /// Faces of either complex.
    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        SimplicialComplex::from_faces(
            self.n,
            self.facets.iter().chain(other.facets.iter()).copied(),
        )
    }

    /// Canonical key for memo tables: the sorted facet masks.
    pub fn canonical_key(&self) -> Vec<u64> {
        self.facets.iter().map(|f| f.as_mask()).collect()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=[", self.n)?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "])")
    }
}

/// The Stanley-Reisner complex of a squarefree monomial ideal: the faces are
/// the subsets whose squarefree monomial avoids the ideal. The unit ideal
/// gives the void complex, the maximal ideal gives `{∅}`, the zero ideal the
/// full simplex.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.n();
    if ideal.is_unit() {
        return Ok(SimplicialComplex::void(n));
    }
    if ideal.is_zero() {
        return Ok(SimplicialComplex::simplex(n));
    }
    let gen_masks: Vec<VarSet> = ideal.gens().iter().map(Exponent::support).collect();
    let faces = VarSet::full(n)
        .subsets()
        .filter(|&f| !gen_masks.iter().any(|g| g.is_subset(f)));
    SimplicialComplex::from_faces(n, faces)
}

/// The Stanley-Reisner ideal: minimal non-faces as squarefree generators.
/// Inverse of [`stanley_reisner_complex`]; the void complex maps to the unit
/// ideal.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n();
    if complex.is_void() {
        return MonomialIdeal::unit(n);
    }
    let non_faces: Vec<VarSet> = VarSet::full(n)
        .subsets()
        .filter(|&f| !complex.has_face(f))
        .collect();
    let gens = non_faces
        .iter()
        .map(|&f| Exponent::from_set(n, f))
        .collect();
    // Minimalization inside `new` keeps exactly the minimal non-faces.
    MonomialIdeal::new(n, gens).expect("squarefree generators are well formed")
}
