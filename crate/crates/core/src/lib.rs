//! Exact-arithmetic toolkit for monomial ideals: integral closures via
//! Newton polyhedra, Castelnuovo-Mumford regularity via degree complexes,
//! simplicial homology, and edge ideals of weighted oriented graphs.
//!
//! Everything is immutable and pure: values are built once, validated at
//! construction, and every operation returns a fresh value. No floating
//! point is used anywhere a yes/no lattice question is decided.

pub mod complex;
pub mod error;
pub mod exponent;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod newton;
pub mod parse;
pub mod random;
pub mod regularity;
mod simplex;

pub use complex::{stanley_reisner_complex, stanley_reisner_ideal, SimplicialComplex};
pub use error::{Error, ParseError, Result};
pub use exponent::{Exponent, VarSet, MAX_VARS};
pub use graph::{CapacitySet, WeightedOrientedGraph};
pub use homology::{is_acyclic, reduced_homology_dims, Field, HomologyProfile};
pub use ideal::{GammaBox, MonomialIdeal};
pub use newton::{
    closure_restriction_check, integral_closure, is_integrally_closed, np_membership,
    RationalCertificate,
};
pub use parse::parse_ideal_text;
pub use regularity::{
    check_variable_addition, critical_pairs, degree_complex, regularity,
    regularity_oracle_koszul, CriticalPair, KoszulReport, RegularityReport,
};
