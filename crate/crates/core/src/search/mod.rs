//! Bounded searches in the homotopy category of perfect complexes:
//! exceptional objects, tilting complexes, generation, endomorphism
//! algebras, recollement witnesses and checks of the structural
//! consequences of the socle conditions.

mod conclusions;
mod endo;
mod exceptional;
mod generation;
mod tilting;
mod witness;

use serde::Serialize;

pub use conclusions::{conclusions_report, Assertion, ConclusionsReport};
pub use endo::{endo_algebra, AlgebraMatch, EndoPresentation};
pub use exceptional::{enumerate_exceptional, ExceptionalSearch};
pub use generation::{generates, k0_classes, GenerationVerdict};
pub use tilting::{enumerate_tilting, hom_shifts, TiltingSearch};
pub use witness::{recollement_witness_search, WitnessPair, WitnessSearch};

/// Limits for the bounded searches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    /// Maximal length of an indecomposable complex.
    pub max_length: usize,
    /// Maximal multiplicity of each projective in a degree.
    pub max_mult: usize,
    /// Maximal number of summands in a degree.
    pub max_summands: usize,
    /// Rounds of cone and summand closure in the generation test.
    pub depth: usize,
    /// Differentials sampled per multiplicity profile.
    pub samples_per_profile: usize,
    pub per_profile_cap: usize,
    /// Total candidate differentials over the whole search.
    pub global_cap: usize,
    pub seed: u64,
}

impl SearchBounds {
    pub fn for_vertices(n: usize) -> Self {
        SearchBounds {
            max_length: n.max(1),
            max_mult: 2,
            max_summands: 2 * n.max(1),
            depth: 3,
            samples_per_profile: 24,
            per_profile_cap: 100_000,
            global_cap: 10_000_000,
            seed: 0,
        }
    }
}
