//! Globalizations of finite partial semigroup acts.
//!
//! A partial act of a semigroup `S` on a finite set `A` is a partial map
//! `A×S -> A` obeying the partial action law. This crate builds the two
//! universal globalizations, the tensor product `A⊗S` (initial) and the
//! Hom-set act `A^S` (terminal), decides every axiom involved, checks
//! candidate globalizations, and enumerates all generated globalizations up
//! to isomorphism.
//!
//! Semigroup and act elements are indices `0..n`; an undefined product is
//! `None`.

pub mod act;
pub mod census;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod glob;
pub mod hom;
pub mod io;
pub mod morphism;
pub mod search;
pub mod semigroup;
pub mod tensor;
pub mod union_find;

pub use act::{check_conditions, restrict, Act, ActFlags, GlobalAct, PartialAct};
pub use census::{census, CensusObject, CensusResult};
pub use error::{Error, Result};
pub use glob::{is_globalization, Certificates, GlobalizationTriple};
pub use hom::{build_hom, is_nonsingular, HomAct, PartialFn};
pub use morphism::{enumerate_morphisms, is_morphism, Morphism};
pub use semigroup::Semigroup;
pub use tensor::{build_tensor, is_firm, TensorAct};

/// Caps on exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest search space any enumeration may visit.
    pub search_space: u64,
    /// Largest `|A⊗S|` the census accepts.
    pub census_classes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search_space: 1_000_000,
            census_classes: 12,
        }
    }
}
