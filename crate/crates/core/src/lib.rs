//! Atoms, átomata and transition semigroups of regular languages.
//!
//! The crate computes the atoms of a regular language from its minimal DFA,
//! builds the átomaton, measures the quotient complexity of each atom, and
//! decides maximal atomicity two ways: directly from the atoms, and from the
//! transition semigroup (a set-transitive group of permutations together
//! with a transformation of rank `n - 1`).

pub mod atoms;
pub mod automata;
pub mod census;
mod combin;
pub mod error;
pub mod ingest;
pub mod report;
pub mod semigroup;
pub mod transform;

pub use automata::{Determinized, Dfa, Nfa};
pub use combin::{binomial, factorial};
pub use error::{Error, Result};
pub use semigroup::{GroupTag, PermGroup, Semigroup, DEFAULT_CAP};
pub use transform::{StateSet, Transformation, MAX_DEGREE};
