//! Computational tools for Coxeter systems given by their diagrams.
//!
//! * [`diagram`]: parsing, connectivity, sphericality, circuits and
//!   canonical forms.
//! * [`words`]: the word problem by braid moves and cancellation, special
//!   words, longest elements and reflections.
//! * [`centralizer`]: generators for the centralizer of a generator.
//! * [`twist`]: diagram twists and twist-equivalence classes.
//! * [`rigidity`]: which rigidity statements apply to a diagram.

pub mod centralizer;
pub mod diagram;
pub mod error;
pub mod rigidity;
pub mod twist;
pub mod words;

pub use diagram::{CanonicalForm, ConnectivityProfile, Diagram, Edge, GeneratorId, Vertex};
pub use error::{CoxError, Result};
pub use words::{Reducer, Word};
