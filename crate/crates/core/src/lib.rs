//! A symbolic engine for σ-sets: canonical hereditarily finite sets over
//! polar atoms, where fusion annihilates elements against their
//! antielements. Provides the full operation algebra (fusion,
//! anti-intersection, power/generated/integer spaces), annihilation-aware
//! ordered pairs and Cartesian products, σ-functions with antifunctions,
//! inverses and antinverses, and deterministic emitters for listings,
//! Cayley tables and DOT diagrams.
//!
//! All values are immutable and all operations pure; everything can be
//! shared freely across threads.

mod atom;
mod error;
mod set;

pub mod algebra;
pub mod emit;
pub mod functions;
pub mod pairs;

pub use atom::{is_valid_name, Atom, Polarity};
pub use error::Error;
pub use set::{is_theta_atom, Element, SigmaSet, StarResult};
