//! Exhaustive verification harness for the σ-set engine: bounded-universe
//! enumeration, brute-force theorem suites, the fusion-closure check on
//! integer spaces, and byte-exact reproduction of the transcribed listings
//! and fusion table.

pub mod conjecture;
pub mod golden;
pub mod report;
pub mod theorems;
pub mod universe;

pub use conjecture::{check_conjecture_closure, MAX_CONJECTURE_CARRIER};
pub use golden::reproduce_paper_artifacts;
pub use report::{CheckReport, Failure, Recorder};
pub use theorems::{
    check_element_theorems, check_function_theorems, check_pair_theorems, check_structural,
    check_theorems, STRUCTURAL_PAIRS,
};
pub use universe::{Universe, DEFAULT_MAX_CARD};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("enumeration budget exceeded (cap {cap}); raise SIGMA_MAX_CARD or shrink the universe")]
    BudgetExceeded { cap: usize },

    #[error("closure is only exhausted for carriers of up to {MAX_CONJECTURE_CARRIER} members, got {cardinality}")]
    CarrierTooLarge { cardinality: usize },

    #[error(transparent)]
    Core(#[from] sigma_core::Error),
}
