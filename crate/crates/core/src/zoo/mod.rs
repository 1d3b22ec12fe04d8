//! Concrete groups with exact normal forms.

pub mod bs;
pub mod counterexample;
pub mod free_abelian;
pub mod free_product;
pub mod heisenberg;
pub mod lamplighter;
pub mod lattice;
pub mod primes;
pub mod sparse;
pub mod split;
pub mod wreath;

use thiserror::Error;

pub use bs::{BaumslagSolitar, BsElement};
pub use counterexample::{CounterexampleElement, CounterexampleGroup};
pub use free_abelian::{FreeAbelian, ZnElement};
pub use free_product::{FreeProductElement, Letter, ZStarZ2};
pub use heisenberg::{Heisenberg, HeisenbergElement};
pub use lamplighter::{Lamplighter, LamplighterElement};
pub use primes::{base_of_rat, rat_of_base};
pub use sparse::SparseVec;
pub use split::{SplitElement, SplitExtension};
pub use wreath::{GeneralizedWreath, PointAction, TwoTransitive, WreathElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZooError {
    #[error("expected a positive rational, got {0}")]
    NonPositive(String),
    #[error("prime table limit exceeded (needed primes up to {bound})")]
    PrimeLimit { bound: u64 },
    #[error("search budget of {budget} states exceeded")]
    SearchBudget { budget: usize },
    #[error("points must be distinct, got {0} twice")]
    SamePoint(i64),
    #[error("invalid group parameters: {0}")]
    Parameters(String),
}
