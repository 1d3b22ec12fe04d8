//! Word metrics, coset distances and packing numbers for subgroups of
//! concrete finitely generated groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: the [`Group`](group::Group) trait, symmetric generating sets,
//!   balls in the word metric and exact word lengths.
//! * [`zoo`]: exact normal forms for the concrete groups (free abelian,
//!   Heisenberg, lamplighter, BS(1,2), `Z*Z/2` and its generalized wreath
//!   product, split extensions `Z^n ⋊ Z`, and the rational-module extension
//!   `W ⋊ (Z≀Z)` where packing is unbounded).
//! * [`coset`]: subgroup descriptions, coset distances with explicit
//!   double-coset witnesses, clique search and packing lower bounds.
//! * [`certificates`]: packing upper bounds from finite quotients that
//!   separate a subgroup from the punctured ball of radius `D`.
//! * [`checks`]: randomized axiom harnesses shared by tests and the CLI.
//!
//! Parallel work goes through [`par`]; with the `parallel` feature disabled
//! everything runs sequentially and produces identical results.

pub mod certificates;
pub mod checks;
pub mod coset;
pub mod group;
pub mod par;
pub mod zoo;

pub use group::{Ball, GeneratingSet, Group, GroupError, WordLength};
pub use par::Execution;
