//! Cosets, coset distances with double-coset witnesses, and packing lower
//! bounds.
//!
//! For a subgroup `H ≤ G` and the word metric, the distance between left
//! cosets is `d(g₁H, g₂H) = min { |h₁·g₁⁻¹g₂·h₂| : h₁, h₂ ∈ H }`, the least
//! word length in the double coset `H·g₁⁻¹g₂·H`. Every bound reported here
//! comes with an explicit [`Witness`] that has been recomputed before being
//! returned.

pub mod catalog;
pub mod clique;
mod distance;
mod packing;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::group::{Group, GroupError};
use crate::zoo::ZooError;

pub use distance::{CosetDistance, CosetGeometry, SearchSettings, Witness};
pub use packing::{
    dedup_cosets, lemma54_family, packing_lower_bound, result_from_instance, PackingInstance, PackingResult,
    CLIQUE_EXACT_LIMIT, RETAIN_WITNESS_LIMIT,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("subgroup {0} has no double-coset decision procedure")]
    NoDoubleCosetDecision(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Zoo(#[from] ZooError),
    #[error("family positions must be distinct")]
    DuplicatePositions,
    #[error("double coset normal form failed for {0}")]
    NormalForm(String),
}

/// Canonical representative `key` of a double coset `H·g·H` together with
/// `left, right ∈ H` such that `left · g · right = key`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetForm<E> {
    pub key: E,
    pub left: E,
    pub right: E,
}

type Predicate<E> = Arc<dyn Fn(&E) -> bool + Send + Sync>;
type Canonicalizer<E> = Arc<dyn Fn(&E) -> E + Send + Sync>;
type DoubleCosetFn<E> = Arc<dyn Fn(&E) -> Option<DoubleCosetForm<E>> + Send + Sync>;

/// A subgroup given by a membership predicate and a list of elements of it.
///
/// `generators` is symmetric. When `generates` is false the list only spans
/// part of the subgroup (for instance when the subgroup is not finitely
/// generated); certificates then refuse to certify.
#[derive(Clone)]
pub struct SubgroupDesc<E> {
    name: String,
    member: Predicate<E>,
    generators: Vec<E>,
    generates: bool,
    canonical: Option<Canonicalizer<E>>,
    double_coset: Option<DoubleCosetFn<E>>,
}

impl<E: fmt::Debug> fmt::Debug for SubgroupDesc<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupDesc")
            .field("name", &self.name)
            .field("generators", &self.generators)
            .field("generates", &self.generates)
            .field("canonical", &self.canonical.is_some())
            .field("double_coset", &self.double_coset.is_some())
            .finish()
    }
}

impl<E: Clone + Eq + std::hash::Hash + Send + Sync + 'static> SubgroupDesc<E> {
    /// A subgroup generated by `generators` (symmetrized here; the identity
    /// is dropped).
    pub fn new<G: Group<Element = E>>(
        group: &G,
        name: impl Into<String>,
        member: impl Fn(&E) -> bool + Send + Sync + 'static,
        generators: Vec<E>,
    ) -> Self {
        let id = group.identity();
        let mut gens: Vec<E> = Vec::new();
        for g in generators {
            for x in [g.clone(), group.inv(&g)] {
                if x != id && !gens.contains(&x) {
                    gens.push(x);
                }
            }
        }
        SubgroupDesc {
            name: name.into(),
            member: Arc::new(member),
            generators: gens,
            generates: true,
            canonical: None,
            double_coset: None,
        }
    }

    /// Marks the generator list as spanning only part of the subgroup.
    pub fn partial_generators(mut self) -> Self {
        self.generates = false;
        self
    }

    /// Left-coset canonicalizer: `canon(g·h) = canon(g)` for `h ∈ H`, and
    /// `canon(g) ∈ gH`.
    pub fn with_canonical(mut self, f: impl Fn(&E) -> E + Send + Sync + 'static) -> Self {
        self.canonical = Some(Arc::new(f));
        self
    }

    pub fn with_double_coset(mut self, f: impl Fn(&E) -> Option<DoubleCosetForm<E>> + Send + Sync + 'static) -> Self {
        self.double_coset = Some(Arc::new(f));
        self
    }

    /// For a normal subgroup `HgH = gH`, so the coset canonicalizer decides
    /// double cosets too.
    pub fn normal_with_canonical<G>(self, group: &G, f: impl Fn(&E) -> E + Send + Sync + 'static) -> Self
    where
        G: Group<Element = E> + Clone + 'static,
    {
        let f = Arc::new(f);
        let g2 = group.clone();
        let f2 = Arc::clone(&f);
        self.with_canonical(move |g| f(g)).with_double_coset(move |g| {
            let key = f2(g);
            Some(DoubleCosetForm {
                right: g2.difference(g, &key),
                left: g2.identity(),
                key,
            })
        })
    }

    /// A double-coset normal form given only the key and left factor; the
    /// right factor is `(left·g)⁻¹·key`.
    pub fn with_double_coset_key<G>(self, group: &G, f: impl Fn(&E) -> Option<(E, E)> + Send + Sync + 'static) -> Self
    where
        G: Group<Element = E> + Clone + 'static,
    {
        let g2 = group.clone();
        self.with_double_coset(move |g| {
            let (key, left) = f(g)?;
            let right = g2.difference(&g2.mul(&left, g), &key);
            Some(DoubleCosetForm { key, left, right })
        })
    }
}

impl<E> SubgroupDesc<E> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn member(&self, g: &E) -> bool {
        (self.member)(g)
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    /// True when the generator list generates the whole subgroup.
    pub fn generates(&self) -> bool {
        self.generates
    }

    pub fn canonical(&self, g: &E) -> Option<E> {
        self.canonical.as_ref().map(|f| f(g))
    }

    pub fn has_canonical(&self) -> bool {
        self.canonical.is_some()
    }

    pub fn double_coset_form(&self, g: &E) -> Option<DoubleCosetForm<E>> {
        self.double_coset.as_ref().and_then(|f| f(g))
    }

    pub fn has_double_coset_decision(&self) -> bool {
        self.double_coset.is_some()
    }
}

/// `g₁H = g₂H`.
pub fn coset_eq<G: Group>(group: &G, subgroup: &SubgroupDesc<G::Element>, g1: &G::Element, g2: &G::Element) -> bool {
    subgroup.member(&group.difference(g1, g2))
}
