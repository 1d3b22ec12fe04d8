//! Packing upper bounds from finite quotients.
//!
//! Let `S` be the non-members of `H` in the punctured ball of radius `D`
//! (the separation set) and `q: G → F` a homomorphism to a finite group. If
//! `q(s) ∉ q(H)` for every `s ∈ S`, then `K = q⁻¹(q(H))` meets the ball of
//! radius `D` only inside `H`. Two `D`-close cosets `g₁H ≠ g₂H` have some
//! `h₁g₁⁻¹g₂h₂` in that ball and outside `H`, hence outside `K`, so
//! `g₁K ≠ g₂K`. A pairwise `D`-close family therefore has at most
//! `[G : K] ≤ |F| / |q(H)|` members.

mod quotients;

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::coset::SubgroupDesc;
use crate::group::{Ball, Group, GroupError};
use crate::par::{self, Execution};
use crate::zoo::{SplitElement, SplitExtension};

pub use quotients::{
    bs_family, counterexample_family, heisenberg_family, split_family, zn_family, BsOddQuotient,
    CounterexampleQuotient, HeisenbergModK, LamplighterQuotient, SplitModK, ZnModK,
};

/// Elements of a finite quotient, in a normal form with decidable equality.
pub type Image = Vec<i64>;

/// A homomorphism from a group onto (a subgroup of) a finite group.
pub trait FiniteQuotient<E>: Send + Sync {
    fn description(&self) -> String;
    /// The modulus `k` the quotient is built from.
    fn modulus(&self) -> u64;
    /// `|F|`.
    fn order(&self) -> u64;
    fn apply(&self, g: &E) -> Image;
    fn mul(&self, a: &Image, b: &Image) -> Image;
    fn inv(&self, a: &Image) -> Image;
    fn identity(&self) -> Image;
}

impl<E> fmt::Debug for dyn FiniteQuotient<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteQuotient({})", self.description())
    }
}

/// The subgroup of `F` generated by `gens`.
pub fn image_subgroup<E>(q: &dyn FiniteQuotient<E>, gens: &[E]) -> HashSet<Image> {
    let images: Vec<Image> = gens.iter().map(|g| q.apply(g)).collect();
    let id = q.identity();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for s in &images {
            let y = q.mul(&x, s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// All `g` with `0 < |g| ≤ D` outside `H`, in ball order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationSet<E> {
    pub d: u32,
    pub elements: Vec<E>,
}

pub fn build_separation_set<G: Group>(
    group: &G,
    subgroup: &SubgroupDesc<G::Element>,
    d: u32,
    budget: usize,
    exec: Execution,
) -> Result<SeparationSet<G::Element>, GroupError> {
    let ball = Ball::enumerate(group, group.generators(), d, budget, exec)?;
    let elements = ball
        .elements()
        .iter()
        .skip(1)
        .filter(|g| !subgroup.member(g))
        .cloned()
        .collect();
    Ok(SeparationSet { d, elements })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranscriptEntry<E> {
    pub element: E,
    pub image: Image,
    pub in_image_subgroup: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<E> {
    pub d: u32,
    pub quotient_description: String,
    pub k: u64,
    pub target_order: u64,
    pub subgroup_image_order: u64,
    /// `target_order / subgroup_image_order`.
    pub bound: u64,
    pub transcript: Vec<TranscriptEntry<E>>,
}

/// The serialized form of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub group: String,
    pub subgroup: String,
    #[serde(rename = "D")]
    pub d: u32,
    pub quotient_description: String,
    pub k: u64,
    pub bound: u64,
    pub transcript: Vec<TranscriptEntry<String>>,
}

impl<E: fmt::Display> Certificate<E> {
    pub fn report(&self, group: &str, subgroup: &str) -> CertificateReport {
        CertificateReport {
            group: group.to_string(),
            subgroup: subgroup.to_string(),
            d: self.d,
            quotient_description: self.quotient_description.clone(),
            k: self.k,
            bound: self.bound,
            transcript: self
                .transcript
                .iter()
                .map(|t| TranscriptEntry {
                    element: t.element.to_string(),
                    image: t.image.clone(),
                    in_image_subgroup: t.in_image_subgroup,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("none of the {tried} quotients separates {subgroup} from the ball of radius {d}")]
    NoSeparatingQuotient { subgroup: String, d: u32, tried: usize },
    #[error("{0} separates, but the subgroup's generator list is incomplete so its image is not known")]
    IncompleteGenerators(String),
    #[error("separation element {0} has trivial image components but is not in the subgroup")]
    Degenerate(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The first quotient separating `H` from the separation set.
///
/// A quotient is only accepted when the subgroup's generator list generates
/// it, since otherwise the computed image of `H` could be too small.
pub fn certify_packing_upper<E>(
    subgroup: &SubgroupDesc<E>,
    separation: &SeparationSet<E>,
    quotients: &[Box<dyn FiniteQuotient<E>>],
    exec: Execution,
) -> Result<Certificate<E>, CertifyError>
where
    E: Clone + Send + Sync,
{
    let mut incomplete = None;
    for q in quotients {
        let image = image_subgroup(q.as_ref(), subgroup.generators());
        let transcript: Vec<TranscriptEntry<E>> = par::map(exec, &separation.elements, |s| {
            let img = q.apply(s);
            TranscriptEntry {
                element: s.clone(),
                in_image_subgroup: image.contains(&img),
                image: img,
            }
        });
        if transcript.iter().any(|t| t.in_image_subgroup) {
            continue;
        }
        if !subgroup.generates() {
            incomplete.get_or_insert_with(|| q.description());
            continue;
        }
        let order = q.order();
        let sub = image.len() as u64;
        return Ok(Certificate {
            d: separation.d,
            quotient_description: q.description(),
            k: q.modulus(),
            target_order: order,
            subgroup_image_order: sub,
            bound: order / sub,
            transcript,
        });
    }
    match incomplete {
        Some(desc) => Err(CertifyError::IncompleteGenerators(desc)),
        None => Err(CertifyError::NoSeparatingQuotient {
            subgroup: subgroup.name().to_string(),
            d: separation.d,
            tried: quotients.len(),
        }),
    }
}

/// Certificate for a subgroup of `Z^n ⋊ Z` through `M/kM` with the smallest
/// `k` keeping every nonzero `M`-coordinate of the separation set nonzero,
/// namely one more than the largest absolute coordinate.
pub fn modk_certificate(
    group: &SplitExtension,
    subgroup: &SubgroupDesc<SplitElement>,
    d: u32,
    budget: usize,
    exec: Execution,
) -> Result<Certificate<SplitElement>, CertifyError> {
    let separation = build_separation_set(group, subgroup, d, budget, exec)?;
    if let Some(bad) = separation
        .elements
        .iter()
        .find(|s| s.h == 0 && s.m.iter().all(|&x| x == 0))
    {
        return Err(CertifyError::Degenerate(bad.to_string()));
    }
    let k = 1 + separation
        .elements
        .iter()
        .flat_map(|s| s.m.iter().map(|x| x.unsigned_abs()))
        .max()
        .unwrap_or(0);
    let q: Box<dyn FiniteQuotient<SplitElement>> = Box::new(SplitModK::new(group, k));
    certify_packing_upper(subgroup, &separation, &[q], exec)
}
