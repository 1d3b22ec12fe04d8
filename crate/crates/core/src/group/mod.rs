//! Abstract groups with a fixed finite symmetric generating set.

mod metric;

use std::fmt;
use std::hash::Hash;

use rand::Rng;
use thiserror::Error;

pub use metric::{word_length, word_length_with_budget, Ball, WordLength, DEFAULT_NODE_BUDGET};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("element {element} does not belong to group {group}")]
    ForeignElement { group: String, element: String },
    #[error("ball enumeration exceeded the budget of {budget} elements after completing radius {radius_reached}")]
    BallBudget { budget: usize, radius_reached: u32 },
    #[error("cannot parse element {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A countable group with exact normal forms.
///
/// Elements are canonical: two elements compare equal exactly when they
/// represent the same group element, and equal elements hash equal.
pub trait Group: Send + Sync {
    type Element: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync;

    /// Registry-style name of this group instance.
    fn name(&self) -> String;

    fn identity(&self) -> Self::Element;

    /// Product in canonical normal form. Both arguments must belong to this
    /// instance; see [`Group::checked_mul`] for the validating variant.
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn inv(&self, a: &Self::Element) -> Self::Element;

    /// The documented symmetric generating set defining the word metric.
    fn generators(&self) -> &GeneratingSet<Self::Element>;

    /// Whether `g` is a well-formed element of this particular instance.
    fn contains(&self, _g: &Self::Element) -> bool {
        true
    }

    fn checked_mul(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element, GroupError> {
        for g in [a, b] {
            if !self.contains(g) {
                return Err(GroupError::ForeignElement {
                    group: self.name(),
                    element: g.to_string(),
                });
            }
        }
        Ok(self.mul(a, b))
    }

    fn is_identity(&self, g: &Self::Element) -> bool {
        *g == self.identity()
    }

    /// `a^{-1} b`, the element carrying `a` to `b` by right multiplication.
    fn difference(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.mul(&self.inv(a), b)
    }

    fn conjugate(&self, by: &Self::Element, g: &Self::Element) -> Self::Element {
        self.mul(&self.mul(by, g), &self.inv(by))
    }

    fn pow(&self, g: &Self::Element, n: i64) -> Self::Element {
        let base = if n < 0 { self.inv(g) } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// Evaluates a word given as indices into the generating set.
    fn eval_word(&self, word: &[usize]) -> Self::Element {
        let gens = self.generators();
        word.iter().fold(self.identity(), |acc, &i| self.mul(&acc, gens.get(i)))
    }

    /// A pseudo-random element: the product of a uniform random word of
    /// length `len` in the generators.
    fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, len: usize) -> Self::Element
    where
        Self: Sized,
    {
        let gens = self.generators();
        (0..len).fold(self.identity(), |acc, _| {
            self.mul(&acc, gens.get(rng.gen_range(0..gens.len())))
        })
    }
}

/// An ordered, inverse-closed list of non-identity generators with labels.
#[derive(Debug, Clone)]
pub struct GeneratingSet<E> {
    elements: Vec<E>,
    labels: Vec<String>,
    inverse_index: Vec<usize>,
}

impl<E: Clone + Eq + Hash> GeneratingSet<E> {
    /// Builds a generating set from labelled elements, adding missing
    /// inverses (label `X` gets inverse label `X^-1`), dropping the identity
    /// and duplicates. Order is the input order with each inverse inserted
    /// right after its element.
    pub fn symmetrize(labelled: Vec<(String, E)>, identity: &E, inv: impl Fn(&E) -> E) -> Self {
        let mut elements: Vec<E> = Vec::new();
        let mut labels = Vec::new();
        let mut push = |label: String, e: E, elements: &mut Vec<E>| {
            if &e != identity && !elements.contains(&e) {
                elements.push(e);
                labels.push(label);
            }
        };
        for (label, g) in labelled {
            let gi = inv(&g);
            push(label.clone(), g, &mut elements);
            push(format!("{label}^-1"), gi, &mut elements);
        }
        let inverse_index = elements
            .iter()
            .map(|g| {
                let gi = inv(g);
                elements
                    .iter()
                    .position(|h| *h == gi)
                    .expect("generating set is inverse-closed")
            })
            .collect();
        GeneratingSet {
            elements,
            labels,
            inverse_index,
        }
    }
}

impl<E> GeneratingSet<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    /// Index of the inverse of generator `i`.
    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse_index[i]
    }

    /// Always true: symmetrization happens at construction.
    pub fn closed_under_inverse(&self) -> bool {
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &E)> {
        self.labels.iter().map(String::as_str).zip(&self.elements)
    }

    /// Renders a word of generator indices, e.g. `a.b.a^-1`.
    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.iter()
            .map(|&i| self.labels[i].as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetrize_adds_inverses_and_drops_identity() {
        let gens = GeneratingSet::symmetrize(
            vec![("a".into(), 1i64), ("e".into(), 0), ("b".into(), 2), ("c".into(), -1)],
            &0,
            |x| -x,
        );
        assert_eq!(gens.elements(), &[1, -1, 2, -2]);
        assert_eq!(gens.label(1), "a^-1");
        for i in 0..gens.len() {
            assert_eq!(*gens.get(gens.inverse_of(i)), -gens.get(i));
        }
        assert_eq!(gens.format_word(&[0, 2, 1]), "a.b.a^-1");
        assert_eq!(gens.format_word(&[]), "1");
    }
}
