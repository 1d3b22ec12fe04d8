//! Finitely supported maps `Z -> V`, stored sorted without zero values.

use std::fmt;
use std::ops::{Add, Neg};

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Value types that can live in a [`SparseVec`].
pub trait Coefficient: Clone + Eq + std::hash::Hash + fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coefficient for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("integer coefficient overflow")
    }
    fn neg(&self) -> Self {
        -*self
    }
}

impl Coefficient for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseVec<V> {
    entries: Vec<(i64, V)>,
}

impl<V> Default for SparseVec<V> {
    fn default() -> Self {
        SparseVec { entries: Vec::new() }
    }
}

impl<V: Coefficient> SparseVec<V> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Single nonzero entry `value` at `index` (empty if `value` is zero).
    pub fn delta(index: i64, value: V) -> Self {
        Self::from_entries([(index, value)])
    }

    /// Sums duplicate indices and drops zeros.
    pub fn from_entries(entries: impl IntoIterator<Item = (i64, V)>) -> Self {
        let mut raw: Vec<(i64, V)> = entries.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(i64, V)> = Vec::with_capacity(raw.len());
        for (i, v) in raw {
            match out.last_mut() {
                Some((j, w)) if *j == i => *w = w.add(&v),
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    /// Wraps entries already sorted by index with no zero values.
    pub fn from_sorted(entries: Vec<(i64, V)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&V> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn entries(&self) -> &[(i64, V)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(i64, V)> {
        self.entries.iter()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn min_index(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }

    /// `(τ_k f)(i) = f(i - k)`: moves every entry `k` places up.
    pub fn shift(&self, k: i64) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (i + k, v.clone())).collect(),
        }
    }

    /// Relocates entries through an injective index map.
    pub fn relabel(&self, f: impl Fn(i64) -> i64) -> Self {
        let mut entries: Vec<(i64, V)> = self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect();
        entries.sort_by_key(|(i, _)| *i);
        debug_assert!(entries.windows(2).all(|w| w[0].0 != w[1].0));
        SparseVec { entries }
    }

    /// Applies `f` to each value, dropping results that become zero.
    pub fn map_values(&self, f: impl Fn(i64, &V) -> V) -> Self {
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, f(*i, v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = a[i].1.add(&b[j].1);
                    if !v.is_zero() {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SparseVec { entries: out }
    }

    pub fn negated(&self) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.neg())).collect(),
        }
    }
}

impl<V: Coefficient> Add for &SparseVec<V> {
    type Output = SparseVec<V>;
    fn add(self, rhs: Self) -> SparseVec<V> {
        self.plus(rhs)
    }
}

impl<V: Coefficient> Neg for &SparseVec<V> {
    type Output = SparseVec<V>;
    fn neg(self) -> SparseVec<V> {
        self.negated()
    }
}

impl<V: fmt::Display> fmt::Display for SparseVec<V> {
    /// `i=v` pairs joined by commas, e.g. `0=1,3=-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, v)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}={v}")?;
        }
        Ok(())
    }
}

impl<V: fmt::Debug> fmt::Debug for SparseVec<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, v)| (i, v))).finish()
    }
}

/// Parses `i=v,j=w` (possibly empty) into a sparse map.
pub fn parse_sparse<V: Coefficient>(text: &str, parse_value: impl Fn(&str) -> Option<V>) -> Option<SparseVec<V>> {
    let text = text.trim();
    if text.is_empty() {
        return Some(SparseVec::zero());
    }
    let mut entries = Vec::new();
    for item in text.split(',') {
        let (i, v) = item.split_once('=')?;
        entries.push((i.trim().parse().ok()?, parse_value(v.trim())?));
    }
    Some(SparseVec::from_entries(entries))
}

/// Parses `p/q` or an integer into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if Zero::is_zero(&d) {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

/// Largest absolute value of a rational's numerator or denominator, as a
/// rough size measure used in tests and budgets.
pub fn rational_height(r: &BigRational) -> num_bigint::BigInt {
    r.numer().abs().max(r.denom().abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_entries_normalizes() {
        let v = SparseVec::from_entries([(3, 1i64), (1, 2), (3, -1), (0, 0)]);
        assert_eq!(v.entries(), &[(1, 2)]);
        assert!(SparseVec::<i64>::delta(5, 0).is_zero());
    }

    #[test]
    fn plus_cancels_and_merges() {
        let a = SparseVec::from_entries([(0, 1i64), (2, 3)]);
        let b = SparseVec::from_entries([(0, -1i64), (1, 1), (2, 1)]);
        assert_eq!((&a + &b).entries(), &[(1, 1), (2, 4)]);
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn shift_moves_up() {
        let a = SparseVec::delta(0, 1i64);
        assert_eq!(a.shift(1).get(1), Some(&1));
        assert_eq!(a.shift(-2).min_index(), Some(-2));
    }

    #[test]
    fn parse_roundtrip() {
        let v = parse_sparse("0=1, -3=-2", |s| s.parse::<i64>().ok()).unwrap();
        assert_eq!(v.to_string(), "-3=-2,0=1");
        let w = parse_sparse("0=1/2,1=-3/6", parse_rational).unwrap();
        assert_eq!(w.to_string(), "0=1/2,1=-1/2");
        assert!(parse_sparse("0", |s| s.parse::<i64>().ok()).is_none());
        assert!(parse_rational("1/0").is_none());
    }
}
