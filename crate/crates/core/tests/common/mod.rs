//! Reference computations that only use the group law and the generator list.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use cosetpack_core::Group;
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Depth-limited search for a word of length exactly `depth` equal to `g`.
fn dls<G: Group>(group: &G, cur: &G::Element, g: &G::Element, depth: u32) -> bool {
    if depth == 0 {
        return cur == g;
    }
    group
        .generators()
        .elements()
        .iter()
        .any(|s| dls(group, &group.mul(cur, s), g, depth - 1))
}

/// Word length by iterative deepening, `None` beyond `max`.
pub fn iddfs_length<G: Group>(group: &G, g: &G::Element, max: u32) -> Option<u32> {
    (0..=max).find(|&d| dls(group, &group.identity(), g, d))
}

/// Lengths of every element of word length at most `radius`, layer by layer.
pub fn bfs_lengths<G: Group>(group: &G, gens: &[G::Element], radius: u32) -> HashMap<G::Element, u32> {
    let mut seen = HashMap::from([(group.identity(), 0)]);
    let mut layer = vec![group.identity()];
    for r in 1..=radius {
        let mut next = Vec::new();
        for x in &layer {
            for s in gens {
                let y = group.mul(x, s);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), r);
                    next.push(y);
                }
            }
        }
        layer = next;
    }
    seen
}

/// Elements reachable by at most `radius` subgroup generators.
pub fn subgroup_words<G: Group>(group: &G, gens: &[G::Element], radius: u32) -> Vec<G::Element> {
    let mut all: Vec<G::Element> = bfs_lengths(group, gens, radius).into_keys().collect();
    all.sort_by_key(|e| e.to_string());
    all
}

/// `min |h₁·g₁⁻¹g₂·h₂|` over the given subgroup elements, using a
/// precomputed length table; `None` when nothing lands in the table.
pub fn naive_coset_distance<G: Group>(
    group: &G,
    lengths: &HashMap<G::Element, u32>,
    sub: &[G::Element],
    g1: &G::Element,
    g2: &G::Element,
) -> Option<u32> {
    let g = group.mul(&group.inv(g1), g2);
    let mut best: Option<u32> = None;
    for h1 in sub {
        let left = group.mul(h1, &g);
        for h2 in sub {
            if let Some(&n) = lengths.get(&group.mul(&left, h2)) {
                best = Some(best.map_or(n, |b| b.min(n)));
            }
        }
    }
    best
}

/// Largest clique by exhaustive search over subsets (small graphs only).
pub fn brute_clique(n: usize, edge: impl Fn(usize, usize) -> bool) -> usize {
    assert!(n <= 20);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if members.len() <= best {
            continue;
        }
        let ok = members
            .iter()
            .enumerate()
            .all(|(a, &i)| members[a + 1..].iter().all(|&j| edge(i, j)));
        if ok {
            best = members.len();
        }
    }
    best
}

pub fn distinct<T: std::hash::Hash + Eq>(items: &[T]) -> bool {
    items.iter().collect::<HashSet<_>>().len() == items.len()
}
