//! Word metric: balls and exact word lengths.

use std::collections::HashMap;

use super::{GeneratingSet, Group, GroupError};
use crate::par::{self, Execution};

/// Default cap on the number of stored nodes in a single search.
pub const DEFAULT_NODE_BUDGET: usize = 2_000_000;

/// Result of a cutoff- or budget-limited word length query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordLength {
    Exact(u32),
    /// Longer than the cutoff, or the node budget ran out first.
    Unknown,
}

impl WordLength {
    pub fn exact(self) -> Option<u32> {
        match self {
            WordLength::Exact(n) => Some(n),
            WordLength::Unknown => None,
        }
    }
}

/// All elements of word length at most `radius`, each with its exact length.
///
/// Elements are stored sphere by sphere in breadth-first discovery order,
/// which does not depend on the execution mode.
#[derive(Debug, Clone)]
pub struct Ball<E> {
    radius: u32,
    elements: Vec<E>,
    lengths: Vec<u32>,
    parents: Vec<Option<(usize, usize)>>,
    index: HashMap<E, usize>,
    sphere_starts: Vec<usize>,
}

impl<E: Clone + Eq + std::hash::Hash + Send + Sync> Ball<E> {
    /// Breadth-first enumeration of the ball of the given radius.
    ///
    /// Frontier expansion (the products) runs under `exec`; deduplication
    /// is a sequential merge in frontier order.
    pub fn enumerate<G>(
        group: &G,
        gens: &GeneratingSet<E>,
        radius: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Self, GroupError>
    where
        G: Group<Element = E>,
    {
        let id = group.identity();
        let mut ball = Ball {
            radius: 0,
            elements: vec![id.clone()],
            lengths: vec![0],
            parents: vec![None],
            index: HashMap::from([(id, 0)]),
            sphere_starts: vec![0, 1],
        };
        for r in 1..=radius {
            let start = ball.sphere_starts[r as usize - 1];
            let end = ball.elements.len();
            let frontier: Vec<usize> = (start..end).collect();
            let expanded: Vec<Vec<E>> = par::map(exec, &frontier, |&i| {
                gens.elements()
                    .iter()
                    .map(|s| group.mul(&ball.elements[i], s))
                    .collect()
            });
            for (&parent, products) in frontier.iter().zip(expanded) {
                for (gen, g) in products.into_iter().enumerate() {
                    if ball.index.contains_key(&g) {
                        continue;
                    }
                    if ball.elements.len() >= budget {
                        return Err(GroupError::BallBudget {
                            budget,
                            radius_reached: r - 1,
                        });
                    }
                    ball.index.insert(g.clone(), ball.elements.len());
                    ball.elements.push(g);
                    ball.lengths.push(r);
                    ball.parents.push(Some((parent, gen)));
                }
            }
            ball.sphere_starts.push(ball.elements.len());
            ball.radius = r;
        }
        Ok(ball)
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &E) -> bool {
        self.index.contains_key(g)
    }

    /// Exact word length of `g` if it lies in the ball.
    pub fn length(&self, g: &E) -> Option<u32> {
        self.index.get(g).map(|&i| self.lengths[i])
    }

    pub fn index_of(&self, g: &E) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn length_at(&self, i: usize) -> u32 {
        self.lengths[i]
    }

    /// All elements in discovery order.
    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    /// Elements of length at most `r` (a prefix of [`Ball::elements`]).
    pub fn elements_within(&self, r: u32) -> &[E] {
        let r = r.min(self.radius) as usize;
        &self.elements[..self.sphere_starts[r + 1]]
    }

    /// Elements of length exactly `r`.
    pub fn sphere(&self, r: u32) -> &[E] {
        if r > self.radius {
            return &[];
        }
        let r = r as usize;
        &self.elements[self.sphere_starts[r]..self.sphere_starts[r + 1]]
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        self.sphere_starts.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, u32)> {
        self.elements.iter().zip(self.lengths.iter().copied())
    }

    /// A geodesic word (generator indices) for `g`, if it lies in the ball.
    pub fn geodesic(&self, g: &E) -> Option<Vec<usize>> {
        let mut i = *self.index.get(g)?;
        let mut word = Vec::with_capacity(self.lengths[i] as usize);
        while let Some((parent, gen)) = self.parents[i] {
            word.push(gen);
            i = parent;
        }
        word.reverse();
        Some(word)
    }
}

/// Exact word length of `g` if it is at most `cutoff`, else `Unknown`.
pub fn word_length<G: Group>(group: &G, gens: &GeneratingSet<G::Element>, g: &G::Element, cutoff: u32) -> WordLength {
    word_length_with_budget(group, gens, g, cutoff, DEFAULT_NODE_BUDGET)
}

/// Bidirectional breadth-first search from the identity and from `g`.
///
/// Both sides expand by right multiplication, so the backward side visits
/// `g·u` at distance `|u|` from `g`. Layers are expanded whole and the
/// smaller side goes first; the first layer producing a meeting point yields
/// the minimum over all meeting points in that layer.
pub fn word_length_with_budget<G: Group>(
    group: &G,
    gens: &GeneratingSet<G::Element>,
    g: &G::Element,
    cutoff: u32,
    budget: usize,
) -> WordLength {
    let id = group.identity();
    if *g == id {
        return WordLength::Exact(0);
    }
    let mut fwd: HashMap<G::Element, u32> = HashMap::from([(id.clone(), 0)]);
    let mut bwd: HashMap<G::Element, u32> = HashMap::from([(g.clone(), 0)]);
    let mut fwd_frontier = vec![id];
    let mut bwd_frontier = vec![g.clone()];
    let (mut fwd_depth, mut bwd_depth) = (0u32, 0u32);

    while fwd_depth + bwd_depth < cutoff {
        if fwd_frontier.is_empty() || bwd_frontier.is_empty() {
            // finite group fully explored without meeting
            return WordLength::Unknown;
        }
        let forward = fwd_frontier.len() <= bwd_frontier.len();
        let (frontier, seen, other, depth) = if forward {
            (&mut fwd_frontier, &mut fwd, &bwd, &mut fwd_depth)
        } else {
            (&mut bwd_frontier, &mut bwd, &fwd, &mut bwd_depth)
        };
        *depth += 1;
        let mut next = Vec::new();
        let mut best: Option<u32> = None;
        for x in frontier.iter() {
            for s in gens.elements() {
                let y = group.mul(x, s);
                if seen.contains_key(&y) {
                    continue;
                }
                if let Some(&d) = other.get(&y) {
                    let total = *depth + d;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                seen.insert(y.clone(), *depth);
                next.push(y);
            }
        }
        if let Some(b) = best {
            return if b <= cutoff {
                WordLength::Exact(b)
            } else {
                WordLength::Unknown
            };
        }
        if fwd.len() + bwd.len() > budget {
            return WordLength::Unknown;
        }
        *frontier = next;
    }
    WordLength::Unknown
}
