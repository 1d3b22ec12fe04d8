//! Maximum cliques: exact branch and bound with a greedy coloring bound,
//! and a greedy heuristic for large graphs.
//!
//! Ties are broken by vertex index, so results do not depend on scheduling.

/// Undirected graph on `0..n` as adjacency bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds the graph from a symmetric edge predicate on `i < j`.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = BitGraph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n);
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.rows[j * self.words + i / 64] |= 1 << (i % 64);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn is_clique(&self, members: &[usize]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(a, &i)| members[a + 1..].iter().all(|&j| i != j && self.has_edge(i, j)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    /// Vertex indices in increasing order.
    pub members: Vec<usize>,
    /// False when the search stopped early on its node limit or was greedy.
    pub exact: bool,
}

/// Vertices by decreasing degree, ties by index.
fn degree_order(g: &BitGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Adds vertices in degree order whenever they are adjacent to everything
/// chosen so far.
pub fn greedy_clique(g: &BitGraph) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for v in degree_order(g) {
        if chosen.iter().all(|&u| g.has_edge(u, v)) {
            chosen.push(v);
        }
    }
    chosen.sort_unstable();
    chosen
}

struct Search<'a> {
    g: &'a BitGraph,
    best: Vec<usize>,
    nodes: u64,
    limit: u64,
    aborted: bool,
}

impl Search<'_> {
    /// Greedy sequential coloring of `cand`; returns the vertices sorted by
    /// color with the color of each.
    fn color_sort(&self, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored: Vec<usize> = cand.to_vec();
        let mut order = Vec::with_capacity(cand.len());
        let mut colors = Vec::with_capacity(cand.len());
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut class: Vec<usize> = Vec::new();
            let mut rest = Vec::new();
            for &v in &uncolored {
                if class.iter().all(|&u| !self.g.has_edge(u, v)) {
                    class.push(v);
                } else {
                    rest.push(v);
                }
            }
            colors.extend(std::iter::repeat_n(k, class.len()));
            order.extend(class);
            uncolored = rest;
        }
        (order, colors)
    }

    fn expand(&mut self, clique: &mut Vec<usize>, cand: &[usize]) {
        self.nodes += 1;
        if self.nodes > self.limit {
            self.aborted = true;
            return;
        }
        let (order, colors) = self.color_sort(cand);
        for idx in (0..order.len()).rev() {
            if clique.len() + colors[idx] <= self.best.len() || self.aborted {
                return;
            }
            let v = order[idx];
            clique.push(v);
            let next: Vec<usize> = order[..idx]
                .iter()
                .copied()
                .filter(|&u| self.g.has_edge(u, v))
                .collect();
            if next.is_empty() {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, &next);
            }
            clique.pop();
        }
    }
}

/// Maximum clique by branch and bound, visiting at most `node_limit` search
/// nodes. If the limit is hit the best clique found so far is returned with
/// `exact = false`.
pub fn max_clique(g: &BitGraph, node_limit: u64) -> CliqueResult {
    if g.is_empty() {
        return CliqueResult {
            members: vec![],
            exact: true,
        };
    }
    let mut search = Search {
        g,
        best: greedy_clique(g),
        nodes: 0,
        limit: node_limit,
        aborted: false,
    };
    // color_sort keeps input order within a class, so candidates go in
    // increasing degree and the high-degree vertices are branched on first
    let mut cand = degree_order(g);
    cand.reverse();
    search.expand(&mut Vec::new(), &cand);
    let mut members = search.best;
    members.sort_unstable();
    CliqueResult {
        members,
        exact: !search.aborted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &BitGraph) -> usize {
        (0u32..1 << g.len())
            .filter(|mask| {
                let m: Vec<usize> = (0..g.len()).filter(|i| mask >> i & 1 == 1).collect();
                g.is_clique(&m)
            })
            .map(u32::count_ones)
            .max()
            .unwrap_or(0) as usize
    }

    #[test]
    fn small_graphs_match_brute_force() {
        let mut seed = 12345u64;
        for _ in 0..200 {
            let n = 1 + (seed % 12) as usize;
            let g = BitGraph::from_fn(n, |_, _| {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                seed >> 33 & 1 == 1
            });
            let r = max_clique(&g, u64::MAX);
            assert!(r.exact);
            assert!(g.is_clique(&r.members));
            assert_eq!(r.members.len(), brute_force(&g));
        }
    }

    #[test]
    fn complete_and_empty() {
        let k = BitGraph::from_fn(70, |_, _| true);
        assert_eq!(max_clique(&k, 1000).members.len(), 70);
        assert_eq!(greedy_clique(&k).len(), 70);
        let e = BitGraph::new(5);
        assert_eq!(max_clique(&e, 1000).members, vec![0]);
    }
}
