use std::collections::HashSet;

use super::clique::{greedy_clique, max_clique, BitGraph};
use super::distance::{CosetGeometry, Witness};
use super::{CosetError, SubgroupDesc};
use crate::group::word_length;
use crate::group::{Group, WordLength};
use crate::par::{self, Execution};
use crate::zoo::{GeneralizedWreath, TwoTransitive};

/// Families larger than this use the greedy clique heuristic.
pub const CLIQUE_EXACT_LIMIT: usize = 300;
/// Families larger than this keep bounds but drop pairwise witnesses.
pub const RETAIN_WITNESS_LIMIT: usize = 300;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `(i, j)`, `i < j`, in the condensed upper triangle.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pair_of_index(n: usize, mut k: usize) -> (usize, usize) {
    let mut i = 0;
    while k >= n - 1 - i {
        k -= n - 1 - i;
        i += 1;
    }
    (i, i + 1 + k)
}

/// Pairwise coset distance bounds for a family of distinct cosets.
#[derive(Debug, Clone)]
pub struct PackingInstance<E> {
    pub subgroup: String,
    pub d: u32,
    pub family: Vec<E>,
    bounds: Vec<Option<u32>>,
    witnesses: Option<Vec<Option<Witness<E>>>>,
}

impl<E: Clone + Send + Sync> PackingInstance<E> {
    /// Upper bounds for every pair, computed independently and merged in
    /// pair order.
    pub fn compute<G: Group<Element = E>>(geo: &CosetGeometry<'_, G>, d: u32, family: Vec<E>) -> Self {
        let n = family.len();
        let keep = n <= RETAIN_WITNESS_LIMIT;
        let entries = par::map_range(geo.settings().execution, pair_count(n), |k| {
            let (i, j) = pair_of_index(n, k);
            let dist = geo.coset_distance_upper(&family[i], &family[j]);
            (dist.bound(), if keep { dist.witness().cloned() } else { None })
        });
        let (bounds, witnesses): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        PackingInstance {
            subgroup: geo.subgroup().name().to_string(),
            d,
            family,
            bounds,
            witnesses: keep.then_some(witnesses),
        }
    }
}

impl<E> PackingInstance<E> {
    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    /// Upper bound on the distance between cosets `i` and `j`, if known.
    pub fn bound(&self, i: usize, j: usize) -> Option<u32> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Some(0),
            std::cmp::Ordering::Less => self.bounds[pair_index(self.len(), i, j)],
            std::cmp::Ordering::Greater => self.bounds[pair_index(self.len(), j, i)],
        }
    }

    /// Witness for the pair `i < j`, oriented from coset `i` to coset `j`.
    pub fn witness(&self, i: usize, j: usize) -> Option<&Witness<E>> {
        assert!(i < j, "witnesses are stored for i < j");
        self.witnesses.as_ref()?[pair_index(self.len(), i, j)].as_ref()
    }

    pub fn has_witnesses(&self) -> bool {
        self.witnesses.is_some()
    }

    /// Graph joining cosets whose known bound is at most `d`.
    pub fn graph(&self, d: u32) -> BitGraph {
        BitGraph::from_fn(self.len(), |i, j| self.bound(i, j).is_some_and(|b| b <= d))
    }

    /// Largest pairwise bound inside `members`; 0 for fewer than two.
    pub fn max_bound_within(&self, members: &[usize]) -> Option<u32> {
        let mut worst = 0;
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                worst = worst.max(self.bound(i, j)?);
            }
        }
        Some(worst)
    }

    /// A clique of pairwise `d`-close cosets: exact when the family is small
    /// enough and the node limit is not hit, greedy otherwise. Inexact
    /// searches also try every smaller radius and keep the largest clique, so
    /// the size never decreases with `d`.
    pub fn clique_at(&self, d: u32, node_limit: u64) -> (Vec<usize>, bool) {
        let attempt = |r: u32| {
            let g = self.graph(r);
            if self.len() <= CLIQUE_EXACT_LIMIT {
                let res = max_clique(&g, node_limit);
                (res.members, res.exact)
            } else {
                (greedy_clique(&g), false)
            }
        };
        let (best, exact) = attempt(d);
        if exact {
            return (best, true);
        }
        let mut best = best;
        for r in 0..d {
            let (c, _) = attempt(r);
            if c.len() > best.len() {
                best = c;
            }
        }
        (best, false)
    }
}

#[derive(Debug, Clone)]
pub struct PackingResult<E> {
    pub d: u32,
    /// Indices into `instance.family`, increasing.
    pub clique: Vec<usize>,
    /// True when the clique is a maximum clique of the distance graph.
    pub exact: bool,
    pub instance: PackingInstance<E>,
}

impl<E: Clone> PackingResult<E> {
    pub fn lower_bound(&self) -> usize {
        self.clique.len()
    }

    pub fn clique_elements(&self) -> Vec<E> {
        self.clique.iter().map(|&i| self.instance.family[i].clone()).collect()
    }

    /// Largest bound used inside the clique.
    pub fn max_witness_len(&self) -> u32 {
        self.instance.max_bound_within(&self.clique).unwrap_or(0)
    }
}

/// Drops pool entries whose coset already occurred, keeping first
/// occurrences in pool order.
pub fn dedup_cosets<G: Group>(group: &G, subgroup: &SubgroupDesc<G::Element>, pool: &[G::Element]) -> Vec<G::Element> {
    let mut kept: Vec<G::Element> = Vec::new();
    if subgroup.has_canonical() {
        let mut seen = HashSet::new();
        for g in pool {
            if seen.insert(subgroup.canonical(g).expect("canonicalizer present")) {
                kept.push(g.clone());
            }
        }
    } else {
        for g in pool {
            if !kept.iter().any(|k| super::coset_eq(group, subgroup, k, g)) {
                kept.push(g.clone());
            }
        }
    }
    kept
}

/// A lower bound on the packing number at radius `d` from the cosets in
/// `pool`.
///
/// The returned clique is re-verified against the distance bounds.
pub fn packing_lower_bound<G: Group>(
    geo: &CosetGeometry<'_, G>,
    d: u32,
    pool: &[G::Element],
    clique_node_limit: u64,
) -> PackingResult<G::Element> {
    let family = dedup_cosets(geo.group(), geo.subgroup(), pool);
    let instance = PackingInstance::compute(geo, d, family);
    result_from_instance(instance, d, clique_node_limit)
}

/// Clique search on an already computed instance at radius `d`.
pub fn result_from_instance<E: Clone>(
    instance: PackingInstance<E>,
    d: u32,
    clique_node_limit: u64,
) -> PackingResult<E> {
    let (clique, exact) = instance.clique_at(d, clique_node_limit);
    assert!(
        instance.max_bound_within(&clique).is_some_and(|b| b <= d),
        "clique contains a pair that is not d-close"
    );
    PackingResult {
        d,
        clique,
        exact,
        instance,
    }
}

/// The family `{x_t·Q : t ∈ positions}` in `N ≀_X Q`, where `x_t` is the
/// payload `x` at point `t`.
///
/// For each pair `(t, s)` the acting element `q` with `q(t) = 0`, `q(s) = 1`
/// turns `x_t⁻¹x_s` into `x_0⁻¹x_1`, so every pair gets the witness
/// `(q, q⁻¹)` of the same length `|x_0⁻¹x_1|`.
pub fn lemma54_family<A>(
    group: &GeneralizedWreath<A>,
    x: i64,
    positions: &[i64],
    exec: Execution,
) -> Result<PackingInstance<<GeneralizedWreath<A> as Group>::Element>, CosetError>
where
    A: TwoTransitive,
{
    let distinct: HashSet<i64> = positions.iter().copied().collect();
    if distinct.len() != positions.len() {
        return Err(CosetError::DuplicatePositions);
    }
    let family: Vec<_> = positions.iter().map(|&t| group.payload_at(t, x)).collect();
    let reference = group.difference(&group.payload_at(0, x), &group.payload_at(1, x));
    let length = match word_length(group, group.generators(), &reference, 12) {
        WordLength::Exact(n) => n,
        WordLength::Unknown => return Err(CosetError::NormalForm(reference.to_string())),
    };
    let n = family.len();
    let entries = par::map_range(exec, pair_count(n), |k| {
        let (i, j) = pair_of_index(n, k);
        let q = group
            .acting_group()
            .two_transitive_witness(positions[i], positions[j])?;
        let h1 = group.embed_q(q.clone());
        let h2 = group.embed_q(group.acting_group().inv(&q));
        let g = group.difference(&family[i], &family[j]);
        let value = group.mul(&group.mul(&h1, &g), &h2);
        assert_eq!(value, reference, "conjugation witness does not reach x_0^-1 x_1");
        Ok(Witness { h1, h2, value, length })
    });
    let witnesses = entries.into_iter().collect::<Result<Vec<_>, crate::zoo::ZooError>>()?;
    let keep = n <= RETAIN_WITNESS_LIMIT;
    Ok(PackingInstance {
        subgroup: "q".into(),
        d: length,
        family,
        bounds: vec![Some(length); witnesses.len()],
        witnesses: keep.then(|| witnesses.into_iter().map(Some).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::catalog;
    use crate::coset::SearchSettings;
    use crate::zoo::wreath::zstarz2_wreath;
    use crate::zoo::FreeAbelian;

    #[test]
    fn pair_indexing_roundtrip() {
        for n in 2..9 {
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    assert_eq!(pair_index(n, i, j), k);
                    assert_eq!(pair_of_index(n, k), (i, j));
                    k += 1;
                }
            }
        }
    }

    #[test]
    fn diagonal_packing_radius_one() {
        let g = FreeAbelian::new(2);
        let h = catalog::zn_diagonal(&g);
        let geo = CosetGeometry::new(&g, &h, SearchSettings::default()).unwrap();
        let pool = crate::group::Ball::enumerate(&g, g.generators(), 2, 1000, Execution::Sequential)
            .unwrap()
            .elements()
            .to_vec();
        let res = packing_lower_bound(&geo, 1, &pool, 1_000_000);
        assert_eq!(res.lower_bound(), 2);
        assert!(res.exact);
        let big = packing_lower_bound(&geo, 10, &pool, 1_000_000);
        assert_eq!(big.lower_bound(), big.instance.len());
    }

    #[test]
    fn wreath_family_bounds_are_uniform() {
        let g = zstarz2_wreath();
        let inst = lemma54_family(&g, 1, &[3, 7, -2, 0, 1], Execution::Sequential).unwrap();
        assert_eq!(inst.d, 4);
        for i in 0..5 {
            for j in i + 1..5 {
                assert_eq!(inst.bound(i, j), Some(4));
            }
        }
        assert!(lemma54_family(&g, 1, &[1, 1], Execution::Sequential).is_err());
    }
}
