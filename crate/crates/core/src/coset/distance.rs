use std::collections::HashMap;
use std::sync::OnceLock;

use super::{CosetError, DoubleCosetForm, SubgroupDesc};
use crate::group::{word_length_with_budget, DEFAULT_NODE_BUDGET};
use crate::group::{Ball, GeneratingSet, Group, WordLength};
use crate::par::Execution;

/// `h₁, h₂ ∈ H` with `value = h₁·g₁⁻¹g₂·h₂` of word length `length`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<E> {
    pub h1: E,
    pub h2: E,
    pub value: E,
    pub length: u32,
}

impl<E: Clone> Witness<E> {
    /// The witness for the swapped pair `(g₂, g₁)`: inverting
    /// `h₁·g₁⁻¹g₂·h₂` gives `h₂⁻¹·g₂⁻¹g₁·h₁⁻¹`.
    pub fn reversed<G: Group<Element = E>>(&self, group: &G) -> Self {
        Witness {
            h1: group.inv(&self.h2),
            h2: group.inv(&self.h1),
            value: group.inv(&self.value),
            length: self.length,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CosetDistance<E> {
    Bounded(Witness<E>),
    Unknown,
}

impl<E> CosetDistance<E> {
    pub fn bound(&self) -> Option<u32> {
        match self {
            CosetDistance::Bounded(w) => Some(w.length),
            CosetDistance::Unknown => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness<E>> {
        match self {
            CosetDistance::Bounded(w) => Some(w),
            CosetDistance::Unknown => None,
        }
    }
}

/// Search limits for distance computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchSettings {
    /// Radius of the cached ambient ball used to read off witness lengths.
    pub ambient_radius: u32,
    /// Word length (in subgroup generators) of the `h₁, h₂` candidates tried
    /// when the subgroup has no double-coset normal form.
    pub subgroup_radius: u32,
    /// Cutoff for word-length searches outside the ambient ball.
    pub length_cutoff: u32,
    pub node_budget: usize,
    pub execution: Execution,
}

impl Default for SearchSettings {
    fn default() -> Self {
        SearchSettings {
            ambient_radius: 4,
            subgroup_radius: 4,
            length_cutoff: 12,
            node_budget: DEFAULT_NODE_BUDGET,
            execution: Execution::default(),
        }
    }
}

type KeyTable<E> = HashMap<E, (usize, DoubleCosetForm<E>)>;

/// Coset distances for one subgroup, with a cached ambient ball.
pub struct CosetGeometry<'a, G: Group> {
    group: &'a G,
    subgroup: &'a SubgroupDesc<G::Element>,
    settings: SearchSettings,
    ambient: Ball<G::Element>,
    /// Double-coset key -> index and normal form of the shortest
    /// ambient-ball element in it.
    keys: Option<KeyTable<G::Element>>,
    subgroup_ball: OnceLock<Vec<G::Element>>,
}

impl<'a, G: Group> CosetGeometry<'a, G> {
    pub fn new(
        group: &'a G,
        subgroup: &'a SubgroupDesc<G::Element>,
        settings: SearchSettings,
    ) -> Result<Self, CosetError> {
        let ambient = Ball::enumerate(
            group,
            group.generators(),
            settings.ambient_radius,
            settings.node_budget,
            settings.execution,
        )?;
        let keys = if subgroup.has_double_coset_decision() {
            let forms = crate::par::map(settings.execution, ambient.elements(), |b| {
                subgroup.double_coset_form(b)
            });
            let mut table = HashMap::new();
            for (i, form) in forms.into_iter().enumerate() {
                if let Some(form) = form {
                    table.entry(form.key.clone()).or_insert((i, form));
                }
            }
            Some(table)
        } else {
            None
        };
        Ok(CosetGeometry {
            group,
            subgroup,
            settings,
            ambient,
            keys,
            subgroup_ball: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &G {
        self.group
    }

    pub fn subgroup(&self) -> &SubgroupDesc<G::Element> {
        self.subgroup
    }

    pub fn settings(&self) -> &SearchSettings {
        &self.settings
    }

    pub fn ambient_ball(&self) -> &Ball<G::Element> {
        &self.ambient
    }

    pub fn coset_eq(&self, g1: &G::Element, g2: &G::Element) -> bool {
        super::coset_eq(self.group, self.subgroup, g1, g2)
    }

    /// Word length, read from the ambient ball when possible.
    pub fn length(&self, g: &G::Element) -> WordLength {
        if let Some(n) = self.ambient.length(g) {
            return WordLength::Exact(n);
        }
        if self.group.is_identity(g) {
            return WordLength::Exact(0);
        }
        let cutoff = self.settings.length_cutoff;
        if cutoff <= self.ambient.radius() {
            return WordLength::Unknown;
        }
        word_length_with_budget(
            self.group,
            self.group.generators(),
            g,
            cutoff,
            self.settings.node_budget,
        )
    }

    /// Elements of `H` of length at most `subgroup_radius` in the subgroup
    /// generators.
    pub fn subgroup_ball(&self) -> &[G::Element] {
        self.subgroup_ball.get_or_init(|| {
            let id = self.group.identity();
            let labelled = self
                .subgroup
                .generators()
                .iter()
                .enumerate()
                .map(|(i, h)| (format!("h{i}"), h.clone()))
                .collect();
            let gens = GeneratingSet::symmetrize(labelled, &id, |h| self.group.inv(h));
            match Ball::enumerate(
                self.group,
                &gens,
                self.settings.subgroup_radius,
                self.settings.node_budget,
                self.settings.execution,
            ) {
                Ok(ball) => ball.elements().to_vec(),
                Err(_) => vec![id],
            }
        })
    }

    /// An upper bound on `d(g₁H, g₂H)` with a verified witness.
    ///
    /// With a double-coset normal form the bound is the exact distance
    /// whenever the double coset meets the ambient ball. Otherwise `h₁, h₂`
    /// range over the subgroup ball and the best value found is returned.
    pub fn coset_distance_upper(&self, g1: &G::Element, g2: &G::Element) -> CosetDistance<G::Element> {
        let g = self.group.difference(g1, g2);
        let candidate = self.upper_candidate(&g);
        match candidate {
            Some((h1, h2)) => self.verified(&g, h1, h2),
            None => CosetDistance::Unknown,
        }
    }

    fn upper_candidate(&self, g: &G::Element) -> Option<(G::Element, G::Element)> {
        let group = self.group;
        if self.subgroup.member(g) {
            return Some((group.identity(), group.inv(g)));
        }
        if let Some(form) = self.subgroup.double_coset_form(g) {
            let keys = self.keys.as_ref().expect("key table exists with a normal form");
            if let Some((_, fb)) = keys.get(&form.key) {
                // left_b·b·right_b = key = left·g·right
                let h1 = group.mul(&group.inv(&fb.left), &form.left);
                let h2 = group.mul(&form.right, &group.inv(&fb.right));
                return Some((h1, h2));
            }
            if self.length(&form.key) != WordLength::Unknown {
                return Some((form.left, form.right));
            }
            // every double coset meeting the ambient ball is in the table
            return None;
        }
        self.generic_candidate(g)
    }

    fn generic_candidate(&self, g: &G::Element) -> Option<(G::Element, G::Element)> {
        let group = self.group;
        let hs = self.subgroup_ball();
        let rows = crate::par::map(self.settings.execution, hs, |h1| {
            let left = group.mul(h1, g);
            let mut best: Option<(u32, usize)> = None;
            for (j, h2) in hs.iter().enumerate() {
                if let Some(n) = self.ambient.length(&group.mul(&left, h2)) {
                    if best.is_none_or(|(b, _)| n < b) {
                        best = Some((n, j));
                    }
                }
            }
            best
        });
        let (i, (_, j)) = rows
            .into_iter()
            .enumerate()
            .filter_map(|(i, r)| r.map(|b| (i, b)))
            .min_by_key(|&(i, (n, j))| (n, i, j))?;
        Some((hs[i].clone(), hs[j].clone()))
    }

    /// Rebuilds the witness from `h₁, h₂` and checks it.
    fn verified(&self, g: &G::Element, h1: G::Element, h2: G::Element) -> CosetDistance<G::Element> {
        if !self.subgroup.member(&h1) || !self.subgroup.member(&h2) {
            debug_assert!(false, "witness factors outside the subgroup");
            return CosetDistance::Unknown;
        }
        let value = self.group.mul(&self.group.mul(&h1, g), &h2);
        match self.length(&value) {
            WordLength::Exact(length) => CosetDistance::Bounded(Witness { h1, h2, value, length }),
            WordLength::Unknown => CosetDistance::Unknown,
        }
    }

    /// `d(g₁H, g₂H)` if it is at most `cutoff`.
    ///
    /// Scans balls of increasing radius for an element of the double coset
    /// `H·g₁⁻¹g₂·H`, decided through the subgroup's double-coset normal form.
    pub fn coset_distance_exact(
        &self,
        g1: &G::Element,
        g2: &G::Element,
        cutoff: u32,
    ) -> Result<WordLength, CosetError> {
        let name = || CosetError::NoDoubleCosetDecision(self.subgroup.name().to_string());
        if !self.subgroup.has_double_coset_decision() {
            return Err(name());
        }
        let g = self.group.difference(g1, g2);
        if self.subgroup.member(&g) {
            return Ok(WordLength::Exact(0));
        }
        let key = self
            .subgroup
            .double_coset_form(&g)
            .ok_or_else(|| CosetError::NormalForm(format!("{g:?}")))?
            .key;
        // the table holds the shortest ball element of each double coset
        // meeting the ambient ball
        let keys = self.keys.as_ref().expect("key table exists with a normal form");
        if let Some(&(i, _)) = keys.get(&key) {
            let n = self.ambient.length_at(i);
            return Ok(if n <= cutoff {
                WordLength::Exact(n)
            } else {
                WordLength::Unknown
            });
        }
        if cutoff <= self.ambient.radius() {
            return Ok(WordLength::Unknown);
        }
        let Ok(ball) = Ball::enumerate(
            self.group,
            self.group.generators(),
            cutoff,
            self.settings.node_budget,
            self.settings.execution,
        ) else {
            return Ok(WordLength::Unknown);
        };
        for (b, n) in ball.iter() {
            if self.subgroup.double_coset_form(b).is_some_and(|f| f.key == key) {
                return Ok(WordLength::Exact(n));
            }
        }
        Ok(WordLength::Unknown)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::coset::catalog;
    use crate::zoo::counterexample::{emb_t, emb_w};
    use crate::zoo::{CounterexampleGroup, FreeAbelian, Heisenberg, HeisenbergElement};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn diagonal_distances() {
        let g = FreeAbelian::new(2);
        let h = catalog::zn_diagonal(&g);
        let geo = CosetGeometry::new(&g, &h, SearchSettings::default()).unwrap();
        let o = g.element(&[0, 0]);
        let e1 = g.element(&[1, 0]);
        let d = geo.coset_distance_upper(&o, &e1);
        assert_eq!(d.bound(), Some(1));
        assert_eq!(d.witness().unwrap().value, e1);
        assert_eq!(geo.coset_distance_upper(&e1, &e1).bound(), Some(0));
        let e2 = g.element(&[0, 1]);
        assert_eq!(geo.coset_distance_exact(&e1, &e2, 4).unwrap(), WordLength::Exact(2));
        assert_eq!(geo.coset_distance_exact(&e1, &e2, 1).unwrap(), WordLength::Unknown);
        assert_eq!(geo.coset_distance_exact(&e1, &e2, 6).unwrap(), WordLength::Exact(2));
    }

    #[test]
    fn heisenberg_x_axis_example() {
        let g = Heisenberg::new();
        let h = catalog::heisenberg_x(&g);
        let geo = CosetGeometry::new(&g, &h, SearchSettings::default()).unwrap();
        let id = g.identity();
        let z = HeisenbergElement::new(0, 0, 1);
        assert_eq!(geo.coset_distance_exact(&id, &z, 4).unwrap(), WordLength::Exact(3));
        assert_eq!(geo.coset_distance_upper(&id, &z).bound(), Some(3));
    }

    #[test]
    fn counterexample_pair_has_length_one_witness() {
        let g = CounterexampleGroup::new();
        let t = catalog::counterexample_t(&g, 1);
        let settings = SearchSettings {
            ambient_radius: 1,
            ..SearchSettings::default()
        };
        let geo = CosetGeometry::new(&g, &t, settings).unwrap();
        let d = geo.coset_distance_upper(&emb_w(r(1, 3)), &emb_w(r(1, 2)));
        let w = d.witness().unwrap();
        assert_eq!(w.length, 1);
        assert_eq!(w.value, CounterexampleGroup::c());
        assert_eq!(w.h1, emb_t(&r(6, 1)).unwrap());
        assert_eq!(w.h2, emb_t(&r(1, 6)).unwrap());
    }

    #[test]
    fn generic_search_without_normal_form() {
        let g = crate::zoo::SplitExtension::from_key("split:2,1;1,1").unwrap();
        let h = catalog::split_acting(&g);
        let geo = CosetGeometry::new(&g, &h, SearchSettings::default()).unwrap();
        let a = g.identity();
        let b = g.module_element(vec![2, 1]);
        // t e1 t^-1 = (2,1), so the double coset contains e1
        assert_eq!(geo.coset_distance_upper(&a, &b).bound(), Some(1));
        assert!(geo.coset_distance_exact(&a, &b, 3).is_err());
    }
}
