//! Named groups and subgroups.
//!
//! Group keys: `zn:<rank>`, `heisenberg`, `lamplighter`, `bs12`,
//! `zstarz2-wreath`, `counterexample`, `split:<matrix>` (rows separated by
//! `;`, e.g. `split:2,1;1,1`).
//!
//! Every group accepts the subgroup keys `trivial` and `whole`. Others:
//!
//! * `zn:<rank>`: `diagonal`, `axis:<i>`, `lattice:<v1>;<v2>;...` (spanning
//!   vectors), and `meet:<key>&<key>` for the intersection of two of these.
//! * `heisenberg`: `center`, `x`, `y`.
//! * `lamplighter`: `base`, `shift`.
//! * `bs12`: `a`, `b`.
//! * `zstarz2-wreath`: `q` (acting group), `base`.
//! * `counterexample`: `t` or `t:<r>` (lamplighter base, lamps up to `|n| ≤ r`
//!   listed as generators, default 2), `q`, `w`, `pullback` (`W ⋊ ⟨a⟩`).
//! * `split:<matrix>`: `h1` (acting `Z`), `m` (module).
//!
//! Element literals are the `Display` forms of the element types, for
//! example `1,0,0` (Heisenberg), `lamps:0=1;shift:2` (lamplighter),
//! `w:0=1/2;q:shift:1` (counterexample), `m:1,0;h:2` (split).

use std::str::FromStr;

use cosetpack_core::certificates::{
    bs_family, build_separation_set, certify_packing_upper, counterexample_family, heisenberg_family, modk_certificate,
    zn_family, Certificate, CertifyError, FiniteQuotient, LamplighterQuotient,
};
use cosetpack_core::coset::{catalog, SubgroupDesc};
use cosetpack_core::zoo::counterexample::emb_w;
use cosetpack_core::zoo::lattice::Lattice;
use cosetpack_core::zoo::wreath::zstarz2_wreath;
use cosetpack_core::zoo::{
    BaumslagSolitar, CounterexampleGroup, FreeAbelian, GeneralizedWreath, Heisenberg, Lamplighter, SplitExtension,
    ZStarZ2, ZooError,
};
use cosetpack_core::{Execution, Group, GroupError};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("unknown subgroup {key:?} of {group}; known: {known}")]
    UnknownSubgroup { group: String, key: String, known: String },
    #[error(transparent)]
    Parse(#[from] GroupError),
    #[error(transparent)]
    Zoo(#[from] ZooError),
}

/// A group with named subgroups, element literals and a certificate
/// strategy.
pub trait Registered: Group<Element: FromStr<Err = GroupError>> + Clone + 'static {
    /// Subgroup keys beyond `trivial` and `whole`.
    const SUBGROUPS: &'static str;

    fn named_subgroup(&self, key: &str) -> Option<SubgroupDesc<Self::Element>>;

    /// A packing upper bound at radius `d` from this group's quotient family.
    fn certify(
        &self,
        sub: &SubgroupDesc<Self::Element>,
        d: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Certificate<Self::Element>, CertifyError>;

    /// The cosets of `emb_W(1/2), …, emb_W(1/(n+1))`, for groups containing
    /// the rational module.
    fn rational_family(&self, _n: usize) -> Option<Vec<Self::Element>> {
        None
    }

    fn subgroup(&self, key: &str) -> Result<SubgroupDesc<Self::Element>, RegistryError> {
        match key {
            "trivial" => Ok(catalog::trivial(self)),
            "whole" => Ok(catalog::whole(self)),
            _ => self.named_subgroup(key).ok_or_else(|| RegistryError::UnknownSubgroup {
                group: self.name(),
                key: key.to_string(),
                known: format!("trivial, whole, {}", Self::SUBGROUPS),
            }),
        }
    }

    fn parse_element(&self, literal: &str) -> Result<Self::Element, RegistryError> {
        let g: Self::Element = literal.parse()?;
        if !self.contains(&g) {
            return Err(GroupError::ForeignElement {
                group: self.name(),
                element: literal.to_string(),
            }
            .into());
        }
        Ok(g)
    }
}

fn with_family<G: Group>(
    group: &G,
    sub: &SubgroupDesc<G::Element>,
    d: u32,
    budget: usize,
    exec: Execution,
    family: &[Box<dyn FiniteQuotient<G::Element>>],
) -> Result<Certificate<G::Element>, CertifyError> {
    let sep = build_separation_set(group, sub, d, budget, exec)?;
    certify_packing_upper(sub, &sep, family, exec)
}

fn zn_vectors(rank: usize, key: &str) -> Option<Vec<Vec<i64>>> {
    let unit = |i: usize| {
        let mut v = vec![0; rank];
        v[i] = 1;
        v
    };
    match key {
        "trivial" => Some(vec![]),
        "whole" => Some((0..rank).map(unit).collect()),
        "diagonal" => Some(vec![vec![1; rank]]),
        _ => {
            if let Some(i) = key.strip_prefix("axis:") {
                let i: usize = i.parse().ok()?;
                return (i < rank).then(|| vec![unit(i)]);
            }
            let body = key.strip_prefix("lattice:")?;
            let vecs = body
                .split(';')
                .map(|v| {
                    v.split(',')
                        .map(|x| x.trim().parse::<i64>().ok())
                        .collect::<Option<Vec<_>>>()
                })
                .collect::<Option<Vec<_>>>()?;
            vecs.iter().all(|v| v.len() == rank).then_some(vecs)
        }
    }
}

impl Registered for FreeAbelian {
    const SUBGROUPS: &'static str = "diagonal, axis:<i>, lattice:<v1>;<v2>;..., meet:<key>&<key>";

    fn named_subgroup(&self, key: &str) -> Option<SubgroupDesc<Self::Element>> {
        let rank = self.rank();
        let vecs = match key.strip_prefix("meet:") {
            Some(body) => {
                let (a, b) = body.split_once('&')?;
                let la = Lattice::new(rank, &zn_vectors(rank, a)?);
                let lb = Lattice::new(rank, &zn_vectors(rank, b)?);
                la.intersection(&lb).basis().to_vec()
            }
            None => zn_vectors(rank, key)?,
        };
        Some(catalog::zn_lattice(self, key, &vecs))
    }

    fn certify(
        &self,
        sub: &SubgroupDesc<Self::Element>,
        d: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Certificate<Self::Element>, CertifyError> {
        with_family(self, sub, d, budget, exec, &zn_family(self.rank(), 2..=16))
    }
}

impl Registered for Heisenberg {
    const SUBGROUPS: &'static str = "center, x, y";

    fn named_subgroup(&self, key: &str) -> Option<SubgroupDesc<Self::Element>> {
        match key {
            "center" => Some(catalog::heisenberg_center(self)),
            "x" => Some(catalog::heisenberg_x(self)),
            "y" => Some(catalog::heisenberg_y(self)),
            _ => None,
        }
    }

    fn certify(
        &self,
        sub: &SubgroupDesc<Self::Element>,
        d: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Certificate<Self::Element>, CertifyError> {
        with_family(self, sub, d, budget, exec, &heisenberg_family(2..=16))
    }
}

impl Registered for Lamplighter {
    const SUBGROUPS: &'static str = "base, shift";

    fn named_subgroup(&self, key: &str) -> Option<SubgroupDesc<Self::Element>> {
        match key {
            "base" => Some(catalog::lamplighter_base(self)),
            "shift" => Some(catalog::lamplighter_shift(self)),
            _ => None,
        }
    }

    fn certify(
        &self,
        sub: &SubgroupDesc<Self::Element>,
        d: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Certificate<Self::Element>, CertifyError> {
        let mut family: Vec<Box<dyn FiniteQuotient<Self::Element>>> = Vec::new();
        for n in 2..=4 {
            for m in 1..=8 {
                family.push(Box::new(LamplighterQuotient::new(n, m)));
            }
        }
        with_family(self, sub, d, budget, exec, &family)
    }
}

impl Registered for BaumslagSolitar {
    const SUBGROUPS: &'static str = "a, b";

    fn named_subgroup(&self, key: &str) -> Option<SubgroupDesc<Self::Element>> {
        match key {
            "a" => Some(catalog::bs_a(self)),
            "b" => Some(catalog::bs_b(self)),
            _ => None,
        }
    }

    fn certify(
        &self,
        sub: &SubgroupDesc<Self::Element>,
        d: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Certificate<Self::Element>, CertifyError> {
        with_family(self, sub, d, budget, exec, &bs_family((3..=31).step_by(2)))
    }
}

impl Registered for GeneralizedWreath<ZStarZ2> {
    const SUBGROUPS: &'static str = "q, base";

    fn named_subgroup(&self, key: &str) -> Option<SubgroupDesc<Self::Element>> {
        match key {
            "q" => Some(catalog::wreath_acting(self)),
            "base" => Some(catalog::wreath_base(self)),
            _ => None,
        }
    }

    /// No quotient family is registered for this group.
    fn certify(
        &self,
        sub: &SubgroupDesc<Self::Element>,
        d: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Certificate<Self::Element>, CertifyError> {
        with_family(self, sub, d, budget, exec, &[])
    }
}

impl Registered for CounterexampleGroup {
    const SUBGROUPS: &'static str = "t, t:<r>, q, w, pullback";

    fn named_subgroup(&self, key: &str) -> Option<SubgroupDesc<Self::Element>> {
        match key {
            "t" => Some(catalog::counterexample_t(self, 2)),
            "q" => Some(catalog::counterexample_q(self)),
            "w" => Some(catalog::counterexample_w(self)),
            "pullback" => Some(catalog::counterexample_pullback(self)),
            _ => {
                let r: i64 = key.strip_prefix("t:")?.parse().ok()?;
                (r >= 0).then(|| catalog::counterexample_t(self, r))
            }
        }
    }

    fn certify(
        &self,
        sub: &SubgroupDesc<Self::Element>,
        d: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Certificate<Self::Element>, CertifyError> {
        with_family(self, sub, d, budget, exec, &counterexample_family(2..=5, 1..=6))
    }

    fn rational_family(&self, n: usize) -> Option<Vec<Self::Element>> {
        let one = BigInt::from(1);
        Some(
            (2..=n as u64 + 1)
                .map(|i| emb_w(BigRational::new(one.clone(), BigInt::from(i))))
                .collect(),
        )
    }
}

impl Registered for SplitExtension {
    const SUBGROUPS: &'static str = "h1, m";

    fn named_subgroup(&self, key: &str) -> Option<SubgroupDesc<Self::Element>> {
        match key {
            "h1" => Some(catalog::split_acting(self)),
            "m" => Some(catalog::split_module(self)),
            _ => None,
        }
    }

    fn certify(
        &self,
        sub: &SubgroupDesc<Self::Element>,
        d: u32,
        budget: usize,
        exec: Execution,
    ) -> Result<Certificate<Self::Element>, CertifyError> {
        modk_certificate(self, sub, d, budget, exec)
    }
}

#[derive(Clone)]
pub enum AnyGroup {
    Zn(FreeAbelian),
    Heisenberg(Heisenberg),
    Lamplighter(Lamplighter),
    Bs(BaumslagSolitar),
    Wreath(GeneralizedWreath<ZStarZ2>),
    Counterexample(CounterexampleGroup),
    Split(SplitExtension),
}

/// Runs `$body` with `$g` bound to the concrete group inside an
/// [`AnyGroup`].
#[macro_export]
macro_rules! with_group {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            $crate::registry::AnyGroup::Zn($g) => $body,
            $crate::registry::AnyGroup::Heisenberg($g) => $body,
            $crate::registry::AnyGroup::Lamplighter($g) => $body,
            $crate::registry::AnyGroup::Bs($g) => $body,
            $crate::registry::AnyGroup::Wreath($g) => $body,
            $crate::registry::AnyGroup::Counterexample($g) => $body,
            $crate::registry::AnyGroup::Split($g) => $body,
        }
    };
}

pub fn group_from_key(key: &str) -> Result<AnyGroup, RegistryError> {
    let g = match key {
        "heisenberg" => AnyGroup::Heisenberg(Heisenberg::new()),
        "lamplighter" => AnyGroup::Lamplighter(Lamplighter::new()),
        "bs12" => AnyGroup::Bs(BaumslagSolitar::new()),
        "zstarz2-wreath" => AnyGroup::Wreath(zstarz2_wreath()),
        "counterexample" => AnyGroup::Counterexample(CounterexampleGroup::new()),
        _ if key.starts_with("split:") => AnyGroup::Split(SplitExtension::from_key(key)?),
        _ => {
            let rank = key
                .strip_prefix("zn:")
                .and_then(|r| r.parse::<usize>().ok())
                .filter(|&r| r > 0)
                .ok_or_else(|| RegistryError::UnknownGroup(key.to_string()))?;
            AnyGroup::Zn(FreeAbelian::new(rank))
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_resolve() {
        for key in [
            "zn:3",
            "heisenberg",
            "lamplighter",
            "bs12",
            "zstarz2-wreath",
            "counterexample",
            "split:2,1;1,1",
        ] {
            let g = group_from_key(key).unwrap();
            with_group!(&g, g => {
                assert_eq!(g.subgroup("trivial").unwrap().generators().len(), 0);
                assert!(g.subgroup("nope").is_err());
            });
        }
        assert!(matches!(group_from_key("zn:0"), Err(RegistryError::UnknownGroup(_))));
        assert!(group_from_key("free").is_err());
        assert!(group_from_key("split:1,2").is_err());
    }

    #[test]
    fn zn_meet() {
        let g = FreeAbelian::new(2);
        let meet = g.subgroup("meet:diagonal&lattice:2,0;0,1").unwrap();
        assert!(meet.member(&g.element(&[2, 2])));
        assert!(!meet.member(&g.element(&[1, 1])));
        assert!(!meet.member(&g.element(&[2, 0])));
        assert!(g.subgroup("axis:2").is_err());
        assert!(g.subgroup("lattice:1,2,3").is_err());
    }

    #[test]
    fn literals() {
        let g = Heisenberg::new();
        assert!(g.parse_element("1,0,0").is_ok());
        assert!(g.parse_element("1,0").is_err());
        let c = CounterexampleGroup::new();
        assert!(c.parse_element("w:0=1/2;q:shift:1").is_ok());
    }
}
