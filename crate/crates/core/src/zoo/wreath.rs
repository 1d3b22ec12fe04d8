//! Generalized restricted wreath products `Z ≀_X Q` with `X = Z`.
//!
//! `Q` acts on the integers; an element `(φ, q)` carries a finitely supported
//! payload `φ: X -> Z` and `(φ₁,q₁)(φ₂,q₂) = (φ₁ + q₁·φ₂, q₁q₂)` with
//! `(q·φ)(x) = φ(q⁻¹x)`. Generators are those of `Q` together with `n₀`,
//! the unit payload at the basepoint 0.

use std::fmt;
use std::str::FromStr;

use super::free_abelian::{FreeAbelian, ZnElement};
use super::sparse::{parse_sparse, SparseVec};
use super::ZooError;
use crate::group::{GeneratingSet, Group, GroupError};

/// A group acting on `Z` by permutations, evaluable pointwise.
pub trait PointAction: Group {
    fn act_point(&self, q: &Self::Element, x: i64) -> i64;
}

/// Actions in which any ordered pair of distinct points can be moved to
/// `(0, 1)`.
pub trait TwoTransitive: PointAction {
    fn two_transitive_witness(&self, t1: i64, t2: i64) -> Result<Self::Element, ZooError>;
}

/// `Z` acting on itself by translation; the wreath product over it is the
/// ordinary lamplighter group.
impl PointAction for FreeAbelian {
    fn act_point(&self, q: &ZnElement, x: i64) -> i64 {
        assert_eq!(self.rank(), 1, "only Z acts on the integers by translation");
        x + q.coords()[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement<Q> {
    pub payload: SparseVec<i64>,
    pub q: Q,
}

impl<Q: fmt::Display> fmt::Display for WreathElement<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "payload:{};q:{}", self.payload, self.q)
    }
}

impl<Q: FromStr<Err = GroupError> + Default> FromStr for WreathElement<Q> {
    type Err = GroupError;
    /// `payload:0=1,1=-1;q:<acting group literal>`; either part optional,
    /// `q:` last.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        let (p_part, q_part) = if let Some(rest) = s.strip_prefix("q:") {
            ("", Some(rest))
        } else {
            match s.split_once(";q:") {
                Some((p, q)) => (p, Some(q)),
                None => (s, None),
            }
        };
        let payload = match p_part.trim() {
            "" => SparseVec::zero(),
            text => {
                let body = text
                    .strip_prefix("payload:")
                    .ok_or_else(|| err("expected `payload:` section"))?;
                parse_sparse(body, |v| v.parse().ok()).ok_or_else(|| err("bad payload"))?
            }
        };
        let q = match q_part {
            Some(text) => text.parse()?,
            None => Q::default(),
        };
        Ok(WreathElement { payload, q })
    }
}

#[derive(Debug, Clone)]
pub struct GeneralizedWreath<A: PointAction> {
    acting: A,
    name: String,
    gens: GeneratingSet<WreathElement<A::Element>>,
}

impl<A: PointAction> GeneralizedWreath<A> {
    pub fn new(acting: A, name: impl Into<String>) -> Self {
        let id = WreathElement {
            payload: SparseVec::zero(),
            q: acting.identity(),
        };
        let mut labelled: Vec<(String, WreathElement<A::Element>)> = acting
            .generators()
            .iter()
            .map(|(label, q)| {
                (
                    label.to_string(),
                    WreathElement {
                        payload: SparseVec::zero(),
                        q: q.clone(),
                    },
                )
            })
            .collect();
        labelled.push((
            "n".into(),
            WreathElement {
                payload: SparseVec::delta(0, 1),
                q: acting.identity(),
            },
        ));
        let gens = GeneratingSet::symmetrize(labelled, &id, |g| wreath_inv(&acting, g));
        GeneralizedWreath {
            acting,
            name: name.into(),
            gens,
        }
    }

    pub fn acting_group(&self) -> &A {
        &self.acting
    }

    /// `q·φ`: the payload at `x` moves to `q(x)`.
    pub fn act_payload(&self, q: &A::Element, payload: &SparseVec<i64>) -> SparseVec<i64> {
        payload.relabel(|x| self.acting.act_point(q, x))
    }

    /// `value` placed at point `t`, with trivial `Q` part.
    pub fn payload_at(&self, t: i64, value: i64) -> WreathElement<A::Element> {
        WreathElement {
            payload: SparseVec::delta(t, value),
            q: self.acting.identity(),
        }
    }

    pub fn embed_q(&self, q: A::Element) -> WreathElement<A::Element> {
        WreathElement {
            payload: SparseVec::zero(),
            q,
        }
    }
}

fn wreath_inv<A: PointAction>(acting: &A, g: &WreathElement<A::Element>) -> WreathElement<A::Element> {
    let qi = acting.inv(&g.q);
    WreathElement {
        payload: g.payload.relabel(|x| acting.act_point(&qi, x)).negated(),
        q: qi,
    }
}

impl<A: PointAction> Group for GeneralizedWreath<A> {
    type Element = WreathElement<A::Element>;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn identity(&self) -> Self::Element {
        self.embed_q(self.acting.identity())
    }

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        WreathElement {
            payload: a.payload.plus(&self.act_payload(&a.q, &b.payload)),
            q: self.acting.mul(&a.q, &b.q),
        }
    }

    fn inv(&self, a: &Self::Element) -> Self::Element {
        wreath_inv(&self.acting, a)
    }

    fn generators(&self) -> &GeneratingSet<Self::Element> {
        &self.gens
    }

    fn contains(&self, g: &Self::Element) -> bool {
        self.acting.contains(&g.q)
    }
}

/// `Z ≀_Z (Z * Z/2)`, the registry group `zstarz2-wreath`.
pub fn zstarz2_wreath() -> GeneralizedWreath<super::free_product::ZStarZ2> {
    GeneralizedWreath::new(super::free_product::ZStarZ2::new(), "zstarz2-wreath")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::free_product::ZStarZ2;

    #[test]
    fn payload_only_elements_add() {
        let g = zstarz2_wreath();
        let p = g.mul(&g.payload_at(0, 2), &g.payload_at(3, -1));
        assert_eq!(p.payload, SparseVec::from_entries([(0, 2), (3, -1)]));
        assert_eq!(p.q, ZStarZ2::new().identity());
    }

    #[test]
    fn conjugating_n0_by_z_moves_payload() {
        let g = zstarz2_wreath();
        let z = g.embed_q(ZStarZ2::z());
        assert_eq!(g.conjugate(&z, &g.payload_at(0, 1)), g.payload_at(1, 1));
        let s = g.embed_q(ZStarZ2::sigma());
        assert_eq!(g.conjugate(&s, &g.payload_at(0, 1)), g.payload_at(1, 1));
        assert_eq!(g.conjugate(&s, &g.payload_at(5, 1)), g.payload_at(5, 1));
    }

    #[test]
    fn generator_order() {
        let g = zstarz2_wreath();
        let labels: Vec<&str> = g.generators().iter().map(|(l, _)| l).collect();
        assert_eq!(labels, ["z", "z^-1", "s", "n", "n^-1"]);
    }

    #[test]
    fn parse_display_roundtrip() {
        let text = "payload:0=1,1=-1;q:z^2*s";
        let g: WreathElement<crate::zoo::FreeProductElement> = text.parse().unwrap();
        assert_eq!(g.to_string(), text);
    }
}
