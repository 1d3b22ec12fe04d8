//! The group `G = W ⋊ Q` with `W = ⊕_{n∈Z} Q` (rational vectors) and
//! `Q = Z≀Z` (the lamplighter group), in which the lamplighter base `T`
//! does not have bounded packing.
//!
//! The lamplighter base `T = ⊕_{n∈Z} Z` is identified with the positive
//! rationals through [`rat_of_base`](super::primes::rat_of_base). The action of `Q` on `W` is the
//! induced action with the pure shifts `sⁿ` as coset representatives:
//!
//! * the shift moves coordinates up: `(s⊙w)_n = w_{n-1}`;
//! * a base element `f` scales coordinate `n` by `rat_of_base(τ_{-n} f)`;
//! * `(f, k)` acts as `f ⊙ (s^k ⊙ w)`, matching `(f,k) = (f,0)·(0,k)`.
//!
//! On coordinate 0 this is the multiplicative action of `T` on `(Q, +)`.
//! The generators are `a` (the shift), `b` (the lamp at 0) and `c = e₀`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::lamplighter::{Lamplighter, LamplighterElement};
use super::primes::{base_of_rat, rat_of_shifted_base};
use super::sparse::{parse_rational, parse_sparse, SparseVec};
use super::ZooError;
use crate::group::{GeneratingSet, Group, GroupError};

pub type RationalVector = SparseVec<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CounterexampleElement {
    pub w: RationalVector,
    pub q: LamplighterElement,
}

impl CounterexampleElement {
    pub fn new(w: RationalVector, q: LamplighterElement) -> Self {
        CounterexampleElement { w, q }
    }
}

/// `q ⊙ w`, the action of the lamplighter group on `W`.
pub fn act_q_on_w(q: &LamplighterElement, w: &RationalVector) -> RationalVector {
    if q.lamps.is_zero() {
        return w.shift(q.shift);
    }
    SparseVec::from_sorted(
        w.iter()
            .map(|(i, v)| {
                let n = i + q.shift;
                (n, v * rat_of_shifted_base(&q.lamps, n))
            })
            .collect(),
    )
}

/// `x·e₀ ∈ W` embedded in `G`.
pub fn emb_w(x: BigRational) -> CounterexampleElement {
    CounterexampleElement::new(SparseVec::delta(0, x), LamplighterElement::default())
}

/// The positive rational `t`, viewed in the lamplighter base, embedded in `G`.
pub fn emb_t(t: &BigRational) -> Result<CounterexampleElement, ZooError> {
    Ok(CounterexampleElement::new(
        SparseVec::zero(),
        LamplighterElement::lamps_only(base_of_rat(t)?),
    ))
}

/// Embeds a lamplighter element with trivial `W` part.
pub fn emb_q(q: LamplighterElement) -> CounterexampleElement {
    CounterexampleElement::new(SparseVec::zero(), q)
}

impl fmt::Display for CounterexampleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w:{};q:{}", self.w, self.q)
    }
}

impl FromStr for CounterexampleElement {
    type Err = GroupError;
    /// `w:0=1/2,1=3;q:lamps:0=1;shift:2`; both sections are optional but the
    /// `q:` section, when present, comes last.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s_trim = s.trim();
        let (w_part, q_part) = if let Some(rest) = s_trim.strip_prefix("q:") {
            ("", Some(rest))
        } else {
            match s_trim.split_once(";q:") {
                Some((w, q)) => (w, Some(q)),
                None => (s_trim, None),
            }
        };
        let w = match w_part.trim() {
            "" => SparseVec::zero(),
            text => {
                let body = text.strip_prefix("w:").ok_or_else(|| err("expected `w:` section"))?;
                parse_sparse(body, parse_rational).ok_or_else(|| err("bad rational vector"))?
            }
        };
        let q = match q_part {
            Some(text) => text.parse()?,
            None => LamplighterElement::default(),
        };
        Ok(CounterexampleElement { w, q })
    }
}

#[derive(Debug, Clone)]
pub struct CounterexampleGroup {
    gens: GeneratingSet<CounterexampleElement>,
}

impl Default for CounterexampleGroup {
    fn default() -> Self {
        Self::new()
    }
}

impl CounterexampleGroup {
    pub fn new() -> Self {
        let id = CounterexampleElement::default();
        let gens = GeneratingSet::symmetrize(
            vec![
                ("a".into(), Self::a()),
                ("b".into(), Self::b()),
                ("c".into(), Self::c()),
            ],
            &id,
            counterexample_inv,
        );
        CounterexampleGroup { gens }
    }

    pub fn a() -> CounterexampleElement {
        emb_q(Lamplighter::a())
    }

    pub fn b() -> CounterexampleElement {
        emb_q(Lamplighter::b())
    }

    pub fn c() -> CounterexampleElement {
        emb_w(BigRational::one())
    }
}

fn counterexample_inv(g: &CounterexampleElement) -> CounterexampleElement {
    let qi = g.q.inv();
    CounterexampleElement {
        w: act_q_on_w(&qi, &g.w).negated(),
        q: qi,
    }
}

impl Group for CounterexampleGroup {
    type Element = CounterexampleElement;

    fn name(&self) -> String {
        "counterexample".into()
    }

    fn identity(&self) -> CounterexampleElement {
        CounterexampleElement::default()
    }

    fn mul(&self, a: &CounterexampleElement, b: &CounterexampleElement) -> CounterexampleElement {
        CounterexampleElement {
            w: a.w.plus(&act_q_on_w(&a.q, &b.w)),
            q: a.q.mul(&b.q),
        }
    }

    fn inv(&self, a: &CounterexampleElement) -> CounterexampleElement {
        counterexample_inv(a)
    }

    fn generators(&self) -> &GeneratingSet<CounterexampleElement> {
        &self.gens
    }
}

/// Canonical representative of the double coset `T·g·T` together with the
/// left factor reaching it: `left · g · right = key` for some `right ∈ T`.
///
/// `T` scales coordinate `n` of the `W` part by `σⁿ(t)` for a single positive
/// rational `t` (with `σ` relabelling primes `p(j) ↦ p(j-1)`), so the orbit is
/// normalized by making the lowest nonzero coordinate `±1`; the lamp part of
/// `q` is absorbed by the right factor.
pub fn t_double_coset_normal_form(
    g: &CounterexampleElement,
) -> Result<(CounterexampleElement, CounterexampleElement), ZooError> {
    let left_lamps = match g.w.iter().next() {
        None => SparseVec::zero(),
        Some((n0, v)) => base_of_rat(&v.abs().recip())?.shift(*n0),
    };
    let left = CounterexampleElement::new(SparseVec::zero(), LamplighterElement::lamps_only(left_lamps));
    let key = CounterexampleElement::new(act_q_on_w(&left.q, &g.w), LamplighterElement::shift_only(g.q.shift));
    Ok((key, left))
}
