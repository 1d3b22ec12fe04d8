//! Axiom checks on sampled elements, shared by the property tests.
//!
//! Each check returns a description of the first violated law.

use crate::certificates::FiniteQuotient;
use crate::coset::SubgroupDesc;
use crate::group::Group;
use crate::zoo::counterexample::{act_q_on_w, RationalVector};
use crate::zoo::{GeneralizedWreath, LamplighterElement, PointAction, SparseVec};

pub type CheckResult = Result<(), String>;

fn ensure(cond: bool, law: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(law())
    }
}

/// Associativity, identity and inverses on one triple.
pub fn group_triple<G: Group>(group: &G, a: &G::Element, b: &G::Element, c: &G::Element) -> CheckResult {
    let id = group.identity();
    ensure(group.mul(&group.mul(a, b), c) == group.mul(a, &group.mul(b, c)), || {
        format!("associativity fails for {a}, {b}, {c}")
    })?;
    ensure(group.mul(a, &id) == *a && group.mul(&id, a) == *a, || {
        format!("identity law fails for {a}")
    })?;
    let ai = group.inv(a);
    ensure(group.mul(a, &ai) == id && group.mul(&ai, a) == id, || {
        format!("inverse law fails for {a}")
    })?;
    ensure(group.inv(&ai) == *a, || format!("double inverse fails for {a}"))?;
    ensure(group.contains(a), || format!("{a} not recognised as an element"))
}

/// The generating set is symmetric and free of the identity.
pub fn generating_set<G: Group>(group: &G) -> CheckResult {
    let gens = group.generators();
    ensure(gens.closed_under_inverse(), || {
        "generators not closed under inverse".into()
    })?;
    ensure(gens.elements().iter().all(|g| !group.is_identity(g)), || {
        "identity among generators".into()
    })
}

/// Subgroup laws for members `h1, h2` and arbitrary `g1, g2`.
pub fn subgroup_sample<G: Group>(
    group: &G,
    sub: &SubgroupDesc<G::Element>,
    h1: &G::Element,
    h2: &G::Element,
    g1: &G::Element,
    g2: &G::Element,
) -> CheckResult {
    ensure(sub.member(&group.identity()), || "identity is not a member".into())?;
    ensure(sub.member(h1) && sub.member(h2), || {
        format!("sampled {h1} or {h2} is not a member")
    })?;
    ensure(sub.member(&group.mul(h1, h2)), || {
        format!("not closed under products: {h1}, {h2}")
    })?;
    ensure(sub.member(&group.inv(h1)), || {
        format!("not closed under inverses: {h1}")
    })?;
    if sub.has_canonical() {
        let c = |g: &G::Element| sub.canonical(g).expect("canonicalizer present");
        ensure(c(&group.mul(g1, h1)) == c(g1), || {
            format!("canonical form changes along the coset of {g1}")
        })?;
        ensure(sub.member(&group.difference(g1, &c(g1))), || {
            format!("canonical form of {g1} leaves its coset")
        })?;
        ensure((c(g1) == c(g2)) == sub.member(&group.difference(g1, g2)), || {
            format!("canonical forms disagree with membership for {g1}, {g2}")
        })?;
    }
    if let Some(form) = sub.double_coset_form(g1) {
        ensure(sub.member(&form.left) && sub.member(&form.right), || {
            format!("double coset factors of {g1} are not members")
        })?;
        ensure(group.mul(&group.mul(&form.left, g1), &form.right) == form.key, || {
            format!("double coset factors of {g1} do not reach the key")
        })?;
        let moved = group.mul(&group.mul(h1, g1), h2);
        let key = sub.double_coset_form(&moved).map(|f| f.key);
        ensure(key.as_ref() == Some(&form.key), || {
            format!("double coset key of {g1} changes under {h1}, {h2}")
        })?;
    }
    Ok(())
}

/// `q(ab) = q(a)q(b)` and `q(a⁻¹) = q(a)⁻¹`.
pub fn quotient_pair<G: Group>(
    group: &G,
    q: &dyn FiniteQuotient<G::Element>,
    a: &G::Element,
    b: &G::Element,
) -> CheckResult {
    let (qa, qb) = (q.apply(a), q.apply(b));
    ensure(q.apply(&group.mul(a, b)) == q.mul(&qa, &qb), || {
        format!("{} is not multiplicative on {a}, {b}", q.description())
    })?;
    ensure(q.apply(&group.inv(a)) == q.inv(&qa), || {
        format!("{} does not preserve the inverse of {a}", q.description())
    })?;
    ensure(q.mul(&qa, &q.inv(&qa)) == q.identity(), || {
        format!("{} has a bad inverse at {a}", q.description())
    })
}

/// `act_q_on_w` is an action by additive automorphisms.
pub fn w_action(
    q1: &LamplighterElement,
    q2: &LamplighterElement,
    w1: &RationalVector,
    w2: &RationalVector,
) -> CheckResult {
    ensure(
        act_q_on_w(&q1.mul(q2), w1) == act_q_on_w(q1, &act_q_on_w(q2, w1)),
        || format!("act(q1 q2) differs from act(q1) act(q2) for {q1}, {q2}, {w1}"),
    )?;
    ensure(act_q_on_w(&LamplighterElement::default(), w1) == *w1, || {
        format!("identity moves {w1}")
    })?;
    ensure(
        act_q_on_w(q1, &w1.plus(w2)) == act_q_on_w(q1, w1).plus(&act_q_on_w(q1, w2)),
        || format!("{q1} is not additive on {w1}, {w2}"),
    )
}

/// A permutation action on the integers.
pub fn point_action<A: PointAction>(acting: &A, q1: &A::Element, q2: &A::Element, x: i64) -> CheckResult {
    ensure(
        acting.act_point(&acting.mul(q1, q2), x) == acting.act_point(q1, acting.act_point(q2, x)),
        || format!("action not compatible with products at {x} for {q1}, {q2}"),
    )?;
    ensure(acting.act_point(&acting.identity(), x) == x, || {
        format!("identity moves {x}")
    })?;
    let qi = acting.inv(q1);
    ensure(acting.act_point(&qi, acting.act_point(q1, x)) == x, || {
        format!("{q1} is not invertible at {x}")
    })
}

/// The induced action on payloads in a generalized wreath product.
pub fn payload_action<A: PointAction>(
    group: &GeneralizedWreath<A>,
    q1: &A::Element,
    q2: &A::Element,
    payload: &SparseVec<i64>,
) -> CheckResult {
    let acting = group.acting_group();
    ensure(
        group.act_payload(&acting.mul(q1, q2), payload) == group.act_payload(q1, &group.act_payload(q2, payload)),
        || format!("payload action not compatible with products for {q1}, {q2}"),
    )?;
    ensure(group.act_payload(&acting.identity(), payload) == *payload, || {
        format!("identity moves payload {payload}")
    })
}
