//! Ready-made subgroup descriptions for the groups in [`crate::zoo`].

use num_rational::BigRational;
use num_traits::Signed;

use super::{DoubleCosetForm, SubgroupDesc};
use crate::group::Group;
use crate::zoo::counterexample::{act_q_on_w, t_double_coset_normal_form, RationalVector};
use crate::zoo::free_product::FreeProductElement;
use crate::zoo::lattice::Lattice;
use crate::zoo::wreath::WreathElement;
use crate::zoo::{
    base_of_rat, BaumslagSolitar, BsElement, CounterexampleElement, CounterexampleGroup, FreeAbelian,
    GeneralizedWreath, Heisenberg, HeisenbergElement, Lamplighter, LamplighterElement, SparseVec, SplitElement,
    SplitExtension, ZStarZ2, ZnElement,
};

/// The trivial subgroup.
pub fn trivial<G>(group: &G) -> SubgroupDesc<G::Element>
where
    G: Group + Clone + 'static,
    G::Element: 'static,
{
    let g2 = group.clone();
    SubgroupDesc::new(group, "trivial", move |g| g2.is_identity(g), vec![]).normal_with_canonical(group, |g| g.clone())
}

/// The whole group.
pub fn whole<G>(group: &G) -> SubgroupDesc<G::Element>
where
    G: Group + Clone + 'static,
    G::Element: 'static,
{
    let id = group.identity();
    let gens = group.generators().elements().to_vec();
    SubgroupDesc::new(group, "whole", |_| true, gens).normal_with_canonical(group, move |_| id.clone())
}

/// The subgroup of `Z^n` spanned by integer vectors.
pub fn zn_lattice(group: &FreeAbelian, name: &str, spanning: &[Vec<i64>]) -> SubgroupDesc<ZnElement> {
    let lattice = Lattice::new(group.rank(), spanning);
    let member_lattice = lattice.clone();
    let gens = lattice.basis().iter().cloned().map(ZnElement).collect();
    SubgroupDesc::new(
        group,
        name,
        move |g: &ZnElement| member_lattice.contains(g.coords()),
        gens,
    )
    .normal_with_canonical(group, move |g| ZnElement(lattice.reduce(g.coords())))
}

/// `⟨(1,…,1)⟩ ≤ Z^n`.
pub fn zn_diagonal(group: &FreeAbelian) -> SubgroupDesc<ZnElement> {
    zn_lattice(group, "diagonal", &[vec![1; group.rank()]])
}

/// The `i`-th coordinate axis of `Z^n` (0-based).
pub fn zn_axis(group: &FreeAbelian, i: usize) -> SubgroupDesc<ZnElement> {
    let mut v = vec![0; group.rank()];
    v[i] = 1;
    zn_lattice(group, &format!("axis:{i}"), &[v])
}

/// The center `⟨Z⟩ = {(0,0,z)}`.
pub fn heisenberg_center(group: &Heisenberg) -> SubgroupDesc<HeisenbergElement> {
    SubgroupDesc::new(
        group,
        "center",
        |g: &HeisenbergElement| g.is_central(),
        vec![Heisenberg::Z],
    )
    .normal_with_canonical(group, |g| HeisenbergElement::new(g.x, g.y, 0))
}

/// `⟨X⟩`. Here `X^b (x,y,z) X^a = (x+a+b, y, z+b·y)`.
pub fn heisenberg_x(group: &Heisenberg) -> SubgroupDesc<HeisenbergElement> {
    SubgroupDesc::new(
        group,
        "x",
        |g: &HeisenbergElement| g.y == 0 && g.z == 0,
        vec![Heisenberg::X],
    )
    .with_canonical(|g| HeisenbergElement::new(0, g.y, g.z))
    .with_double_coset_key(group, |g| {
        let r = if g.y == 0 { g.z } else { g.z.rem_euclid(g.y.abs()) };
        let b = if g.y == 0 { 0 } else { (r - g.z) / g.y };
        Some((HeisenbergElement::new(0, g.y, r), HeisenbergElement::new(b, 0, 0)))
    })
}

/// `⟨Y⟩`. Here `Y^b (x,y,z) Y^a = (x, y+a+b, z+x·a)`.
pub fn heisenberg_y(group: &Heisenberg) -> SubgroupDesc<HeisenbergElement> {
    SubgroupDesc::new(
        group,
        "y",
        |g: &HeisenbergElement| g.x == 0 && g.z == 0,
        vec![Heisenberg::Y],
    )
    .with_canonical(|g| HeisenbergElement::new(g.x, 0, g.z - g.x * g.y))
    .with_double_coset_key(group, |g| {
        let r = if g.x == 0 { g.z } else { g.z.rem_euclid(g.x.abs()) };
        let a = if g.x == 0 { 0 } else { (r - g.z) / g.x };
        let b = -g.y - a;
        Some((HeisenbergElement::new(g.x, 0, r), HeisenbergElement::new(0, b, 0)))
    })
}

/// The lamp group `⊕Z` (normal, not finitely generated).
pub fn lamplighter_base(group: &Lamplighter) -> SubgroupDesc<LamplighterElement> {
    SubgroupDesc::new(
        group,
        "base",
        |g: &LamplighterElement| g.shift == 0,
        vec![Lamplighter::b()],
    )
    .partial_generators()
    .normal_with_canonical(group, |g| LamplighterElement::shift_only(g.shift))
}

/// `⟨a⟩`, the shifts. `a^j (f,k) a^i = (τ_j f, j+k+i)`.
pub fn lamplighter_shift(group: &Lamplighter) -> SubgroupDesc<LamplighterElement> {
    SubgroupDesc::new(
        group,
        "shift",
        |g: &LamplighterElement| g.lamps.is_zero(),
        vec![Lamplighter::a()],
    )
    .with_canonical(|g| LamplighterElement::lamps_only(g.lamps.clone()))
    .with_double_coset_key(group, |g| {
        let j = -g.lamps.min_index().unwrap_or(0);
        Some((
            LamplighterElement::lamps_only(g.lamps.shift(j)),
            LamplighterElement::shift_only(j),
        ))
    })
}

/// The lamplighter base `T ≤ Q ≤ G`. It is not finitely generated; the
/// generator list holds the lamps `δₙ` for `|n| ≤ radius`.
pub fn counterexample_t(group: &CounterexampleGroup, radius: i64) -> SubgroupDesc<CounterexampleElement> {
    let gens = (-radius..=radius)
        .map(|n| {
            CounterexampleElement::new(
                SparseVec::zero(),
                LamplighterElement::lamps_only(SparseVec::delta(n, 1)),
            )
        })
        .collect();
    SubgroupDesc::new(
        group,
        "T",
        |g: &CounterexampleElement| g.w.is_zero() && g.q.shift == 0,
        gens,
    )
    .partial_generators()
    .with_canonical(|g| CounterexampleElement::new(g.w.clone(), LamplighterElement::shift_only(g.q.shift)))
    .with_double_coset(|g| {
        let (key, left) = t_double_coset_normal_form(g).ok()?;
        // (left·g)⁻¹·key = (-τ_{-k}(f_left + f), 0) for g = (w, (f, k))
        let lamps = left.q.lamps.plus(&g.q.lamps).shift(-g.q.shift).negated();
        let right = CounterexampleElement::new(SparseVec::zero(), LamplighterElement::lamps_only(lamps));
        Some(DoubleCosetForm { key, left, right })
    })
}

/// Scales and shifts `w` so that its lowest coordinate sits at 0 with
/// absolute value 1; returns the element of `Q` doing it.
fn normalize_w(w: &RationalVector) -> Option<LamplighterElement> {
    let Some((n0, v)) = w.iter().next() else {
        return Some(LamplighterElement::default());
    };
    let scale = base_of_rat(&BigRational::recip(&v.abs())).ok()?;
    Some(LamplighterElement::lamps_only(scale).mul(&LamplighterElement::shift_only(-n0)))
}

/// The lamplighter group `Q` as a complement of `W`.
pub fn counterexample_q(group: &CounterexampleGroup) -> SubgroupDesc<CounterexampleElement> {
    SubgroupDesc::new(
        group,
        "Q",
        |g: &CounterexampleElement| g.w.is_zero(),
        vec![CounterexampleGroup::a(), CounterexampleGroup::b()],
    )
    .with_canonical(|g| CounterexampleElement::new(g.w.clone(), LamplighterElement::default()))
    .with_double_coset_key(group, |g| {
        let q1 = normalize_w(&g.w)?;
        let key = CounterexampleElement::new(act_q_on_w(&q1, &g.w), LamplighterElement::default());
        Some((key, CounterexampleElement::new(SparseVec::zero(), q1)))
    })
}

/// The normal subgroup `W` (not finitely generated).
pub fn counterexample_w(group: &CounterexampleGroup) -> SubgroupDesc<CounterexampleElement> {
    SubgroupDesc::new(
        group,
        "W",
        |g: &CounterexampleElement| g.q.is_identity(),
        vec![CounterexampleGroup::c()],
    )
    .partial_generators()
    .normal_with_canonical(group, |g| CounterexampleElement::new(SparseVec::zero(), g.q.clone()))
}

/// `W ⋊ ⟨a⟩`, the preimage of the shift subgroup under `G → Q`.
pub fn counterexample_pullback(group: &CounterexampleGroup) -> SubgroupDesc<CounterexampleElement> {
    SubgroupDesc::new(
        group,
        "pullback",
        |g: &CounterexampleElement| g.q.lamps.is_zero(),
        vec![CounterexampleGroup::a(), CounterexampleGroup::c()],
    )
    .partial_generators()
    .with_canonical(|g| {
        CounterexampleElement::new(SparseVec::zero(), LamplighterElement::lamps_only(g.q.lamps.clone()))
    })
    .with_double_coset_key(group, |g| {
        let j = -g.q.lamps.min_index().unwrap_or(0);
        let key = CounterexampleElement::new(SparseVec::zero(), LamplighterElement::lamps_only(g.q.lamps.shift(j)));
        Some((
            key,
            CounterexampleElement::new(SparseVec::zero(), LamplighterElement::shift_only(j)),
        ))
    })
}

/// `⟨a⟩ ≤ BS(1,2)`.
pub fn bs_a(group: &BaumslagSolitar) -> SubgroupDesc<BsElement> {
    SubgroupDesc::new(
        group,
        "a",
        |g: &BsElement| g.q == Default::default(),
        vec![BaumslagSolitar::a()],
    )
    .with_canonical(|g| BsElement::new(0, g.q))
}

/// `⟨b⟩ ≤ BS(1,2)`.
pub fn bs_b(group: &BaumslagSolitar) -> SubgroupDesc<BsElement> {
    SubgroupDesc::new(
        group,
        "b",
        |g: &BsElement| g.k == 0 && g.q.is_integer(),
        vec![BaumslagSolitar::b()],
    )
}

/// The acting group `Q` inside `Z ≀_Z (Z * Z/2)`.
pub fn wreath_acting(group: &GeneralizedWreath<ZStarZ2>) -> SubgroupDesc<WreathElement<FreeProductElement>> {
    let gens = group
        .acting_group()
        .generators()
        .elements()
        .iter()
        .map(|q| group.embed_q(q.clone()))
        .collect();
    let id = group.acting_group().identity();
    SubgroupDesc::new(
        group,
        "q",
        |g: &WreathElement<FreeProductElement>| g.payload.is_zero(),
        gens,
    )
    .with_canonical(move |g| WreathElement {
        payload: g.payload.clone(),
        q: id.clone(),
    })
}

/// The base `⊕Z` of the generalized wreath product (normal, not finitely
/// generated).
pub fn wreath_base(group: &GeneralizedWreath<ZStarZ2>) -> SubgroupDesc<WreathElement<FreeProductElement>> {
    let id = group.acting_group().identity();
    SubgroupDesc::new(
        group,
        "base",
        move |g: &WreathElement<FreeProductElement>| g.q == id,
        vec![group.payload_at(0, 1)],
    )
    .partial_generators()
    .normal_with_canonical(group, |g| WreathElement {
        payload: SparseVec::zero(),
        q: g.q.clone(),
    })
}

/// The acting copy of `Z` in `Z^n ⋊ Z`.
pub fn split_acting(group: &SplitExtension) -> SubgroupDesc<SplitElement> {
    SubgroupDesc::new(
        group,
        "h1",
        |g: &SplitElement| g.m.iter().all(|&x| x == 0),
        vec![group.t()],
    )
    .with_canonical(|g| SplitElement::new(g.m.clone(), 0))
}

/// The normal module `M = Z^n`.
pub fn split_module(group: &SplitExtension) -> SubgroupDesc<SplitElement> {
    let n = group.rank();
    let gens = (0..n)
        .map(|i| {
            let mut m = vec![0; n];
            m[i] = 1;
            group.module_element(m)
        })
        .collect();
    SubgroupDesc::new(group, "m", |g: &SplitElement| g.h == 0, gens)
        .normal_with_canonical(group, move |g| SplitElement::new(vec![0; n], g.h))
}
