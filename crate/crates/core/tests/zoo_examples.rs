mod common;

use common::rat;
use cosetpack_core::group::word_length;
use cosetpack_core::zoo::counterexample::{act_q_on_w, emb_q, emb_t, emb_w, RationalVector};
use cosetpack_core::zoo::primes::{prime_for_index, shift_primes};
use cosetpack_core::zoo::wreath::zstarz2_wreath;
use cosetpack_core::zoo::{
    base_of_rat, rat_of_base, BaumslagSolitar, BsElement, CounterexampleElement, CounterexampleGroup,
    FreeProductElement, Heisenberg, HeisenbergElement, Lamplighter, LamplighterElement, Letter, SparseVec,
    TwoTransitive, ZStarZ2, ZooError,
};
use cosetpack_core::{Group, WordLength};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn base(entries: &[(i64, i64)]) -> SparseVec<i64> {
    SparseVec::from_entries(entries.iter().copied())
}

#[test]
fn zigzag_primes() {
    let got: Vec<u64> = [0, 1, -1, 2, -2].iter().map(|&n| prime_for_index(n).unwrap()).collect();
    assert_eq!(got, [2, 3, 5, 7, 11]);
}

#[test]
fn rationals_of_exponent_maps() {
    assert_eq!(rat_of_base(&base(&[(0, 2), (1, 1)])), rat(12, 1));
    assert_eq!(rat_of_base(&SparseVec::zero()), rat(1, 1));
    assert_eq!(rat_of_base(&base(&[(0, -1), (1, -1)])), rat(1, 6));
}

#[test]
fn exponent_maps_of_rationals() {
    assert_eq!(base_of_rat(&rat(12, 1)).unwrap(), base(&[(0, 2), (1, 1)]));
    assert!(base_of_rat(&rat(1, 1)).unwrap().is_zero());
    // 50/21 = 2·5² / (3·7)
    assert_eq!(
        base_of_rat(&rat(50, 21)).unwrap(),
        base(&[(0, 1), (-1, 2), (1, -1), (2, -1)])
    );
    assert!(matches!(base_of_rat(&rat(0, 1)), Err(ZooError::NonPositive(_))));
    assert!(matches!(base_of_rat(&rat(-3, 2)), Err(ZooError::NonPositive(_))));
}

#[test]
fn prime_relabelling() {
    // the prime at index 1 (3) moves to index 0 (2)
    assert_eq!(shift_primes(&rat(3, 1), 1).unwrap(), rat(2, 1));
    assert_eq!(shift_primes(&rat(2, 5), -1).unwrap(), rat(3, 2));
}

#[test]
fn lamplighter_acts_on_rational_vectors() {
    let e0: RationalVector = SparseVec::delta(0, rat(1, 1));
    assert_eq!(act_q_on_w(&Lamplighter::a(), &e0), SparseVec::delta(1, rat(1, 1)));
    assert_eq!(act_q_on_w(&Lamplighter::b(), &e0), SparseVec::delta(0, rat(2, 1)));
    // the lamp at 0 scales coordinate 1 by the prime that index -1 names
    let e1: RationalVector = SparseVec::delta(1, rat(1, 1));
    let scaled = act_q_on_w(&Lamplighter::b(), &e1);
    let expected = rat_of_base(&base(&[(0, 1)]).shift(-1));
    assert_eq!(scaled, SparseVec::delta(1, expected));
}

#[test]
fn counterexample_products() {
    let g = CounterexampleGroup::new();
    let a = CounterexampleGroup::a();
    let c = CounterexampleGroup::c();
    let e1 = CounterexampleElement::new(SparseVec::delta(1, rat(1, 1)), Lamplighter::a());
    assert_eq!(g.mul(&a, &c), e1);
    assert_eq!(word_length(&g, g.generators(), &c, 3), WordLength::Exact(1));
    let bcb = g.conjugate(&CounterexampleGroup::b(), &c);
    assert_eq!(bcb, emb_w(rat(2, 1)));
}

#[test]
fn conjugation_by_t_scales_coordinate_zero() {
    let g = CounterexampleGroup::new();
    for (t, x) in [((6, 1), (1, 6)), ((1, 3), (5, 7)), ((50, 21), (-2, 9))] {
        let t = rat(t.0, t.1);
        let x = rat(x.0, x.1);
        let lhs = g.conjugate(&emb_t(&t).unwrap(), &emb_w(x.clone()));
        assert_eq!(lhs, emb_w(t * x));
    }
}

#[test]
fn subgroup_generated_by_a_and_b_is_the_lamplighter() {
    let g = CounterexampleGroup::new();
    let l = Lamplighter::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let letters = [Lamplighter::a(), Lamplighter::b()];
    for _ in 0..300 {
        let len = rng.gen_range(0..20);
        let mut in_g = g.identity();
        let mut in_l = l.identity();
        for _ in 0..len {
            let q = letters[rng.gen_range(0..2)].clone();
            let q = if rng.gen_bool(0.5) { l.inv(&q) } else { q };
            in_g = g.mul(&in_g, &emb_q(q.clone()));
            in_l = l.mul(&in_l, &q);
        }
        assert!(in_g.w.is_zero());
        assert_eq!(in_g.q, in_l);
    }
}

#[test]
fn w_is_normal() {
    let g = CounterexampleGroup::new();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let by = g.random_element(&mut rng, 8);
        let w = emb_w(rat(rng.gen_range(-9..10), rng.gen_range(1..10)));
        let c = g.conjugate(&by, &w);
        assert!(c.q.is_identity(), "{by} moves {w} out of W");
    }
}

#[test]
fn baumslag_solitar_relation() {
    let g = BaumslagSolitar::new();
    let (a, b) = (BaumslagSolitar::a(), BaumslagSolitar::b());
    let lhs = g.conjugate(&a, &b);
    assert_eq!(lhs, g.mul(&b, &b));
    assert_eq!(lhs, "0,2".parse::<BsElement>().unwrap());
}

#[test]
fn lamplighter_generators_do_not_commute() {
    let l = Lamplighter::new();
    let (a, b) = (Lamplighter::a(), Lamplighter::b());
    let ba = l.mul(&b, &a);
    let ab = l.mul(&a, &b);
    assert_eq!(ba, LamplighterElement::new(SparseVec::delta(0, 1), 1));
    assert_eq!(ab, LamplighterElement::new(SparseVec::delta(1, 1), 1));
    assert_ne!(ab, ba);
}

#[test]
fn heisenberg_commutator_is_central() {
    let h = Heisenberg::new();
    let (x, y) = (Heisenberg::X, Heisenberg::Y);
    let comm = h.mul(&h.mul(&x, &y), &h.mul(&h.inv(&x), &h.inv(&y)));
    assert_eq!(comm, HeisenbergElement::new(0, 0, 1));
    assert!(comm.is_central());
}

#[test]
fn wreath_payloads_add_and_move() {
    let g = zstarz2_wreath();
    let p = g.mul(&g.payload_at(2, 3), &g.payload_at(-1, 4));
    assert_eq!(p.payload, base(&[(2, 3), (-1, 4)]));
    assert_eq!(g.mul(&g.payload_at(2, 3), &g.payload_at(2, -3)), g.identity());
    let z = g.embed_q(ZStarZ2::z());
    assert_eq!(g.conjugate(&z, &g.payload_at(0, 1)), g.payload_at(1, 1));
    let s = g.embed_q(ZStarZ2::sigma());
    assert_eq!(g.conjugate(&s, &g.payload_at(0, 1)), g.payload_at(1, 1));
    assert_eq!(g.conjugate(&s, &g.payload_at(5, 1)), g.payload_at(5, 1));
}

/// First word, in the order `z < z⁻¹ < s` read from the left, among the
/// shortest words carrying `t1 ↦ 0` and `t2 ↦ 1`.
fn lex_first_witness(t1: i64, t2: i64, max_len: usize) -> Option<FreeProductElement> {
    let alphabet = [Letter::Z(1), Letter::Z(-1), Letter::Sigma];
    for len in 0..=max_len {
        let mut word = vec![0usize; len];
        loop {
            let q = FreeProductElement::from_letters(word.iter().map(|&i| alphabet[i]));
            if q.act(t1) == 0 && q.act(t2) == 1 {
                return Some(q);
            }
            // next word in lexicographic order
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < 3 {
                    break;
                }
                word[pos] = 0;
            }
            if word.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    None
}

#[test]
fn two_transitive_witness_matches_exhaustive_search() {
    let g = ZStarZ2::new();
    assert_eq!(g.two_transitive_witness(0, 1).unwrap(), g.identity());
    assert_eq!(g.two_transitive_witness(1, 0).unwrap(), ZStarZ2::sigma());
    let mut pairs = vec![(3, 7), (7, 3), (-2, 0), (0, -2), (2, 1), (-1, 4)];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    while pairs.len() < 16 {
        let (a, b) = (rng.gen_range(-3..5), rng.gen_range(-3..5));
        if a != b {
            pairs.push((a, b));
        }
    }
    for (t1, t2) in pairs {
        let q = g.two_transitive_witness(t1, t2).unwrap();
        assert_eq!((q.act(t1), q.act(t2)), (0, 1));
        let oracle = lex_first_witness(t1, t2, q.length() as usize).expect("oracle finds a word");
        assert_eq!(q, oracle, "pair ({t1}, {t2})");
    }
}

#[test]
fn two_transitive_witness_stays_within_budget() {
    let g = ZStarZ2::new();
    for (t1, t2) in [(50, -50), (-50, 50), (49, 50), (-50, -49), (0, 50)] {
        let q = g.two_transitive_witness(t1, t2).unwrap();
        assert_eq!((q.act(t1), q.act(t2)), (0, 1));
    }
    assert!(matches!(g.two_transitive_witness(2, 2), Err(ZooError::SamePoint(2))));
}

#[test]
fn element_literals_round_trip() {
    let h: HeisenbergElement = "1,0,0".parse().unwrap();
    assert_eq!(h, Heisenberg::X);
    let l: LamplighterElement = "lamps:0=1;shift:2".parse().unwrap();
    assert_eq!(l, LamplighterElement::new(SparseVec::delta(0, 1), 2));
    let c: CounterexampleElement = "w:0=1/2".parse().unwrap();
    assert_eq!(c, emb_w(rat(1, 2)));
    let g = CounterexampleGroup::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..50 {
        let e = g.random_element(&mut rng, 10);
        assert_eq!(e.to_string().parse::<CounterexampleElement>().unwrap(), e);
    }
}
