mod common;

use common::{bfs_lengths, brute_clique, naive_coset_distance, rat, subgroup_words};
use cosetpack_core::coset::{
    catalog, coset_eq, lemma54_family, packing_lower_bound, CosetGeometry, SearchSettings, SubgroupDesc,
};
use cosetpack_core::zoo::counterexample::{emb_t, emb_w};
use cosetpack_core::zoo::wreath::zstarz2_wreath;
use cosetpack_core::zoo::{CounterexampleGroup, FreeAbelian, Heisenberg, HeisenbergElement as H};
use cosetpack_core::{Ball, Execution, Group, WordLength};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RADIUS: u32 = 6;

fn settings(radius: u32) -> SearchSettings {
    SearchSettings {
        ambient_radius: radius,
        execution: Execution::Sequential,
        ..SearchSettings::default()
    }
}

/// Compares exact distances with the double loop over subgroup balls of
/// radius 6, on `count` random pairs. Returns the number of comparisons.
fn compare_with_naive<G: Group>(group: &G, sub: &SubgroupDesc<G::Element>, count: usize, seed: u64) -> usize {
    let geo = CosetGeometry::new(group, sub, settings(RADIUS)).unwrap();
    let lengths = bfs_lengths(group, group.generators().elements(), RADIUS);
    let words = subgroup_words(group, sub.generators(), RADIUS);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let (l1, l2) = (rng.gen_range(0..4), rng.gen_range(0..5));
        let g1 = group.random_element(&mut rng, l1);
        let g2 = group.random_element(&mut rng, l2);
        let naive = naive_coset_distance(group, &lengths, &words, &g1, &g2);
        let exact = geo.coset_distance_exact(&g1, &g2, RADIUS).unwrap().exact();
        assert_eq!(exact, naive, "{} in {}: {g1} vs {g2}", sub.name(), group.name());
        let upper = geo.coset_distance_upper(&g1, &g2).bound();
        if let (Some(e), Some(u)) = (exact, upper) {
            assert_eq!(e, u, "upper bound differs from exact for {g1}, {g2}");
        }
    }
    count
}

#[test]
fn exact_distance_matches_double_loop() {
    let z2 = FreeAbelian::new(2);
    let h = Heisenberg::new();
    let mut n = 0;
    n += compare_with_naive(&z2, &catalog::zn_diagonal(&z2), 50, 1);
    n += compare_with_naive(&z2, &catalog::zn_axis(&z2, 0), 30, 2);
    n += compare_with_naive(&z2, &catalog::zn_lattice(&z2, "l", &[vec![2, 1]]), 30, 3);
    n += compare_with_naive(&h, &catalog::heisenberg_x(&h), 40, 4);
    n += compare_with_naive(&h, &catalog::heisenberg_y(&h), 40, 5);
    n += compare_with_naive(&h, &catalog::heisenberg_center(&h), 40, 6);
    assert!(n >= 200);
}

#[test]
fn coset_equality_examples() {
    let z2 = FreeAbelian::new(2);
    let d = catalog::zn_diagonal(&z2);
    assert!(coset_eq(&z2, &d, &z2.element(&[2, 1]), &z2.element(&[1, 0])));
    assert!(!coset_eq(&z2, &d, &z2.element(&[1, 0]), &z2.element(&[0, 1])));
    let g = z2.element(&[4, -7]);
    assert!(coset_eq(&z2, &d, &g, &g));
}

#[test]
fn diagonal_distances() {
    let z2 = FreeAbelian::new(2);
    let d = catalog::zn_diagonal(&z2);
    let geo = CosetGeometry::new(&z2, &d, settings(4)).unwrap();
    let w = geo.coset_distance_upper(&z2.identity(), &z2.element(&[1, 0]));
    let w = w.witness().unwrap();
    assert_eq!((w.length, w.value.clone()), (1, z2.element(&[1, 0])));
    let same = geo.coset_distance_upper(&z2.element(&[3, 1]), &z2.element(&[5, 3]));
    let same = same.witness().unwrap();
    assert_eq!(same.length, 0);
    assert_eq!(same.value, z2.identity());
    let (e1, e2) = (z2.element(&[1, 0]), z2.element(&[0, 1]));
    assert_eq!(geo.coset_distance_exact(&e1, &e2, 4).unwrap(), WordLength::Exact(2));
    assert_eq!(geo.coset_distance_exact(&e1, &e1, 4).unwrap(), WordLength::Exact(0));
    // min over t of |(-1 + t, 1 + t)|
    let oracle = (-10i64..=10).map(|t| (t - 1).abs() + (t + 1).abs()).min().unwrap();
    assert_eq!(oracle, 2);
}

#[test]
fn heisenberg_x_distance_to_center() {
    let h = Heisenberg::new();
    let x = catalog::heisenberg_x(&h);
    let geo = CosetGeometry::new(&h, &x, settings(RADIUS)).unwrap();
    let exact = geo
        .coset_distance_exact(&h.identity(), &H::new(0, 0, 1), RADIUS)
        .unwrap();
    let lengths = bfs_lengths(&h, h.generators().elements(), RADIUS);
    let words = subgroup_words(&h, x.generators(), RADIUS);
    let naive = naive_coset_distance(&h, &lengths, &words, &h.identity(), &H::new(0, 0, 1));
    assert_eq!(exact.exact(), naive);
    assert_eq!(naive, Some(3));
}

#[test]
fn counterexample_rationals_are_one_apart() {
    let g = CounterexampleGroup::new();
    let t = catalog::counterexample_t(&g, 4);
    let geo = CosetGeometry::new(&g, &t, settings(2)).unwrap();
    let (g1, g2) = (emb_w(rat(1, 3)), emb_w(rat(1, 2)));
    let d = geo.coset_distance_upper(&g1, &g2);
    let w = d.witness().unwrap();
    assert_eq!(w.length, 1);
    assert_eq!(w.value, CounterexampleGroup::c());
    assert_eq!(w.h1, emb_t(&rat(6, 1)).unwrap());
    assert_eq!(w.h2, emb_t(&rat(1, 6)).unwrap());
    let rebuilt = g.mul(&g.mul(&w.h1, &g.difference(&g1, &g2)), &w.h2);
    assert_eq!(rebuilt, w.value);
}

#[test]
fn diagonal_packing_matches_brute_force() {
    let z2 = FreeAbelian::new(2);
    let d = catalog::zn_diagonal(&z2);
    let geo = CosetGeometry::new(&z2, &d, settings(6)).unwrap();
    let pool = Ball::enumerate(&z2, z2.generators(), 2, 1000, Execution::Sequential)
        .unwrap()
        .elements()
        .to_vec();
    let lengths = bfs_lengths(&z2, z2.generators().elements(), 8);
    let words = subgroup_words(&z2, d.generators(), 8);
    for radius in 0..5 {
        let res = packing_lower_bound(&geo, radius, &pool, 1_000_000);
        let fam = &res.instance.family;
        let brute = brute_clique(fam.len(), |i, j| {
            naive_coset_distance(&z2, &lengths, &words, &fam[i], &fam[j]).is_some_and(|n| n <= radius)
        });
        assert_eq!(res.lower_bound(), brute, "D = {radius}");
        assert!(res.exact);
    }
    assert_eq!(packing_lower_bound(&geo, 1, &pool, 1_000_000).lower_bound(), 2);
    let all = packing_lower_bound(&geo, 20, &pool, 1_000_000);
    assert_eq!(all.lower_bound(), all.instance.len());
    assert_eq!(all.instance.len(), 5);
}

#[test]
fn rational_family_is_a_clique() {
    let g = CounterexampleGroup::new();
    let t = catalog::counterexample_t(&g, 4);
    let geo = CosetGeometry::new(&g, &t, settings(2)).unwrap();
    for m in [1, 2, 10, 40] {
        let pool: Vec<_> = (2..m + 2).map(|d| emb_w(rat(1, d))).collect();
        let res = packing_lower_bound(&geo, 1, &pool, 1_000_000);
        assert_eq!(res.lower_bound(), m as usize);
        assert!(res.max_witness_len() <= 1);
        for i in 0..res.instance.len() {
            for j in i + 1..res.instance.len() {
                let w = res.instance.witness(i, j).unwrap();
                assert!(t.member(&w.h1) && t.member(&w.h2));
                let g1 = &res.instance.family[i];
                let g2 = &res.instance.family[j];
                assert_eq!(g.mul(&g.mul(&w.h1, &g.difference(g1, g2)), &w.h2), w.value);
            }
        }
    }
}

#[test]
fn wreath_family_examples() {
    let g = zstarz2_wreath();
    let x0x1 = g.difference(&g.payload_at(0, 1), &g.payload_at(1, 1));
    let len = common::iddfs_length(&g, &x0x1, 4).expect("length at most 4");
    let pair = lemma54_family(&g, 1, &[0, 1], Execution::Sequential).unwrap();
    let w = pair.witness(0, 1).unwrap();
    assert_eq!(w.value, x0x1);
    assert!(w.length <= 4);
    assert!(len <= w.length);
    let far = lemma54_family(&g, 1, &[3, 7], Execution::Sequential).unwrap();
    assert_eq!(far.bound(0, 1), pair.bound(0, 1));
    let positions: Vec<i64> = (-6..6).map(|t| 3 * t + 1).collect();
    let many = lemma54_family(&g, 1, &positions, Execution::Parallel).unwrap();
    for i in 0..positions.len() {
        for j in i + 1..positions.len() {
            assert_eq!(many.bound(i, j), pair.bound(0, 1));
            let w = many.witness(i, j).unwrap();
            let (gi, gj) = (&many.family[i], &many.family[j]);
            assert_eq!(g.mul(&g.mul(&w.h1, &g.difference(gi, gj)), &w.h2), x0x1);
            assert!(w.h1.payload.is_zero() && w.h2.payload.is_zero());
        }
    }
}

#[test]
fn parallel_packing_matches_sequential() {
    let h = Heisenberg::new();
    let c = catalog::heisenberg_center(&h);
    let pool = Ball::enumerate(&h, h.generators(), 4, 100_000, Execution::Sequential)
        .unwrap()
        .elements()
        .to_vec();
    let seq = CosetGeometry::new(&h, &c, settings(4)).unwrap();
    let par = CosetGeometry::new(
        &h,
        &c,
        SearchSettings {
            execution: Execution::Parallel,
            ..settings(4)
        },
    )
    .unwrap();
    for d in 1..=3 {
        let a = packing_lower_bound(&seq, d, &pool, 1_000_000);
        let b = packing_lower_bound(&par, d, &pool, 1_000_000);
        assert_eq!(a.clique, b.clique);
        assert_eq!(a.instance.family, b.instance.family);
    }
}
