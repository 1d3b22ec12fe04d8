mod common;

use common::{bfs_lengths, brute_clique, naive_coset_distance, subgroup_words};
use cosetpack_core::certificates::{
    build_separation_set, certify_packing_upper, counterexample_family, heisenberg_family, image_subgroup,
    modk_certificate, zn_family, Certificate, CertifyError, FiniteQuotient,
};
use cosetpack_core::coset::{catalog, packing_lower_bound, CosetGeometry, SearchSettings, SubgroupDesc};
use cosetpack_core::zoo::{CounterexampleGroup, FreeAbelian, Heisenberg, HeisenbergElement as H, SplitExtension};
use cosetpack_core::{Ball, Execution, Group};

const BUDGET: usize = 1_000_000;
const SEQ: Execution = Execution::Sequential;

fn pool<G: Group>(group: &G, radius: u32) -> Vec<G::Element> {
    Ball::enumerate(group, group.generators(), radius, BUDGET, SEQ)
        .unwrap()
        .elements()
        .to_vec()
}

fn clique<G: Group>(group: &G, sub: &SubgroupDesc<G::Element>, d: u32, pool_radius: u32) -> usize {
    let settings = SearchSettings {
        ambient_radius: d.max(4),
        execution: SEQ,
        ..SearchSettings::default()
    };
    let geo = CosetGeometry::new(group, sub, settings).unwrap();
    packing_lower_bound(&geo, d, &pool(group, pool_radius), 10_000_000).lower_bound()
}

/// Every transcript entry is a non-member of the punctured ball, and the
/// entries are exactly the separation set.
fn check_transcript<G: Group>(group: &G, sub: &SubgroupDesc<G::Element>, cert: &Certificate<G::Element>) {
    let sep = build_separation_set(group, sub, cert.d, BUDGET, SEQ).unwrap();
    let listed: Vec<_> = cert.transcript.iter().map(|t| t.element.clone()).collect();
    assert_eq!(listed, sep.elements);
    let lengths = bfs_lengths(group, group.generators().elements(), cert.d);
    for t in &cert.transcript {
        assert!(!t.in_image_subgroup);
        assert!(!sub.member(&t.element));
        assert!(lengths[&t.element] >= 1);
    }
    assert_eq!(cert.bound, cert.target_order / cert.subgroup_image_order);
}

#[test]
fn separation_set_examples() {
    let z2 = FreeAbelian::new(2);
    let diag = catalog::zn_diagonal(&z2);
    let mut s = build_separation_set(&z2, &diag, 1, BUDGET, SEQ).unwrap().elements;
    s.sort();
    let mut expected: Vec<_> = [[1, 0], [-1, 0], [0, 1], [0, -1]]
        .iter()
        .map(|v| z2.element(v))
        .collect();
    expected.sort();
    assert_eq!(s, expected);
    let whole = catalog::whole(&z2);
    assert!(build_separation_set(&z2, &whole, 4, BUDGET, SEQ)
        .unwrap()
        .elements
        .is_empty());
    let h = Heisenberg::new();
    let center = catalog::heisenberg_center(&h);
    let mut s = build_separation_set(&h, &center, 1, BUDGET, SEQ).unwrap().elements;
    s.sort_by_key(|e| (e.x, e.y));
    assert_eq!(
        s,
        [H::new(-1, 0, 0), H::new(0, -1, 0), H::new(0, 1, 0), H::new(1, 0, 0)]
    );
}

#[test]
fn diagonal_mod_two_matches_clique() {
    let z2 = FreeAbelian::new(2);
    let diag = catalog::zn_diagonal(&z2);
    let sep = build_separation_set(&z2, &diag, 1, BUDGET, SEQ).unwrap();
    let cert = certify_packing_upper(&diag, &sep, &zn_family(2, 2..=2), SEQ).unwrap();
    assert_eq!((cert.target_order, cert.subgroup_image_order, cert.bound), (4, 2, 2));
    check_transcript(&z2, &diag, &cert);
    assert_eq!(clique(&z2, &diag, 1, 4), 2);
}

#[test]
fn finite_index_subgroup_bound_is_the_index() {
    let z2 = FreeAbelian::new(2);
    let sub = catalog::zn_lattice(&z2, "index6", &[vec![2, 0], vec![0, 3]]);
    let sep = build_separation_set(&z2, &sub, 0, BUDGET, SEQ).unwrap();
    assert!(sep.elements.is_empty());
    let quotients: Vec<Box<dyn FiniteQuotient<_>>> = vec![Box::new(cosetpack_core::certificates::ZnModK::new(2, 6))];
    let cert = certify_packing_upper(&sub, &sep, &quotients, SEQ).unwrap();
    assert_eq!(cert.bound, 6);
}

#[test]
fn heisenberg_center_mod_three() {
    let h = Heisenberg::new();
    let center = catalog::heisenberg_center(&h);
    let sep = build_separation_set(&h, &center, 2, BUDGET, SEQ).unwrap();
    let cert = certify_packing_upper(&center, &sep, &heisenberg_family(2..=8), SEQ).unwrap();
    assert_eq!(cert.k, 3);
    assert_eq!((cert.target_order, cert.subgroup_image_order, cert.bound), (27, 3, 9));
    check_transcript(&h, &center, &cert);
    assert!(clique(&h, &center, 2, 5) <= 9);
}

#[test]
fn cat_map_certificates() {
    let g = SplitExtension::from_key("split:2,1;1,1").unwrap();
    let acting = catalog::split_acting(&g);
    let cert = modk_certificate(&g, &acting, 1, BUDGET, SEQ).unwrap();
    assert_eq!((cert.k, cert.bound), (2, 4));
    check_transcript(&g, &acting, &cert);
    assert!(clique(&g, &acting, 1, 4) <= 4);
    let zero = modk_certificate(&g, &acting, 0, BUDGET, SEQ).unwrap();
    assert_eq!(zero.bound, 1);
    assert_eq!(clique(&g, &acting, 0, 4), 1);
}

#[test]
fn trivial_action_certificate_matches_brute_force() {
    let g = SplitExtension::from_key("split:1").unwrap();
    let acting = catalog::split_acting(&g);
    let cert = modk_certificate(&g, &acting, 1, BUDGET, SEQ).unwrap();
    assert_eq!((cert.k, cert.bound), (2, 2));
    // Z x Z with H the second factor: brute force over the cosets m = -3..3
    let family: Vec<_> = (-3..=3).map(|m| g.module_element(vec![m])).collect();
    let lengths = bfs_lengths(&g, g.generators().elements(), 6);
    let words = subgroup_words(&g, acting.generators(), 6);
    let brute = brute_clique(family.len(), |i, j| {
        naive_coset_distance(&g, &lengths, &words, &family[i], &family[j]).is_some_and(|n| n <= 1)
    });
    assert_eq!(brute, 2);
}

#[test]
fn lower_bounds_never_exceed_certificates() {
    let z2 = FreeAbelian::new(2);
    for sub in [catalog::zn_diagonal(&z2), catalog::zn_axis(&z2, 1)] {
        for d in 0..=4 {
            let sep = build_separation_set(&z2, &sub, d, BUDGET, SEQ).unwrap();
            let cert = certify_packing_upper(&sub, &sep, &zn_family(2, 2..=12), SEQ).unwrap();
            for r in 2..=5 {
                assert!(
                    clique(&z2, &sub, d, r) as u64 <= cert.bound,
                    "{} D={d} r={r}",
                    sub.name()
                );
            }
        }
    }
    let h = Heisenberg::new();
    let center = catalog::heisenberg_center(&h);
    for d in 1..=3 {
        let sep = build_separation_set(&h, &center, d, BUDGET, SEQ).unwrap();
        let cert = certify_packing_upper(&center, &sep, &heisenberg_family(2..=8), SEQ).unwrap();
        for r in 2..=5 {
            assert!(clique(&h, &center, d, r) as u64 <= cert.bound, "center D={d} r={r}");
        }
    }
    for key in ["split:2,1;1,1", "split:1", "split:1,1;0,1"] {
        let g = SplitExtension::from_key(key).unwrap();
        for sub in [catalog::split_acting(&g), catalog::split_module(&g)] {
            for d in 0..=2 {
                let Ok(cert) = modk_certificate(&g, &sub, d, BUDGET, SEQ) else {
                    continue;
                };
                for r in 2..=4 {
                    assert!(
                        clique(&g, &sub, d, r) as u64 <= cert.bound,
                        "{key} {} D={d}",
                        sub.name()
                    );
                }
            }
        }
    }
}

#[test]
fn counterexample_is_never_certified() {
    let g = CounterexampleGroup::new();
    let t = catalog::counterexample_t(&g, 4);
    let sep = build_separation_set(&g, &t, 1, BUDGET, SEQ).unwrap();
    assert!(sep.elements.contains(&CounterexampleGroup::c()));
    let family = counterexample_family(2..=5, 1..=6);
    let err = certify_packing_upper(&t, &sep, &family, SEQ).unwrap_err();
    assert!(matches!(err, CertifyError::NoSeparatingQuotient { .. }), "{err}");
    // c dies in every finite quotient because W is divisible
    for q in &family {
        assert_eq!(q.apply(&CounterexampleGroup::c()), q.identity());
        assert!(image_subgroup(q.as_ref(), t.generators()).contains(&q.identity()));
    }
}

#[test]
fn report_serializes_with_documented_keys() {
    let z2 = FreeAbelian::new(2);
    let diag = catalog::zn_diagonal(&z2);
    let sep = build_separation_set(&z2, &diag, 1, BUDGET, SEQ).unwrap();
    let cert = certify_packing_upper(&diag, &sep, &zn_family(2, 2..=2), SEQ).unwrap();
    let json = serde_json::to_value(cert.report(&z2.name(), diag.name())).unwrap();
    let obj = json.as_object().unwrap();
    let mut keys: Vec<_> = obj.keys().cloned().collect();
    keys.sort();
    assert_eq!(
        keys,
        [
            "D",
            "bound",
            "group",
            "k",
            "quotient_description",
            "subgroup",
            "transcript"
        ]
    );
    let entries = obj["transcript"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert!(entries
        .iter()
        .all(|e| e["in_image_subgroup"] == false && e["image"].is_array()));
}
