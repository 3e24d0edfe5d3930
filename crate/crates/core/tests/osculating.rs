mod common;

use lacegraph::embedding::{classify_edge_ends, Dart, EmbeddedDigraph};
use lacegraph::io::corpus::{fixtures, rejection_sample};
use lacegraph::io::generate::{one_vertex, random_ground, random_valid, torchon};
use lacegraph::osculating::*;
use proptest::prelude::*;

fn valid_instances() -> Vec<EmbeddedDigraph> {
    let mut out: Vec<EmbeddedDigraph> =
        fixtures().into_iter().map(|i| i.graph).filter(|g| lacegraph::embedding::validate(g).passed()).collect();
    out.extend((1..=6).map(torchon));
    out.extend((0..30).map(|s| random_valid(50, s)));
    out.extend((0..10).filter_map(|s| rejection_sample(1 + s as usize % 4, s, 50_000).map(|(g, _)| g)));
    out
}

#[test]
fn partition_does_not_depend_on_the_start_edge() {
    for g in valid_instances() {
        let cls = classify_edge_ends(&g).unwrap();
        let reference = osculating_partition(&g, &cls).canonical();
        let m = g.num_edges();
        for start in 0..m {
            let p = osculating_partition_from(&g, &cls, (start..m).chain(0..start));
            assert_eq!(p.canonical(), reference);
        }
    }
}

#[test]
fn circuits_pairwise_do_not_cross_and_share_a_class() {
    for g in valid_instances() {
        let cls = classify_edge_ends(&g).unwrap();
        let p = osculating_partition(&g, &cls);
        let r = verify_partition(&p, &g, &cls);
        assert!(r.passed(), "{r:?}");
        if p.circuits.len() == 1 && !p.circuits[0].simple {
            continue;
        }
        for a in &p.circuits {
            for b in &p.circuits {
                if a != b {
                    assert_eq!(algebraic_crossing_number(&g, &a.darts(), &b.darts()).unwrap(), 0);
                }
            }
        }
    }
}

#[test]
fn nonsimple_circuits_only_occur_alone() {
    let mut nonsimple = 0;
    for g in valid_instances() {
        let cls = classify_edge_ends(&g).unwrap();
        let p = osculating_partition(&g, &cls);
        if p.circuits.iter().any(|c| !c.simple) {
            nonsimple += 1;
            assert_eq!(p.circuits.len(), 1);
        }
    }
    assert!(nonsimple > 0);
}

#[test]
fn one_vertex_partition() {
    let g = one_vertex();
    let cls = classify_edge_ends(&g).unwrap();
    let p = osculating_partition(&g, &cls);
    assert_eq!(p.canonical(), vec![vec![0, 1]]);
}

#[test]
fn torchon_circuits_are_diagonals() {
    for k in 2..=6 {
        let g = torchon(k);
        let cls = classify_edge_ends(&g).unwrap();
        let p = osculating_partition(&g, &cls);
        assert_eq!(p.circuits.len(), k);
        assert!(p.circuits.iter().all(|c| c.simple && c.len() == 2 * k));
    }
}

#[test]
fn signatures_vanish_exactly_on_bounding_cycles() {
    for g in common::small_toroidal(80, 8) {
        let h = HomologyBasis::tree_cotree(&g).unwrap();
        for c in common::simple_directed_cycles(&g) {
            let walk: Vec<Dart> = c.iter().map(|&e| Dart::forward(e)).collect();
            assert_eq!(h.signature(&walk).is_zero(), common::null_homologous(&g, &walk));
        }
    }
}

proptest! {
    #[test]
    fn crossing_numbers_match_homology(n in 1usize..20, seed in any::<u64>()) {
        let g = random_ground(n, seed);
        let cls = classify_edge_ends(&g).unwrap();
        let h = HomologyBasis::tree_cotree(&g).unwrap();
        let p = osculating_partition(&g, &cls);
        let sigs = h.partition_signatures(&p);
        // the generating loops of the basis cross the circuits by the pairing
        for (i, c) in p.circuits.iter().enumerate() {
            prop_assert!(!sigs[i].is_zero());
            let by_roles = crossing_number_by_roles(&g, &cls, &c.darts(), &p.circuits[0].darts());
            if i != 0 {
                prop_assert_eq!(by_roles.unwrap(), 0);
            }
        }
    }
}

#[test]
fn crossing_numbers_equal_the_intersection_pairing() {
    let mut checked = 0;
    for g in common::small_toroidal(120, 8) {
        let h = HomologyBasis::tree_cotree(&g).unwrap();
        let cycles: Vec<Vec<Dart>> =
            common::simple_directed_cycles(&g).iter().map(|c| c.iter().map(|&e| Dart::forward(e)).collect()).collect();
        let mut sign = 0;
        for a in &cycles {
            for b in &cycles {
                let Ok(ab) = algebraic_crossing_number(&g, a, b) else { continue };
                let pairing = h.signature(a).pairing(h.signature(b));
                assert_eq!(ab.abs(), pairing.abs());
                assert_eq!(algebraic_crossing_number(&g, b, a).unwrap(), -ab);
                if pairing != 0 {
                    let s = ab / pairing;
                    assert!(sign == 0 || sign == s);
                    sign = s;
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}
