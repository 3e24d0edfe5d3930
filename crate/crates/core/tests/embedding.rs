mod common;

use lacegraph::embedding::*;
use lacegraph::io::corpus::fixture;
use lacegraph::io::generate::{random, random_ground};
use proptest::prelude::*;

fn graph(rotations: Vec<Vec<EdgeEnd>>, edges: &[(usize, usize)]) -> EmbeddedDigraph {
    let edges = edges.iter().map(|&(tail, head)| Edge { tail, head }).collect();
    EmbeddedDigraph::new(rotations, edges).unwrap()
}

#[test]
fn directed_triangle_on_the_sphere_has_two_faces() {
    let (t, h) = (EdgeEnd::tail, EdgeEnd::head);
    let g = graph(vec![vec![h(2), t(0)], vec![h(0), t(1)], vec![h(1), t(2)]], &[(0, 1), (1, 2), (2, 0)]);
    let faces = facial_walks(&g);
    assert_eq!(faces.iter().map(FacialWalk::len).collect::<Vec<_>>(), vec![3, 3]);
}

#[test]
fn torchon_fixture_faces_and_roles() {
    let g = fixture("torchon2").unwrap();
    assert_eq!((g.num_vertices(), g.num_edges()), (4, 8));
    assert_eq!(facial_walks(&g).len(), 4);
    assert!(validate(&g).passed());
    // the file lists every rotation starting at the left-outgoing end
    let cls = classify_edge_ends(&g).unwrap();
    let order = [Role::LeftOut, Role::RightOut, Role::RightIn, Role::LeftIn];
    for v in 0..4 {
        for (end, role) in g.rotation(v).iter().zip(order) {
            assert_eq!(cls.role(*end), role);
        }
    }
}

#[test]
fn adjacent_parallel_edges_make_a_short_face() {
    let (t, h) = (EdgeEnd::tail, EdgeEnd::head);
    // u -> v twice, v -> u twice; e0 and e2 leave u next to each other and
    // arrive at v next to each other
    let g = graph(vec![vec![t(0), t(2), h(3), h(1)], vec![t(1), t(3), h(2), h(0)]], &[(0, 1), (1, 0), (0, 1), (1, 0)]);
    let c2 = check_c2(&g);
    assert!(!c2.passed);
    assert!(c2.short_faces.iter().any(|&f| facial_walks(&g)[f].len() == 2));
}

#[test]
fn alternating_rotation_fails_c3_prime() {
    let (t, h) = (EdgeEnd::tail, EdgeEnd::head);
    let g = graph(vec![vec![t(0), h(0), t(1), h(1)]], &[(0, 0), (0, 0)]);
    let r = check_c3_prime(&g);
    assert!(!r.passed);
    assert_eq!(r.offenders, vec![0]);
}

#[test]
fn three_loops_fail_c1_and_skip_the_rest() {
    let r = validate(&fixture("bad-degree").unwrap());
    assert!(!r.c1.passed);
    assert_eq!(r.c1.offenders, vec![0]);
    assert!(r.c2.is_none() && r.c3prime.is_none() && r.c3.is_none());
}

#[test]
fn c3_matches_brute_force_on_small_instances() {
    let corpus = common::small_toroidal(60, 8);
    let mut verdicts = [0; 2];
    for g in &corpus {
        let fast = check_c3(g).passed;
        assert_eq!(fast, common::c3_oracle(g), "{}", lacegraph::io::serialize(g));
        verdicts[fast as usize] += 1;
    }
    assert!(verdicts[0] > 0 && verdicts[1] > 0, "{verdicts:?}");
}

proptest! {
    #[test]
    fn every_side_lies_on_exactly_one_face(n in 1usize..12, seed in any::<u64>()) {
        let g = random(n, seed);
        let faces = Faces::trace(&g);
        let mut count = vec![0; 2 * g.num_edges()];
        for (f, w) in faces.walks.iter().enumerate() {
            for d in &w.sides {
                count[d.departure().index()] += 1;
                prop_assert_eq!(faces.face_of(*d), f);
            }
        }
        prop_assert!(count.iter().all(|&c| c == 1));
    }

    #[test]
    fn valid_grounds_have_euler_characteristic_zero(n in 1usize..30, seed in any::<u64>()) {
        let g = random_ground(n, seed);
        let r = validate(&g);
        prop_assert!(r.passed());
        let c2 = r.c2.unwrap();
        prop_assert_eq!(g.num_edges(), 2 * g.num_vertices());
        prop_assert_eq!(c2.face_count, g.num_vertices());
    }

    #[test]
    fn incoming_roles_follow_each_other(n in 1usize..30, seed in any::<u64>()) {
        let g = random_ground(n, seed);
        let cls = classify_edge_ends(&g).unwrap();
        for v in 0..g.num_vertices() {
            let ri = g.slot_of(cls.end(v, Role::RightIn));
            let li = g.slot_of(cls.end(v, Role::LeftIn));
            prop_assert_eq!(li, (ri + 1) % 4);
        }
    }
}
