use std::collections::HashMap;

use lacegraph::draw::*;
use lacegraph::embedding::EmbeddedDigraph;
use lacegraph::io::corpus::{fixture, valid_corpus};
use lacegraph::io::generate::{one_vertex, random_valid, torchon};
use lacegraph::pipeline::{run_pipeline, Artifacts, Options};
use lacegraph::schema::PolygonalSchema;
use num_bigint::BigInt;
use num_rational::BigRational;

fn artifacts(g: &EmbeddedDigraph) -> Artifacts {
    let (r, a) = run_pipeline(g, &Options::default());
    assert!(r.passed, "{}", r.to_json());
    a
}

#[test]
fn corpus_drawings_are_planar_periodic_and_vertical() {
    for inst in valid_corpus(10) {
        let (r, _) = run_pipeline(&inst.graph, &Options::default());
        let d = r.drawing.unwrap_or_else(|| panic!("{}: {:?}", inst.name, r.error));
        assert!(d.passed(), "{}: {:?}", inst.name, d.checks);
        assert_eq!(d.checks.improper_crossings, 0);
        assert!(d.checks.twins_match);
        let sign = d.checks.wraps[0].0;
        assert!(d.checks.wraps.iter().all(|&w| w == (sign, 0) && sign.abs() == 1));
        assert_eq!(d.checks.lift_size, inst.graph.num_vertices() + 1);
        assert!(d.checks.lift_acyclic);
    }
}

#[test]
fn swapping_meridian_and_longitude_twists_the_circuits() {
    for g in [torchon(2), torchon(3), fixture("detour").unwrap(), random_valid(30, 5)] {
        let a = artifacts(&g);
        let (o, s, p) = (a.offset.unwrap(), a.schema.unwrap(), a.partition.unwrap());
        let swapped = PolygonalSchema { meridian: s.longitude.clone(), longitude: s.meridian.clone(), ..s };
        let t = overlay(&o, &swapped, g.num_vertices());
        let r = cut(&t);
        let wraps = verify::circuit_wraps(&p, &verify::edge_shifts(&t, &r));
        assert!(wraps.iter().all(|&(y, x)| y == 0 && x.abs() == 1), "{wraps:?}");
        assert!(!verify::wraps_ok(&wraps));
    }
}

#[test]
fn lift_check_finds_cycles() {
    let g = one_vertex();
    // no shifts: every loop closes up inside one copy
    assert!(!verify::lift_is_acyclic(&g, &[(0, 0), (0, 0)], 3));
    assert!(verify::lift_is_acyclic(&g, &[(1, 0), (1, 1)], 3));
    assert!(!verify::lift_is_acyclic(&g, &[(1, 0), (-1, 0)], 3));
}

#[test]
fn coordinates_are_exact_and_inside_the_frame() {
    let a = artifacts(&torchon(3));
    let d = a.drawing.unwrap();
    let zero = BigRational::from_integer(BigInt::from(0));
    for (x, y) in &d.coords {
        assert!(&zero <= x && x <= &d.width && &zero <= y && y <= &d.height);
    }
    let json = d.to_json();
    let first = json["coords"][0][0].as_str().unwrap();
    assert!(first.parse::<BigRational>().is_ok());
}

#[test]
fn tiles_join_up_across_copies() {
    let g = fixture("torchon2").unwrap();
    let a = artifacts(&g);
    let (d, r, t, p) = (a.drawing.unwrap(), a.rectangle.unwrap(), a.overlay.unwrap(), a.partition.unwrap());
    let tiled = tile(&d, &r, &t, &p, g.num_vertices(), 3, 3);
    assert_eq!(tiled.vertex_points.len(), 9 * g.num_vertices());
    let mut degree: HashMap<usize, usize> = HashMap::new();
    for &(a, b, _) in &tiled.segments {
        *degree.entry(a).or_default() += 1;
        *degree.entry(b).or_default() += 1;
    }
    let three = BigRational::from_integer(BigInt::from(3));
    let (w, h) = (&tiled.width * &three, &tiled.height * &three);
    let zero = BigRational::from_integer(BigInt::from(0));
    for (pt, deg) in degree {
        let (x, y) = &tiled.points[pt];
        let on_frame = *x == zero || *y == zero || *x == w || *y == h;
        if tiled.vertex_points.contains(&pt) {
            assert_eq!(deg, 4);
        } else if !on_frame {
            // an edge passing from one copy into the next
            assert_eq!(deg, 2);
        }
    }
    let svg = to_svg(&tiled, true);
    assert_eq!(svg.matches("<rect").count(), 9);
    assert_eq!(svg.matches("<circle").count(), 9 * g.num_vertices());
}

#[test]
fn sequential_and_parallel_drawings_agree() {
    let g = random_valid(40, 11);
    let seq = run_pipeline(&g, &Options { parallel: false, ..Options::default() }).0;
    let par = run_pipeline(&g, &Options::default()).0;
    assert_eq!(seq.to_json(), par.to_json());
}
