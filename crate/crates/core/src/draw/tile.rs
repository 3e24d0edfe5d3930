//! Translated copies of a periodic drawing.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::barycentric::{PeriodicDrawing, Point};
use super::cut::RectangleGraph;
use super::overlay::{OverlayEdgeKind, TorusOverlay};
use crate::osculating::OsculatingPartition;

#[derive(Clone, Debug)]
pub struct TiledDrawing {
    pub kx: usize,
    pub ky: usize,
    pub width: BigRational,
    pub height: BigRational,
    /// Distinct points; boundary twins of neighbouring copies coincide.
    pub points: Vec<Point>,
    /// Points that are G-vertices.
    pub vertex_points: Vec<usize>,
    /// (from, to, circuit index) for every drawn piece of a G-edge.
    pub segments: Vec<(usize, usize, usize)>,
}

pub fn tile(
    d: &PeriodicDrawing,
    r: &RectangleGraph,
    t: &TorusOverlay,
    p: &OsculatingPartition,
    num_g_vertices: usize,
    kx: usize,
    ky: usize,
) -> TiledDrawing {
    let mut index: HashMap<Point, usize> = HashMap::new();
    let mut points = Vec::new();
    let mut id = |pt: Point, points: &mut Vec<Point>| -> usize {
        *index.entry(pt.clone()).or_insert_with(|| {
            points.push(pt);
            points.len() - 1
        })
    };
    let mut segments = Vec::new();
    let mut vertex_points = Vec::new();
    for cy in 0..ky {
        for cx in 0..kx {
            let ox = &d.width * BigRational::from_integer(BigInt::from(cx));
            let oy = &d.height * BigRational::from_integer(BigInt::from(cy));
            let at = |v: usize| (&d.coords[v].0 + &ox, &d.coords[v].1 + &oy);
            for v in 0..num_g_vertices {
                vertex_points.push(id(at(v), &mut points));
            }
            for (e, edge) in r.graph.edges().iter().enumerate() {
                if let OverlayEdgeKind::G(ge) = t.kinds[r.overlay_edge[e]] {
                    let a = id(at(edge.tail), &mut points);
                    let b = id(at(edge.head), &mut points);
                    segments.push((a, b, p.edge_to_circuit[ge]));
                }
            }
        }
    }
    TiledDrawing { kx, ky, width: d.width.clone(), height: d.height.clone(), points, vertex_points, segments }
}
