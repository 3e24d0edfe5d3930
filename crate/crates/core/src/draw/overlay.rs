//! The torus overlay: G together with M and L, with every degree-2 vertex of
//! the offset graph smoothed away.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::embedding::{Dart, Edge, EdgeEnd, EdgeId, EmbeddedDigraph, VertexId};
use crate::offset::{OffsetEdgeKind, OffsetGraph};
use crate::schema::PolygonalSchema;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "of", rename_all = "snake_case")]
pub enum OverlayEdgeKind {
    /// A piece of G-edge `e`.
    G(EdgeId),
    Meridian,
    Longitude,
}

#[derive(Clone, Debug)]
pub struct TorusOverlay {
    pub graph: EmbeddedDigraph,
    pub kinds: Vec<OverlayEdgeKind>,
    /// Offset vertex behind every overlay vertex. G-vertices keep their ids.
    pub origin: Vec<VertexId>,
    /// Offset darts making up every overlay edge.
    pub chains: Vec<Vec<Dart>>,
    /// Overlay edges of M and L in order, both starting at the crossing.
    pub meridian: Vec<EdgeId>,
    pub longitude: Vec<EdgeId>,
    pub crossing: VertexId,
    /// Per G-edge: its overlay pieces, tail to head.
    pub g_pieces: Vec<Vec<EdgeId>>,
}

impl TorusOverlay {
    pub fn on_meridian(&self, v: VertexId) -> bool {
        self.meridian.iter().any(|&e| self.graph.edge(e).tail == v)
    }

    pub fn on_longitude(&self, v: VertexId) -> bool {
        self.longitude.iter().any(|&e| self.graph.edge(e).tail == v)
    }
}

/// Splits a closed or open dart sequence at kept vertices.
fn split_chain(o: &OffsetGraph, darts: &[Dart], kept: &[bool]) -> Vec<Vec<Dart>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for &d in darts {
        cur.push(d);
        if kept[d.target(&o.graph)] {
            out.push(std::mem::take(&mut cur));
        }
    }
    debug_assert!(cur.is_empty());
    out
}

pub fn overlay(o: &OffsetGraph, schema: &PolygonalSchema, num_g_vertices: usize) -> TorusOverlay {
    let og = &o.graph;
    let mut degree = vec![0usize; og.num_vertices()];
    let mut used = vec![false; og.num_edges()];
    let mut mark = |e: EdgeId, degree: &mut Vec<usize>| {
        used[e] = true;
        let Edge { tail, head } = og.edge(e);
        degree[tail] += 1;
        degree[head] += 1;
    };
    for (e, k) in o.edge_kinds.iter().enumerate() {
        if matches!(k, OffsetEdgeKind::Original(_)) {
            mark(e, &mut degree);
        }
    }
    for d in schema.meridian.darts.iter().chain(&schema.longitude.darts) {
        mark(d.edge, &mut degree);
    }
    let kept: Vec<bool> = (0..og.num_vertices()).map(|v| v < num_g_vertices || degree[v] != 2).collect();
    let mut id = vec![usize::MAX; og.num_vertices()];
    let mut origin = Vec::new();
    for v in 0..og.num_vertices() {
        if kept[v] && degree[v] > 0 {
            id[v] = origin.len();
            origin.push(v);
        }
    }

    let mut chains: Vec<Vec<Dart>> = Vec::new();
    let mut kinds = Vec::new();
    let rotate_to = |darts: &[Dart], start: VertexId| -> Vec<Dart> {
        let i = darts.iter().position(|d| d.source(og) == start).expect("cycle passes the crossing");
        let mut v = darts.to_vec();
        v.rotate_left(i);
        v
    };
    let x = schema.crossing_vertex;
    let lon = rotate_to(&schema.longitude.darts, x);
    let mut mer = rotate_to(&schema.meridian.darts, x);
    // M must cross L from L's right to its left, i.e. leave into L's left side
    let (l_in, l_out) = (og.slot_of(lon.last().unwrap().arrival()), og.slot_of(lon[0].departure()));
    let m_out = og.slot_of(mer[0].departure());
    let k = og.degree(x);
    if (m_out + k - l_in) % k >= (l_out + k - l_in) % k {
        mer = rotate_to(&crate::embedding::faces::reverse_walk(&mer), x);
    }
    let mut meridian = Vec::new();
    for c in split_chain(o, &mer, &kept) {
        meridian.push(chains.len());
        chains.push(c);
        kinds.push(OverlayEdgeKind::Meridian);
    }
    let mut longitude = Vec::new();
    for c in split_chain(o, &lon, &kept) {
        longitude.push(chains.len());
        chains.push(c);
        kinds.push(OverlayEdgeKind::Longitude);
    }
    let mut g_pieces = Vec::with_capacity(o.g_curves.len());
    for (e, curve) in o.g_curves.iter().enumerate() {
        let darts: Vec<Dart> = curve.edges.iter().map(|&x| Dart::forward(x)).collect();
        let mut pieces = Vec::new();
        for c in split_chain(o, &darts, &kept) {
            pieces.push(chains.len());
            chains.push(c);
            kinds.push(OverlayEdgeKind::G(e));
        }
        g_pieces.push(pieces);
    }

    let mut end_map: HashMap<EdgeEnd, EdgeEnd> = HashMap::new();
    let mut edges = Vec::with_capacity(chains.len());
    for (i, c) in chains.iter().enumerate() {
        let (first, last) = (c[0], *c.last().unwrap());
        end_map.insert(first.departure(), EdgeEnd::tail(i));
        end_map.insert(last.arrival(), EdgeEnd::head(i));
        edges.push(Edge { tail: id[first.source(og)], head: id[last.target(og)] });
    }
    let rotations =
        origin.iter().map(|&v| og.rotation(v).iter().filter_map(|end| end_map.get(end).copied()).collect()).collect();
    let graph = EmbeddedDigraph::new(rotations, edges).expect("overlay is well formed");
    TorusOverlay { graph, kinds, origin, chains, meridian, longitude, crossing: id[schema.crossing_vertex], g_pieces }
}
