//! The canonical polygonal schema: a meridian M and a longitude L in the
//! offset graph that cross exactly once.
//!
//! M is the M-copy of the seed circuit P̂. L lives in the subgraph ℒ made of
//! L-copies, crossover paths and shortcuts. It is anchored at a vertex v where
//! P̂ uses the right pair: the crossover of v crosses M there, and the second
//! half of that crossover (L_r(v) back to v_c) is the only place where L
//! meets M. The rest of L is a shortest path from v_c to L_r(v) in ℒ with
//! every vertex of M removed.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::embedding::{Dart, EdgeEndClassification, EdgeId, EmbeddedDigraph, Role, VertexId};
use crate::offset::{OffsetEdgeKind, OffsetGraph, ShortcutType};
use crate::osculating::{algebraic_crossing_number, crossing_numbers_against, OsculatingPartition};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SchemaError {
    #[error("seed circuit {0} never enters a vertex through its right incoming end")]
    NoAnchor(usize),
    #[error("no longitude path from {from} to {to}")]
    NoPath { from: VertexId, to: VertexId },
}

/// A closed walk in the offset graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaCycle {
    pub darts: Vec<Dart>,
}

impl SchemaCycle {
    pub fn vertices(&self, o: &OffsetGraph) -> Vec<VertexId> {
        self.darts.iter().map(|d| d.source(&o.graph)).collect()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn is_simple(&self, o: &OffsetGraph) -> bool {
        let vs = self.vertices(o);
        let set: HashSet<_> = vs.iter().collect();
        set.len() == vs.len()
    }

    pub fn reversed(&self) -> SchemaCycle {
        SchemaCycle { darts: crate::embedding::faces::reverse_walk(&self.darts) }
    }

    /// Number of crossings with G (visits to dummies on G-edges).
    pub fn g_crossings(&self, o: &OffsetGraph) -> usize {
        self.vertices(o).iter().filter(|&&v| o.vertex_kinds[v].on_g_edge()).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonalSchema {
    pub seed: usize,
    /// G-vertex whose crossover carries the M∩L crossing.
    pub anchor: VertexId,
    pub meridian: SchemaCycle,
    pub longitude: SchemaCycle,
    pub crossing_vertex: VertexId,
    pub weighted: bool,
}

pub fn find_meridian(o: &OffsetGraph, seed: usize) -> SchemaCycle {
    SchemaCycle { darts: o.m_cycles[seed].iter().map(|&e| Dart::forward(e)).collect() }
}

/// Lowest-id vertex entered by the seed circuit through its right incoming end.
pub fn longitude_anchor(
    g: &EmbeddedDigraph,
    cls: &EdgeEndClassification,
    p: &OsculatingPartition,
) -> Result<VertexId, SchemaError> {
    p.seed()
        .edges
        .iter()
        .filter(|&&e| cls.head_role(e) == Role::RightIn)
        .map(|&e| g.edge(e).head)
        .min()
        .ok_or(SchemaError::NoAnchor(p.seed_index))
}

/// The undirected subgraph ℒ with adjacency sorted by neighbour id.
struct LSubgraph {
    adj: Vec<Vec<(VertexId, Dart)>>,
}

impl LSubgraph {
    fn new(o: &OffsetGraph, with_shortcuts: bool) -> Self {
        let mut adj = vec![Vec::new(); o.num_vertices()];
        for (e, edge) in o.graph.edges().iter().enumerate() {
            let keep = match o.edge_kinds[e] {
                OffsetEdgeKind::LCopy(_) | OffsetEdgeKind::Crossover(_) => true,
                OffsetEdgeKind::Shortcut(_) => with_shortcuts,
                _ => false,
            };
            if keep {
                adj[edge.tail].push((edge.head, Dart::forward(e)));
                adj[edge.head].push((edge.tail, Dart::backward(e)));
            }
        }
        for a in &mut adj {
            a.sort();
        }
        LSubgraph { adj }
    }

    /// Shortest path by (weight, hops) with smallest-id predecessor tie-break.
    fn shortest_path(
        &self,
        o: &OffsetGraph,
        from: VertexId,
        to: VertexId,
        blocked: &HashSet<VertexId>,
        weighted: bool,
    ) -> Option<Vec<Dart>> {
        let n = self.adj.len();
        let weight = |v: VertexId| u64::from(weighted && o.vertex_kinds[v].on_g_edge());
        let mut dist = vec![(u64::MAX, u64::MAX); n];
        let mut pred: Vec<Option<(VertexId, Dart)>> = vec![None; n];
        let mut done = vec![false; n];
        let mut heap = BinaryHeap::new();
        dist[from] = (0, 0);
        heap.push(Reverse((dist[from], from)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if done[u] || d != dist[u] {
                continue;
            }
            done[u] = true;
            if u == to {
                break;
            }
            for &(w, dart) in &self.adj[u] {
                if blocked.contains(&w) || done[w] {
                    continue;
                }
                let nd = (d.0 + weight(u) + weight(w), d.1 + 1);
                let better = nd < dist[w] || (nd == dist[w] && pred[w].is_some_and(|(p, _)| u < p));
                if better {
                    dist[w] = nd;
                    pred[w] = Some((u, dart));
                    heap.push(Reverse((nd, w)));
                }
            }
        }
        if !done[to] {
            return None;
        }
        let mut darts = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, d) = pred[cur].unwrap();
            darts.push(d);
            cur = p;
        }
        darts.reverse();
        Some(darts)
    }
}

fn longitude_search(
    g: &EmbeddedDigraph,
    cls: &EdgeEndClassification,
    o: &OffsetGraph,
    p: &OsculatingPartition,
    meridian: &SchemaCycle,
    weighted: bool,
    with_shortcuts: bool,
) -> Result<(VertexId, SchemaCycle), SchemaError> {
    let v = longitude_anchor(g, cls, p)?;
    let x = &o.crossovers[v];
    // x: L_ℓ, d_X(LI), v_c, d_X(RI), d_XM, L_r
    let mut blocked: HashSet<VertexId> = meridian.vertices(o).into_iter().collect();
    blocked.extend([x.vertices[3], x.vertices[4]]);
    let (from, to) = (x.vertices[2], x.vertices[5]);
    let path = LSubgraph::new(o, with_shortcuts)
        .shortest_path(o, from, to, &blocked, weighted)
        .ok_or(SchemaError::NoPath { from, to })?;
    let mut darts = path;
    darts.extend(x.edges[2..].iter().rev().map(|&e| Dart::backward(e)));
    Ok((v, SchemaCycle { darts }))
}

pub fn find_longitude(
    g: &EmbeddedDigraph,
    cls: &EdgeEndClassification,
    o: &OffsetGraph,
    p: &OsculatingPartition,
    meridian: &SchemaCycle,
    weighted: bool,
) -> Result<SchemaCycle, SchemaError> {
    let (_, l) = longitude_search(g, cls, o, p, meridian, weighted, true)?;
    Ok(apply_shortcuts(&l, o))
}

/// Longitude searched without shortcut edges, then repaired by
/// [`apply_shortcuts`]. A cross-check for the main search.
pub fn find_longitude_without_shortcuts(
    g: &EmbeddedDigraph,
    cls: &EdgeEndClassification,
    o: &OffsetGraph,
    p: &OsculatingPartition,
    meridian: &SchemaCycle,
) -> Result<SchemaCycle, SchemaError> {
    let (_, l) = longitude_search(g, cls, o, p, meridian, false, false)?;
    Ok(apply_shortcuts(&l, o))
}

/// (pattern, replacement) pairs: an L-copy crossing its own edge followed by
/// the crossover at the head that crosses the same edge again.
fn shortcut_patterns(o: &OffsetGraph) -> Vec<(Vec<Dart>, Vec<Dart>)> {
    let mut out = Vec::new();
    for (e, sc) in o.shortcuts.iter().enumerate() {
        let Some((ty, s)) = sc else { continue };
        let l = &o.l_curves[e].edges;
        let w = o.graph.edge(*l.last().unwrap()).head;
        let w = match o.vertex_kinds[w] {
            crate::offset::OffsetVertexKind::LLeft(w) | crate::offset::OffsetVertexKind::LRight(w) => w,
            _ => unreachable!("L-copy ends at an L vertex"),
        };
        let x = &o.crossovers[w].edges;
        let mut pat = vec![Dart::forward(l[1]), Dart::forward(l[2])];
        match ty {
            ShortcutType::A => pat.extend([Dart::forward(x[0]), Dart::forward(x[1])]),
            ShortcutType::B => pat.extend(x[2..].iter().rev().map(|&e| Dart::backward(e))),
        }
        let rep: Vec<Dart> = s.edges.iter().map(|&e| Dart::forward(e)).collect();
        out.push((crate::embedding::faces::reverse_walk(&pat), crate::embedding::faces::reverse_walk(&rep)));
        out.push((pat, rep));
    }
    out
}

/// Replaces every L-copy-then-crossover detour that crosses a G-edge twice by
/// the corresponding shortcut. One pass: patterns never overlap and
/// replacements contain no pattern darts.
pub fn apply_shortcuts(cycle: &SchemaCycle, o: &OffsetGraph) -> SchemaCycle {
    let patterns = shortcut_patterns(o);
    let mut by_first: HashMap<Dart, Vec<usize>> = HashMap::new();
    for (i, (pat, _)) in patterns.iter().enumerate() {
        by_first.entry(pat[0]).or_default().push(i);
    }
    let darts = &cycle.darts;
    let k = darts.len();
    let matches_at =
        |i: usize, pat: &[Dart]| pat.len() <= k && pat.iter().enumerate().all(|(j, d)| darts[(i + j) % k] == *d);

    // (start, pattern) in cycle order; a match may wrap past the end
    let mut found: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < k {
        let hit = by_first.get(&darts[i]).and_then(|c| c.iter().copied().find(|&pi| matches_at(i, &patterns[pi].0)));
        match hit {
            Some(pi) => {
                let len = patterns[pi].0.len();
                let wraps_into_first = i + len > k && found.first().is_some_and(|&(s, _)| s < i + len - k);
                if !wraps_into_first {
                    found.push((i, pi));
                    i += len;
                    continue;
                }
                i += 1;
            }
            None => i += 1,
        }
    }
    if found.is_empty() {
        return cycle.clone();
    }
    // a wrapping match becomes the start of the result
    let shift = found.last().filter(|&&(s, pi)| s + patterns[pi].0.len() > k).map_or(0, |&(s, _)| s);
    found.sort_by_key(|&(s, _)| (s + k - shift) % k);
    let mut out = Vec::with_capacity(k);
    let mut pos = 0;
    for (s, pi) in found {
        let s = (s + k - shift) % k;
        out.extend((pos..s).map(|j| darts[(j + shift) % k]));
        out.extend(patterns[pi].1.iter().copied());
        pos = s + patterns[pi].0.len();
    }
    out.extend((pos..k).map(|j| darts[(j + shift) % k]));
    SchemaCycle { darts: out }
}

pub fn find_schema(
    g: &EmbeddedDigraph,
    cls: &EdgeEndClassification,
    o: &OffsetGraph,
    p: &OsculatingPartition,
    weighted: bool,
) -> Result<PolygonalSchema, SchemaError> {
    let meridian = find_meridian(o, p.seed_index);
    let (anchor, l) = longitude_search(g, cls, o, p, &meridian, weighted, true)?;
    let longitude = apply_shortcuts(&l, o);
    let on_m: HashSet<VertexId> = meridian.vertices(o).into_iter().collect();
    let crossing_vertex =
        longitude.vertices(o).into_iter().find(|v| on_m.contains(v)).unwrap_or(o.crossover_m_dummy[anchor]);
    Ok(PolygonalSchema { seed: p.seed_index, anchor, crossing_vertex, meridian, longitude, weighted })
}

/// A G circuit as a closed walk in the offset graph.
pub fn lift_circuit(o: &OffsetGraph, edges: &[EdgeId]) -> Vec<Dart> {
    edges.iter().flat_map(|&e| o.g_curves[e].edges.iter().map(|&x| Dart::forward(x))).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaReport {
    pub meridian_simple: bool,
    pub longitude_simple: bool,
    /// Offset vertices shared by M and L.
    pub shared_vertices: Vec<VertexId>,
    pub transverse_crossings: usize,
    pub meridian_longitude_crossing: i64,
    /// î(M, P_i) per circuit.
    pub meridian_circuit_crossings: Vec<i64>,
    /// î(L, P_i) per circuit.
    pub longitude_circuit_crossings: Vec<i64>,
    pub longitude_sign_consistent: bool,
    /// G-edges crossed more than once, with (edge, by M, by L) tallies.
    pub repeated_edge_crossings: Vec<(EdgeId, usize, usize)>,
    pub meridian_g_crossings: usize,
    pub longitude_g_crossings: usize,
}

impl SchemaReport {
    pub fn passed(&self) -> bool {
        self.meridian_simple
            && self.longitude_simple
            && self.shared_vertices.len() == 1
            && self.transverse_crossings == 1
            && self.meridian_circuit_crossings.iter().all(|&x| x == 0)
            && self.longitude_circuit_crossings.iter().all(|&x| x.abs() == 1)
            && self.longitude_sign_consistent
            && self.repeated_edge_crossings.is_empty()
    }
}

/// Checks meridian and longitude against the offset graph and every circuit.
pub fn verify_cycles(
    o: &OffsetGraph,
    p: &OsculatingPartition,
    meridian: &SchemaCycle,
    longitude: &SchemaCycle,
) -> SchemaReport {
    let g = &o.graph;
    let mv = meridian.vertices(o);
    let lv = longitude.vertices(o);
    let m_set: HashSet<VertexId> = mv.iter().copied().collect();
    let mut shared: Vec<VertexId> = lv.iter().copied().filter(|v| m_set.contains(v)).collect();
    shared.sort_unstable();
    shared.dedup();

    let transverse_crossings = shared
        .iter()
        .filter(|&&x| match (visit_at(g, &meridian.darts, x), visit_at(g, &longitude.darts, x)) {
            (Some(a), Some(b)) => {
                let k = g.degree(x);
                in_arc(a.0, b.0, b.1, k) != in_arc(a.1, b.0, b.1, k)
            }
            _ => false,
        })
        .count();
    let meridian_longitude_crossing =
        algebraic_crossing_number(g, &meridian.darts, &longitude.darts).unwrap_or(i64::MAX);

    let lifts: Vec<Vec<Dart>> = p.circuits.iter().map(|c| lift_circuit(o, &c.edges)).collect();
    let cross = |c: &SchemaCycle| -> Vec<i64> {
        crossing_numbers_against(g, &c.darts, &lifts).into_iter().map(|x| x.unwrap_or(i64::MAX)).collect()
    };
    let meridian_circuit_crossings = cross(meridian);
    let longitude_circuit_crossings = cross(longitude);
    let longitude_sign_consistent = longitude_circuit_crossings.windows(2).all(|w| w[0] == w[1]);

    let mut tally: HashMap<EdgeId, (usize, usize)> = HashMap::new();
    let owner = |v: VertexId| -> Option<EdgeId> {
        use crate::offset::OffsetVertexKind as K;
        match o.vertex_kinds[v] {
            K::CrossoverEdgeDummy(e) | K::LCopyDummy(e) | K::MCopyDummy(e) => Some(e),
            _ => None,
        }
    };
    for &v in &mv {
        if let Some(e) = owner(v) {
            tally.entry(e).or_default().0 += 1;
        }
    }
    for &v in &lv {
        if let Some(e) = owner(v) {
            tally.entry(e).or_default().1 += 1;
        }
    }
    let mut repeated_edge_crossings: Vec<(EdgeId, usize, usize)> =
        tally.into_iter().filter(|(_, (a, b))| *a > 1 || *b > 1).map(|(e, (a, b))| (e, a, b)).collect();
    repeated_edge_crossings.sort_unstable();

    SchemaReport {
        meridian_simple: meridian.is_simple(o),
        longitude_simple: longitude.is_simple(o),
        shared_vertices: shared,
        transverse_crossings,
        meridian_longitude_crossing,
        meridian_circuit_crossings,
        longitude_circuit_crossings,
        longitude_sign_consistent,
        repeated_edge_crossings,
        meridian_g_crossings: meridian.g_crossings(o),
        longitude_g_crossings: longitude.g_crossings(o),
    }
}

/// (arrival slot, departure slot) of the first visit of a closed walk to `x`.
fn visit_at(g: &EmbeddedDigraph, darts: &[Dart], x: VertexId) -> Option<(usize, usize)> {
    let k = darts.len();
    (0..k)
        .find(|&i| darts[i].target(g) == x)
        .map(|i| (g.slot_of(darts[i].arrival()), g.slot_of(darts[(i + 1) % k].departure())))
}

fn in_arc(x: usize, from: usize, to: usize, k: usize) -> bool {
    let off = (x + k - from) % k;
    off != 0 && off < (to + k - from) % k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::classify_edge_ends;
    use crate::io::generate::{one_vertex, random_ground, torchon};
    use crate::offset::build_offset;
    use crate::osculating::osculating_partition;

    fn setup(g: &EmbeddedDigraph) -> (EdgeEndClassification, OsculatingPartition, OffsetGraph) {
        let cls = classify_edge_ends(g).unwrap();
        let p = osculating_partition(g, &cls);
        let o = build_offset(g, &cls, &p);
        (cls, p, o)
    }

    fn check(g: &EmbeddedDigraph) {
        let (cls, p, o) = setup(g);
        for seed in 0..p.circuits.len() {
            let p = p.clone().with_seed(seed).unwrap();
            for weighted in [false, true] {
                let s = find_schema(g, &cls, &o, &p, weighted).unwrap();
                let r = verify_cycles(&o, &p, &s.meridian, &s.longitude);
                assert!(r.passed(), "seed {seed} weighted {weighted}: {r:?}");
                assert_eq!(r.shared_vertices, vec![s.crossing_vertex]);
            }
        }
    }

    #[test]
    fn one_vertex_schema() {
        check(&one_vertex());
    }

    #[test]
    fn torchon_schemas() {
        for k in 2..6 {
            check(&torchon(k));
        }
    }

    #[test]
    fn random_ground_schemas() {
        for seed in 0..40 {
            check(&random_ground(1 + seed as usize % 13, seed));
        }
    }

    #[test]
    fn search_without_shortcuts_is_repaired() {
        for g in [one_vertex(), torchon(2), torchon(3), random_ground(6, 3)] {
            let (cls, p, o) = setup(&g);
            let m = find_meridian(&o, 0);
            let l = find_longitude_without_shortcuts(&g, &cls, &o, &p, &m).unwrap();
            let r = verify_cycles(&o, &p, &m, &l);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn shortcut_substitution_preserves_crossings() {
        let g = torchon(3);
        let (cls, p, o) = setup(&g);
        let m = find_meridian(&o, 0);
        let (_, raw) = longitude_search(&g, &cls, &o, &p, &m, false, false).unwrap();
        let fixed = apply_shortcuts(&raw, &o);
        let before = verify_cycles(&o, &p, &m, &raw);
        let after = verify_cycles(&o, &p, &m, &fixed);
        assert_eq!(before.longitude_circuit_crossings, after.longitude_circuit_crossings);
        assert_eq!(before.meridian_longitude_crossing, after.meridian_longitude_crossing);
        assert_eq!(apply_shortcuts(&fixed, &o), fixed);
    }

    #[test]
    fn copy_of_seed_is_not_a_longitude() {
        let g = torchon(3);
        let (_, p, o) = setup(&g);
        let m = find_meridian(&o, 0);
        let fake = SchemaCycle { darts: o.l_cycles[0].iter().map(|&e| Dart::forward(e)).collect() };
        let r = verify_cycles(&o, &p, &m, &fake);
        assert!(r.longitude_circuit_crossings.iter().all(|&x| x == 0));
        assert!(!r.passed());
    }
}
