//! The offset supergraph.
//!
//! Every G-edge `e` gets two parallel copies, `M_e` (closer on the right,
//! farther on the left) and `L_e`. Around a vertex the copies sit in the
//! order M_ℓ(v), L_ℓ(v), v, M_r(v), L_r(v). An edge whose tail and head roles
//! lie on different sides ("switch" edge) is crossed by both copies. Each
//! vertex gets a crossover path from L_ℓ(v) through a midpoint v_c in the
//! corner between the incoming edges to L_r(v); it crosses both incoming
//! edges and the M-copy arriving at M_r(v). Shortcuts join a point on L_e,
//! before L_e crosses e, to w_c so that a path following L_e into the
//! crossover never has to cross e twice.
//!
//! All crossings are explicit degree-4 dummy vertices, so the result is again
//! an embedded digraph on the torus.

use serde::{Deserialize, Serialize};

use crate::embedding::Edge;
use crate::embedding::{EdgeEnd, EdgeEndClassification, EdgeId, EmbeddedDigraph, Role, VertexId};
use crate::osculating::OsculatingPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "of", rename_all = "snake_case")]
pub enum OffsetVertexKind {
    Original(VertexId),
    MLeft(VertexId),
    LLeft(VertexId),
    MRight(VertexId),
    LRight(VertexId),
    CrossoverMid(VertexId),
    /// Where the crossover of `v` crosses the M-copy arriving at M_r(v).
    CrossoverMCopyDummy(VertexId),
    /// Where the crossover at the head crosses G-edge `e`.
    CrossoverEdgeDummy(EdgeId),
    /// Where `L_e` crosses `e`.
    LCopyDummy(EdgeId),
    /// Where `M_e` crosses `e`.
    MCopyDummy(EdgeId),
    ShortcutJunction(EdgeId),
    /// Where the shortcut of `e` crosses `M_e`.
    ShortcutDummy(EdgeId),
}

impl OffsetVertexKind {
    pub fn is_dummy(self) -> bool {
        matches!(
            self,
            OffsetVertexKind::CrossoverMCopyDummy(_)
                | OffsetVertexKind::CrossoverEdgeDummy(_)
                | OffsetVertexKind::LCopyDummy(_)
                | OffsetVertexKind::MCopyDummy(_)
                | OffsetVertexKind::ShortcutDummy(_)
        )
    }

    /// Dummies lying on a G-edge.
    pub fn on_g_edge(self) -> bool {
        matches!(
            self,
            OffsetVertexKind::CrossoverEdgeDummy(_) | OffsetVertexKind::LCopyDummy(_) | OffsetVertexKind::MCopyDummy(_)
        )
    }

    /// Dummies lying on an M-copy.
    pub fn on_m_copy(self) -> bool {
        matches!(self, OffsetVertexKind::CrossoverMCopyDummy(_) | OffsetVertexKind::ShortcutDummy(_))
            || matches!(self, OffsetVertexKind::MCopyDummy(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "of", rename_all = "snake_case")]
pub enum OffsetEdgeKind {
    Original(EdgeId),
    MCopy(EdgeId),
    LCopy(EdgeId),
    Crossover(VertexId),
    Shortcut(EdgeId),
}

/// How a switch edge's L-copy is short-cut at the head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShortcutType {
    /// Right-to-left edge into a left-in end: the shortcut crosses nothing.
    A,
    /// Left-to-right edge into a right-in end: the shortcut crosses `M_e` once.
    B,
}

/// A curve in the offset graph: vertex sequence and the edges between them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Curve {
    fn first_out(&self) -> EdgeEnd {
        EdgeEnd::tail(self.edges[0])
    }

    fn last_in(&self) -> EdgeEnd {
        EdgeEnd::head(*self.edges.last().unwrap())
    }

    /// (incoming end, outgoing end) at the interior vertex `x`.
    fn through(&self, x: VertexId) -> (EdgeEnd, EdgeEnd) {
        let i = self.vertices[1..self.vertices.len() - 1]
            .iter()
            .position(|&y| y == x)
            .expect("vertex is interior to curve")
            + 1;
        (EdgeEnd::head(self.edges[i - 1]), EdgeEnd::tail(self.edges[i]))
    }
}

#[derive(Clone, Debug)]
pub struct OffsetGraph {
    pub graph: EmbeddedDigraph,
    pub vertex_kinds: Vec<OffsetVertexKind>,
    pub edge_kinds: Vec<OffsetEdgeKind>,
    /// Per G-edge: the subdivided edge itself.
    pub g_curves: Vec<Curve>,
    pub m_curves: Vec<Curve>,
    pub l_curves: Vec<Curve>,
    /// Per G-vertex.
    pub crossovers: Vec<Curve>,
    /// Per G-edge, for switch edges.
    pub shortcuts: Vec<Option<(ShortcutType, Curve)>>,
    /// Per circuit: concatenated copy edges.
    pub m_cycles: Vec<Vec<EdgeId>>,
    pub l_cycles: Vec<Vec<EdgeId>>,
    pub m_left: Vec<VertexId>,
    pub l_left: Vec<VertexId>,
    pub m_right: Vec<VertexId>,
    pub l_right: Vec<VertexId>,
    pub crossover_mid: Vec<VertexId>,
    pub crossover_m_dummy: Vec<VertexId>,
    pub crossover_edge_dummy: Vec<VertexId>,
}

impl OffsetGraph {
    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }

    pub fn rotation_around(&self, v: VertexId) -> Option<&[EdgeEnd]> {
        (v < self.num_vertices()).then(|| self.graph.rotation(v))
    }

    /// Dummy vertices subdividing G-edge `e`, tail to head.
    pub fn edge_dummies(&self, e: EdgeId) -> &[VertexId] {
        let vs = &self.g_curves[e].vertices;
        &vs[1..vs.len() - 1]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<_> = (0..self.num_vertices())
            .map(|v| {
                serde_json::json!({
                    "id": v,
                    "kind": self.vertex_kinds[v],
                    "rotation": self.graph.rotation(v).iter().map(|e| e.index()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let edges: Vec<_> = self
            .graph
            .edges()
            .iter()
            .zip(&self.edge_kinds)
            .enumerate()
            .map(|(i, (e, k))| serde_json::json!({"id": i, "tail": e.tail, "head": e.head, "kind": k}))
            .collect();
        serde_json::json!({ "vertices": vertices, "edges": edges })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

fn tail_side(cls: &EdgeEndClassification, e: EdgeId) -> Side {
    if cls.tail_role(e).is_left() {
        Side::Left
    } else {
        Side::Right
    }
}

fn head_side(cls: &EdgeEndClassification, e: EdgeId) -> Side {
    if cls.head_role(e).is_left() {
        Side::Left
    } else {
        Side::Right
    }
}

struct Builder {
    kinds: Vec<OffsetVertexKind>,
    edges: Vec<Edge>,
    edge_kinds: Vec<OffsetEdgeKind>,
}

impl Builder {
    fn vertex(&mut self, k: OffsetVertexKind) -> VertexId {
        self.kinds.push(k);
        self.kinds.len() - 1
    }

    fn curve(&mut self, vertices: Vec<VertexId>, kind: OffsetEdgeKind) -> Curve {
        let edges = vertices
            .windows(2)
            .map(|w| {
                self.edges.push(Edge { tail: w[0], head: w[1] });
                self.edge_kinds.push(kind);
                self.edges.len() - 1
            })
            .collect();
        Curve { vertices, edges }
    }
}

/// Rotation at a crossing: `crosser` passes `base` from its left to its right
/// when `left_to_right`.
fn crossing_rotation(base: &Curve, crosser: &Curve, x: VertexId, left_to_right: bool) -> Vec<EdgeEnd> {
    let (b_in, b_out) = base.through(x);
    let (c_in, c_out) = crosser.through(x);
    if left_to_right {
        vec![b_in, c_in, b_out, c_out]
    } else {
        vec![b_in, c_out, b_out, c_in]
    }
}

pub fn build_offset(g: &EmbeddedDigraph, cls: &EdgeEndClassification, p: &OsculatingPartition) -> OffsetGraph {
    use OffsetVertexKind as K;
    let n = g.num_vertices();
    let m = g.num_edges();
    let mut b = Builder { kinds: (0..n).map(K::Original).collect(), edges: Vec::new(), edge_kinds: Vec::new() };

    let mut m_left = Vec::with_capacity(n);
    let mut l_left = Vec::with_capacity(n);
    let mut m_right = Vec::with_capacity(n);
    let mut l_right = Vec::with_capacity(n);
    let mut mid = Vec::with_capacity(n);
    let mut dxm = Vec::with_capacity(n);
    for v in 0..n {
        m_left.push(b.vertex(K::MLeft(v)));
        l_left.push(b.vertex(K::LLeft(v)));
        m_right.push(b.vertex(K::MRight(v)));
        l_right.push(b.vertex(K::LRight(v)));
        mid.push(b.vertex(K::CrossoverMid(v)));
        dxm.push(b.vertex(K::CrossoverMCopyDummy(v)));
    }

    struct EdgeVerts {
        tail_side: Side,
        head_side: Side,
        dx: VertexId,
        // d_L, d_M, junction, d_S
        switch: Option<(VertexId, VertexId, VertexId, Option<VertexId>)>,
    }
    let mut ev = Vec::with_capacity(m);
    for e in 0..m {
        let (ts, hs) = (tail_side(cls, e), head_side(cls, e));
        let dx = b.vertex(K::CrossoverEdgeDummy(e));
        let switch = (ts != hs).then(|| {
            let dl = b.vertex(K::LCopyDummy(e));
            let dm = b.vertex(K::MCopyDummy(e));
            let j = b.vertex(K::ShortcutJunction(e));
            let ds = (ts == Side::Left).then(|| b.vertex(K::ShortcutDummy(e)));
            (dl, dm, j, ds)
        });
        ev.push(EdgeVerts { tail_side: ts, head_side: hs, dx, switch });
    }

    let m_at = |v: VertexId, s: Side| if s == Side::Left { m_left[v] } else { m_right[v] };
    let l_at = |v: VertexId, s: Side| if s == Side::Left { l_left[v] } else { l_right[v] };

    let mut g_curves = Vec::with_capacity(m);
    let mut m_curves = Vec::with_capacity(m);
    let mut l_curves = Vec::with_capacity(m);
    let mut shortcuts = Vec::with_capacity(m);
    for (e, x) in ev.iter().enumerate() {
        let Edge { tail: v, head: w } = g.edge(e);
        let mut gv = vec![v];
        let mut mv = vec![m_at(v, x.tail_side)];
        let mut lv = vec![l_at(v, x.tail_side)];
        let mut sc = None;
        if let Some((dl, dm, j, ds)) = x.switch {
            if x.tail_side == Side::Left {
                gv.extend([dl, dm]);
                mv.extend([ds.unwrap(), dm]);
                sc = Some((ShortcutType::B, vec![j, ds.unwrap(), mid[w]]));
            } else {
                gv.extend([dm, dl]);
                mv.push(dm);
                sc = Some((ShortcutType::A, vec![j, mid[w]]));
            }
            lv.extend([j, dl]);
        }
        gv.extend([x.dx, w]);
        if x.head_side == Side::Right {
            mv.push(dxm[w]);
        }
        mv.push(m_at(w, x.head_side));
        lv.push(l_at(w, x.head_side));
        g_curves.push(b.curve(gv, OffsetEdgeKind::Original(e)));
        m_curves.push(b.curve(mv, OffsetEdgeKind::MCopy(e)));
        l_curves.push(b.curve(lv, OffsetEdgeKind::LCopy(e)));
        shortcuts.push(sc.map(|(t, vs)| (t, b.curve(vs, OffsetEdgeKind::Shortcut(e)))));
    }

    let mut crossovers = Vec::with_capacity(n);
    for w in 0..n {
        let li = cls.edge(w, Role::LeftIn);
        let ri = cls.edge(w, Role::RightIn);
        let vs = vec![l_left[w], ev[li].dx, mid[w], ev[ri].dx, dxm[w], l_right[w]];
        crossovers.push(b.curve(vs, OffsetEdgeKind::Crossover(w)));
    }

    // rotations
    let total = b.kinds.len();
    let mut rot: Vec<Vec<EdgeEnd>> = vec![Vec::new(); total];
    for v in 0..n {
        rot[v] = g
            .rotation(v)
            .iter()
            .map(|end| {
                let c = &g_curves[end.edge];
                if end.is_tail() {
                    c.first_out()
                } else {
                    c.last_in()
                }
            })
            .collect();
        let e = |r: Role| cls.edge(v, r);
        rot[m_left[v]] = vec![m_curves[e(Role::LeftOut)].first_out(), m_curves[e(Role::LeftIn)].last_in()];
        rot[m_right[v]] = vec![m_curves[e(Role::RightOut)].first_out(), m_curves[e(Role::RightIn)].last_in()];
        let x = &crossovers[v];
        rot[l_left[v]] =
            vec![l_curves[e(Role::LeftOut)].first_out(), x.first_out(), l_curves[e(Role::LeftIn)].last_in()];
        rot[l_right[v]] =
            vec![l_curves[e(Role::RightOut)].first_out(), l_curves[e(Role::RightIn)].last_in(), x.last_in()];
        let (x_in, x_out) = x.through(mid[v]);
        let mut r = vec![x_in, x_out];
        if let Some((ShortcutType::B, s)) = &shortcuts[e(Role::RightIn)] {
            r.push(s.last_in());
        }
        if let Some((ShortcutType::A, s)) = &shortcuts[e(Role::LeftIn)] {
            r.push(s.last_in());
        }
        rot[mid[v]] = r;
        rot[dxm[v]] = crossing_rotation(&m_curves[e(Role::RightIn)], x, dxm[v], true);
    }
    for (e, x) in ev.iter().enumerate() {
        let w = g.edge(e).head;
        rot[x.dx] = crossing_rotation(&g_curves[e], &crossovers[w], x.dx, true);
        if let Some((dl, dm, j, ds)) = x.switch {
            let l_to_r = x.tail_side == Side::Left;
            rot[dl] = crossing_rotation(&g_curves[e], &l_curves[e], dl, l_to_r);
            rot[dm] = crossing_rotation(&g_curves[e], &m_curves[e], dm, l_to_r);
            let (ty, s) = shortcuts[e].as_ref().unwrap();
            let (l_in, l_out) = l_curves[e].through(j);
            rot[j] = match ty {
                ShortcutType::A => vec![l_in, l_out, s.first_out()],
                ShortcutType::B => vec![l_in, s.first_out(), l_out],
            };
            if let Some(ds) = ds {
                rot[ds] = crossing_rotation(&m_curves[e], s, ds, false);
            }
        }
    }

    let graph = EmbeddedDigraph::new(rot, b.edges).expect("offset rotation system is well formed");
    let concat = |curves: &[Curve], c: &crate::osculating::OsculatingCircuit| -> Vec<EdgeId> {
        c.edges.iter().flat_map(|&e| curves[e].edges.iter().copied()).collect()
    };
    let m_cycles = p.circuits.iter().map(|c| concat(&m_curves, c)).collect();
    let l_cycles = p.circuits.iter().map(|c| concat(&l_curves, c)).collect();
    let crossover_edge_dummy = ev.iter().map(|x| x.dx).collect();
    OffsetGraph {
        graph,
        vertex_kinds: b.kinds,
        edge_kinds: b.edge_kinds,
        g_curves,
        m_curves,
        l_curves,
        crossovers,
        shortcuts,
        m_cycles,
        l_cycles,
        m_left,
        l_left,
        m_right,
        l_right,
        crossover_mid: mid,
        crossover_m_dummy: dxm,
        crossover_edge_dummy,
    }
}

/// Vertex bound: 7 per G-vertex (original, four copies, crossover midpoint,
/// crossover dummy on the M-copy) plus at most 5 per G-edge.
pub fn vertex_bound(g: &EmbeddedDigraph) -> usize {
    7 * g.num_vertices() + 5 * g.num_edges()
}

/// Edge bound: 5 crossover segments per G-vertex plus at most 13 segments per
/// G-edge (4 on the edge, 4 on its M-copy, 3 on its L-copy, 2 on the shortcut).
pub fn edge_bound(g: &EmbeddedDigraph) -> usize {
    5 * g.num_vertices() + 13 * g.num_edges()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::classify_edge_ends;
    use crate::io::generate::{one_vertex, torchon};
    use crate::osculating::osculating_partition;

    fn offset_of(g: &EmbeddedDigraph) -> OffsetGraph {
        let cls = classify_edge_ends(g).unwrap();
        let p = osculating_partition(g, &cls);
        build_offset(g, &cls, &p)
    }

    #[test]
    fn one_vertex_offset_is_toroidal() {
        let o = offset_of(&one_vertex());
        assert_eq!(o.graph.euler_characteristic(), 0);
        assert_eq!(o.m_cycles.len(), 1);
        assert_eq!(o.m_curves.len(), 2);
        assert!(o.num_vertices() <= vertex_bound(&one_vertex()));
    }

    #[test]
    fn torchon_offset_counts() {
        for k in 2..5 {
            let g = torchon(k);
            let o = offset_of(&g);
            assert_eq!(o.graph.euler_characteristic(), 0, "k = {k}");
            assert_eq!(o.m_cycles.len(), k);
            assert_eq!(o.crossovers.len(), k * k);
            assert_eq!(o.num_vertices(), 16 * k * k);
            assert!(o.num_edges() <= edge_bound(&g));
        }
    }

    #[test]
    fn dummies_have_degree_four() {
        let o = offset_of(&torchon(3));
        for (v, k) in o.vertex_kinds.iter().enumerate() {
            if k.is_dummy() {
                assert_eq!(o.graph.degree(v), 4);
            }
        }
    }
}
