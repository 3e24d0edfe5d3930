//! Cutting the torus overlay along L and then M into a planar rectangle.
//!
//! L becomes the bottom and top sides (both traversed left to right), M the
//! left and right sides (both traversed bottom to top). The four corners are
//! the four images of the M∩L crossing.

use serde::{Deserialize, Serialize};

use super::overlay::{OverlayEdgeKind, TorusOverlay};
use crate::embedding::{Edge, EdgeEnd, EdgeId, EmbeddedDigraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Corner {
    BottomLeft,
    BottomRight,
    TopLeft,
    TopRight,
}

/// Where a rectangle vertex sits. Boundary indices count overlay edges along
/// L (bottom/top) or M (left/right) from the crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "side", content = "index", rename_all = "snake_case")]
pub enum Place {
    Interior,
    Bottom(usize),
    Top(usize),
    Left(usize),
    Right(usize),
    Corner(Corner),
}

#[derive(Clone, Debug)]
pub struct RectangleGraph {
    pub graph: EmbeddedDigraph,
    /// Overlay vertex behind each rectangle vertex.
    pub overlay_vertex: Vec<VertexId>,
    pub places: Vec<Place>,
    /// Overlay edge behind each rectangle edge.
    pub overlay_edge: Vec<EdgeId>,
    /// Number of overlay edges on L and on M.
    pub l_len: usize,
    pub m_len: usize,
    /// Rectangle vertices along each side, corners included, in increasing
    /// coordinate order.
    pub bottom: Vec<VertexId>,
    pub top: Vec<VertexId>,
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
    /// Rectangle copy of every overlay end that is not on M or L, indexed by
    /// overlay end index.
    pub end_copy: Vec<Option<EdgeEnd>>,
}

impl RectangleGraph {
    /// (bottom, top) twin pairs, corners excluded.
    pub fn vertical_twins(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.bottom[1..self.l_len].iter().copied().zip(self.top[1..self.l_len].iter().copied())
    }

    /// (left, right) twin pairs, corners excluded.
    pub fn horizontal_twins(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.left[1..self.m_len].iter().copied().zip(self.right[1..self.m_len].iter().copied())
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.places[v] != Place::Interior
    }
}

/// Offset of `x` clockwise from `from` at a vertex of degree `k`.
fn cw(g: &EmbeddedDigraph, from: EdgeEnd, x: EdgeEnd) -> usize {
    let k = g.degree(g.vertex_of(from));
    (g.slot_of(x) + k - g.slot_of(from)) % k
}

pub fn cut(t: &TorusOverlay) -> RectangleGraph {
    let og = &t.graph;
    let (b, a) = (t.longitude.len(), t.meridian.len());
    let nv = og.num_vertices();
    let mut l_index = vec![usize::MAX; nv];
    let mut m_index = vec![usize::MAX; nv];
    for (i, &e) in t.longitude.iter().enumerate() {
        l_index[og.edge(e).tail] = i;
    }
    for (j, &e) in t.meridian.iter().enumerate() {
        m_index[og.edge(e).tail] = j;
    }
    let x = t.crossing;

    // rectangle vertices
    let mut overlay_vertex = Vec::new();
    let mut places = Vec::new();
    let mut add = |v: VertexId, p: Place| {
        overlay_vertex.push(v);
        places.push(p);
        overlay_vertex.len() - 1
    };
    let mut copies: Vec<[usize; 4]> = vec![[usize::MAX; 4]; nv];
    // G-vertices first so their rectangle ids equal their G ids
    for v in 0..nv {
        if v == x {
            continue;
        }
        if l_index[v] != usize::MAX {
            let i = l_index[v];
            copies[v] = [add(v, Place::Bottom(i)), add(v, Place::Top(i)), usize::MAX, usize::MAX];
        } else if m_index[v] != usize::MAX {
            let j = m_index[v];
            copies[v] = [add(v, Place::Left(j)), add(v, Place::Right(j)), usize::MAX, usize::MAX];
        } else {
            copies[v][0] = add(v, Place::Interior);
        }
    }
    let corner_ids = [
        add(x, Place::Corner(Corner::BottomLeft)),
        add(x, Place::Corner(Corner::BottomRight)),
        add(x, Place::Corner(Corner::TopLeft)),
        add(x, Place::Corner(Corner::TopRight)),
    ];
    let [bl, br, tl, tr] = corner_ids;

    let l_in = |i: usize| EdgeEnd::head(t.longitude[(i + b - 1) % b]);
    let l_out = |i: usize| EdgeEnd::tail(t.longitude[i]);
    let m_in = |j: usize| EdgeEnd::head(t.meridian[(j + a - 1) % a]);
    let m_out = |j: usize| EdgeEnd::tail(t.meridian[j]);

    // which copy of its vertex an overlay end attaches to
    let copy_of = |h: EdgeEnd| -> VertexId {
        let v = og.vertex_of(h);
        if v == x {
            let (mo, lo, mi) = (cw(og, l_in(0), m_out(0)), cw(og, l_in(0), l_out(0)), cw(og, l_in(0), m_in(0)));
            let off = cw(og, l_in(0), h);
            return if off < mo {
                br
            } else if off < lo {
                bl
            } else if off < mi {
                tl
            } else {
                tr
            };
        }
        if l_index[v] != usize::MAX {
            let i = l_index[v];
            let left = cw(og, l_in(i), h) < cw(og, l_in(i), l_out(i));
            return if left { copies[v][0] } else { copies[v][1] };
        }
        if m_index[v] != usize::MAX {
            let j = m_index[v];
            let left = cw(og, m_in(j), h) < cw(og, m_in(j), m_out(j));
            return if left { copies[v][1] } else { copies[v][0] };
        }
        copies[v][0]
    };

    let nr = overlay_vertex.len();
    let mut edges = Vec::new();
    let mut overlay_edge = Vec::new();
    let mut end_copy = vec![None; 2 * og.num_edges()];
    let mut ends_at: Vec<Vec<(EdgeEnd, EdgeEnd)>> = vec![Vec::new(); nr]; // (overlay end, rect end)
    let mut push = |tail: VertexId, head: VertexId, oe: EdgeId, edges: &mut Vec<Edge>| {
        edges.push(Edge { tail, head });
        overlay_edge.push(oe);
        edges.len() - 1
    };
    for (e, kind) in t.kinds.iter().enumerate() {
        if let OverlayEdgeKind::G(_) = kind {
            let (ht, hh) = (EdgeEnd::tail(e), EdgeEnd::head(e));
            let (ct, ch) = (copy_of(ht), copy_of(hh));
            let r = push(ct, ch, e, &mut edges);
            end_copy[ht.index()] = Some(EdgeEnd::tail(r));
            end_copy[hh.index()] = Some(EdgeEnd::head(r));
            ends_at[ct].push((ht, EdgeEnd::tail(r)));
            ends_at[ch].push((hh, EdgeEnd::head(r)));
        }
    }
    // boundary paths
    let mut bottom_edges = Vec::with_capacity(b);
    let mut top_edges = Vec::with_capacity(b);
    for (i, &e) in t.longitude.iter().enumerate() {
        let Edge { tail, head } = og.edge(e);
        let bt = if i == 0 { bl } else { copies[tail][0] };
        let tt = if i == 0 { tl } else { copies[tail][1] };
        let bh = if head == x { br } else { copies[head][0] };
        let th = if head == x { tr } else { copies[head][1] };
        bottom_edges.push(push(bt, bh, e, &mut edges));
        top_edges.push(push(tt, th, e, &mut edges));
    }
    let mut left_edges = Vec::with_capacity(a);
    let mut right_edges = Vec::with_capacity(a);
    for (j, &e) in t.meridian.iter().enumerate() {
        let Edge { tail, head } = og.edge(e);
        let lt = if j == 0 { bl } else { copies[tail][0] };
        let rt = if j == 0 { br } else { copies[tail][1] };
        let lh = if head == x { tl } else { copies[head][0] };
        let rh = if head == x { tr } else { copies[head][1] };
        left_edges.push(push(lt, lh, e, &mut edges));
        right_edges.push(push(rt, rh, e, &mut edges));
    }

    // rotations
    let mut rotations: Vec<Vec<EdgeEnd>> = vec![Vec::new(); nr];
    let interior_ends = |v: VertexId, from: EdgeEnd, to: EdgeEnd, r: VertexId| -> Vec<EdgeEnd> {
        // overlay ends strictly clockwise between `from` and `to`, mapped to copies at r
        let rot = og.rotation(v);
        let k = rot.len();
        let start = og.slot_of(from);
        let stop = cw(og, from, to);
        (1..stop)
            .map(|d| rot[(start + d) % k])
            .filter_map(|h| ends_at[r].iter().find(|(oe, _)| *oe == h).map(|&(_, re)| re))
            .collect()
    };
    for v in 0..nv {
        if v == x {
            continue;
        }
        if l_index[v] != usize::MAX {
            let i = l_index[v];
            let (ai, bi) = (l_in(i), l_out(i));
            let (bc, tc) = (copies[v][0], copies[v][1]);
            let mut r = vec![EdgeEnd::head(bottom_edges[i - 1])];
            r.extend(interior_ends(v, ai, bi, bc));
            r.push(EdgeEnd::tail(bottom_edges[i]));
            rotations[bc] = r;
            let mut r = vec![EdgeEnd::tail(top_edges[i])];
            r.extend(interior_ends(v, bi, ai, tc));
            r.push(EdgeEnd::head(top_edges[i - 1]));
            rotations[tc] = r;
        } else if m_index[v] != usize::MAX {
            let j = m_index[v];
            let (aj, bj) = (m_in(j), m_out(j));
            let (lc, rc) = (copies[v][0], copies[v][1]);
            let mut r = vec![EdgeEnd::tail(left_edges[j])];
            r.extend(interior_ends(v, bj, aj, lc));
            r.push(EdgeEnd::head(left_edges[j - 1]));
            rotations[lc] = r;
            let mut r = vec![EdgeEnd::head(right_edges[j - 1])];
            r.extend(interior_ends(v, aj, bj, rc));
            r.push(EdgeEnd::tail(right_edges[j]));
            rotations[rc] = r;
        } else {
            let c = copies[v][0];
            rotations[c] = og.rotation(v).iter().map(|h| end_copy[h.index()].unwrap()).collect();
        }
    }
    let (li, lo, mi, mo) = (l_in(0), l_out(0), m_in(0), m_out(0));
    let mut r = vec![EdgeEnd::tail(left_edges[0])];
    r.extend(interior_ends(x, mo, lo, bl));
    r.push(EdgeEnd::tail(bottom_edges[0]));
    rotations[bl] = r;
    let mut r = vec![EdgeEnd::head(bottom_edges[b - 1])];
    r.extend(interior_ends(x, li, mo, br));
    r.push(EdgeEnd::tail(right_edges[0]));
    rotations[br] = r;
    let mut r = vec![EdgeEnd::tail(top_edges[0])];
    r.extend(interior_ends(x, lo, mi, tl));
    r.push(EdgeEnd::head(left_edges[a - 1]));
    rotations[tl] = r;
    let mut r = vec![EdgeEnd::head(right_edges[a - 1])];
    r.extend(interior_ends(x, mi, li, tr));
    r.push(EdgeEnd::head(top_edges[b - 1]));
    rotations[tr] = r;

    let path = |es: &[EdgeId], first: VertexId| -> Vec<VertexId> {
        let mut vs = vec![first];
        vs.extend(es.iter().map(|&e| edges[e].head));
        vs
    };
    let bottom = path(&bottom_edges, bl);
    let top = path(&top_edges, tl);
    let left = path(&left_edges, bl);
    let right = path(&right_edges, br);
    let graph = EmbeddedDigraph::new(rotations, edges).expect("rectangle graph is well formed");
    RectangleGraph {
        graph,
        overlay_vertex,
        places,
        overlay_edge,
        l_len: b,
        m_len: a,
        bottom,
        top,
        left,
        right,
        end_copy,
    }
}
