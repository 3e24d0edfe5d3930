//! Checks on a finished drawing.

use std::cmp::Ordering;
use std::collections::VecDeque;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::barycentric::{draw, PeriodicDrawing, Point};
use super::cut::{Place, RectangleGraph};
use super::overlay::TorusOverlay;
use crate::embedding::{EdgeId, EmbeddedDigraph};
use crate::osculating::OsculatingPartition;
use crate::par;

type IPoint = (BigInt, BigInt);

fn orient(a: &IPoint, b: &IPoint, c: &IPoint) -> Ordering {
    let v = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
    v.sign().cmp(&Sign::NoSign)
}

fn dot(a: &IPoint, b: &IPoint, c: &IPoint) -> BigInt {
    (&b.0 - &a.0) * (&c.0 - &a.0) + (&b.1 - &a.1) * (&c.1 - &a.1)
}

/// Whether `p` lies on the closed segment `ab`, given it is collinear with it.
fn within(a: &IPoint, b: &IPoint, p: &IPoint) -> bool {
    let (lo_x, hi_x) = if a.0 <= b.0 { (&a.0, &b.0) } else { (&b.0, &a.0) };
    let (lo_y, hi_y) = if a.1 <= b.1 { (&a.1, &b.1) } else { (&b.1, &a.1) };
    lo_x <= &p.0 && &p.0 <= hi_x && lo_y <= &p.1 && &p.1 <= hi_y
}

fn segments_touch(a: &IPoint, b: &IPoint, c: &IPoint, d: &IPoint) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    use Ordering::Equal;
    if o1 != o2 && o3 != o4 && o1 != Equal && o2 != Equal && o3 != Equal && o4 != Equal {
        return true;
    }
    (o1 == Equal && within(a, b, c))
        || (o2 == Equal && within(a, b, d))
        || (o3 == Equal && within(c, d, a))
        || (o4 == Equal && within(c, d, b))
}

/// The same points scaled by the lcm of all denominators, so the predicates
/// run on integers.
fn to_integers(coords: &[Point]) -> Vec<IPoint> {
    let lcm = coords.iter().fold(BigInt::one(), |l, (x, y)| l.lcm(x.denom()).lcm(y.denom()));
    let scale = |v: &BigRational| v.numer() * (&lcm / v.denom());
    coords.iter().map(|(x, y)| (scale(x), scale(y))).collect()
}

/// Pairs of edges whose straight segments meet anywhere other than at a
/// common endpoint, plus degenerate single edges reported as `(e, e)`.
pub fn improper_crossings(g: &EmbeddedDigraph, coords: &[Point], parallel: bool) -> Vec<(EdgeId, EdgeId)> {
    let pts = to_integers(coords);
    let edges = g.edges();
    let x_range = |e: EdgeId| {
        let (a, b) = (&pts[edges[e].tail].0, &pts[edges[e].head].0);
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    };
    // sweep order: only edges whose x-ranges overlap are compared
    let mut order: Vec<EdgeId> = (0..edges.len()).collect();
    order.sort_by(|&i, &j| x_range(i).0.cmp(x_range(j).0).then(i.cmp(&j)));
    let positions: Vec<usize> = (0..order.len()).collect();
    let per_edge = par::map(&positions, parallel, |&pos| {
        let i = order[pos];
        let ei = edges[i];
        let (a, b) = (&pts[ei.tail], &pts[ei.head]);
        let mut bad = Vec::new();
        if ei.tail == ei.head || a == b {
            bad.push((i, i));
            return bad;
        }
        let hi = x_range(i).1;
        for &j in &order[pos + 1..] {
            if x_range(j).0 > hi {
                break;
            }
            let ej = edges[j];
            let (c, d) = (&pts[ej.tail], &pts[ej.head]);
            let shared: Vec<(usize, usize)> =
                [(ei.tail, ej.tail), (ei.tail, ej.head), (ei.head, ej.tail), (ei.head, ej.head)]
                    .into_iter()
                    .filter(|(x, y)| x == y)
                    .collect();
            let improper = match shared.len() {
                0 => segments_touch(a, b, c, d),
                1 => {
                    let s = shared[0].0;
                    let p = &pts[s];
                    let q = if ei.tail == s { b } else { a };
                    let r = if ej.tail == s { d } else { c };
                    orient(p, q, r) == Ordering::Equal && dot(p, q, r).is_positive()
                }
                _ => true,
            };
            if improper {
                bad.push((i.min(j), i.max(j)));
            }
        }
        bad
    });
    let mut all: Vec<(EdgeId, EdgeId)> = per_edge.into_iter().flatten().collect();
    all.sort_unstable();
    all
}

/// Net (vertical, horizontal) boundary wraps of every G-edge: +1 vertically
/// when it leaves through the top and re-enters at the bottom, +1
/// horizontally when it leaves through the right side.
pub fn edge_shifts(t: &TorusOverlay, r: &RectangleGraph) -> Vec<(i64, i64)> {
    t.g_pieces
        .iter()
        .map(|pieces| {
            let (mut dy, mut dx) = (0, 0);
            for w in pieces.windows(2) {
                let arrive = r.end_copy[crate::embedding::EdgeEnd::head(w[0]).index()].unwrap();
                let leave = r.end_copy[crate::embedding::EdgeEnd::tail(w[1]).index()].unwrap();
                let (pa, pl) = (r.places[r.graph.vertex_of(arrive)], r.places[r.graph.vertex_of(leave)]);
                match (pa, pl) {
                    (Place::Top(_), Place::Bottom(_)) => dy += 1,
                    (Place::Bottom(_), Place::Top(_)) => dy -= 1,
                    (Place::Right(_), Place::Left(_)) => dx += 1,
                    (Place::Left(_), Place::Right(_)) => dx -= 1,
                    _ => {}
                }
            }
            (dy, dx)
        })
        .collect()
}

/// (vertical, horizontal) wrap of every osculating circuit.
pub fn circuit_wraps(p: &OsculatingPartition, shifts: &[(i64, i64)]) -> Vec<(i64, i64)> {
    p.circuits.iter().map(|c| c.edges.iter().fold((0, 0), |(y, x), &e| (y + shifts[e].0, x + shifts[e].1))).collect()
}

/// Every circuit wraps (±1, 0), with one sign for all of them.
pub fn wraps_ok(wraps: &[(i64, i64)]) -> bool {
    wraps.iter().all(|&(y, x)| y.abs() == 1 && x == 0) && wraps.windows(2).all(|w| w[0] == w[1])
}

/// Whether the `k × k` array of translated copies of G, joined along the
/// given shifts, is acyclic. Edges leaving the array are dropped.
pub fn lift_is_acyclic(g: &EmbeddedDigraph, shifts: &[(i64, i64)], k: usize) -> bool {
    let n = g.num_vertices();
    let idx = |v: usize, cy: i64, cx: i64| -> Option<usize> {
        (0..k as i64).contains(&cy).then_some(())?;
        (0..k as i64).contains(&cx).then_some(())?;
        Some((cy as usize * k + cx as usize) * n + v)
    };
    let total = n * k * k;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut indeg = vec![0usize; total];
    for cy in 0..k as i64 {
        for cx in 0..k as i64 {
            for (e, edge) in g.edges().iter().enumerate() {
                let from = idx(edge.tail, cy, cx).unwrap();
                if let Some(to) = idx(edge.head, cy + shifts[e].0, cx + shifts[e].1) {
                    adj[from].push(to);
                    indeg[to] += 1;
                }
            }
        }
    }
    let mut queue: VecDeque<usize> = (0..total).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for &w in &adj[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    seen == total
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingReport {
    pub improper_crossings: usize,
    /// Up to ten offending rectangle edge pairs.
    pub crossing_witnesses: Vec<(EdgeId, EdgeId)>,
    pub twins_match: bool,
    /// (vertical, horizontal) per circuit.
    pub wraps: Vec<(i64, i64)>,
    pub wraps_ok: bool,
    pub lift_size: usize,
    pub lift_acyclic: bool,
    pub perturbation: u32,
}

impl DrawingReport {
    pub fn passed(&self) -> bool {
        self.improper_crossings == 0 && self.twins_match && self.wraps_ok && self.lift_acyclic
    }
}

pub fn twins_match(r: &RectangleGraph, d: &PeriodicDrawing) -> bool {
    r.vertical_twins().all(|(b, t)| d.coords[b].0 == d.coords[t].0)
        && r.horizontal_twins().all(|(l, rr)| d.coords[l].1 == d.coords[rr].1)
}

/// Boundary perturbation rounds tried before giving up on planarity.
pub const MAX_PERTURBATION: u32 = 3;

/// Draws, retrying with perturbed boundary spacing while segments cross, and
/// runs every drawing check.
pub fn draw_and_verify(
    g: &EmbeddedDigraph,
    p: &OsculatingPartition,
    t: &TorusOverlay,
    r: &RectangleGraph,
    width: &BigRational,
    height: &BigRational,
    parallel: bool,
) -> Result<(PeriodicDrawing, DrawingReport), super::DrawError> {
    let mut round = 0;
    let (d, bad) = loop {
        let d = draw(r, width, height, round, parallel)?;
        let bad = improper_crossings(&r.graph, &d.coords, parallel);
        if bad.is_empty() || round == MAX_PERTURBATION {
            break (d, bad);
        }
        round += 1;
    };
    let shifts = edge_shifts(t, r);
    let wraps = circuit_wraps(p, &shifts);
    let k = g.num_vertices() + 1;
    let report = DrawingReport {
        improper_crossings: bad.len(),
        crossing_witnesses: bad.iter().take(10).copied().collect(),
        twins_match: twins_match(r, &d),
        wraps_ok: wraps_ok(&wraps),
        wraps,
        lift_size: k,
        lift_acyclic: lift_is_acyclic(g, &shifts, k),
        perturbation: d.perturbation,
    };
    Ok((d, report))
}
