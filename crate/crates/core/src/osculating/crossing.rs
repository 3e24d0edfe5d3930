//! Algebraic crossing numbers of edge-disjoint closed walks.
//!
//! A walk crosses another left-to-right at a shared vertex when it arrives
//! from the other walk's left side and leaves to its right. The algebraic
//! crossing number counts left-to-right crossings minus right-to-left ones.
//! Every visit is treated independently, so a vertex visited twice by the same
//! walk may contribute twice.

use std::collections::HashMap;

use thiserror::Error;

use crate::embedding::{Dart, EdgeEndClassification, EdgeId, EmbeddedDigraph, Role, VertexId};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CrossingError {
    #[error("walks share edge {0}")]
    SharedEdge(EdgeId),
    #[error("walk is not closed at position {0}")]
    NotClosed(usize),
    #[error("walk traverses edge {0} against its orientation")]
    NotDirected(EdgeId),
}

/// One pass of a closed walk through a vertex: (vertex, arrival slot, departure slot).
type Visit = (VertexId, usize, usize);

fn visits(g: &EmbeddedDigraph, walk: &[Dart]) -> Result<Vec<Visit>, CrossingError> {
    let k = walk.len();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let (d, next) = (walk[i], walk[(i + 1) % k]);
        let v = d.target(g);
        if next.source(g) != v {
            return Err(CrossingError::NotClosed(i));
        }
        out.push((v, g.slot_of(d.arrival()), g.slot_of(next.departure())));
    }
    Ok(out)
}

fn check_disjoint(c1: &[Dart], c2: &[Dart]) -> Result<(), CrossingError> {
    let first: std::collections::HashSet<EdgeId> = c1.iter().map(|d| d.edge).collect();
    match c2.iter().find(|d| first.contains(&d.edge)) {
        Some(d) => Err(CrossingError::SharedEdge(d.edge)),
        None => Ok(()),
    }
}

/// Whether `x` lies strictly inside the clockwise arc from `from` to `to`.
#[inline]
fn in_arc(x: usize, from: usize, to: usize, k: usize) -> bool {
    let off = (x + k - from) % k;
    off != 0 && off < (to + k - from) % k
}

/// Signed crossing of visit `a` against visit `b` at a vertex of degree `k`:
/// +1 if `a` enters from the left of `b` and leaves to its right, -1 for the
/// reverse, 0 for touching visits.
fn visit_sign(a: (usize, usize), b: (usize, usize), k: usize) -> i64 {
    let arr_left = in_arc(a.0, b.0, b.1, k);
    let dep_left = in_arc(a.1, b.0, b.1, k);
    match (arr_left, dep_left) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

/// Algebraic crossing number from the rotation system alone; works for any
/// embedded graph and for walks that traverse edges in either direction.
pub fn algebraic_crossing_number(g: &EmbeddedDigraph, c1: &[Dart], c2: &[Dart]) -> Result<i64, CrossingError> {
    check_disjoint(c1, c2)?;
    let v1 = visits(g, c1)?;
    let v2 = visits(g, c2)?;
    let mut at: HashMap<VertexId, Vec<(usize, usize)>> = HashMap::new();
    for (v, a, d) in v2 {
        at.entry(v).or_default().push((a, d));
    }
    let mut total = 0;
    for (v, a, d) in v1 {
        if let Some(others) = at.get(&v) {
            let k = g.degree(v);
            total += others.iter().map(|&b| visit_sign((a, d), b, k)).sum::<i64>();
        }
    }
    Ok(total)
}

/// `algebraic_crossing_number(g, c, other)` for many `other` walks, indexing
/// `c` once so the total cost is linear in the combined length.
pub fn crossing_numbers_against(
    g: &EmbeddedDigraph,
    c: &[Dart],
    others: &[Vec<Dart>],
) -> Vec<Result<i64, CrossingError>> {
    let edges: std::collections::HashSet<EdgeId> = c.iter().map(|d| d.edge).collect();
    let at = match visits(g, c) {
        Ok(v) => {
            let mut at: HashMap<VertexId, Vec<(usize, usize)>> = HashMap::new();
            for (v, a, d) in v {
                at.entry(v).or_default().push((a, d));
            }
            at
        }
        Err(e) => return others.iter().map(|_| Err(e.clone())).collect(),
    };
    others
        .iter()
        .map(|other| {
            if let Some(d) = other.iter().find(|d| edges.contains(&d.edge)) {
                return Err(CrossingError::SharedEdge(d.edge));
            }
            let mut total = 0;
            for (v, a, d) in visits(g, other)? {
                if let Some(mine) = at.get(&v) {
                    let k = g.degree(v);
                    total += mine.iter().map(|&m| visit_sign(m, (a, d), k)).sum::<i64>();
                }
            }
            Ok(total)
        })
        .collect()
}

/// Algebraic crossing number of two directed walks in a lace graph, read off
/// the left/right edge roles: a walk crosses left-to-right where it uses the
/// left incoming and right outgoing ends while the other uses the remaining two.
pub fn crossing_number_by_roles(
    g: &EmbeddedDigraph,
    cls: &EdgeEndClassification,
    c1: &[Dart],
    c2: &[Dart],
) -> Result<i64, CrossingError> {
    check_disjoint(c1, c2)?;
    let roles = |walk: &[Dart]| -> Result<Vec<(VertexId, Role, Role)>, CrossingError> {
        let k = walk.len();
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            let (d, next) = (walk[i], walk[(i + 1) % k]);
            if !d.forward {
                return Err(CrossingError::NotDirected(d.edge));
            }
            let v = d.target(g);
            if next.source(g) != v {
                return Err(CrossingError::NotClosed(i));
            }
            out.push((v, cls.role(d.arrival()), cls.role(next.departure())));
        }
        Ok(out)
    };
    let r1 = roles(c1)?;
    let r2 = roles(c2)?;
    let mut at: HashMap<VertexId, Vec<(Role, Role)>> = HashMap::new();
    for (v, a, d) in r2 {
        at.entry(v).or_default().push((a, d));
    }
    let mut total = 0;
    for (v, a, d) in r1 {
        for &(a2, d2) in at.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            total += match (a, d, a2, d2) {
                (Role::LeftIn, Role::RightOut, Role::RightIn, Role::LeftOut) => 1,
                (Role::RightIn, Role::LeftOut, Role::LeftIn, Role::RightOut) => -1,
                _ => 0,
            };
        }
    }
    Ok(total)
}
