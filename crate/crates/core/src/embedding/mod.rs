//! Directed multigraphs with a fixed clockwise rotation system.
//!
//! An [`EmbeddedDigraph`] stores, for every vertex, the clockwise cyclic order
//! of the edge-ends incident to it. Every edge contributes exactly two ends:
//! its tail-end (outgoing at the tail vertex) and its head-end (incoming at the
//! head vertex). Loops contribute both ends to the same rotation list.
//!
//! The rotation system determines a cellular embedding on an orientable
//! surface; [`faces`] traces its facial walks and [`checks`] validates the
//! lace-pattern conditions on top of it.

pub mod checks;
pub mod faces;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use checks::{
    check_c1, check_c2, check_c3, check_c3_prime, classify_edge_ends, validate, CheckOutcome, EdgeEndClassification,
    FaceCheck, Role, ValidationReport,
};
pub use faces::{facial_walks, Dart, Faces, FacialWalk};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    /// Outgoing end, located at the edge's tail.
    Tail,
    /// Incoming end, located at the edge's head.
    Head,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    pub polarity: Polarity,
}

impl EdgeEnd {
    pub fn tail(edge: EdgeId) -> Self {
        EdgeEnd { edge, polarity: Polarity::Tail }
    }

    pub fn head(edge: EdgeId) -> Self {
        EdgeEnd { edge, polarity: Polarity::Head }
    }

    /// Dense index: `2 * edge` for the tail-end, `2 * edge + 1` for the head-end.
    #[inline]
    pub fn index(self) -> usize {
        2 * self.edge + usize::from(self.polarity == Polarity::Head)
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        let polarity = if i.is_multiple_of(2) { Polarity::Tail } else { Polarity::Head };
        EdgeEnd { edge: i / 2, polarity }
    }

    /// The other end of the same edge.
    #[inline]
    pub fn opposite(self) -> Self {
        let polarity = match self.polarity {
            Polarity::Tail => Polarity::Head,
            Polarity::Head => Polarity::Tail,
        };
        EdgeEnd { edge: self.edge, polarity }
    }

    pub fn is_tail(self) -> bool {
        self.polarity == Polarity::Tail
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} references vertex {vertex}, but only {num_vertices} vertices exist")]
    UnknownVertex { edge: EdgeId, vertex: VertexId, num_vertices: usize },
    #[error("rotation of vertex {vertex} references unknown edge {edge}")]
    UnknownEdge { vertex: VertexId, edge: EdgeId },
    #[error("edge-end {end:?} appears more than once in the rotation system")]
    DuplicateEnd { end: EdgeEnd },
    #[error("edge-end {end:?} is missing from the rotation system")]
    MissingEnd { end: EdgeEnd },
    #[error("edge-end {end:?} is listed at vertex {found}, but belongs at vertex {expected}")]
    MisplacedEnd { end: EdgeEnd, found: VertexId, expected: VertexId },
}

/// A directed multigraph together with a clockwise rotation system.
///
/// Immutable after construction; all derived lookups are precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedDigraph {
    rotations: Vec<Vec<EdgeEnd>>,
    edges: Vec<Edge>,
    // per end index: (vertex, position in that vertex's rotation)
    position: Vec<(VertexId, usize)>,
}

impl EmbeddedDigraph {
    pub fn new(rotations: Vec<Vec<EdgeEnd>>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let n = rotations.len();
        for (e, edge) in edges.iter().enumerate() {
            for v in [edge.tail, edge.head] {
                if v >= n {
                    return Err(GraphError::UnknownVertex { edge: e, vertex: v, num_vertices: n });
                }
            }
        }
        let mut position = vec![(usize::MAX, usize::MAX); 2 * edges.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, end) in rot.iter().enumerate() {
                if end.edge >= edges.len() {
                    return Err(GraphError::UnknownEdge { vertex: v, edge: end.edge });
                }
                let expected = match end.polarity {
                    Polarity::Tail => edges[end.edge].tail,
                    Polarity::Head => edges[end.edge].head,
                };
                if expected != v {
                    return Err(GraphError::MisplacedEnd { end: *end, found: v, expected });
                }
                let slot = &mut position[end.index()];
                if slot.0 != usize::MAX {
                    return Err(GraphError::DuplicateEnd { end: *end });
                }
                *slot = (v, i);
            }
        }
        if let Some(i) = position.iter().position(|p| p.0 == usize::MAX) {
            return Err(GraphError::MissingEnd { end: EdgeEnd::from_index(i) });
        }
        Ok(EmbeddedDigraph { rotations, edges, position })
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    pub fn rotations(&self) -> &[Vec<EdgeEnd>] {
        &self.rotations
    }

    /// Clockwise rotation at `v`.
    pub fn rotation(&self, v: VertexId) -> &[EdgeEnd] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    pub fn vertex_of(&self, end: EdgeEnd) -> VertexId {
        self.position[end.index()].0
    }

    /// Position of `end` within the rotation of its vertex.
    pub fn slot_of(&self, end: EdgeEnd) -> usize {
        self.position[end.index()].1
    }

    /// Clockwise successor of `end` around its vertex.
    pub fn succ(&self, end: EdgeEnd) -> EdgeEnd {
        let (v, i) = self.position[end.index()];
        let rot = &self.rotations[v];
        rot[(i + 1) % rot.len()]
    }

    /// Clockwise predecessor of `end` around its vertex.
    pub fn pred(&self, end: EdgeEnd) -> EdgeEnd {
        let (v, i) = self.position[end.index()];
        let rot = &self.rotations[v];
        rot[(i + rot.len() - 1) % rot.len()]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.rotations[v].iter().filter(|e| e.is_tail()).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.rotations[v].iter().filter(|e| !e.is_tail()).count()
    }

    /// Whether the underlying undirected graph is connected (an empty graph is not).
    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for end in &self.rotations[v] {
                let w = self.vertex_of(end.opposite());
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Euler characteristic `V - E + F` of the surface described by the rotation system.
    pub fn euler_characteristic(&self) -> i64 {
        let f = faces::Faces::trace(self).len();
        self.num_vertices() as i64 - self.num_edges() as i64 + f as i64
    }
}
