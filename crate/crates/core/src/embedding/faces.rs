use serde::{Deserialize, Serialize};

use super::{EdgeEnd, EdgeId, EmbeddedDigraph, Polarity, VertexId};

/// One traversal of an edge. `forward` means tail to head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub edge: EdgeId,
    pub forward: bool,
}

impl Dart {
    pub fn forward(edge: EdgeId) -> Self {
        Dart { edge, forward: true }
    }

    pub fn backward(edge: EdgeId) -> Self {
        Dart { edge, forward: false }
    }

    pub fn reversed(self) -> Self {
        Dart { edge: self.edge, forward: !self.forward }
    }

    /// The edge-end the dart leaves from.
    pub fn departure(self) -> EdgeEnd {
        if self.forward {
            EdgeEnd::tail(self.edge)
        } else {
            EdgeEnd::head(self.edge)
        }
    }

    /// The edge-end the dart arrives through.
    pub fn arrival(self) -> EdgeEnd {
        self.departure().opposite()
    }

    pub fn from_departure(end: EdgeEnd) -> Self {
        Dart { edge: end.edge, forward: end.polarity == Polarity::Tail }
    }

    pub fn source(self, g: &EmbeddedDigraph) -> VertexId {
        g.vertex_of(self.departure())
    }

    pub fn target(self, g: &EmbeddedDigraph) -> VertexId {
        g.vertex_of(self.arrival())
    }
}

/// Reverse a closed walk given as a dart sequence.
pub fn reverse_walk(walk: &[Dart]) -> Vec<Dart> {
    walk.iter().rev().map(|d| d.reversed()).collect()
}

/// The boundary walk of one face. The face lies to the left of every dart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacialWalk {
    pub sides: Vec<Dart>,
}

impl FacialWalk {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    /// All sides traversed in edge orientation, or all against it.
    pub fn is_directed_circuit(&self) -> bool {
        let fwd = self.sides.iter().filter(|d| d.forward).count();
        fwd == self.sides.len() || fwd == 0
    }
}

/// Facial walks of an embedding plus the face owning every dart.
#[derive(Clone, Debug)]
pub struct Faces {
    pub walks: Vec<FacialWalk>,
    /// Indexed by the departure end index of a dart.
    pub dart_face: Vec<usize>,
}

impl Faces {
    /// Standard face tracing: after arriving at a vertex through end `h`, leave
    /// along the clockwise successor of `h`.
    pub fn trace(g: &EmbeddedDigraph) -> Faces {
        let ends = 2 * g.num_edges();
        let mut dart_face = vec![usize::MAX; ends];
        let mut walks = Vec::new();
        for start in 0..ends {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let face = walks.len();
            let mut sides = Vec::new();
            let mut cur = EdgeEnd::from_index(start);
            loop {
                dart_face[cur.index()] = face;
                sides.push(Dart::from_departure(cur));
                cur = g.succ(cur.opposite());
                if cur.index() == start {
                    break;
                }
            }
            walks.push(FacialWalk { sides });
        }
        Faces { walks, dart_face }
    }

    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn face_of(&self, dart: Dart) -> usize {
        self.dart_face[dart.departure().index()]
    }

    /// Face on the left of edge `e` (walking tail to head).
    pub fn left_face(&self, e: EdgeId) -> usize {
        self.face_of(Dart::forward(e))
    }

    /// Face on the right of edge `e` (walking tail to head).
    pub fn right_face(&self, e: EdgeId) -> usize {
        self.face_of(Dart::backward(e))
    }
}

pub fn facial_walks(g: &EmbeddedDigraph) -> Vec<FacialWalk> {
    Faces::trace(g).walks
}
