//! The lace-pattern conditions on a fixed embedding.
//!
//! * C1: every vertex has in-degree 2 and out-degree 2.
//! * C2: the rotation system is a connected toroidal embedding (`V - E + F = 0`)
//!   and every facial walk has at least 3 sides.
//! * C3': the two outgoing ends at every vertex are rotationally consecutive.
//! * C3: no directed circuit is contractible. On a toroidal 2-2-regular
//!   embedding this holds iff no facial walk is a directed circuit, which is
//!   what [`check_c3`] tests.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::faces::Faces;
use super::{EdgeEnd, EdgeId, EmbeddedDigraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Offending vertex ids (C1, C3') or face ids (C3).
    pub offenders: Vec<usize>,
}

impl CheckOutcome {
    fn from_offenders(offenders: Vec<usize>) -> Self {
        CheckOutcome { passed: offenders.is_empty(), offenders }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCheck {
    pub passed: bool,
    pub connected: bool,
    pub face_count: usize,
    pub euler_characteristic: i64,
    /// Face ids whose walks have fewer than 3 sides.
    pub short_faces: Vec<usize>,
}

pub fn check_c1(g: &EmbeddedDigraph) -> CheckOutcome {
    let offenders = (0..g.num_vertices()).filter(|&v| g.in_degree(v) != 2 || g.out_degree(v) != 2).collect();
    CheckOutcome::from_offenders(offenders)
}

pub fn check_c2(g: &EmbeddedDigraph) -> FaceCheck {
    let faces = Faces::trace(g);
    let face_count = faces.len();
    let euler_characteristic = g.num_vertices() as i64 - g.num_edges() as i64 + face_count as i64;
    let short_faces: Vec<usize> = faces.walks.iter().enumerate().filter(|(_, w)| w.len() < 3).map(|(i, _)| i).collect();
    let connected = g.is_connected();
    FaceCheck {
        passed: connected && euler_characteristic == 0 && short_faces.is_empty(),
        connected,
        face_count,
        euler_characteristic,
        short_faces,
    }
}

pub fn check_c3_prime(g: &EmbeddedDigraph) -> CheckOutcome {
    let offenders = (0..g.num_vertices()).filter(|&v| !outgoing_consecutive(g.rotation(v))).collect();
    CheckOutcome::from_offenders(offenders)
}

fn outgoing_consecutive(rot: &[EdgeEnd]) -> bool {
    let k = rot.len();
    if k != 4 {
        return false;
    }
    (0..k).any(|i| rot[i].is_tail() && rot[(i + 1) % k].is_tail())
}

/// Face ids whose facial walk is a directed circuit (in either traversal direction).
pub fn directed_faces(g: &EmbeddedDigraph) -> Vec<usize> {
    Faces::trace(g).walks.iter().enumerate().filter(|(_, w)| w.is_directed_circuit()).map(|(i, _)| i).collect()
}

pub fn check_c3(g: &EmbeddedDigraph) -> CheckOutcome {
    CheckOutcome::from_offenders(directed_faces(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    LeftOut,
    RightOut,
    RightIn,
    LeftIn,
}

impl Role {
    /// Clockwise order starting at the left outgoing end.
    pub const CLOCKWISE: [Role; 4] = [Role::LeftOut, Role::RightOut, Role::RightIn, Role::LeftIn];

    pub fn is_left(self) -> bool {
        matches!(self, Role::LeftOut | Role::LeftIn)
    }

    pub fn is_out(self) -> bool {
        matches!(self, Role::LeftOut | Role::RightOut)
    }

    fn slot(self) -> usize {
        match self {
            Role::LeftOut => 0,
            Role::RightOut => 1,
            Role::RightIn => 2,
            Role::LeftIn => 3,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("vertex {0} does not have its two outgoing ends rotationally consecutive")]
    NotConsecutive(VertexId),
}

/// Left/right incoming/outgoing roles of every edge-end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEndClassification {
    /// Per vertex, the ends in order left-out, right-out, right-in, left-in.
    pub ends: Vec<[EdgeEnd; 4]>,
    roles: Vec<Role>,
}

impl EdgeEndClassification {
    pub fn end(&self, v: VertexId, role: Role) -> EdgeEnd {
        self.ends[v][role.slot()]
    }

    pub fn edge(&self, v: VertexId, role: Role) -> EdgeId {
        self.end(v, role).edge
    }

    pub fn role(&self, end: EdgeEnd) -> Role {
        self.roles[end.index()]
    }

    /// Role of edge `e` at its tail.
    pub fn tail_role(&self, e: EdgeId) -> Role {
        self.role(EdgeEnd::tail(e))
    }

    /// Role of edge `e` at its head.
    pub fn head_role(&self, e: EdgeId) -> Role {
        self.role(EdgeEnd::head(e))
    }
}

pub fn classify_edge_ends(g: &EmbeddedDigraph) -> Result<EdgeEndClassification, ClassifyError> {
    let mut ends = Vec::with_capacity(g.num_vertices());
    let mut roles = vec![Role::LeftOut; 2 * g.num_edges()];
    for v in 0..g.num_vertices() {
        let rot = g.rotation(v);
        if !outgoing_consecutive(rot) {
            return Err(ClassifyError::NotConsecutive(v));
        }
        // left-out is the tail-end whose clockwise successor is the other tail-end
        let start = (0..4).find(|&i| rot[i].is_tail() && rot[(i + 1) % 4].is_tail()).expect("checked above");
        let quad = [rot[start], rot[(start + 1) % 4], rot[(start + 2) % 4], rot[(start + 3) % 4]];
        for (role, end) in Role::CLOCKWISE.iter().zip(quad) {
            roles[end.index()] = *role;
        }
        ends.push(quad);
    }
    Ok(EdgeEndClassification { ends, roles })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub c1: CheckOutcome,
    /// `None` when not evaluated because an earlier check failed.
    pub c2: Option<FaceCheck>,
    pub c3prime: Option<CheckOutcome>,
    pub c3: Option<CheckOutcome>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.c1.passed
            && self.c2.as_ref().is_some_and(|c| c.passed)
            && self.c3prime.as_ref().is_some_and(|c| c.passed)
            && self.c3.as_ref().is_some_and(|c| c.passed)
    }
}

pub fn validate(g: &EmbeddedDigraph) -> ValidationReport {
    let c1 = check_c1(g);
    if !c1.passed {
        return ValidationReport { c1, c2: None, c3prime: None, c3: None };
    }
    let c2 = check_c2(g);
    let c3prime = check_c3_prime(g);
    let c3 = (c2.passed && c3prime.passed).then(|| check_c3(g));
    ValidationReport { c1, c2: Some(c2), c3prime: Some(c3prime), c3 }
}
