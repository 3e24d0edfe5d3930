//! First homology of a toroidal embedding via a tree-cotree decomposition.
//!
//! A spanning tree T of the graph and a spanning tree C of the dual (over
//! edges not in T) leave exactly two edges x0, x1 on a torus. For each x_k we
//! build an integer cocycle that is 0 on T, δ on the leftover edges, and sums
//! to zero around every face. Evaluating both on a closed walk gives its
//! homology class in the basis dual to the fundamental cycles of x0 and x1.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::OsculatingPartition;
use crate::embedding::{Dart, EdgeId, EmbeddedDigraph, Faces};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("embedding is not a torus (Euler characteristic {0})")]
    NotTorus(i64),
}

/// Homology class of a closed walk as coordinates in a fixed basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature(pub [i64; 2]);

impl Signature {
    pub fn negated(self) -> Self {
        Signature([-self.0[0], -self.0[1]])
    }

    pub fn is_zero(self) -> bool {
        self.0 == [0, 0]
    }

    /// Algebraic intersection number of two classes, up to one global sign
    /// fixed by the basis.
    pub fn pairing(self, other: Signature) -> i64 {
        self.0[0] * other.0[1] - self.0[1] * other.0[0]
    }

    /// The representative of `±self` whose first nonzero coordinate is positive.
    pub fn up_to_sign(self) -> Self {
        match self.0.iter().find(|&&c| c != 0) {
            Some(&c) if c < 0 => self.negated(),
            _ => self,
        }
    }
}

#[derive(Clone, Debug)]
pub struct HomologyBasis {
    /// The two leftover edges.
    pub generators: [EdgeId; 2],
    cochains: [Vec<i64>; 2],
}

impl HomologyBasis {
    pub fn tree_cotree(g: &EmbeddedDigraph) -> Result<Self, HomologyError> {
        if !g.is_connected() {
            return Err(HomologyError::Disconnected);
        }
        let m = g.num_edges();
        let faces = Faces::trace(g);
        let euler = g.num_vertices() as i64 - m as i64 + faces.len() as i64;
        if euler != 0 {
            return Err(HomologyError::NotTorus(euler));
        }

        // spanning tree by BFS
        let mut in_tree = vec![false; m];
        let mut seen = vec![false; g.num_vertices()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for end in g.rotation(v) {
                let w = g.vertex_of(end.opposite());
                if !seen[w] {
                    seen[w] = true;
                    in_tree[end.edge] = true;
                    queue.push_back(w);
                }
            }
        }

        // dual spanning tree over the remaining edges; parent_edge[f] links f to its parent
        let nf = faces.len();
        let mut parent_edge = vec![usize::MAX; nf];
        let mut in_cotree = vec![false; m];
        let mut order = Vec::with_capacity(nf);
        let mut seen = vec![false; nf];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(f) = queue.pop_front() {
            order.push(f);
            for d in &faces.walks[f].sides {
                if in_tree[d.edge] {
                    continue;
                }
                let h = faces.face_of(d.reversed());
                if !seen[h] {
                    seen[h] = true;
                    in_cotree[d.edge] = true;
                    parent_edge[h] = d.edge;
                    queue.push_back(h);
                }
            }
        }

        let leftover: Vec<EdgeId> = (0..m).filter(|&e| !in_tree[e] && !in_cotree[e]).collect();
        // Euler characteristic 0 and connectivity force exactly two.
        let generators = [leftover[0], leftover[1]];

        let solve = |k: usize| -> Vec<i64> {
            let mut phi = vec![0i64; m];
            phi[generators[k]] = 1;
            // leaves first: every other cotree edge at f is a child edge and already fixed
            for &f in order.iter().rev().filter(|&&f| f != 0) {
                let e = parent_edge[f];
                let mut sum = 0;
                let mut coeff = 0;
                for d in &faces.walks[f].sides {
                    let s = if d.forward { 1 } else { -1 };
                    if d.edge == e {
                        coeff += s;
                    } else {
                        sum += s * phi[d.edge];
                    }
                }
                debug_assert!(coeff == 1 || coeff == -1);
                phi[e] = -sum * coeff;
            }
            phi
        };
        let cochains = [solve(0), solve(1)];
        Ok(HomologyBasis { generators, cochains })
    }

    /// Value of cochain `k` (0 or 1) on edge `e`.
    pub fn cochain(&self, k: usize, e: EdgeId) -> i64 {
        self.cochains[k][e]
    }

    pub fn signature(&self, walk: &[Dart]) -> Signature {
        let mut s = [0i64; 2];
        for d in walk {
            let sign = if d.forward { 1 } else { -1 };
            for (k, phi) in self.cochains.iter().enumerate() {
                s[k] += sign * phi[d.edge];
            }
        }
        Signature(s)
    }

    pub fn partition_signatures(&self, p: &OsculatingPartition) -> Vec<Signature> {
        p.circuits.iter().map(|c| self.signature(&c.darts())).collect()
    }

    /// Sum of both cochains around face `f`; zero for every face by construction.
    pub fn face_sum(&self, faces: &Faces, f: usize) -> Signature {
        self.signature(&faces.walks[f].sides)
    }
}
