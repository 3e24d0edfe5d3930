//! Osculating circuits.
//!
//! Under C1, C2 and C3' the edges split uniquely into directed circuits that
//! never cross each other transversely: after entering a vertex through its
//! left incoming edge a circuit leaves through the left outgoing edge, and
//! likewise on the right.

pub mod crossing;
pub mod homology;

use serde::{Deserialize, Serialize};

use crate::embedding::{Dart, EdgeEndClassification, EdgeId, EmbeddedDigraph, Role};

pub use crossing::{algebraic_crossing_number, crossing_number_by_roles, crossing_numbers_against, CrossingError};
pub use homology::{HomologyBasis, HomologyError, Signature};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OsculatingCircuit {
    /// Edge ids in traversal order.
    pub edges: Vec<EdgeId>,
    /// No vertex is visited twice.
    pub simple: bool,
}

impl OsculatingCircuit {
    pub fn darts(&self) -> Vec<Dart> {
        self.edges.iter().map(|&e| Dart::forward(e)).collect()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OsculatingPartition {
    pub circuits: Vec<OsculatingCircuit>,
    pub edge_to_circuit: Vec<usize>,
    /// Index of the selected seed circuit.
    pub seed_index: usize,
}

impl OsculatingPartition {
    pub fn seed(&self) -> &OsculatingCircuit {
        &self.circuits[self.seed_index]
    }

    pub fn with_seed(mut self, seed: usize) -> Option<Self> {
        (seed < self.circuits.len()).then(|| {
            self.seed_index = seed;
            self
        })
    }

    /// The partition as a sorted set of sorted edge sets, for comparison.
    pub fn canonical(&self) -> Vec<Vec<EdgeId>> {
        let mut sets: Vec<Vec<EdgeId>> = self
            .circuits
            .iter()
            .map(|c| {
                let mut s = c.edges.clone();
                s.sort_unstable();
                s
            })
            .collect();
        sets.sort();
        sets
    }
}

/// The edge following `e` on its osculating circuit.
pub fn successor(g: &EmbeddedDigraph, cls: &EdgeEndClassification, e: EdgeId) -> EdgeId {
    let w = g.edge(e).head;
    match cls.head_role(e) {
        Role::LeftIn => cls.edge(w, Role::LeftOut),
        _ => cls.edge(w, Role::RightOut),
    }
}

pub fn osculating_partition(g: &EmbeddedDigraph, cls: &EdgeEndClassification) -> OsculatingPartition {
    osculating_partition_from(g, cls, 0..g.num_edges())
}

/// Builds the partition, starting new circuits at edges in the given order.
pub fn osculating_partition_from(
    g: &EmbeddedDigraph,
    cls: &EdgeEndClassification,
    start_order: impl IntoIterator<Item = EdgeId>,
) -> OsculatingPartition {
    let m = g.num_edges();
    let mut edge_to_circuit = vec![usize::MAX; m];
    let mut circuits = Vec::new();
    let mut visits = vec![0u32; g.num_vertices()];
    for start in start_order {
        if edge_to_circuit[start] != usize::MAX {
            continue;
        }
        let id = circuits.len();
        let mut edges = Vec::new();
        let mut e = start;
        loop {
            edge_to_circuit[e] = id;
            edges.push(e);
            e = successor(g, cls, e);
            if e == start {
                break;
            }
        }
        let mut simple = true;
        for &e in &edges {
            let v = g.edge(e).tail;
            visits[v] += 1;
            simple &= visits[v] == 1;
        }
        for &e in &edges {
            visits[g.edge(e).tail] = 0;
        }
        circuits.push(OsculatingCircuit { edges, simple });
    }
    OsculatingPartition { circuits, edge_to_circuit, seed_index: 0 }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub covers_each_edge_once: bool,
    pub follows_successor_rule: bool,
    /// Circuit pairs with a nonzero algebraic crossing number.
    pub crossing_pairs: Vec<(usize, usize, i64)>,
    pub signatures: Vec<Signature>,
    pub signatures_agree: bool,
    /// Lemma 3: a non-simple circuit implies exactly one circuit.
    pub nonsimple_implies_singleton: bool,
}

impl PartitionReport {
    pub fn passed(&self) -> bool {
        self.covers_each_edge_once
            && self.follows_successor_rule
            && self.crossing_pairs.is_empty()
            && self.signatures_agree
            && self.nonsimple_implies_singleton
    }
}

pub fn verify_partition(p: &OsculatingPartition, g: &EmbeddedDigraph, cls: &EdgeEndClassification) -> PartitionReport {
    let m = g.num_edges();
    let mut seen = vec![0usize; m];
    for c in &p.circuits {
        for &e in &c.edges {
            if e < m {
                seen[e] += 1;
            }
        }
    }
    let covers_each_edge_once = seen.iter().all(|&s| s == 1)
        && p.edge_to_circuit.len() == m
        && p.circuits.iter().enumerate().all(|(i, c)| c.edges.iter().all(|&e| e < m && p.edge_to_circuit[e] == i));
    let follows_successor_rule = covers_each_edge_once
        && p.circuits.iter().all(|c| {
            let k = c.edges.len();
            (0..k).all(|i| successor(g, cls, c.edges[i]) == c.edges[(i + 1) % k])
        });

    // every vertex carries exactly two visits; pairs of circuits are only
    // compared where they meet, which keeps this linear
    let all_simple = p.circuits.iter().all(|c| c.simple);
    let mut crossing_pairs = Vec::new();
    if covers_each_edge_once && all_simple {
        let mut visits: Vec<Vec<(usize, Role, Role)>> = vec![Vec::new(); g.num_vertices()];
        for (i, c) in p.circuits.iter().enumerate() {
            let k = c.edges.len();
            for j in 0..k {
                let (e, next) = (c.edges[j], c.edges[(j + 1) % k]);
                visits[g.edge(e).head].push((i, cls.head_role(e), cls.tail_role(next)));
            }
        }
        let mut totals: std::collections::BTreeMap<(usize, usize), i64> = Default::default();
        for at in &visits {
            for (x, a) in at.iter().enumerate() {
                for b in &at[x + 1..] {
                    if a.0 == b.0 {
                        continue;
                    }
                    let sign = match (a.1, a.2, b.1, b.2) {
                        (Role::LeftIn, Role::RightOut, Role::RightIn, Role::LeftOut) => 1,
                        (Role::RightIn, Role::LeftOut, Role::LeftIn, Role::RightOut) => -1,
                        _ => 0,
                    };
                    let (key, sign) = if a.0 < b.0 { ((a.0, b.0), sign) } else { ((b.0, a.0), -sign) };
                    *totals.entry(key).or_default() += sign;
                }
            }
        }
        crossing_pairs = totals.into_iter().filter(|&(_, x)| x != 0).map(|((i, j), x)| (i, j, x)).collect();
    }

    let (signatures, signatures_agree) = match HomologyBasis::tree_cotree(g) {
        Ok(basis) if covers_each_edge_once => {
            let sigs = basis.partition_signatures(p);
            let first = sigs.first().copied().unwrap_or_default();
            let agree = sigs.iter().all(|s| *s == first || *s == first.negated());
            (sigs, agree)
        }
        _ => (Vec::new(), false),
    };

    let nonsimple_implies_singleton = all_simple || p.circuits.len() == 1;
    PartitionReport {
        covers_each_edge_once,
        follows_successor_rule,
        crossing_pairs,
        signatures,
        signatures_agree,
        nonsimple_implies_singleton,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{classify_edge_ends, Edge, EdgeEnd};

    fn torus_two_loops() -> EmbeddedDigraph {
        let edges = vec![Edge { tail: 0, head: 0 }, Edge { tail: 0, head: 0 }];
        let rot = vec![vec![EdgeEnd::tail(0), EdgeEnd::tail(1), EdgeEnd::head(0), EdgeEnd::head(1)]];
        EmbeddedDigraph::new(rot, edges).unwrap()
    }

    #[test]
    fn two_loops_form_one_nonsimple_circuit() {
        let g = torus_two_loops();
        let cls = classify_edge_ends(&g).unwrap();
        let p = osculating_partition(&g, &cls);
        assert_eq!(p.circuits.len(), 1);
        assert_eq!(p.circuits[0].edges, vec![0, 1]);
        assert!(!p.circuits[0].simple);
        let report = verify_partition(&p, &g, &cls);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn corrupted_partition_is_rejected() {
        let g = torus_two_loops();
        let cls = classify_edge_ends(&g).unwrap();
        let mut p = osculating_partition(&g, &cls);
        p.circuits[0].edges = vec![0, 0];
        let report = verify_partition(&p, &g, &cls);
        assert!(!report.covers_each_edge_once);
        assert!(!report.passed());
    }

    #[test]
    fn crossing_pairs_match_pairwise_counts() {
        // follow the straight-through rule instead, so circuits do cross
        let g = crate::io::generate::torchon(3);
        let cls = classify_edge_ends(&g).unwrap();
        let straight = |e: EdgeId| {
            let w = g.edge(e).head;
            match cls.head_role(e) {
                Role::LeftIn => cls.edge(w, Role::RightOut),
                _ => cls.edge(w, Role::LeftOut),
            }
        };
        let mut owner = vec![usize::MAX; g.num_edges()];
        let mut circuits = Vec::new();
        for start in 0..g.num_edges() {
            if owner[start] != usize::MAX {
                continue;
            }
            let mut edges = vec![];
            let mut e = start;
            while owner[e] == usize::MAX {
                owner[e] = circuits.len();
                edges.push(e);
                e = straight(e);
            }
            circuits.push(OsculatingCircuit { edges, simple: true });
        }
        let p = OsculatingPartition { circuits, edge_to_circuit: owner, seed_index: 0 };
        let r = verify_partition(&p, &g, &cls);
        assert!(!r.follows_successor_rule && !r.crossing_pairs.is_empty());
        for &(i, j, x) in &r.crossing_pairs {
            let expect = crossing_number_by_roles(&g, &cls, &p.circuits[i].darts(), &p.circuits[j].darts());
            assert_eq!(expect, Ok(x));
        }
        let n = p.circuits.len();
        let nonzero = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                crossing_number_by_roles(&g, &cls, &p.circuits[i].darts(), &p.circuits[j].darts()) != Ok(0)
            })
            .count();
        assert_eq!(nonzero, r.crossing_pairs.len());
    }
}
