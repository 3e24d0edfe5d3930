//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lacegraph::embedding::{check_c2, check_c3_prime, facial_walks, Dart, EdgeId, EmbeddedDigraph};
use lacegraph::io::generate::random;
use lacegraph::io::serialize;
use num_rational::Rational64;
use num_traits::Zero;

/// Every vertex-simple directed cycle, as edge lists starting at its lowest vertex.
pub fn simple_directed_cycles(g: &EmbeddedDigraph) -> Vec<Vec<EdgeId>> {
    let n = g.num_vertices();
    let out: Vec<Vec<EdgeId>> = (0..n).map(|v| (0..g.num_edges()).filter(|&e| g.edge(e).tail == v).collect()).collect();
    let mut cycles = Vec::new();
    for start in 0..n {
        let mut on_path = vec![false; n];
        let mut path = Vec::new();
        extend(g, &out, start, start, &mut on_path, &mut path, &mut cycles);
    }
    cycles
}

fn extend(
    g: &EmbeddedDigraph,
    out: &[Vec<EdgeId>],
    start: usize,
    v: usize,
    on_path: &mut [bool],
    path: &mut Vec<EdgeId>,
    cycles: &mut Vec<Vec<EdgeId>>,
) {
    on_path[v] = true;
    for &e in &out[v] {
        let w = g.edge(e).head;
        path.push(e);
        if w == start {
            cycles.push(path.clone());
        } else if w > start && !on_path[w] {
            extend(g, out, start, w, on_path, path, cycles);
        }
        path.pop();
    }
    on_path[v] = false;
}

/// Rank over the rationals, by plain elimination.
fn rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c] / rows[r][c];
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(pivot) {
                    *x -= f * p;
                }
            }
        }
        r += 1;
    }
    r
}

fn chain(m: usize, darts: impl IntoIterator<Item = Dart>) -> Vec<Rational64> {
    let mut v = vec![Rational64::zero(); m];
    for d in darts {
        v[d.edge] += if d.forward { 1 } else { -1 };
    }
    v
}

/// Whether a closed walk bounds, i.e. lies in the span of the face boundaries.
pub fn null_homologous(g: &EmbeddedDigraph, walk: &[Dart]) -> bool {
    let m = g.num_edges();
    let mut rows: Vec<Vec<Rational64>> = facial_walks(g).iter().map(|f| chain(m, f.sides.iter().copied())).collect();
    let before = rank(rows.clone());
    rows.push(chain(m, walk.iter().copied()));
    rank(rows) == before
}

/// C3 by brute force: no directed cycle is contractible.
pub fn c3_oracle(g: &EmbeddedDigraph) -> bool {
    simple_directed_cycles(g)
        .iter()
        .all(|c| !null_homologous(g, &c.iter().map(|&e| Dart::forward(e)).collect::<Vec<_>>()))
}

/// Distinct toroidal 2-2-regular embeddings with C3' and at most `max_edges`
/// edges, drawn from `random(n, seed)`.
pub fn small_toroidal(count: usize, max_edges: usize) -> Vec<EmbeddedDigraph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let n = 1 + (seed as usize % (max_edges / 2));
        let g = random(n, seed);
        seed += 1;
        if check_c2(&g).passed && check_c3_prime(&g).passed && seen.insert(serialize(&g)) {
            out.push(g);
        }
    }
    out
}
