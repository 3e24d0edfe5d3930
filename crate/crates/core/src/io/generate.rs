//! Instance generators.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::embedding::{Edge, EdgeEnd, EmbeddedDigraph};
use crate::osculating::{HomologyBasis, HomologyError};

/// Quotient of the plane grid digraph (edges `(x,y) -> (x+1,y)` and
/// `(x,y) -> (x,y+1)`) by the lattice spanned by `(a, 0)` and `(b, c)`.
///
/// Every vertex has rotation (y-out, x-out, y-in, x-in), which makes the
/// result a valid lace ground for any `a, c >= 1`. Vertex `(x, y)` with
/// `0 <= x < a`, `0 <= y < c` gets id `y * a + x`; its outgoing y-edge is
/// `2 * id`, its outgoing x-edge `2 * id + 1`.
pub fn lattice_ground(a: usize, b: usize, c: usize) -> EmbeddedDigraph {
    assert!(a >= 1 && c >= 1, "lattice sides must be positive");
    let n = a * c;
    let id = |x: i64, y: i64| -> usize {
        let (a, b, c) = (a as i64, b as i64, c as i64);
        let q = y.div_euclid(c);
        let (x, y) = (x - q * b, y - q * c);
        (y * a + x.rem_euclid(a)) as usize
    };
    let mut edges = Vec::with_capacity(2 * n);
    for v in 0..n {
        let (x, y) = ((v % a) as i64, (v / a) as i64);
        edges.push(Edge { tail: v, head: id(x, y + 1) });
        edges.push(Edge { tail: v, head: id(x + 1, y) });
    }
    let mut rotations = Vec::with_capacity(n);
    for v in 0..n {
        let (x, y) = ((v % a) as i64, (v / a) as i64);
        rotations.push(vec![
            EdgeEnd::tail(2 * v),
            EdgeEnd::tail(2 * v + 1),
            EdgeEnd::head(2 * id(x, y - 1)),
            EdgeEnd::head(2 * id(x - 1, y) + 1),
        ]);
    }
    EmbeddedDigraph::new(rotations, edges).expect("lattice ground is well formed")
}

/// The k×k torchon ground: k² vertices, 2k² edges, k osculating circuits.
pub fn torchon(k: usize) -> EmbeddedDigraph {
    assert!(k >= 1);
    lattice_ground(k, 0, k)
}

/// One vertex with two loops.
pub fn one_vertex() -> EmbeddedDigraph {
    lattice_ground(1, 0, 1)
}

/// A uniformly random 2-2-regular rotation system on `n` vertices: out-slots
/// are matched to in-slots at random and each rotation is a random cyclic
/// order. Usually not a valid lace ground.
pub fn random(n: usize, seed: u64) -> EmbeddedDigraph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut heads: Vec<usize> = (0..2 * n).map(|s| s / 2).collect();
    heads.shuffle(&mut rng);
    let edges: Vec<Edge> = (0..2 * n).map(|e| Edge { tail: e / 2, head: heads[e] }).collect();
    random_rotations(edges, n, &mut rng)
}

fn random_rotations(edges: Vec<Edge>, n: usize, rng: &mut ChaCha8Rng) -> EmbeddedDigraph {
    let mut rotations = vec![Vec::with_capacity(4); n];
    for (e, edge) in edges.iter().enumerate() {
        rotations[edge.tail].push(EdgeEnd::tail(e));
        rotations[edge.head].push(EdgeEnd::head(e));
    }
    for rot in &mut rotations {
        rot.shuffle(rng);
    }
    EmbeddedDigraph::new(rotations, edges).expect("random rotation system is well formed")
}

/// A random valid lace ground on exactly `n` vertices: a random lattice
/// quotient of the grid with vertex ids, edge ids and rotation starting
/// points scrambled.
pub fn random_ground(n: usize, seed: u64) -> EmbeddedDigraph {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let a = *divisors.choose(&mut rng).unwrap();
    let c = n / a;
    let b = rand::Rng::gen_range(&mut rng, 0..a);
    relabel(&lattice_ground(a, b, c), &mut rng)
}

/// The `a × c` cyclic cover of a toroidal embedding: vertex `(v, i, j)` has id
/// `(i * c + j) * n + v`, and edge `e` lifted from copy `(i, j)` goes to copy
/// `(i, j)` shifted by the homology coordinates of `e`. Faces lift to faces,
/// so covers of valid lace grounds are valid.
pub fn cover(g: &EmbeddedDigraph, a: usize, c: usize) -> Result<EmbeddedDigraph, HomologyError> {
    let basis = HomologyBasis::tree_cotree(g)?;
    let (n, m) = (g.num_vertices(), g.num_edges());
    let copies = a * c;
    let copy = |i: i64, j: i64| (i.rem_euclid(a as i64) as usize) * c + j.rem_euclid(c as i64) as usize;
    let shift = |e: usize| (basis.cochain(0, e), basis.cochain(1, e));
    let mut edges = Vec::with_capacity(m * copies);
    for e in 0..m {
        let Edge { tail, head } = g.edge(e);
        let (di, dj) = shift(e);
        for k in 0..copies {
            let (i, j) = ((k / c) as i64, (k % c) as i64);
            edges.push(Edge { tail: k * n + tail, head: copy(i + di, j + dj) * n + head });
        }
    }
    let mut rotations = Vec::with_capacity(n * copies);
    for k in 0..copies {
        let (i, j) = ((k / c) as i64, (k % c) as i64);
        for v in 0..n {
            rotations.push(
                g.rotation(v)
                    .iter()
                    .map(|end| {
                        if end.is_tail() {
                            EdgeEnd::tail(end.edge * copies + k)
                        } else {
                            let (di, dj) = shift(end.edge);
                            EdgeEnd::head(end.edge * copies + copy(i - di, j - dj))
                        }
                    })
                    .collect(),
            );
        }
    }
    Ok(EmbeddedDigraph::new(rotations, edges).expect("cover is well formed"))
}

/// A random valid lace ground with at most `max_n` vertices: a random
/// cover of a small valid instance found by rejection sampling, scrambled.
/// Unlike [`random_ground`] these may contain edges that stay on one side.
pub fn random_valid(max_n: usize, seed: u64) -> EmbeddedDigraph {
    assert!(max_n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_n = rand::Rng::gen_range(&mut rng, 1..=max_n.min(4));
    let base = loop {
        let g = random(base_n, rand::Rng::gen(&mut rng));
        if crate::embedding::validate(&g).passed() {
            break g;
        }
    };
    let copies = max_n / base_n;
    let a = rand::Rng::gen_range(&mut rng, 1..=copies);
    let c = rand::Rng::gen_range(&mut rng, 1..=copies / a);
    relabel(&cover(&base, a, c).expect("valid base is toroidal"), &mut rng)
}

/// Random vertex and edge renumbering plus a random rotation offset per vertex.
pub fn relabel(g: &EmbeddedDigraph, rng: &mut ChaCha8Rng) -> EmbeddedDigraph {
    let n = g.num_vertices();
    let m = g.num_edges();
    let mut vperm: Vec<usize> = (0..n).collect();
    let mut eperm: Vec<usize> = (0..m).collect();
    vperm.shuffle(rng);
    eperm.shuffle(rng);
    let mut edges = vec![Edge { tail: 0, head: 0 }; m];
    for (e, edge) in g.edges().iter().enumerate() {
        edges[eperm[e]] = Edge { tail: vperm[edge.tail], head: vperm[edge.head] };
    }
    let mut rotations = vec![Vec::new(); n];
    for (v, rot) in g.rotations().iter().enumerate() {
        let shift = if rot.is_empty() { 0 } else { rand::Rng::gen_range(rng, 0..rot.len()) };
        let mut r: Vec<EdgeEnd> = rot.iter().map(|end| EdgeEnd { edge: eperm[end.edge], ..*end }).collect();
        r.rotate_left(shift);
        rotations[vperm[v]] = r;
    }
    EmbeddedDigraph::new(rotations, edges).expect("relabelling preserves well-formedness")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::validate;

    #[test]
    fn torchon_sizes() {
        for k in 1..6 {
            let g = torchon(k);
            assert_eq!(g.num_vertices(), k * k);
            assert_eq!(g.num_edges(), 2 * k * k);
            assert_eq!(g.euler_characteristic(), 0);
        }
    }

    #[test]
    fn torchon_one_is_one_vertex() {
        assert_eq!(torchon(1), one_vertex());
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random(6, 42), random(6, 42));
        assert_eq!(random_ground(12, 7), random_ground(12, 7));
    }

    #[test]
    fn covers_stay_valid() {
        for seed in 0..20 {
            let g = random_valid(40, seed);
            assert!(g.num_vertices() <= 40);
            assert!(validate(&g).passed(), "seed {seed}");
        }
        let g = cover(&torchon(2), 3, 2).unwrap();
        assert_eq!(g.num_vertices(), 24);
        assert!(validate(&g).passed());
    }

    #[test]
    fn random_grounds_are_valid() {
        for seed in 0..30 {
            let g = random_ground(1 + seed as usize % 17, seed);
            assert!(validate(&g).passed(), "seed {seed}");
        }
    }
}
