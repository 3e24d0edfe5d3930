//! Test corpora: the committed fixtures plus generated families, and a batch
//! runner that evaluates instances independently.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generate::{one_vertex, random, random_ground, random_valid, torchon};
use super::parse;
use crate::embedding::{validate, EmbeddedDigraph};
use crate::par;
use crate::pipeline::{run_pipeline, Options, RunReport};

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: EmbeddedDigraph,
}

impl Instance {
    pub fn new(name: impl Into<String>, graph: EmbeddedDigraph) -> Self {
        Instance { name: name.into(), graph }
    }
}

/// Committed `.lace` files, by file stem.
pub const FIXTURES: &[(&str, &str)] = &[
    ("one_vertex", include_str!("../../fixtures/one_vertex.lace")),
    ("torchon2", include_str!("../../fixtures/torchon2.lace")),
    ("detour", include_str!("../../fixtures/detour.lace")),
    ("bad-degree", include_str!("../../fixtures/bad-degree.lace")),
    ("sphere", include_str!("../../fixtures/sphere.lace")),
];

pub fn fixtures() -> Vec<Instance> {
    FIXTURES.iter().map(|(name, text)| Instance::new(*name, parse(text).expect("committed fixture parses"))).collect()
}

pub fn fixture(name: &str) -> Option<EmbeddedDigraph> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| parse(t).expect("committed fixture parses"))
}

/// Draws `random(n, ·)` until one validates. Returns the graph and the number
/// of tries, or `None` after `max_tries` rejections.
pub fn rejection_sample(n: usize, seed: u64, max_tries: usize) -> Option<(EmbeddedDigraph, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (1..=max_tries).find_map(|t| {
        let g = random(n, rng.gen());
        validate(&g).passed().then_some((g, t))
    })
}

/// Fraction of `random(n, ·)` draws that validate, as (accepted, tries).
pub fn acceptance_rate(n: usize, tries: usize, seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ok = (0..tries).filter(|_| validate(&random(n, rng.gen())).passed()).count();
    (ok, tries)
}

/// Valid instances only: fixtures that validate, torchon(1..=12),
/// `per_family` random lattices, covers and rejection samples with up to 5 vertices.
pub fn valid_corpus(per_family: usize) -> Vec<Instance> {
    let mut out: Vec<Instance> = fixtures().into_iter().filter(|i| validate(&i.graph).passed()).collect();
    out.push(Instance::new("one_vertex()", one_vertex()));
    for k in 1..=12 {
        out.push(Instance::new(format!("torchon({k})"), torchon(k)));
    }
    for s in 0..per_family as u64 {
        out.push(Instance::new(format!("random_ground(24, {s})"), random_ground(24, s)));
        out.push(Instance::new(format!("random_valid(50, {s})"), random_valid(50, s)));
        let n = 1 + s as usize % 5;
        if let Some((g, _)) = rejection_sample(n, s, 100_000) {
            out.push(Instance::new(format!("rejection_sample({n}, {s})"), g));
        }
    }
    out
}

/// Runs the pipeline on every instance; instances run in parallel when
/// `opts.parallel` is set.
pub fn evaluate(corpus: &[Instance], opts: &Options) -> Vec<RunReport> {
    par::map(corpus, opts.parallel, |inst| run_pipeline(&inst.graph, opts).0)
}
