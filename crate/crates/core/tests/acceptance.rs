//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use lacegraph::embedding::{check_c3, classify_edge_ends, validate};
use lacegraph::io::corpus::{evaluate, fixture, fixtures, valid_corpus, Instance};
use lacegraph::io::generate::{random_valid, torchon};
use lacegraph::offset::build_offset;
use lacegraph::osculating::{osculating_partition, osculating_partition_from};
use lacegraph::pipeline::{run_pipeline, Options, RunReport, Stage};
use lacegraph::schema::find_schema;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn lemma1_equivalence() -> Outcome {
    let start = Instant::now();
    let corpus = common::small_toroidal(240, 8);
    let disagreements = corpus.iter().filter(|g| check_c3(g).passed != common::c3_oracle(g)).count();
    let valid = corpus.iter().filter(|g| check_c3(g).passed).count();
    let t = start.elapsed();
    outcome(
        disagreements == 0 && t < Duration::from_secs(60),
        format!("{} instances ({valid} satisfy C3), {disagreements} disagreements, {t:.2?}", corpus.len()),
    )
}

fn partition_uniqueness() -> Outcome {
    let mut instances: Vec<Instance> = fixtures().into_iter().filter(|i| validate(&i.graph).passed()).collect();
    instances.extend((0..100).map(|s| Instance::new(format!("random_valid(50, {s})"), random_valid(50, s))));
    let mut bad = Vec::new();
    let mut runs = 0;
    for inst in &instances {
        let g = &inst.graph;
        let cls = classify_edge_ends(g).unwrap();
        let reference = osculating_partition(g, &cls).canonical();
        let m = g.num_edges();
        for start in 0..m {
            runs += 1;
            if osculating_partition_from(g, &cls, (start..m).chain(0..start)).canonical() != reference {
                bad.push(format!("{} from e{start}", inst.name));
            }
        }
    }
    outcome(bad.is_empty(), format!("{} instances, {runs} start edges, mismatches {bad:?}", instances.len()))
}

fn lemma3(corpus: &[Instance], reports: &[RunReport]) -> Outcome {
    let mut nonsimple = 0;
    let mut violations = Vec::new();
    for (inst, r) in corpus.iter().zip(reports) {
        let p = r.partition.as_ref().unwrap();
        if p.circuits.iter().any(|c| !c.simple) {
            nonsimple += 1;
            if p.circuits.len() != 1 {
                violations.push(inst.name.clone());
            }
        }
    }
    outcome(
        violations.is_empty(),
        format!("{nonsimple} instances with a non-simple circuit, violations {violations:?}"),
    )
}

fn schema_contract(corpus: &[Instance], reports: &[RunReport]) -> Outcome {
    let bad: Vec<&str> = corpus
        .iter()
        .zip(reports)
        .filter(|(_, r)| !r.schema.as_ref().is_some_and(|s| s.checks.passed()))
        .map(|(i, _)| i.name.as_str())
        .collect();
    outcome(bad.is_empty(), format!("{} instances, violations {bad:?}", corpus.len()))
}

fn homotopy_class(corpus: &[Instance], reports: &[RunReport]) -> Outcome {
    let mut circuits = 0;
    let mut bad = Vec::new();
    for (inst, r) in corpus.iter().zip(reports) {
        let Some(d) = &r.drawing else {
            bad.push(inst.name.clone());
            continue;
        };
        circuits += d.checks.wraps.len();
        let sign = d.checks.wraps.first().map_or(0, |w| w.0);
        if sign.abs() != 1 || d.checks.wraps.iter().any(|&w| w != (sign, 0)) {
            bad.push(inst.name.clone());
        }
    }
    outcome(bad.is_empty(), format!("{circuits} circuits wrap (±1, 0), violations {bad:?}"))
}

fn drawing_validity(corpus: &[Instance], reports: &[RunReport]) -> Outcome {
    let bad: Vec<&str> = corpus
        .iter()
        .zip(reports)
        .filter(|(_, r)| !r.drawing.as_ref().is_some_and(|d| d.checks.improper_crossings == 0 && d.checks.twins_match))
        .map(|(i, _)| i.name.as_str())
        .collect();
    let mut slowest = Duration::ZERO;
    let mut all_ok = true;
    for k in 1..=8 {
        let start = Instant::now();
        let (r, _) = run_pipeline(&torchon(k), &Options::default());
        slowest = slowest.max(start.elapsed());
        all_ok &= r.passed;
    }
    outcome(
        bad.is_empty() && all_ok && slowest < Duration::from_secs(5),
        format!("violations {bad:?}; slowest torchon(k<=8) full run {slowest:.2?}"),
    )
}

fn lift_acyclicity(corpus: &[Instance], reports: &[RunReport]) -> Outcome {
    let bad: Vec<&str> = corpus
        .iter()
        .zip(reports)
        .filter(|(_, r)| {
            !r.drawing.as_ref().is_some_and(|d| d.checks.lift_acyclic && d.checks.lift_size == r.vertices + 1)
        })
        .map(|(i, _)| i.name.as_str())
        .collect();
    outcome(bad.is_empty(), format!("(n+1)x(n+1) lifts of {} instances, cyclic {bad:?}", corpus.len()))
}

fn linear_growth() -> Outcome {
    let time = |k: usize| {
        let g = torchon(k);
        (0..5)
            .map(|_| {
                let start = Instant::now();
                let (r, _) = run_pipeline(&g, &Options { until: Stage::Schema, ..Options::default() });
                assert!(r.passed);
                start.elapsed()
            })
            .min()
            .unwrap()
    };
    let ts: Vec<Duration> = [16, 32, 64].into_iter().map(time).collect();
    let ratios: Vec<f64> = ts.windows(2).map(|w| w[1].as_secs_f64() / w[0].as_secs_f64()).collect();
    outcome(ratios.iter().all(|&r| r <= 5.0), format!("torchon 16/32/64: {:.2?}, growth per 4x {:.2?}", ts, ratios))
}

fn weighted_detour() -> Outcome {
    let g = fixture("detour").unwrap();
    let cls = classify_edge_ends(&g).unwrap();
    let p = osculating_partition(&g, &cls);
    let o = build_offset(&g, &cls, &p);
    let count = |weighted| find_schema(&g, &cls, &o, &p, weighted).unwrap().longitude.g_crossings(&o);
    let (u, w) = (count(false), count(true));
    outcome(w < u, format!("G crossings unweighted {u}, weighted {w}"))
}

fn determinism() -> Outcome {
    let mut inputs: Vec<_> = fixtures().into_iter().map(|i| i.graph).collect();
    inputs.extend([torchon(5), random_valid(50, 3), random_valid(50, 77)]);
    let mut differing = 0;
    for g in &inputs {
        for opts in [Options::default(), Options { weighted: false, seed_circuit: 0, ..Options::default() }] {
            let a = run_pipeline(g, &opts).0.to_json();
            let b = run_pipeline(g, &Options { parallel: !opts.parallel, ..opts.clone() }).0.to_json();
            let c = run_pipeline(g, &opts).0.to_json();
            differing += usize::from(a != b || a != c);
        }
    }
    outcome(differing == 0, format!("{} inputs x 2 flag sets, {differing} differing", inputs.len()))
}

fn main() {
    let corpus = valid_corpus(100);
    let reports = evaluate(&corpus, &Options::default());
    let results = [
        ("1 validation matches brute force", lemma1_equivalence()),
        ("2 partition independent of start edge", partition_uniqueness()),
        ("3 non-simple circuit implies singleton partition", lemma3(&corpus, &reports)),
        ("4 schema contract", schema_contract(&corpus, &reports)),
        ("5 every circuit in the (1,0) class", homotopy_class(&corpus, &reports)),
        ("6 drawing planar, twins exact, torchon fast", drawing_validity(&corpus, &reports)),
        ("7 tiled lift acyclic", lift_acyclicity(&corpus, &reports)),
        ("8 near-linear growth", linear_growth()),
        ("9 weighted longitude crosses G less", weighted_detour()),
        ("10 byte-identical reports", determinism()),
    ];
    let mut failed = 0;
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.passed);
    }
    println!("corpus: {} valid instances", corpus.len());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
