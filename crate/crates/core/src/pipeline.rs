//! The full pipeline: validate, partition, build the offset graph, find the
//! schema, cut and draw. Stops at the first failing stage.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::draw::{self, DrawingReport, PeriodicDrawing, RectangleGraph, TorusOverlay};
use crate::embedding::{classify_edge_ends, validate, EdgeEndClassification, EmbeddedDigraph, ValidationReport};
use crate::offset::{build_offset, edge_bound, vertex_bound, OffsetGraph};
use crate::osculating::{osculating_partition, verify_partition, OsculatingPartition, PartitionReport};
use crate::schema::{find_schema, verify_cycles, PolygonalSchema, SchemaReport};

pub const REPORT_FORMAT: &str = "lacegraph-report";
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Validate,
    Partition,
    Schema,
    Draw,
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Last stage to run.
    pub until: Stage,
    pub seed_circuit: usize,
    pub weighted: bool,
    pub width: BigRational,
    pub height: BigRational,
    pub parallel: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            until: Stage::Draw,
            seed_circuit: 0,
            weighted: true,
            width: BigRational::from_integer(BigInt::from(100)),
            height: BigRational::from_integer(BigInt::from(100)),
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitSummary {
    pub edges: Vec<usize>,
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStage {
    pub circuits: Vec<CircuitSummary>,
    pub seed_circuit: usize,
    pub checks: PartitionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffsetStage {
    pub vertices: usize,
    pub edges: usize,
    pub vertex_bound: usize,
    pub edge_bound: usize,
    pub euler_characteristic: i64,
}

impl OffsetStage {
    pub fn passed(&self) -> bool {
        self.vertices <= self.vertex_bound && self.edges <= self.edge_bound && self.euler_characteristic == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaStage {
    pub anchor_vertex: usize,
    pub weighted: bool,
    /// Offset edge ids with traversal direction.
    pub meridian: Vec<(usize, bool)>,
    pub longitude: Vec<(usize, bool)>,
    pub crossing_vertex: usize,
    pub checks: SchemaReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawStage {
    pub overlay_vertices: usize,
    pub overlay_edges: usize,
    pub overlay_euler_characteristic: i64,
    pub rectangle_vertices: usize,
    pub rectangle_edges: usize,
    pub rectangle_euler_characteristic: i64,
    pub checks: DrawingReport,
    /// Exact `"p/q"` coordinates of the G-vertices.
    pub vertex_coords: Vec<[String; 2]>,
}

impl DrawStage {
    pub fn passed(&self) -> bool {
        self.overlay_euler_characteristic == 0 && self.rectangle_euler_characteristic == 2 && self.checks.passed()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub format: String,
    pub version: u32,
    pub vertices: usize,
    pub edges: usize,
    pub validation: ValidationReport,
    pub partition: Option<PartitionStage>,
    pub offset: Option<OffsetStage>,
    pub schema: Option<SchemaStage>,
    pub drawing: Option<DrawStage>,
    /// First stage that failed, if any.
    pub failed_stage: Option<String>,
    pub error: Option<String>,
    pub passed: bool,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Everything the pipeline built, for callers that want more than the report.
#[derive(Clone, Debug, Default)]
pub struct Artifacts {
    pub classification: Option<EdgeEndClassification>,
    pub partition: Option<OsculatingPartition>,
    pub offset: Option<OffsetGraph>,
    pub schema: Option<PolygonalSchema>,
    pub overlay: Option<TorusOverlay>,
    pub rectangle: Option<RectangleGraph>,
    pub drawing: Option<PeriodicDrawing>,
}

pub fn run_pipeline(g: &EmbeddedDigraph, opts: &Options) -> (RunReport, Artifacts) {
    let mut art = Artifacts::default();
    let mut report = RunReport {
        format: REPORT_FORMAT.to_string(),
        version: REPORT_VERSION,
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        validation: validate(g),
        partition: None,
        offset: None,
        schema: None,
        drawing: None,
        failed_stage: None,
        error: None,
        passed: false,
    };
    let fail = |mut r: RunReport, stage: &str, err: Option<String>| {
        r.failed_stage = Some(stage.to_string());
        r.error = err;
        r
    };
    if !report.validation.passed() {
        return (fail(report, "validate", None), art);
    }
    if opts.until == Stage::Validate {
        report.passed = true;
        return (report, art);
    }

    let cls = classify_edge_ends(g).expect("validated graph classifies");
    let p = osculating_partition(g, &cls);
    let Some(p) = p.with_seed(opts.seed_circuit) else {
        let msg = format!("seed circuit {} does not exist", opts.seed_circuit);
        return (fail(report, "partition", Some(msg)), art);
    };
    let checks = verify_partition(&p, g, &cls);
    let ok = checks.passed();
    report.partition = Some(PartitionStage {
        circuits: p.circuits.iter().map(|c| CircuitSummary { edges: c.edges.clone(), simple: c.simple }).collect(),
        seed_circuit: p.seed_index,
        checks,
    });
    art.classification = Some(cls.clone());
    art.partition = Some(p.clone());
    if !ok {
        return (fail(report, "partition", None), art);
    }
    if opts.until == Stage::Partition {
        report.passed = true;
        return (report, art);
    }

    let o = build_offset(g, &cls, &p);
    let offset = OffsetStage {
        vertices: o.num_vertices(),
        edges: o.num_edges(),
        vertex_bound: vertex_bound(g),
        edge_bound: edge_bound(g),
        euler_characteristic: o.graph.euler_characteristic(),
    };
    let ok = offset.passed();
    report.offset = Some(offset);
    if !ok {
        art.offset = Some(o);
        return (fail(report, "offset", None), art);
    }
    let s = match find_schema(g, &cls, &o, &p, opts.weighted) {
        Ok(s) => s,
        Err(e) => {
            art.offset = Some(o);
            return (fail(report, "schema", Some(e.to_string())), art);
        }
    };
    let checks = verify_cycles(&o, &p, &s.meridian, &s.longitude);
    let ok = checks.passed();
    let darts = |c: &crate::schema::SchemaCycle| c.darts.iter().map(|d| (d.edge, d.forward)).collect();
    report.schema = Some(SchemaStage {
        anchor_vertex: s.anchor,
        weighted: s.weighted,
        meridian: darts(&s.meridian),
        longitude: darts(&s.longitude),
        crossing_vertex: s.crossing_vertex,
        checks,
    });
    if !ok || opts.until == Stage::Schema {
        art.offset = Some(o);
        art.schema = Some(s);
        if !ok {
            return (fail(report, "schema", None), art);
        }
        report.passed = true;
        return (report, art);
    }

    let t = draw::overlay(&o, &s, g.num_vertices());
    let r = draw::cut(&t);
    let result = draw::draw_and_verify(g, &p, &t, &r, &opts.width, &opts.height, opts.parallel);
    art.offset = Some(o);
    art.schema = Some(s);
    let (d, checks) = match result {
        Ok(x) => x,
        Err(e) => {
            art.overlay = Some(t);
            art.rectangle = Some(r);
            return (fail(report, "draw", Some(e.to_string())), art);
        }
    };
    let stage = DrawStage {
        overlay_vertices: t.graph.num_vertices(),
        overlay_edges: t.graph.num_edges(),
        overlay_euler_characteristic: t.graph.euler_characteristic(),
        rectangle_vertices: r.graph.num_vertices(),
        rectangle_edges: r.graph.num_edges(),
        rectangle_euler_characteristic: r.graph.euler_characteristic(),
        checks,
        vertex_coords: (0..g.num_vertices()).map(|v| [d.coords[v].0.to_string(), d.coords[v].1.to_string()]).collect(),
    };
    let ok = stage.passed();
    report.drawing = Some(stage);
    art.overlay = Some(t);
    art.rectangle = Some(r);
    art.drawing = Some(d);
    if !ok {
        return (fail(report, "draw", None), art);
    }
    report.passed = true;
    (report, art)
}
