use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use lacegraph::draw::{tile, to_svg};
use lacegraph::embedding::EmbeddedDigraph;
use lacegraph::io::corpus::rejection_sample;
use lacegraph::io::generate::{one_vertex, random, random_valid, torchon};
use lacegraph::io::{parse, serialize};
use lacegraph::pipeline::{run_pipeline, Options, Stage};
use num_rational::BigRational;
use num_traits::Signed;

#[derive(Parser)]
#[command(name = "lacegraph", version, about = "Check, cut and draw bobbin-lace pattern graphs on the torus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check conditions C1, C2, C3' and C3.
    Validate(Common),
    /// Split the edges into osculating circuits.
    Partition(Common),
    /// Find the meridian and longitude.
    Schema(Common),
    /// Cut along the schema and draw the rectangle.
    Draw(DrawArgs),
    /// Draw and write a tiled SVG (3x3 unless --tile says otherwise).
    Tile(DrawArgs),
    /// Print a generated graph in .lace format.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct Common {
    /// Input .lace file, or - for stdin.
    input: PathBuf,
    /// Index of the seed circuit.
    #[arg(long, default_value_t = 0)]
    seed_circuit: usize,
    /// Minimise crossings with G when searching the longitude (default).
    #[arg(long, overrides_with = "unweighted")]
    weighted: bool,
    /// Minimise the number of edges instead.
    #[arg(long, overrides_with = "weighted")]
    unweighted: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Run sequentially.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct DrawArgs {
    #[command(flatten)]
    common: Common,
    /// Write an SVG of the drawing.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Repeat the rectangle KxK times in the SVG.
    #[arg(long, value_parser = parse_tiles)]
    tile: Option<(usize, usize)>,
    /// Rectangle width, an integer or p/q.
    #[arg(long, default_value = "100", value_parser = parse_positive)]
    width: BigRational,
    #[arg(long, default_value = "100", value_parser = parse_positive)]
    height: BigRational,
    /// Draw every circuit in one colour.
    #[arg(long)]
    mono: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    family: Family,
    /// Write here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// The k x k torchon ground.
    Torchon { k: usize },
    /// One vertex with two loops.
    OneVertex,
    /// A uniformly random 2-2-regular rotation system; usually not valid.
    Random {
        n: usize,
        seed: u64,
        /// Redraw until the result validates (feasible for n up to about 5).
        #[arg(long)]
        valid: bool,
    },
    /// A random valid ground with at most n vertices.
    Valid { n: usize, seed: u64 },
}

fn parse_tiles(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(['x', 'X']).ok_or("expected KxK, e.g. 3x3")?;
    let a: usize = a.parse().map_err(|e| format!("{e}"))?;
    let b: usize = b.parse().map_err(|e| format!("{e}"))?;
    if a == 0 || b == 0 {
        return Err("tile counts must be positive".into());
    }
    Ok((a, b))
}

fn parse_positive(s: &str) -> Result<BigRational, String> {
    let v: BigRational = s.parse().map_err(|e| format!("{e:?}"))?;
    if !v.is_positive() {
        return Err("must be positive".into());
    }
    Ok(v)
}

fn read_graph(path: &Path) -> Result<EmbeddedDigraph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn options(c: &Common, until: Stage) -> Options {
    Options {
        until,
        seed_circuit: c.seed_circuit,
        weighted: !c.unweighted,
        parallel: !c.sequential,
        ..Options::default()
    }
}

fn run_stage(c: &Common, until: Stage) -> Result<bool> {
    let g = read_graph(&c.input)?;
    let (report, _) = run_pipeline(&g, &options(c, until));
    write_out(c.json.as_deref(), &(report.to_json() + "\n"))?;
    Ok(report.passed)
}

fn run_draw(a: &DrawArgs, default_tiles: Option<(usize, usize)>) -> Result<bool> {
    let g = read_graph(&a.common.input)?;
    let opts = Options { width: a.width.clone(), height: a.height.clone(), ..options(&a.common, Stage::Draw) };
    let (report, art) = run_pipeline(&g, &opts);
    write_out(a.common.json.as_deref(), &(report.to_json() + "\n"))?;
    if let Some(path) = &a.svg {
        let (Some(d), Some(r), Some(t), Some(p)) = (&art.drawing, &art.rectangle, &art.overlay, &art.partition) else {
            bail!("no drawing to write: pipeline stopped at {}", report.failed_stage.as_deref().unwrap_or("?"));
        };
        let (kx, ky) = a.tile.or(default_tiles).unwrap_or((1, 1));
        let tiled = tile(d, r, t, p, g.num_vertices(), kx, ky);
        fs::write(path, to_svg(&tiled, !a.mono)).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.passed)
}

fn generate(a: &GenerateArgs) -> Result<bool> {
    let g = match a.family {
        Family::Torchon { k } if k >= 1 => torchon(k),
        Family::OneVertex => one_vertex(),
        Family::Random { n, seed, valid: false } if n >= 1 => random(n, seed),
        Family::Random { n, seed, valid: true } if n >= 1 => {
            let (g, tries) = rejection_sample(n, seed, 1_000_000).context("no valid instance in 10^6 tries")?;
            eprintln!("accepted after {tries} tries");
            g
        }
        Family::Valid { n, seed } if n >= 1 => random_valid(n, seed),
        _ => bail!("sizes must be at least 1"),
    };
    write_out(a.output.as_deref(), &serialize(&g))?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(c) => run_stage(c, Stage::Validate),
        Command::Partition(c) => run_stage(c, Stage::Partition),
        Command::Schema(c) => run_stage(c, Stage::Schema),
        Command::Draw(a) => run_draw(a, None),
        Command::Tile(a) => run_draw(a, Some((3, 3))),
        Command::Generate(a) => generate(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
