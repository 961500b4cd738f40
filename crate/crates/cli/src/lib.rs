//! Command-line front end for `schrom-core`: graph files, text and JSON
//! reports, and the verification suite runner.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on bad input or usage.

pub mod graphfile;
pub mod json;

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use schrom_core::coloring::count_proper_colorings;
use schrom_core::verify::{check, check_case, CheckInputs, CheckName, CorpusSpec, SuiteReport};
use schrom_core::{
    chromatic_at_one_plus, chromatic_dc, chromatic_statesum, euler_polynomial, graded_cohomology,
    EulerSource, ParityPolynomial, SignedGraph, StateComplex, Variant,
};

pub use graphfile::{parse_graph, print_graph, ParseError};

#[derive(Debug, Parser)]
#[command(name = "schrom", version, about = "Chromatic and balanced chromatic cohomology of signed graphs")]
pub struct Cli {
    /// Worker threads; 0 or unset picks one per core.
    #[arg(long, global = true, env = "SCHROM_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of H^{i,j} as free rank plus torsion orders.
    Cohomology {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Signed chromatic polynomial, or brute-force counts.
    Polynomial {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        input: PathBuf,
        /// Largest lambda for `--method oracle`.
        #[arg(long, default_value_t = 7)]
        lambda_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Euler polynomial from the chain groups and from cohomology, next to
    /// the matching chromatic polynomial at lambda = 1 + q.
    Euler {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enhanced-state basis in per-vertex notation, e.g. `(100, x1x)`.
    States {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        input: PathBuf,
        /// Only this cohomological degree.
        #[arg(long)]
        i: Option<usize>,
        /// Only this internal degree.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Structural checks on one graph or on a seeded corpus.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("target").required(true).args(["input", "suite"])))]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Check to run; repeatable. Defaults to every check.
    #[arg(long = "check", requires = "input")]
    pub checks: Vec<CheckName>,
    /// Second graph for KUNNETH.
    #[arg(long, requires = "input")]
    pub partner: Option<PathBuf>,
    /// Edge index for the deletion-contraction checks.
    #[arg(long, requires = "input")]
    pub edge: Option<usize>,
    /// Vertex for SWITCH_INVARIANCE.
    #[arg(long, requires = "input")]
    pub vertex: Option<usize>,

    #[arg(long)]
    pub suite: bool,
    #[arg(long, default_value_t = 42, requires = "suite")]
    pub seed: u64,
    /// Vertex bound of the random graphs; the exhaustive part stops at 3.
    #[arg(long, default_value_t = 5, requires = "suite")]
    pub max_vertices: usize,
    /// Edge bound of the random graphs; the exhaustive part stops at 4.
    #[arg(long, default_value_t = 8, requires = "suite")]
    pub max_edges: usize,
    #[arg(long, default_value_t = 200, requires = "suite")]
    pub random_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Chromatic,
    Balanced,
    Unsigned,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Chromatic => Variant::Chromatic,
            VariantArg::Balanced => Variant::Balanced,
            VariantArg::Unsigned => Variant::Unsigned,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dc,
    Statesum,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Process exit status of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
        }
    }
}

/// Exit code for errors raised by [`run`].
pub const INPUT_ERROR: u8 = 2;

pub fn read_graph(path: &Path) -> anyhow::Result<SignedGraph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Runs one command inside a thread pool sized by `--jobs`.
pub fn run(cli: Cli, out: &mut (dyn Write + Send)) -> anyhow::Result<Status> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
        .context("starting worker threads")?;
    pool.install(|| dispatch(cli.command, out))
}

fn dispatch(command: Command, out: &mut dyn Write) -> anyhow::Result<Status> {
    match command {
        Command::Cohomology { variant, input, format } => cohomology(&read_graph(&input)?, variant.into(), format, out),
        Command::Polynomial {
            method,
            input,
            lambda_max,
            format,
        } => polynomial(&read_graph(&input)?, method, lambda_max, format, out),
        Command::Euler { variant, input, format } => euler(&read_graph(&input)?, variant.into(), format, out),
        Command::States { variant, input, i, j } => states(&read_graph(&input)?, variant.into(), i, j, out),
        Command::Verify(args) => verify(args, out),
    }
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cohomology(g: &SignedGraph, variant: Variant, format: Format, out: &mut dyn Write) -> anyhow::Result<Status> {
    let h = graded_cohomology(g, variant)?;
    match format {
        Format::Json => json_line(out, &json::CohomologyJson::new(g, variant, &h))?,
        Format::Text => {
            writeln!(out, "graph {g}")?;
            writeln!(out, "variant {variant}")?;
            writeln!(out, "i j free_rank torsion")?;
            for (i, j, a) in h.groups() {
                let torsion: Vec<String> = a.torsion().iter().map(u64::to_string).collect();
                writeln!(out, "{i} {j} {} [{}]", a.free_rank(), torsion.join(","))?;
            }
            for i in 0..=g.edge_count() {
                writeln!(out, "H^{i} = {}", h.degree(i))?;
            }
        }
    }
    Ok(Status::Ok)
}

fn coefficient_list(c: &[i64]) -> String {
    let parts: Vec<String> = c.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn polynomial(
    g: &SignedGraph,
    method: Method,
    lambda_max: u32,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<Status> {
    let p: ParityPolynomial = match method {
        Method::Dc => chromatic_dc(g),
        Method::Statesum => chromatic_statesum(g)?,
        Method::Oracle => {
            let counts = (1..=lambda_max)
                .map(|lambda| Ok(json::CountJson { lambda, count: count_proper_colorings(g, lambda)? }))
                .collect::<anyhow::Result<Vec<_>>>()?;
            match format {
                Format::Json => json_line(out, &json::OracleJson { counts })?,
                Format::Text => {
                    writeln!(out, "lambda count")?;
                    for c in counts {
                        writeln!(out, "{} {}", c.lambda, c.count)?;
                    }
                }
            }
            return Ok(Status::Ok);
        }
    };
    match format {
        Format::Json => json_line(out, &json::PolynomialJson::from(&p))?,
        Format::Text => {
            writeln!(out, "odd {}", coefficient_list(p.odd.coeffs()))?;
            writeln!(out, "even {}", coefficient_list(p.even.coeffs()))?;
            writeln!(out, "{p}")?;
        }
    }
    Ok(Status::Ok)
}

fn euler(g: &SignedGraph, variant: Variant, format: Format, out: &mut dyn Write) -> anyhow::Result<Status> {
    let chain = euler_polynomial(g, variant, EulerSource::Chain)?;
    let homology = euler_polynomial(g, variant, EulerSource::Cohomology)?;
    let expected = chromatic_at_one_plus(g, variant);
    let report = json::EulerJson::new(variant, &chain, &homology, &expected);
    let matches = report.matches;
    match format {
        Format::Json => json_line(out, &report)?,
        Format::Text => {
            writeln!(out, "variant {variant}")?;
            writeln!(out, "CHAIN      {}", chain.display_with("q"))?;
            writeln!(out, "COHOMOLOGY {}", homology.display_with("q"))?;
            writeln!(out, "CHROMATIC  {}", expected.display_with("q"))?;
            writeln!(out, "match {matches}")?;
        }
    }
    Ok(if matches { Status::Ok } else { Status::CheckFailed })
}

fn states(
    g: &SignedGraph,
    variant: Variant,
    only_i: Option<usize>,
    only_j: Option<usize>,
    out: &mut dyn Write,
) -> anyhow::Result<Status> {
    let complex = StateComplex::new(g, variant)?;
    for i in 0..=complex.max_i() {
        if only_i.is_some_and(|k| k != i) {
            continue;
        }
        for j in 0..=complex.max_j() {
            if only_j.is_some_and(|k| k != j) {
                continue;
            }
            let basis = complex.basis(i, j);
            if basis.is_empty() {
                continue;
            }
            writeln!(out, "C^{{{i},{j}}} rank {}", basis.len())?;
            for s in &basis {
                writeln!(out, "  {}", s.render(g))?;
            }
        }
    }
    Ok(Status::Ok)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> anyhow::Result<Status> {
    if args.suite {
        let spec = CorpusSpec {
            exhaustive: Some((args.max_vertices.min(3), args.max_edges.min(4))),
            random_count: args.random_count,
            random_max_vertices: args.max_vertices,
            random_max_edges: args.max_edges,
        };
        if args.max_vertices == 0 {
            bail!("--max-vertices must be at least 1");
        }
        let cases = spec.cases(args.seed);
        let results = cases.par_iter().map(check_case).collect();
        let report = SuiteReport::assemble(args.seed, &cases, results);
        writeln!(out, "{report}")?;
        return Ok(if report.all_passed() { Status::Ok } else { Status::CheckFailed });
    }

    let Some(input) = args.input else {
        bail!("either --input or --suite is required");
    };
    let graph = read_graph(&input)?;
    if let Some(v) = args.vertex {
        if v >= graph.vertex_count() {
            bail!("--vertex {v} out of range for a graph with {} vertices", graph.vertex_count());
        }
    }
    if let Some(e) = args.edge {
        if e >= graph.edge_count() {
            bail!("--edge {e} out of range for a graph with {} edges", graph.edge_count());
        }
    }
    let inputs = CheckInputs {
        graph,
        partner: args.partner.as_deref().map(read_graph).transpose()?,
        edge: args.edge,
        vertex: args.vertex,
        permutation: None,
    };
    let names = if args.checks.is_empty() {
        CheckName::ALL.to_vec()
    } else {
        args.checks
    };
    let results: Vec<_> = names.par_iter().map(|&n| check(n, &inputs)).collect();
    let (mut pass, mut fail, mut skipped) = (0, 0, 0);
    for r in &results {
        writeln!(out, "{r}")?;
        if r.outcome.is_pass() {
            pass += 1;
        } else if r.outcome.is_fail() {
            fail += 1;
        } else {
            skipped += 1;
        }
    }
    writeln!(out, "{} checks: {pass} pass, {fail} fail, {skipped} not applicable", results.len())?;
    Ok(if fail == 0 { Status::Ok } else { Status::CheckFailed })
}
