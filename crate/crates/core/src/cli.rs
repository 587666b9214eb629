//! The `twinid` command line.
//!
//! Exit codes: 0 success or valid, 1 invalid coloring/code or failed bound,
//! 2 usage or parse error, 3 size guard exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{verify_corpus, verify_idcode_equality, verify_weighted_equivalence};
use crate::coloring::{
    check_coloring, is_identifying_code, is_weighted_identifying, CheckMode, CheckReport, Variant,
};
use crate::constructions::{gen_hext, gen_hp, gen_htt, gen_planted, gen_random, PlantSpec};
use crate::error::Error;
use crate::formats;
use crate::graph::Graph;
use crate::search::{chi, min_identifying_code, weighted_optimum, SolveReport, SolverConfig};
use crate::twins::{quotient_with, TwinPartition};

pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "twinid",
    version,
    about = "Twin-aware identifying colorings and codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the twin partition and the twin-free quotient.
    Quotient {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Validate a coloring file ("v c" per line) against a variant.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        coloring: PathBuf,
        /// id, lid or rlid.
        #[arg(long)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute an optimal coloring exactly.
    Solve {
        #[command(flatten)]
        input: Input,
        /// id, lid or rlid.
        #[arg(long)]
        variant: Variant,
        #[command(flatten)]
        guard: Guard,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generate a family member or a random graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: GenCommand,
        /// Also write the vertex-label sidecar (JSON) to this path.
        #[arg(long, global = true)]
        labels: Option<PathBuf>,
    },
    /// Solve a graph and its quotient and check the twin bounds.
    VerifyBounds {
        #[command(flatten)]
        source: BoundsSource,
        /// id, lid, rlid or all.
        #[arg(long, default_value = "all")]
        variant: VariantSelection,
        /// Vertex cap for seeded corpus graphs.
        #[arg(long, default_value_t = 9)]
        corpus_max_vertices: usize,
        /// Worker threads for corpus runs.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        guard: Guard,
    },
    /// Minimum twin-aware identifying code, or validate a code file.
    Idcode {
        #[command(flatten)]
        input: Input,
        /// Also require every closed neighborhood to meet the code.
        #[arg(long)]
        strict: bool,
        /// Validate this code file (one vertex per line) instead of solving.
        #[arg(long)]
        check: Option<PathBuf>,
        /// Report the minimum on the graph and on its quotient.
        #[arg(long)]
        compare_quotient: bool,
        #[command(flatten)]
        guard: Guard,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Optimal weighted (set-valued) identifying coloring.
    Weighted {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        weights: WeightSource,
        /// Validate this set-coloring file ("v c1,c2" per line) instead of solving.
        #[arg(long)]
        check: Option<PathBuf>,
        /// Report the optimum on the graph and on its quotient.
        #[arg(long)]
        compare_quotient: bool,
        #[command(flatten)]
        guard: Guard,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCommand {
    /// Split graph H_p: clique k_0..k_p, stable set s_1..s_p, edges s_i k_i.
    Hp {
        #[arg(long)]
        p: usize,
    },
    /// Split graph with one clique vertex per subset of {1..a}.
    Hext {
        #[arg(long)]
        a: usize,
    },
    /// H_p with T-1 twins added to each of k_1..k_t.
    Htt {
        #[arg(long)]
        p: usize,
        #[arg(long = "T")]
        big_t: usize,
        #[arg(long = "t")]
        t: usize,
    },
    /// G(n, prob) random graph.
    Random {
        #[arg(long)]
        n: usize,
        /// Edge probability in [0, 1].
        #[arg(long)]
        prob: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Exactly one graph source: a file (edge list or DIMACS) or a generator.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Graph file in edge-list or DIMACS format.
    pub path: Option<PathBuf>,
    /// Inline generator: hp:P, hext:A, htt:P,T,t, random:N,PROB,SEED,
    /// complete:N or path:N.
    #[arg(long = "gen")]
    pub generator: Option<GenSpec>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BoundsSource {
    /// Graph file in edge-list or DIMACS format.
    pub path: Option<PathBuf>,
    /// Inline generator, as for the other commands.
    #[arg(long = "gen")]
    pub generator: Option<GenSpec>,
    /// Directory of graph files, processed in file-name order.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Seed range `A..B` of random graphs with planted twins.
    #[arg(long)]
    pub seeds: Option<SeedRange>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct WeightSource {
    /// Weights file: "v w" per line.
    #[arg(long)]
    pub weights: Option<PathBuf>,
    /// Same capacity for every vertex.
    #[arg(long)]
    pub uniform: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Guard {
    /// Ignore the instance size guard.
    #[arg(long)]
    pub force: bool,
    /// Override the instance size guard for this command.
    #[arg(long)]
    pub max_vertices: Option<usize>,
}

/// Inline generator spec such as `hp:3`.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    Hp(usize),
    Hext(usize),
    Htt(usize, usize, usize),
    Random(usize, f64, u64),
    Complete(usize),
    Path(usize),
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameter(format!("bad generator spec `{s}`"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize, Error> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        match name {
            "hp" => arity(1).and(Ok(GenSpec::Hp(int(0)?))),
            "hext" => arity(1).and(Ok(GenSpec::Hext(int(0)?))),
            "htt" => arity(3).and(Ok(GenSpec::Htt(int(0)?, int(1)?, int(2)?))),
            "random" => {
                arity(3)?;
                let prob = args[1].parse().map_err(|_| bad())?;
                let seed = args[2].parse().map_err(|_| bad())?;
                Ok(GenSpec::Random(int(0)?, prob, seed))
            }
            "complete" => arity(1).and(Ok(GenSpec::Complete(int(0)?))),
            "path" => arity(1).and(Ok(GenSpec::Path(int(0)?))),
            _ => Err(bad()),
        }
    }
}

impl GenSpec {
    pub fn build(&self) -> Result<Graph, Error> {
        match *self {
            GenSpec::Hp(p) => Ok(gen_hp(p)?.graph),
            GenSpec::Hext(a) => Ok(gen_hext(a)?.graph),
            GenSpec::Htt(p, big_t, t) => Ok(gen_htt(p, big_t, t)?.graph),
            GenSpec::Random(n, prob, seed) => gen_random(n, prob, seed),
            GenSpec::Complete(n) => Graph::complete(n),
            GenSpec::Path(n) => Graph::path(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedRange(pub u64, pub u64);

impl FromStr for SeedRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameter(format!("bad seed range `{s}` (expected A..B)"));
        let (a, b) = s.split_once("..").ok_or_else(bad)?;
        let a = a.parse().map_err(|_| bad())?;
        let b = b.parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        Ok(SeedRange(a, b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantSelection {
    One(Variant),
    All,
}

impl FromStr for VariantSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "all" {
            Ok(VariantSelection::All)
        } else {
            s.parse().map(VariantSelection::One)
        }
    }
}

impl VariantSelection {
    fn variants(self) -> Vec<Variant> {
        match self {
            VariantSelection::One(v) => vec![v],
            VariantSelection::All => Variant::ALL.to_vec(),
        }
    }
}

/// Failure of a command, mapped to an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InstanceTooLarge { .. } => Failure::Guard(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// What a successful command prints, and whether it reports a valid result.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub valid: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            valid: true,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: Option<&Path>, generator: Option<&GenSpec>) -> Result<Graph, Failure> {
    match (path, generator) {
        (Some(p), None) => {
            Graph::parse(&read(p)?).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        (None, Some(g)) => Ok(g.build()?),
        _ => Err(Failure::Usage(
            "give exactly one of a graph file or --gen".into(),
        )),
    }
}

impl Input {
    fn load(&self) -> Result<Graph, Failure> {
        load_graph(self.path.as_deref(), self.generator.as_ref())
    }
}

impl Guard {
    fn config(&self, apply: impl FnOnce(&mut SolverConfig, usize)) -> SolverConfig {
        let mut cfg = SolverConfig {
            force: self.force,
            ..SolverConfig::default()
        };
        if let Some(limit) = self.max_vertices {
            apply(&mut cfg, limit);
        }
        cfg
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn check_outcome(report: &CheckReport, format: Format) -> Outcome {
    let stdout = match format {
        Format::Json => json(report),
        Format::Text => {
            let mut out = String::new();
            if report.valid {
                out.push_str("valid\n");
            } else {
                let _ = writeln!(
                    out,
                    "invalid: {} violation(s)",
                    report.violations.len() + report.undominated.len()
                );
                for v in &report.violations {
                    let _ = writeln!(out, "  {v}");
                }
                for v in &report.undominated {
                    let _ = writeln!(out, "  undominated vertex {v}");
                }
            }
            out
        }
    };
    Outcome {
        stdout,
        stderr: String::new(),
        valid: report.valid,
    }
}

fn report_outcome(report: &SolveReport, format: Format, label: &str) -> Outcome {
    match format {
        Format::Json => Outcome::ok(json(report)),
        Format::Text => {
            let mut out = format!(
                "{label} = {} (proof: {}, {} nodes)\n",
                report.optimum,
                serde_json::to_value(report.proof)
                    .expect("serializable")
                    .as_str()
                    .unwrap_or(""),
                report.nodes_explored
            );
            if let Some(c) = report.witness.as_coloring() {
                out.push_str(&formats::write_coloring(c));
            } else if let Some(sc) = report.witness.as_set_coloring() {
                out.push_str(&formats::write_set_coloring(sc));
            } else if let Some(code) = report.witness.as_code() {
                out.push_str(&formats::write_code(code));
            }
            Outcome::ok(out)
        }
    }
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Quotient { input, format } => {
            let g = input.load()?;
            let partition = TwinPartition::of(&g);
            let q = quotient_with(&g, &partition);
            let stdout = match format {
                Format::Text => format!(
                    "{}\n{}\n",
                    serde_json::to_string(&partition.to_json()).expect("serializable"),
                    q.quotient.to_edge_list()
                ),
                Format::Json => json(&serde_json::json!({
                    "partition": partition.to_json(),
                    "representative": q.representative,
                    "projection": q.projection,
                    "quotient": q.quotient.to_edge_list(),
                })),
            };
            Ok(Outcome::ok(stdout))
        }
        Command::Check {
            input,
            coloring,
            variant,
            format,
        } => {
            let g = input.load()?;
            let c = formats::parse_coloring(&read(coloring)?, g.vertex_count())
                .map_err(|e| Failure::Usage(format!("{}: {e}", coloring.display())))?;
            let report = check_coloring(&g, &c, *variant, CheckMode::Exhaustive)?;
            Ok(check_outcome(&report, *format))
        }
        Command::Solve {
            input,
            variant,
            guard,
            format,
        } => {
            let g = input.load()?;
            let cfg = guard.config(|c, l| c.max_coloring_vertices = l);
            let report = chi(&g, *variant, &cfg)?;
            Ok(report_outcome(&report, *format, &format!("chi_{variant}")))
        }
        Command::Gen { family, labels } => {
            let lg = match *family {
                GenCommand::Hp { p } => Some(gen_hp(p)?),
                GenCommand::Hext { a } => Some(gen_hext(a)?),
                GenCommand::Htt { p, big_t, t } => Some(gen_htt(p, big_t, t)?),
                GenCommand::Random { .. } => None,
            };
            let graph = match (&lg, family) {
                (Some(lg), _) => lg.graph.clone(),
                (None, GenCommand::Random { n, prob, seed }) => gen_random(*n, *prob, *seed)?,
                _ => unreachable!(),
            };
            if let Some(path) = labels {
                let lg = lg
                    .as_ref()
                    .ok_or_else(|| Failure::Usage("random graphs carry no vertex labels".into()))?;
                fs::write(path, lg.labels_json() + "\n")
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            Ok(Outcome::ok(graph.to_edge_list() + "\n"))
        }
        Command::VerifyBounds {
            source,
            variant,
            corpus_max_vertices,
            jobs,
            guard,
        } => {
            let graphs = bounds_graphs(source, *corpus_max_vertices)?;
            let cfg = guard.config(|c, l| c.max_coloring_vertices = l);
            let reports = verify_corpus(&graphs, &variant.variants(), &cfg, *jobs)?;
            let stdout: String = reports.iter().map(json).collect();
            let failed = reports.iter().filter(|r| !r.satisfied).count();
            let stderr = format!(
                "{} graphs, {} reports, {} violated, {} lower-tight, {} upper-tight\n",
                graphs.len(),
                reports.len(),
                failed,
                reports.iter().filter(|r| r.lower_tight).count(),
                reports.iter().filter(|r| r.upper_tight).count(),
            );
            Ok(Outcome {
                stdout,
                stderr,
                valid: failed == 0,
            })
        }
        Command::Idcode {
            input,
            strict,
            check,
            compare_quotient,
            guard,
            format,
        } => {
            let g = input.load()?;
            if let Some(path) = check {
                let code = formats::parse_code(&read(path)?, g.vertex_count())
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                return Ok(check_outcome(
                    &is_identifying_code(&g, &code, *strict)?,
                    *format,
                ));
            }
            let mut cfg = guard.config(|c, l| c.max_code_vertices = l);
            cfg.strict_codes = *strict;
            if *compare_quotient {
                let cmp = verify_idcode_equality(&g, &cfg)?;
                return Ok(Outcome {
                    stdout: json(&cmp),
                    stderr: String::new(),
                    valid: cmp.equal,
                });
            }
            let report = min_identifying_code(&g, &cfg)?;
            Ok(report_outcome(&report, *format, "min_code"))
        }
        Command::Weighted {
            input,
            weights,
            check,
            compare_quotient,
            guard,
            format,
        } => {
            let g = input.load()?;
            let n = g.vertex_count();
            let capacity = match (&weights.weights, weights.uniform) {
                (Some(path), None) => formats::parse_weights(&read(path)?, n)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                (None, Some(w)) if w > 0 => vec![w; n],
                _ => return Err(Failure::Usage("weights must be positive".into())),
            };
            if let Some(path) = check {
                let sc = formats::parse_set_coloring(&read(path)?, capacity)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                return Ok(check_outcome(&is_weighted_identifying(&g, &sc)?, *format));
            }
            let cfg = guard.config(|c, l| c.max_weighted_vertices = l);
            if *compare_quotient {
                let cmp = verify_weighted_equivalence(&g, &capacity, &cfg)?;
                return Ok(Outcome {
                    stdout: json(&cmp),
                    stderr: String::new(),
                    valid: cmp.equal,
                });
            }
            let report = weighted_optimum(&g, &capacity, &cfg)?;
            Ok(report_outcome(&report, *format, "weighted_optimum"))
        }
    }
}

fn bounds_graphs(source: &BoundsSource, max_vertices: usize) -> Result<Vec<Graph>, Failure> {
    if let Some(dir) = &source.corpus {
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        paths.sort();
        return paths.iter().map(|p| load_graph(Some(p), None)).collect();
    }
    if let Some(SeedRange(a, b)) = source.seeds {
        let spec = PlantSpec::with_max_vertices(max_vertices);
        return (a..b)
            .map(|seed| gen_planted(&spec, seed).map_err(Failure::from))
            .collect();
    }
    Ok(vec![load_graph(
        source.path.as_deref(),
        source.generator.as_ref(),
    )?])
}

/// Parses `std::env::args`, runs the command and returns the exit code.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            if out.valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_INVALID)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_GUARD)
        }
    }
}
