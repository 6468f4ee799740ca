use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotsum::braid::{parse_braid, BraidWord};
use knotsum::invariant::Request;
use knotsum::par::Exec;

use crate::Failure;

#[derive(Parser)]
#[command(
    name = "knotsum",
    version,
    about = "Coloured Jones and ADO invariants of braid closures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute the invariant of one braid closure.
    Compute(ComputeArgs),
    /// Run the verification suites and print a pass/fail report.
    Verify(VerifyArgs),
    /// Compute invariants for every knot in a JSON Lines table.
    Batch(BatchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Spec {
    Lambda,
    Jones,
    Ado,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args, Clone)]
pub struct Output {
    /// Colour N (dimension of the representation).
    #[arg(long = "N", value_name = "N", default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub colour: u32,
    /// Quantities to report.
    #[arg(long, value_enum, num_args = 1.., default_values_t = [Spec::Jones])]
    pub spec: Vec<Spec>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Result cache directory.
    #[arg(long, env = "KNOTSUM_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Refuse inputs whose Lawrence basis is larger than this.
    #[arg(long, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_dim: u64,
    /// Include wall-clock milliseconds in the output.
    #[arg(long)]
    pub timing: bool,
    /// Run on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args)]
pub struct ComputeArgs {
    /// Whitespace-separated signed generator indices, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
    #[arg(long)]
    pub strands: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Suites to run (all by default).
    #[arg(long, value_enum, num_args = 1..)]
    pub suite: Vec<Suite>,
    /// Restrict to this strand count.
    #[arg(long)]
    pub n: Option<usize>,
    /// Restrict to this colour.
    #[arg(long = "N", value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub colour: Option<u32>,
    /// Curve system JSON used by the delta suite instead of the built-in one.
    #[arg(long)]
    pub scenario: Option<PathBuf>,
    #[arg(long, default_value_t = 31)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Per-suite time limit in milliseconds.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_ms: Option<u64>,
    #[arg(long, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_dim: u64,
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    BraidRelations,
    Delta,
    Markov,
    Oracles,
}

#[derive(Args)]
pub struct BatchArgs {
    /// JSON Lines knot table: {"name":"3_1","strands":2,"word":[1,1,1]} per line.
    #[arg(long)]
    pub table: PathBuf,
    /// Recompute even when a cached result exists.
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub output: Output,
}

/// Everything one computation needs, validated.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub braid: BraidWord,
    pub colour: u32,
    pub specs: Vec<Spec>,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub max_dim: u64,
    pub timing: bool,
    pub exec: Exec,
    pub force: bool,
}

impl RunConfig {
    pub fn from_compute(args: ComputeArgs) -> Result<Self, Failure> {
        let braid = parse_braid(&args.braid, args.strands)?;
        Ok(Self::new(braid, &args.output, false))
    }

    pub fn new(braid: BraidWord, out: &Output, force: bool) -> Self {
        let mut specs = out.spec.clone();
        specs.sort();
        specs.dedup();
        RunConfig {
            braid,
            colour: out.colour,
            specs,
            format: out.format,
            cache_dir: out.cache_dir.clone(),
            max_dim: out.max_dim,
            timing: out.timing,
            exec: if out.sequential {
                Exec::Sequential
            } else {
                Exec::Parallel
            },
            force,
        }
    }

    pub fn request(&self) -> Request {
        Request {
            jones: self.specs.contains(&Spec::Jones),
            ado: self.specs.contains(&Spec::Ado),
            exec: self.exec,
            timing: self.timing,
        }
    }
}
