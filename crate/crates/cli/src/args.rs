use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "skewplane", version, about = "Verify line skew fields and dilations of coordinate affine planes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the geometric + and * tables of the x-axis as CSV.
    Cayley {
        #[command(flatten)]
        plane: PlaneArgs,
        /// Existing output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run verification suites and print a report.
    Verify(VerifyArgs),
    /// Search the quaternion plane for a non-commuting pair and a Pappus violation.
    Witness {
        #[command(flatten)]
        plane: PlaneArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Existing output directory.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct PlaneArgs {
    /// AG(2, GF(p^k)) given as `p,k`.
    #[arg(long, value_name = "P,K")]
    pub field: Option<String>,
    /// The plane over the rational quaternions.
    #[arg(long)]
    pub quaternion: bool,
}

#[derive(Args, Debug)]
pub struct SamplingArgs {
    /// Seed for sampled runs; required whenever sampling.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Sample count, or search budget for witnesses.
    #[arg(long, default_value_t = 10_000)]
    pub samples: u64,
    /// Cap on numerators and denominators of random quaternion components.
    #[arg(long, default_value_t = skewplane::sampling::DEFAULT_RATIONAL_BOUND)]
    pub rational_bound: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub plane: PlaneArgs,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Defaults to exhaustive on finite planes and sampled on the quaternion plane.
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    /// Also write the report as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Check one homothety instead of all dilations: `V=x,y P=x,y P'=x,y`.
    #[arg(long, num_args = 3, value_names = ["V=..", "P=..", "P'=.."], conflicts_with = "translation")]
    pub homothety: Option<Vec<String>>,
    /// Check one translation instead of all dilations: `P=x,y P'=x,y`.
    #[arg(long, num_args = 2, value_names = ["P=..", "P'=.."])]
    pub translation: Option<Vec<String>>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Desargues,
    Pappus,
    PappusCountermodel,
    Skewfield,
    DilationIso,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Exhaustive,
    Sampled,
}
