use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use epilip::rational::{parse_rational, parse_vector};
use epilip::{RVector, Rational};

#[derive(Debug, Parser)]
#[command(name = "epilip", version, about = "Subdifferentials and Lipschitz moduli of parametric multiobjective LPs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn vector(s: &str) -> Result<RVector, String> {
    parse_vector(s).map_err(|e| e.to_string())
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Domain checks at the nominal parameter, and the optimal value when q = 1.
    Analyze { file: PathBuf },
    /// Adds cone and span directions to the feasible-set system. Without
    /// directions, adds the polar of the objectives.
    Eliminate {
        file: PathBuf,
        #[arg(long = "cone", value_parser = vector, allow_hyphen_values = true)]
        cone: Vec<RVector>,
        #[arg(long = "span", value_parser = vector, allow_hyphen_values = true)]
        span: Vec<RVector>,
        #[arg(long, value_enum, default_value_t = PruneArg::Every)]
        prune: PruneArg,
    },
    /// Symbolic optimal value function (q = 1).
    ValueFunction { file: PathBuf },
    Subdiff {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: SubdiffTarget,
        #[arg(long = "anchor-x", value_parser = vector, allow_hyphen_values = true, conflicts_with = "anchor_p")]
        anchor_x: Option<RVector>,
        #[arg(long = "anchor-p", value_parser = vector, allow_hyphen_values = true)]
        anchor_p: Option<RVector>,
        /// Parameter; defaults to the nominal one.
        #[arg(long, value_parser = vector, allow_hyphen_values = true)]
        b: Option<RVector>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        grid: u32,
    },
    Modulus {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: ModulusArg,
        #[arg(long, value_parser = vector, allow_hyphen_values = true)]
        anchor: Option<RVector>,
        #[arg(long, value_parser = vector, allow_hyphen_values = true)]
        b: Option<RVector>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        grid: u32,
    },
    /// Tests whether x is nondominated in F(b).
    ParetoCheck {
        file: PathBuf,
        #[arg(long, value_parser = vector, allow_hyphen_values = true)]
        b: RVector,
        #[arg(long, value_parser = vector, allow_hyphen_values = true)]
        x: RVector,
    },
    /// Moves x to a nondominated point with no larger image.
    Dominate {
        file: PathBuf,
        #[arg(long, value_parser = vector, allow_hyphen_values = true)]
        b: RVector,
        #[arg(long, value_parser = vector, allow_hyphen_values = true)]
        x: RVector,
    },
    /// Sampling checks around the nominal parameter.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: VerifyTarget,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "1/10")]
        radius: Rational,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = vector, allow_hyphen_values = true)]
        anchor: Option<RVector>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PruneArg {
    Every,
    KeepFinal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SubdiffTarget {
    F,
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModulusArg {
    Ef,
    Ep,
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Ef,
    Ep,
    P,
    Convexity,
}
