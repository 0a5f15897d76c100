//! Thin command-line front end; all logic lives in `tatecount::cli`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tatecount::cli::{self, AsaiCommand, CmdOutput, Format};

#[derive(Parser)]
#[command(name = "tatecount", version, about = "Exact representation-theoretic counting for Tate classes: weight decompositions, the closed-form rank, tensor induction on fixture models, and batch verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Plain,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Tsv => Format::Tsv,
            FormatArg::Plain => Format::Plain,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form rank for stabilizer order m and degree d (m must divide d)
    TateRank { m: u64, d: u64 },
    /// Decompose a tensor power of the standard character and count
    /// one-dimensional constituents
    Weights {
        /// tensor power per factor
        #[arg(long)]
        power: u32,
        /// number of independent factors
        #[arg(long, default_value_t = 1)]
        factors: usize,
    },
    /// Operations on a Galois model fixture
    Asai {
        #[command(subcommand)]
        op: AsaiOp,
    },
    /// Check whether 2×2 generators mod ell generate all of SL₂ on the
    /// determinant-one part
    Slcheck {
        #[arg(long)]
        ell: u64,
        /// semicolon-separated generators, each four comma-separated integers
        #[arg(long)]
        gens: String,
    },
    /// Run the full invariant suite over a directory of fixtures
    Verify {
        dir: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum AsaiOp {
    /// Build the tensor-induced representation and check the restriction
    /// identity
    Induce {
        model: PathBuf,
        /// emit the induced representation in the rep fixture format
        #[arg(long)]
        emit: bool,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Compute the twist-equivalence stabilizer and its witness characters
    Stabilizer {
        model: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Verify the stable tensor identity by exact character equality
    StableCheck {
        model: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Brute-force one-dimensional constituent counts next to the formula
    TateCount {
        model: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
    /// Solve the quadratic norm-twist equation and verify the descent
    Descend {
        model: PathBuf,
        #[arg(long, value_enum, default_value = "tsv")]
        format: FormatArg,
    },
}

fn emit(out: CmdOutput) -> ExitCode {
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli::degree_cap_from_env();
    match cli.command {
        Command::TateRank { m, d } => emit(cli::run_tate_rank(m, d)),
        Command::Weights { power, factors } => emit(cli::run_weights(power, factors)),
        Command::Slcheck { ell, gens } => emit(cli::run_slcheck(ell, &gens)),
        Command::Verify { dir, format } => emit(cli::run_verify(&dir, format.into())),
        Command::Asai { op } => match op {
            AsaiOp::Induce {
                model,
                emit: emit_rep,
                format,
            } => emit(cli::run_asai(
                AsaiCommand::Induce,
                &model,
                format.into(),
                emit_rep,
                cap,
            )),
            AsaiOp::Stabilizer { model, format } => emit(cli::run_asai(
                AsaiCommand::Stabilizer,
                &model,
                format.into(),
                false,
                cap,
            )),
            AsaiOp::StableCheck { model, format } => emit(cli::run_asai(
                AsaiCommand::StableCheck,
                &model,
                format.into(),
                false,
                cap,
            )),
            AsaiOp::TateCount { model, format } => emit(cli::run_asai(
                AsaiCommand::TateCount,
                &model,
                format.into(),
                false,
                cap,
            )),
            AsaiOp::Descend { model, format } => emit(cli::run_asai(
                AsaiCommand::Descend,
                &model,
                format.into(),
                false,
                cap,
            )),
        },
    }
}
