//! `abzeta`: tables of subgroup-class counts, zeta exponents and Dirichlet
//! coefficients.
//!
//! Exit status is 0 on success, 2 for a usage error (including arguments
//! outside a supported range) and 3 when an exact check fails.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use abzeta::dirichlet::SeriesKind;
use abzeta::{Error, Rank};
use output::Format;

#[derive(Parser, Debug)]
#[command(name = "abzeta", version, about = "Exact counting functions of finite abelian groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(required = true, multiple = false)]
struct RankArg {
    /// Rank bound r.
    #[arg(long = "r")]
    r: Option<u32>,
    /// The limit r → ∞.
    #[arg(long)]
    limit: bool,
}

impl RankArg {
    fn rank(self) -> Rank {
        match self.r {
            Some(r) => Rank::Finite(r),
            None => Rank::Limit,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Series {
    /// Subgroup classes.
    Z,
    /// Direct factors.
    D,
    /// Unitary factors.
    U,
}

impl Series {
    fn kind(self, rank: Rank) -> SeriesKind {
        match self {
            Series::Z => SeriesKind::SubgroupClasses(rank),
            Series::D => SeriesKind::DirectFactors(rank),
            Series::U => SeriesKind::UnitaryFactors(rank),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GroupKind {
    Direct,
    Unitary,
    Classes,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// α_r(k), or α_r(k, j) with --j.
    Alpha {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_negative_numbers = true)]
        j: Option<i64>,
    },
    /// Rows k, α_r(k) for k = 0..=kmax.
    AlphaTable {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long)]
        kmax: u32,
    },
    /// Zeta exponents β_r(1..=mmax), one row per r = 1..=rmax.
    BetaTable {
        #[arg(long)]
        rmax: u32,
        #[arg(long)]
        mmax: usize,
    },
    /// Limit zeta exponents β(1..=mmax), one per line.
    Beta {
        #[arg(long)]
        mmax: usize,
    },
    /// Power series coefficients of F_r(x) up to x^order.
    Series {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long)]
        order: usize,
    },
    /// Exact rational F_r(x, y) and reduced F_r(x).
    ClosedForm {
        #[arg(long = "r")]
        r: u32,
    },
    /// Checks the reciprocity identities of F_r(x, y) and F_r(x).
    VerifyFunceq {
        #[arg(long = "r")]
        r: u32,
    },
    /// Dirichlet coefficient a(n).
    Coeff {
        #[arg(long, value_enum)]
        series: Series,
        #[command(flatten)]
        rank: RankArg,
        #[arg(long)]
        n: u64,
    },
    /// Summatory function ∑_{n<=x} a(n).
    Sum {
        #[arg(long, value_enum)]
        series: Series,
        #[command(flatten)]
        rank: RankArg,
        #[arg(long)]
        x: u64,
    },
    /// Mean-value constant of the series.
    Constant {
        #[arg(long, value_enum)]
        series: Series,
        #[command(flatten)]
        rank: RankArg,
        #[arg(long, default_value_t = 100)]
        mmax: usize,
        #[arg(long, default_value_t = 1e-12)]
        eps: f64,
    },
    /// Complex roots of the numerator of F_r(x).
    Roots {
        #[arg(long = "r")]
        r: u32,
    },
    /// Factorisations or subgroup classes of the group of type λ.
    Group {
        /// Comma-separated exponents, e.g. 2,2,4.
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<u32>,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        kind: GroupKind,
        /// List every factorisation instead of the counts.
        #[arg(long)]
        list: bool,
    },
    /// Runs the oracle-equivalence and golden-table checks.
    Selftest,
}

/// Failure of a command, with its exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::OutOfRange { .. } | Error::Overflow(_) => Failure::Usage(e.to_string()),
            Error::Consistency(_) | Error::NoConvergence { .. } => Failure::Check(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (table, failed) = match commands::run(&cli.command) {
        Ok(t) => t,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            return ExitCode::from(3);
        }
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(table.render(cli.format).as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(1);
    }
    if failed {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    }
}
