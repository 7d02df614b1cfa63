//! `pi-forge`: evaluate the 1/pi family, verify the binomial identities and
//! run the expansion diagnostics from the command line.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 precision exhausted,
//! 3 identity falsified.

mod commands;
mod record;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pi_forge::IdentityId;

use commands::{Failure, Status};
use record::{emit, Format};

#[derive(Parser, Debug)]
#[command(
    name = "pi-forge",
    version,
    about = "Certified 1/pi series, gamma-quotient expansions and exact identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Working precision in bits.
    #[arg(long, env = "PI_FORGE_PREC_BITS", default_value_t = 256)]
    prec_bits: u32,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the (m, k) series for 1/pi with a certified error bound.
    Pi {
        #[arg(long, default_value_t = 0)]
        m: u64,
        /// Must be at least 2.
        #[arg(long)]
        k: u64,
        #[arg(long, default_value = "1e-30")]
        target_rel_err: String,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a normalized combination, e.g. `--weights 2:1+5i,4:-3`.
    Combine {
        #[arg(long)]
        weights: String,
        #[arg(long, default_value = "1e-30")]
        target_rel_err: String,
        #[command(flatten)]
        common: Common,
    },
    /// Certify an identity exactly over 0 <= m <= m-max, 0 <= k <= k-max.
    Identity {
        #[arg(long, value_parser = parse_id)]
        id: IdentityId,
        #[arg(long, default_value_t = 50)]
        m_max: u64,
        #[arg(long, default_value_t = 100)]
        k_max: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Diagnostics of the formal expansion of Gamma(nu+1)/Gamma(nu+k+1/2).
    GammaQuotient {
        /// Order as p/q.
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, conflicts_with = "k_range", required_unless_present = "k_range")]
        k: Option<u64>,
        /// Inclusive range A:B.
        #[arg(long)]
        k_range: Option<String>,
        #[arg(long, default_value_t = 200)]
        max_terms: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Deviation of z W{K_nu, I_nu}(z) from 1 using the series for K and I.
    Wronskian {
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Number of I-series terms; chosen automatically when absent.
        #[arg(long)]
        max_terms: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_id(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: pi_forge::Error| e.to_string())
}

fn run(cli: Cli) -> Result<Status, Failure> {
    let (outcome, common) = match cli.command {
        Command::Pi {
            m,
            k,
            target_rel_err,
            common,
        } => (commands::pi(m, k, &target_rel_err, common.prec_bits), common),
        Command::Combine {
            weights,
            target_rel_err,
            common,
        } => (commands::combine(&weights, &target_rel_err, common.prec_bits), common),
        Command::Identity {
            id,
            m_max,
            k_max,
            common,
        } => (commands::identity(id, m_max, k_max), common),
        Command::GammaQuotient {
            nu,
            k,
            k_range,
            max_terms,
            common,
        } => {
            let ks = match (k, k_range) {
                (Some(k), _) => (k, k),
                (None, Some(r)) => commands::parse_k_range(&r)?,
                (None, None) => unreachable!("clap requires one of --k, --k-range"),
            };
            (commands::gamma_quotient(&nu, ks, max_terms, common.prec_bits), common)
        }
        Command::Wronskian {
            nu,
            z,
            max_terms,
            common,
        } => (commands::wronskian(&nu, &z, max_terms, common.prec_bits), common),
    };
    let (records, status) = outcome?;

    let io_fail = |e: io::Error| Failure {
        status: Status::Usage,
        message: format!("cannot write output: {e}"),
    };
    let mut sink: Box<dyn Write> = match &common.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(io_fail)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    emit(&records, common.format, &mut *sink).map_err(io_fail)?;
    sink.flush().map_err(io_fail)?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status as u8)
        }
    }
}
