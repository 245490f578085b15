//! Command-line surface over the obstruction library: manifest
//! ingestion, verdict reports, a representation-ring calculator, and
//! batch sweeps.
//!
//! Exit codes: 0 when a verdict was computed (obstructed or not),
//! 2 when a theorem's hypotheses gate the question, 1 for input errors.
//! Output is deterministic: identical inputs produce byte-identical
//! reports, with machine-readable JSON Lines following the human text.

mod ops;
mod poly;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "spinform",
    version,
    about = "Exact obstruction checks for isometries of spin 4-manifold intersection forms"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print rank, inertia, evenness, and unimodularity of a manifest
    Info {
        /// Path to a JSON manifold manifest
        manifest: PathBuf,
    },
    /// Check the twist along a (+-2)-sphere class against the
    /// finite-order realizability bound
    DehnTwist {
        /// Path to a JSON manifold manifest
        manifest: PathBuf,
        /// Comma-separated integer coordinates of the sphere class
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        /// Declared square (+2 or -2), checked against the computed one
        #[arg(long, allow_hyphen_values = true)]
        square: Option<String>,
        /// Zero-pad the vector on the right up to the lattice rank
        #[arg(long)]
        pad: bool,
    },
    /// Run the full involution battery: type classification, both
    /// inequalities, the finite-order bound, and the triviality rule
    Involution {
        /// Path to a JSON manifold manifest
        manifest: PathBuf,
        /// Named involution: f_S, f_K, or f_mn (with --m/--n)
        #[arg(long, conflicts_with = "matrix")]
        named: Option<String>,
        /// Number of K3 summands for f_mn
        #[arg(long, requires = "named")]
        m: Option<u32>,
        /// Number of S2xS2 summands for f_mn
        #[arg(long, requires = "named")]
        n: Option<u32>,
        /// Path to a row-major JSON integer matrix
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Negate a positive-signature form before the finite-order bound
        #[arg(long)]
        allow_reversal: bool,
    },
    /// Decide the Borsuk-Ulam constraint system for (m0, m1, n0, n1)
    BorsukUlam { m0: u32, m1: u32, n0: u32, n1: u32 },
    /// Batch tables over f(m,n) or Borsuk-Ulam parameter grids
    Sweep {
        /// Path to a JSON sweep configuration
        config: PathBuf,
    },
    /// Representation-ring calculator for Z[t]/(t^4 - 1)
    RepRing {
        #[command(subcommand)]
        cmd: RepRingCmd,
    },
}

#[derive(Subcommand)]
enum RepRingCmd {
    /// Evaluate the characters of an integer polynomial in t
    Eval {
        /// Polynomial such as "1 - t + 2t^2" (exponents reduce mod 4)
        polynomial: String,
        /// Group element 1, j, -1, or -j (default: all four)
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = match cli.cmd {
        Cmd::Info { manifest } => ops::info(&manifest),
        Cmd::DehnTwist {
            manifest,
            vector,
            square,
            pad,
        } => ops::dehn_twist(&manifest, &vector, square.as_deref(), pad),
        Cmd::Involution {
            manifest,
            named,
            m,
            n,
            matrix,
            allow_reversal,
        } => ops::involution(&manifest, named.as_deref(), m, n, matrix.as_deref(), allow_reversal),
        Cmd::BorsukUlam { m0, m1, n0, n1 } => ops::borsuk_ulam(m0, m1, n0, n1),
        Cmd::Sweep { config } => ops::sweep(&config),
        Cmd::RepRing {
            cmd: RepRingCmd::Eval { polynomial, at },
        } => ops::rep_ring_eval(&polynomial, at.as_deref()),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}
