//! Command-line front end for `brauer-core`: argument parsing, JSON and TSV
//! formats, and the verification suites.

pub mod args;
pub mod commands;
pub mod error;
pub mod formats;
pub mod goldens;
pub mod report;

use args::{Cli, Command};
use commands::verify::GoldenStatus;
use error::CliError;

/// Exit code for a completed run whose checks did not all hold.
pub const VERIFICATION_FAILED: u8 = 5;

/// Runs one parsed invocation, returning what to print on stdout, an
/// optional line for stderr, and the exit code.
pub fn run(cli: &Cli) -> Result<(String, Option<String>, u8), CliError> {
    let budget = cli.budget.unwrap_or(brauer_core::bar::DEFAULT_BUDGET);
    let (report, extra) = match &cli.command {
        Command::Mul(a) => (commands::mul::run(a)?, None),
        Command::Homology(a) => (commands::homology::homology(a)?, None),
        Command::Complex(a) => (commands::homology::export(a)?, None),
        Command::Tor(a) => (commands::tor::run(a, budget)?, None),
        Command::Verify(a) => {
            let v = commands::verify::run(a, budget)?;
            let line = match v.golden {
                GoldenStatus::Match => format!("golden: match ({})", v.key),
                GoldenStatus::Mismatch => format!("golden: MISMATCH ({})", v.key),
                GoldenStatus::Absent => format!("golden: none for {}", v.key),
            };
            let mut report = v.report;
            report.pass &= v.golden != GoldenStatus::Mismatch;
            (report, Some(line))
        }
    };
    let code = if report.pass { 0 } else { VERIFICATION_FAILED };
    Ok((report.render(cli.format), extra, code))
}
