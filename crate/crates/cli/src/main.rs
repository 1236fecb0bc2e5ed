use std::io::Write;
use std::process::ExitCode;

use brauer_cli::args::Cli;
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match brauer_cli::run(&cli) {
        Ok((out, extra, code)) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            if let Some(line) = extra {
                eprintln!("{line}");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
