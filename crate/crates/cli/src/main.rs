use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use idemsum_cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let outcome = run(&config);
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code)
}
