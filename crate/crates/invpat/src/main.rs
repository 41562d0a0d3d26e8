use std::process::ExitCode;

use clap::Parser;
use invpat::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(outcome) => ExitCode::from(outcome.exit_code() as u8),
        Err(e) => {
            eprintln!("invpat: {e}");
            ExitCode::from(2)
        }
    }
}
