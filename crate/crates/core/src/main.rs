use std::process::ExitCode;

use clap::Parser;
use epgraph::cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let code = match run(&cli, &mut stdout.lock()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("epgraph: {err}");
            exit_code(&err)
        }
    };
    ExitCode::from(code as u8)
}
