use std::io;
use std::process::ExitCode;

use clap::Parser;
use entedge::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    match run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("entedge: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
