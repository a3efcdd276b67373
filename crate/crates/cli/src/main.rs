use std::process::ExitCode;

use clap::Parser;
use photon_gas_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("photon-gas: {e}");
            e.exit_code()
        }
    }
}
