use std::process::ExitCode;

use clap::Parser;
use ginv_cli::{render, run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig::from(&cli.config);
    match run(&cli.command, &cfg) {
        Ok(outcome) => {
            print!("{}", render(&outcome.report, cfg.output_format));
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
