use std::process::ExitCode;

use clap::Parser;
use freebraid::budget::Budgets;
use freebraid::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budgets = Budgets::from_env();
    let rendered = match execute(&cli, &budgets) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &rendered.text),
        None => {
            print!("{}", rendered.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(rendered.exit_code as u8)
}
