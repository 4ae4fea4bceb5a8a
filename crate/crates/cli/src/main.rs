use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use riemann_xi::XiError;

mod args;
mod commands;
mod output;

use args::{Cli, Command};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
    NoConvergence(String),
}

impl From<XiError> for CliError {
    fn from(e: XiError) -> Self {
        match e {
            XiError::Domain(_) => CliError::Domain(e.to_string()),
            XiError::NoConvergence { .. } => CliError::NoConvergence(e.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 2,
            CliError::NoConvergence(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::NoConvergence(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval(a) => commands::eval(a),
        Command::Compare(a) => commands::compare(a),
        Command::Scan(a) => commands::scan(a),
        Command::Zeros(a) => commands::zeros(a),
        Command::Gammainc(a) => commands::gammainc(a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if out.failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("xi: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
