mod args;
mod commands;
mod ranges;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use pullback_core::Ceiling;

use args::{Cli, Command};
use commands::Ctx;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(pullback_core::Error),
}

impl From<pullback_core::Error> for CliError {
    fn from(e: pullback_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: cannot start {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }

    let ctx = Ctx {
        format: cli.format,
        ceiling: cli.ceiling.unwrap_or_else(Ceiling::from_env),
    };
    let result = match &cli.command {
        Command::Check(a) => commands::check(&ctx, a),
        Command::Count(a) => commands::count(&ctx, a),
        Command::Table(a) => commands::table(&ctx, a),
        Command::Outcomes(a) => commands::outcomes(&ctx, a),
        Command::Verify(a) => commands::verify(&ctx, a),
    };

    match result {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(report.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if report.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
