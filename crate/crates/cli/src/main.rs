mod batch;
mod cache;
mod config;
mod render;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use config::{Cli, Command};

/// Exit status plus a message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn compute(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<knotsum::Error> for Failure {
    fn from(e: knotsum::Error) -> Self {
        use knotsum::Error::*;
        match e {
            Parse(_) | BraidSyntax(_) | BraidOutOfRange { .. } | InvalidArgument(_) => {
                Failure::usage(e.to_string())
            }
            _ => Failure::compute(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => config::RunConfig::from_compute(args).and_then(|cfg| {
            let out = render::cmd_compute(&cfg)?;
            print!("{out}");
            Ok(0)
        }),
        Command::Verify(args) => verify::cmd_verify(&args),
        Command::Batch(args) => batch::cmd_batch(&args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
