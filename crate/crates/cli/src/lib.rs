//! Command-line front end: tangent reports, dimension tables and witnesses
//! as text or JSON.

pub mod args;
pub mod commands;
pub mod polytext;
pub mod record;
pub mod spec;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

pub const EXIT_DETERMINED: i32 = 0;
pub const EXIT_NO_WITNESS: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn new(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: String) -> Self {
        Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Runs one invocation; `argv` excludes the program name.
pub fn run<S: AsRef<str>>(argv: &[S]) -> Outcome {
    let input: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let cli = match Cli::try_parse_from(std::iter::once("difftangent".to_string()).chain(input.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::new(EXIT_DETERMINED, text),
                _ => Outcome::input_error(text),
            };
        }
    };
    let result = match &cli.command {
        Command::Tangent(a) => commands::tangent_cmd(a, &input),
        Command::Table(t) => commands::table_cmd(t, &input),
        Command::Witness(w) => commands::witness_cmd(w),
    };
    result.unwrap_or_else(|e| {
        let text: String = e.0.lines().map(|l| format!("error: {l}\n")).collect();
        Outcome::input_error(text)
    })
}
