//! Command-line front end. `run` parses arguments, executes the command
//! and returns the exit code together with everything that would be
//! printed, so tests can drive it without spawning a process.

mod args;
mod commands;
mod input;
mod render;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;

pub use input::parse_group_file;
pub use render::render_table;

use args::Cli;

/// Exit code for a negative finding (not almost conjugate, not solitary,
/// no criterion, disagreement, inconsistency).
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit code for malformed input or usage.
pub const EXIT_USAGE: i32 = 2;
/// Exit code when a cap on elements or subgroups is hit.
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] gassmann_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(gassmann_core::Error::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub exit_code: i32,
    /// The JSON payload, absent for help output and errors.
    pub payload: Option<Value>,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the tool on `args`, which exclude the program name.
pub fn run<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("gassmann")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let shown = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return CommandResult {
                exit_code: if shown { 0 } else { EXIT_USAGE },
                payload: None,
                stdout: if shown { text.clone() } else { String::new() },
                stderr: if shown { String::new() } else { text },
            };
        }
    };
    let caps = input::caps(cli.cap);
    match commands::execute(cli.command, &caps) {
        Ok(outcome) => {
            let mut payload = outcome.fields;
            payload.insert("tool_version".into(), env!("CARGO_PKG_VERSION").into());
            payload.insert("command".into(), outcome.command.into());
            payload.insert("inputs_echo".into(), Value::Object(outcome.inputs));
            let payload = Value::Object(payload);
            let stdout = if cli.json {
                serde_json::to_string_pretty(&payload).expect("payload serializes") + "\n"
            } else {
                render_table(&payload)
            };
            CommandResult {
                exit_code: if outcome.negative { EXIT_NEGATIVE } else { 0 },
                payload: Some(payload),
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => CommandResult {
            exit_code: e.exit_code(),
            payload: None,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
