//! Command-line front end: argument parsing, scene documents, the preset
//! catalog, result encoding and SVG rendering.
//!
//! [`run`] is the whole program with its streams passed in, so tests drive
//! it without spawning processes. Exit codes: 0 success, 1 regime or domain
//! error, 2 malformed input or usage.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::Parser;

pub mod args;
mod commands;
pub mod output;
pub mod presets;
pub mod render;
pub mod scene;

pub use args::{Cli, Command, GlobalArgs};
pub use render::{render_model, to_svg, RenderModel};
pub use scene::Scene;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Geometry(#[from] tance::Error),
    #[error("render: {0}")]
    Render(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Geometry(e) if e.is_input_error() => 2,
            CliError::Geometry(_) | CliError::Render(_) | CliError::Io(_) => 1,
        }
    }
}

/// Runs one invocation; `args` starts with the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let result = commands::execute(&cli, stdin).and_then(|text| match &cli.global.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write output: {e}"))),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
