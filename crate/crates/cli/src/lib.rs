//! Command-line front end for `chebcurves`.
//!
//! [`run`] parses arguments, dispatches one subcommand and returns what would
//! be written to stdout and stderr together with the exit status. Output is a
//! pure function of the arguments and the cache contents.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

pub mod cli;
mod commands;
pub mod plot;

pub use cli::Cli;

/// Environment variable naming the curve cache file.
pub const CACHE_ENV: &str = "CHEBCURVES_CACHE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CliResponse {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum CliError {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<chebcurves::Error> for CliError {
    fn from(e: chebcurves::Error) -> Self {
        use chebcurves::Error as E;
        match e {
            E::Invariant(_) | E::CoincidentPassage(_) => CliError::Internal(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Output collected while a command runs.
#[derive(Debug, Default)]
pub(crate) struct Output {
    pub out: String,
    pub err: String,
}

impl Output {
    pub fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    pub fn warn(&mut self, s: impl AsRef<str>) {
        self.err.push_str("warning: ");
        self.err.push_str(s.as_ref());
        self.err.push('\n');
    }

    pub fn json<T: serde::Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
        self.line(text);
        Ok(())
    }
}

/// Cache file in effect: `--cache`, then `$CHEBCURVES_CACHE`, then
/// `$XDG_CACHE_HOME/chebcurves/curves.tsv`, then
/// `$HOME/.cache/chebcurves/curves.tsv`.
pub fn cache_path(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        return None;
    }
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    cli.cache
        .clone()
        .or_else(|| env(CACHE_ENV))
        .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("chebcurves").join("curves.tsv")))
        .or_else(|| env("HOME").map(|d| d.join(".cache").join("chebcurves").join("curves.tsv")))
}

pub fn run<I, T>(args: I) -> CliResponse
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliResponse {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_OK,
                },
                _ => CliResponse {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                },
            };
        }
    };
    let mut out = Output::default();
    let code = match commands::dispatch(&cli, &mut out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            out.err.push_str("error: ");
            out.err.push_str(e.message());
            out.err.push('\n');
            e.code()
        }
    };
    CliResponse {
        stdout: out.out,
        stderr: out.err,
        code,
    }
}
