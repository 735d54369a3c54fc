//! `vcw`: set-system analysis from the command line.

mod args;
mod run;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run::execute(&cli);
    let code = outcome.code;
    if let Some(msg) = &outcome.message {
        eprintln!("vcw: {msg}");
    }
    if let Some(body) = outcome.body {
        let text = match cli.format {
            args::Format::Json => format!("{body}\n"),
            args::Format::Table => table::render(&body),
        };
        let written = match &outcome.output_file {
            Some(path) => run::write_atomically(path, &text),
            None => std::io::stdout().lock().write_all(text.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("vcw: cannot write output: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
