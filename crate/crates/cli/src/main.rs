use std::process::ExitCode;

use clap::Parser;

use eqhom_cli::{render, run, Cli, EXIT_PARSE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, report) = run(&cli);
    let text = render(&report);
    print!("{text}");
    if let Some(path) = &cli.json_out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("eqhom: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_PARSE as u8);
        }
    }
    if let Some(err) = report.get("error").and_then(|e| e.get("message")).and_then(|m| m.as_str()) {
        eprintln!("eqhom: {err}");
    }
    ExitCode::from(code as u8)
}
