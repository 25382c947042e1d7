use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use aggraded::session::{parse_session_with, execute, Overrides};

#[derive(Parser)]
#[command(name = "aggraded", version, about = "Associated graded modules of local rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a session file and emit a JSON report.
    Run {
        session: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long = "char")]
        characteristic: Option<u64>,
        #[arg(long)]
        truncation: Option<u32>,
        #[arg(long = "max-homdeg")]
        max_homdeg: Option<usize>,
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let Command::Run {
        session,
        out,
        characteristic,
        truncation,
        max_homdeg,
        verbose,
    } = Cli::parse().command;
    let overrides = Overrides {
        characteristic,
        truncation,
        max_homdeg,
    };
    let run = || -> Result<i32, String> {
        let text = std::fs::read_to_string(&session).map_err(|e| format!("{}: {e}", session.display()))?;
        let parsed = parse_session_with(&text, &overrides).map_err(|e| format!("{}: {e}", session.display()))?;
        let mut report = execute(&parsed).map_err(|e| format!("{}: {e}", session.display()))?;
        report.session.source = Some(session.display().to_string());
        if verbose {
            eprint!("{}", report.render());
        }
        let json = report.to_json().map_err(|e| e.to_string())?;
        match &out {
            Some(path) => std::fs::write(path, json + "\n").map_err(|e| format!("{}: {e}", path.display()))?,
            None => match writeln!(std::io::stdout().lock(), "{json}") {
                Err(e) if e.kind() != ErrorKind::BrokenPipe => return Err(e.to_string()),
                _ => {}
            },
        }
        Ok(report.exit_code())
    };
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
