use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hyperfuse::PrecisionFloor;
use hyperfuse_cli::{error_report, run, AnalysisReport, Cli, CliError};

fn render(report: &AnalysisReport, json: bool) -> String {
    if json {
        report.to_json() + "\n"
    } else {
        report.to_human()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let result = PrecisionFloor::from_env()
        .map_err(|e| CliError::invalid(format!("HYPERFUSE_PRECISION_FLOOR: {e}")))
        .and_then(|_| run(&cli.command, &mut std::io::stdin().lock()));
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    match result {
        Ok(outcome) => {
            let text = render(&outcome.report, cli.json);
            match outcome.stdout {
                Some(out) => {
                    let _ = stdout.write_all(out.as_bytes());
                    let _ = stderr.write_all(text.as_bytes());
                }
                None => {
                    let _ = stdout.write_all(text.as_bytes());
                }
            }
            ExitCode::from(outcome.report.exit_status.code() as u8)
        }
        Err(err) => {
            let report = error_report(name, &err);
            if cli.json {
                let _ = stdout.write_all(render(&report, true).as_bytes());
            }
            let _ = writeln!(stderr, "error: {}", err.message);
            ExitCode::from(err.status.code() as u8)
        }
    }
}
