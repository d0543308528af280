use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use kerind::run::{run, RunOptions};
use kerind::scenario::{Command, Scenario};

/// Nonabelian H^1, kernel-of-induction checks and multiplicative-invariant
/// Picard groups for scenario files.
#[derive(Parser, Debug)]
#[command(name = "kerind", version)]
struct Cli {
    /// Scenario file (TOML).
    #[arg(long)]
    scenario: PathBuf,
    /// h1, kernel, oracle, verify-theorem, pic, coinvariants or all.
    #[arg(long, default_value = "all")]
    command: String,
    /// Matrix level; overrides the levels listed in the scenario.
    #[arg(long)]
    n: Option<usize>,
    /// Enumeration cap for |GL_n(S)| and witness searches.
    #[arg(long)]
    cap: Option<usize>,
    /// Stabilization bound for stable equality.
    #[arg(long)]
    bound: Option<usize>,
    /// Write the JSON report here ("-" for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for randomized samples only.
    #[arg(long)]
    seed: Option<u64>,
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let scenario = match Scenario::load(&cli.scenario) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}: {e}", cli.scenario.display());
            return ExitCode::from(2);
        }
    };
    let command: Command = match cli.command.parse() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    if matches!((cli.n, cli.cap, cli.bound), (Some(0), _, _) | (_, Some(0), _) | (_, _, Some(0))) {
        eprintln!("--n, --cap and --bound must be positive");
        return ExitCode::from(2);
    }
    let opts = RunOptions {
        command: Some(command),
        levels: cli.n.map(|n| vec![n]),
        cap: cli.cap,
        bound: cli.bound,
        seed: cli.seed,
    };
    let start = Instant::now();
    let report = run(&scenario, &opts);
    let elapsed = start.elapsed();

    match cli.json.as_deref() {
        Some(p) if p.as_os_str() == "-" => emit(&(report.to_json() + "\n")),
        Some(p) => {
            if let Err(e) = std::fs::write(p, report.to_json() + "\n") {
                eprintln!("{}: {e}", p.display());
                return ExitCode::from(2);
            }
            emit(&report.table());
        }
        None => emit(&report.table()),
    }
    // wall-clock stays out of the report so that reports are byte-identical
    eprintln!("elapsed {:.3}s", elapsed.as_secs_f64());
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
