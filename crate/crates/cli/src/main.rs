use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gldist_cli::{load_json, render_text, run, CliError, JobSpec, Mode, Subcommand};

/// Distinction, K-types, epsilon factors, double cosets and kernel checks
/// for GL_n(C) relative to GL_n(R).
#[derive(Parser, Debug)]
#[command(name = "gldist", version)]
struct Cli {
    #[arg(value_enum)]
    subcommand: Subcommand,
    /// Parameter file, or inline JSON starting with `{` or `[`.
    #[arg(long)]
    input: Option<String>,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the report to this file.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Unitary)]
    mode: Mode,
    /// Twist of the additive character, "re,im".
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Evaluation point of the epsilon factor (default 1/2).
    #[arg(long, allow_hyphen_values = true)]
    s0: Option<String>,
    /// Second parameter (file or inline JSON) for the pair epsilon factor.
    #[arg(long)]
    pair: Option<String>,
    /// Radius for the brute-force K-type oracle.
    #[arg(long)]
    radius: Option<i64>,
    /// Comma-separated sample points such as "0,1/5,1/5+3/10i".
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    samples: Option<Vec<String>>,
    #[arg(long)]
    n: Option<usize>,
    /// Composition of n, e.g. "2,2".
    #[arg(long, value_delimiter = ',')]
    comp: Option<Vec<usize>>,
}

fn job_from(cli: &Cli) -> Result<JobSpec, CliError> {
    Ok(JobSpec {
        subcommand: cli.subcommand,
        input: cli.input.as_deref().map(load_json).transpose()?,
        mode: cli.mode,
        b: cli.b.clone(),
        s0: cli.s0.clone(),
        pair: cli.pair.as_deref().map(load_json).transpose()?,
        radius: cli.radius,
        samples: cli.samples.clone(),
        n: cli.n,
        comp: cli.comp.clone(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let report = job_from(&cli).and_then(|job| run(&job));
    match report {
        Ok(report) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
            } else {
                render_text(&report)
            };
            print!("{text}");
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
