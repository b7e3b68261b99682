use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gaussnet::{parse_netfile, Bindings, CliError, Netfile};
use gaussnet_core::verify::{all_passed, run_selected, Gate, VerifyConfig, VerifyOutcome};

#[derive(Parser)]
#[command(
    name = "gaussnet",
    version,
    about = "Gaussian entanglement in beam-splitter networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the reports of a netfile once and print them as CSV.
    Run {
        file: PathBuf,
        /// Bind a placeholder, `name=value`; repeatable.
        #[arg(long = "set", value_parser = parse_binding)]
        set: Vec<(String, f64)>,
    },
    /// Sweep one placeholder over an inclusive grid.
    Sweep {
        file: PathBuf,
        #[arg(long)]
        var: String,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long = "set", value_parser = parse_binding)]
        set: Vec<(String, f64)>,
        /// Output CSV; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the CSV tables of a built-in figure (fig3, fig6).
    Figure {
        name: String,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Run the seeded verification suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        cases: u64,
        /// Group (`xi`) or single check (`xi.two_path`).
        #[arg(long)]
        check: Option<String>,
        /// Override a check's tolerance, `check=value`; repeatable.
        #[arg(long = "tolerance", value_parser = parse_binding)]
        tolerance: Vec<(String, f64)>,
        /// Print one JSON record per check instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn parse_binding(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let value: f64 = value.parse().map_err(|_| format!("`{value}` is not a number"))?;
    Ok((name.trim_start_matches('$').to_string(), value))
}

fn load(path: &PathBuf) -> Result<Netfile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    parse_netfile(&text)
}

fn describe(o: &VerifyOutcome) -> String {
    let gate = match o.gate {
        Gate::AtMost(t) => format!("<= {t:e}"),
        Gate::Below(t) => format!("< {t:e}"),
        Gate::Informational => "info".to_string(),
    };
    let status = match (o.gate, o.pass) {
        (Gate::Informational, _) => "INFO",
        (_, true) => "PASS",
        (_, false) => "FAIL",
    };
    let mut line = format!(
        "{status} {:<32} cases={} skipped={} deviation={:e} ({gate})",
        o.check, o.cases, o.skipped, o.deviation
    );
    if let Some(ce) = &o.counterexample {
        line.push_str(&format!("\n     counterexample case {}: {:?}", ce.case, ce.params));
    }
    line
}

fn execute(cli: Cli) -> Result<ExitCode, CliError> {
    let stdout = io::stdout();
    match cli.command {
        Command::Run { file, set } => {
            let table = gaussnet::run(&load(&file)?, &set.into_iter().collect())?;
            table.write_csv(stdout.lock())?;
        }
        Command::Sweep {
            file,
            var,
            from,
            to,
            steps,
            set,
            out,
        } => {
            let fixed: Bindings = set.into_iter().collect();
            let table = gaussnet::sweep(&load(&file)?, &var, from, to, steps, &fixed)?;
            match out {
                Some(path) => table.save(&path)?,
                None => table.write_csv(stdout.lock())?,
            }
        }
        Command::Figure { name, out_dir } => {
            for path in gaussnet::figure::write_figure(&name, &out_dir)? {
                println!("{}", path.display());
            }
        }
        Command::Verify {
            seed,
            cases,
            check,
            tolerance,
            json,
        } => {
            let cfg = VerifyConfig {
                seed,
                cases: cases as usize,
                tolerances: tolerance.into_iter().collect(),
            };
            let outcomes = run_selected(&cfg, check.as_deref())?;
            let mut w = stdout.lock();
            let written = if json {
                serde_json::to_string_pretty(&outcomes)
                    .map_err(io::Error::other)
                    .and_then(|s| writeln!(w, "{s}"))
            } else {
                outcomes.iter().try_for_each(|o| writeln!(w, "{}", describe(o)))
            };
            written.map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })?;
            if !all_passed(&outcomes) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
