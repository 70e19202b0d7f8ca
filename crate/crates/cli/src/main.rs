use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use weylpoly::catalog::{compute, Computed, FamilyId};
use weylpoly::exactpoly::{parse_rational, AnyPoly, Rational};
use weylpoly::report::VerificationReport;
use weylpoly::verify::{default_q_samples, run_suite, Suite, VerifyConfig};
use weylpoly::weylcomb::DEFAULT_CAP;
use weylpoly::Error;

#[derive(Parser)]
#[command(name = "weylpoly", version, about = "Exact Eulerian-like polynomials of Weyl groups and their interlacing certificates")]
struct Cli {
    /// Largest n allowed for exhaustive enumeration.
    #[arg(long, global = true, env = "WEYLPOLY_CAP", value_parser = clap::value_parser!(u64).range(1..))]
    cap_override: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial or a refined family.
    Compute {
        /// e.g. Tq, Dq, D, tildeD, tildeB, A, B, Bq, refined_Tq, refined_K(3), brute:Dq
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Specialize q to this rational, e.g. 1/2.
        #[arg(long)]
        q: Option<String>,
        #[arg(long, value_enum, default_value_t = ComputeFormat::Text)]
        format: ComputeFormat,
    },
    /// Run a verification suite and emit its report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma-separated positive rationals; defaults to 1/2,1,2,5.
        #[arg(long, value_delimiter = ',')]
        q_samples: Option<Vec<String>>,
        /// Worker threads; all available cores when omitted.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Write the rendered report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Render a saved report.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Markdown)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Markdown,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

fn render(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => report.to_json() + "\n",
        ReportFormat::Markdown => report.to_markdown(),
    }
}

fn run_compute(family: &str, n: usize, q: Option<&str>, format: ComputeFormat, cap: usize) -> Result<(), Failure> {
    let id: FamilyId = family.parse()?;
    let q: Option<Rational> = q.map(parse_rational).transpose()?;
    let specialize = |p: AnyPoly| -> Result<AnyPoly, Failure> {
        match (&q, p) {
            (None, p) => Ok(p),
            (Some(q0), AnyPoly::QX(p)) => Ok(AnyPoly::X(p.eval_q(q0))),
            (Some(_), AnyPoly::X(_)) => Err(Failure::Usage(format!("family {id} has no q parameter"))),
        }
    };
    let out = match compute(id, n, cap)? {
        Computed::Single(p) => {
            let p = specialize(p)?;
            match format {
                ComputeFormat::Text => p.to_string(),
                ComputeFormat::Json => p.to_json().to_string(),
            }
        }
        Computed::Family(ps) => {
            let ps = ps.into_iter().map(specialize).collect::<Result<Vec<_>, _>>()?;
            match format {
                ComputeFormat::Text => {
                    ps.iter().enumerate().map(|(i, p)| format!("{i}: {p}")).collect::<Vec<_>>().join("\n")
                }
                ComputeFormat::Json => Value::Array(ps.iter().map(AnyPoly::to_json).collect()).to_string(),
            }
        }
    };
    println!("{out}");
    Ok(())
}

fn run_verify(
    suite: &str,
    max_n: Option<usize>,
    q_samples: Option<Vec<String>>,
    jobs: Option<u64>,
    format: ReportFormat,
    output: Option<PathBuf>,
    cap: usize,
) -> Result<bool, Failure> {
    let suite: Suite = suite.parse()?;
    let q_samples = match q_samples {
        None => default_q_samples(),
        Some(items) => items.iter().map(|s| parse_rational(s.trim())).collect::<Result<_, _>>()?,
    };
    let config = VerifyConfig { max_n, q_samples, cap };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = pool.build().map_err(|e| Failure::Internal(e.to_string()))?;
    let report = pool.install(|| run_suite(suite, &config))?;
    let text = render(&report, format);
    match output {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(report.all_passed())
}

fn run_report(input: &PathBuf, format: ReportFormat) -> Result<(), Failure> {
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.display())))?;
    let report = VerificationReport::from_json(&text)?;
    print!("{}", render(&report, format));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let cap = cli.cap_override.map_or(DEFAULT_CAP, |c| c as usize);
    let result = match cli.command {
        Command::Compute { family, n, q, format } => run_compute(&family, n, q.as_deref(), format, cap).map(|()| true),
        Command::Verify { suite, max_n, q_samples, jobs, format, output } => {
            run_verify(&suite, max_n, q_samples, jobs, format, output, cap)
        }
        Command::Report { input, format } => run_report(&input, format).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
