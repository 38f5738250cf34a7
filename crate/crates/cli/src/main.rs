//! `mocposite`: verification suites, branch evaluation, continuation and
//! parity probes, and SVG plots.
//!
//! Exit codes: 0 when everything checked passes, 1 when a mathematical check
//! fails or a point lies outside a branch's domain, 2 for I/O, usage and
//! schema errors.

mod input;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mocposite::continuation::{monodromy_of_loop, parity_probe};
use mocposite::report::fmt_complex;
use mocposite::route::find_route;
use mocposite::suite::verify;
use mocposite::{BranchName, Complex, Error, RouteOptions, SuiteConfig, SuiteKind};
use serde::de::DeserializeOwned;

use input::{ContinueRequest, ContourScene, DomainScene, ParityRequest, TraceInput};

#[derive(Debug, Parser)]
#[command(
    name = "mocposite",
    version,
    about = "Branches, continuation and quadrature checks for √(1 − z²) and friends"
)]
struct Cli {
    /// Replace the tolerance of every numeric check.
    #[arg(long, global = true, env = "MOCPOSITE_TOL")]
    tol: Option<f64>,
    /// Replace the order of every Chebyshev quadrature.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Seed for routed paths.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        report: PathBuf,
        /// Also write the records as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Evaluate a named branch at a point given as `re,im` or `[re,im]`.
    Eval {
        branch: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Continue a square root or logarithm along a path from a JSON request.
    Continue {
        input: PathBuf,
        /// Write the trace here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify √(1 − z²) as odd or even on a domain from a JSON request.
    Parity { input: PathBuf },
    /// Render a domain, trace or contour JSON file as SVG.
    Plot {
        #[arg(value_enum)]
        what: PlotKind,
        input: PathBuf,
        svg: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Branches,
    Continuation,
    Quadrature,
    Exercises,
}

impl From<Suite> for SuiteKind {
    fn from(s: Suite) -> Self {
        match s {
            Suite::All => SuiteKind::All,
            Suite::Branches => SuiteKind::Branches,
            Suite::Continuation => SuiteKind::Continuation,
            Suite::Quadrature => SuiteKind::Quadrature,
            Suite::Exercises => SuiteKind::Exercises,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PlotKind {
    Domain,
    Trace,
    Contour,
}

#[derive(Debug)]
enum Failure {
    /// A check failed or a point is outside a domain.
    Math(String),
    /// Files, schemas and arguments.
    Environment(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(_) => Failure::Environment(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Environment(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Environment(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Environment(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(|e| Failure::Environment(e.to_string()))
}

/// Parses `re,im`, `[re,im]` or a bare real number.
fn parse_complex(s: &str) -> Result<Complex, Failure> {
    let bad = || Failure::Environment(format!("cannot parse `{s}` as a complex number; use re,im"));
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|_| bad());
    let z = match parts.as_slice() {
        [re] => Complex::new(num(re)?, 0.0),
        [re, im] => Complex::new(num(re)?, num(im)?),
        _ => return Err(bad()),
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

fn csv(report: &mocposite::VerificationReport) -> String {
    let mut out = String::from("name,computed_re,computed_im,expected_re,expected_im,abs_err,tol,pass\n");
    for r in &report.records {
        out.push_str(&format!(
            "\"{}\",{},{},{},{},{:e},{:e},{}\n",
            r.name.replace('"', "\"\""),
            r.computed.re,
            r.computed.im,
            r.expected.re,
            r.expected.im,
            r.abs_err,
            r.tol,
            r.pass
        ));
    }
    out
}

fn cmd_verify(cli: &Cli, suite: Suite, report_path: &Path, csv_path: Option<&Path>) -> Outcome {
    if let Some(tol) = cli.tol {
        if !(tol >= 0.0 && tol.is_finite()) {
            return Err(Failure::Environment(format!("tolerance must be a non-negative number, got {tol}")));
        }
    }
    // fail on an unwritable path before spending time on the suite
    fs::File::create(report_path)
        .map_err(|e| Failure::Environment(format!("cannot write {}: {e}", report_path.display())))?;
    let config = SuiteConfig { tol: cli.tol, n: cli.n, seed: cli.seed };
    let report = verify(suite.into(), &config);
    write_file(report_path, &(to_json(&report)? + "\n"))?;
    if let Some(path) = csv_path {
        write_file(path, &csv(&report))?;
    }
    print!("{}", report.to_table());
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Math(format!(
            "{} of {} checks failed",
            report.summary.total - report.summary.passed,
            report.summary.total
        )))
    }
}

fn cmd_eval(branch: &str, z: &str) -> Outcome {
    let branch: BranchName = branch.parse()?;
    let z = parse_complex(z)?;
    let value = branch.eval(z)?;
    println!("{}", fmt_complex(value));
    Ok(())
}

fn cmd_continue(input: &Path, out: Option<&Path>) -> Outcome {
    let request: ContinueRequest = read_json(input)?;
    let trace = request.run()?;
    if request.path.is_closed() {
        let f = request.function;
        let m = monodromy_of_loop(request.equation, |z| f.eval(z), &request.path, request.seed()?)?;
        eprintln!("monodromy: {}", serde_json::to_string(&m).unwrap_or_default());
    }
    let json = to_json(&trace)? + "\n";
    match out {
        Some(path) => write_file(path, &json),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

fn cmd_parity(cli: &Cli, input: &Path) -> Outcome {
    let request: ParityRequest = read_json(input)?;
    let domain = request.domain.build(request.radius)?;
    let path = match request.path {
        Some(p) => p,
        None => find_route(&domain, request.z0, -request.z0, &RouteOptions::seeded(cli.seed))?,
    };
    let parity = parity_probe(&domain, request.z0, &path)?;
    println!("{parity}");
    if parity == mocposite::Parity::Inconsistent {
        return Err(Failure::Math("continuation to -z0 did not return ±w0".into()));
    }
    Ok(())
}

fn cmd_plot(what: PlotKind, input: &Path, svg_path: &Path) -> Outcome {
    let mut scene = svg::Scene::default();
    match what {
        PlotKind::Domain => {
            let (domain, paths) = read_json::<DomainScene>(input)?.build()?;
            scene.domain = Some(domain);
            scene.paths = paths;
        }
        PlotKind::Trace => {
            let (trace, kind) = read_json::<TraceInput>(input)?.build()?;
            if trace.samples.is_empty() {
                return Err(Failure::Environment("trace has no samples".into()));
            }
            scene.traces.push((trace, kind));
        }
        PlotKind::Contour => {
            let (contours, domain) = read_json::<ContourScene>(input)?.build()?;
            for c in &contours {
                c.validate()?;
            }
            scene.contours = contours;
            scene.domain = domain;
        }
    }
    write_file(svg_path, &svg::render(&scene))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Verify { suite, report, csv } => cmd_verify(cli, *suite, report, csv.as_deref()),
        Command::Eval { branch, z } => cmd_eval(branch, z),
        Command::Continue { input, out } => cmd_continue(input, out.as_deref()),
        Command::Parity { input } => cmd_parity(cli, input),
        Command::Plot { what, input, svg } => cmd_plot(*what, input, svg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Environment(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
