use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use zdlat::lattice::bit;
use zdlat::report::partial_report;
use zdlat::solver::chromatic_number_within;
use zdlat::{
    analyze, analyze_ring, diagnostic, export_dot, fixtures, gamma_mult, gamma_order,
    search_counterexamples, AnalysisOptions, BeckReport, ElementSubset, Error, FamilySpec,
    LatticeFile, Mask, MultLattice, MultSpec, SearchConfig, Verdict,
};

const EXIT_FAILS: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_IO: u8 = 3;
const EXIT_TIMEOUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "zdlat",
    version,
    about = "Zero-divisor graphs of multiplicative lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the input is a multiplicative lattice.
    Validate(InputArgs),
    /// Full report on the zero-divisor graph at one element.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// The element `i` of the graph; defaults to the bottom.
        #[arg(long)]
        element: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Write the zero-divisor graph as DOT.
    Graph {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "mult")]
        sense: Sense,
        /// Element for the multiplicative graph; defaults to the bottom.
        #[arg(long)]
        element: Option<String>,
        /// Comma-separated ideal for the order graph; defaults to the bottom.
        #[arg(long, value_delimiter = ',')]
        ideal: Option<Vec<String>>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Fill vertices with an optimal coloring.
        #[arg(long)]
        color: bool,
        #[arg(long, value_name = "SECONDS")]
        timeout: Option<f64>,
    },
    /// Annihilating-ideal graphs of Z_n.
    Ring {
        #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
        modulus: Option<u64>,
        /// Inclusive range `A..B`; one report line per modulus.
        #[arg(long)]
        sweep: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Search generated families for instances with chi != omega.
    Search {
        /// e.g. `boolean:1..5,divisor:2310,random:20x16,fig3`
        #[arg(long)]
        families: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        /// Per-instance solver limit.
        #[arg(long, value_name = "SECONDS")]
        timeout: Option<f64>,
    },
    /// Print a built-in fixture as a lattice file.
    Fixture {
        #[arg(value_enum)]
        name: FixtureName,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Lattice file (JSON).
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    file: Option<PathBuf>,
    #[arg(long, value_enum)]
    fixture: Option<FixtureName>,
    /// Override the multiplication from the input.
    #[arg(long, value_enum)]
    mult: Option<MultArg>,
}

#[derive(Args)]
struct RunArgs {
    /// Solver limit; 0 disables it.
    #[arg(long, value_name = "SECONDS", default_value_t = 30.0)]
    timeout: f64,
    /// Include wall time in reports (breaks byte-identical output).
    #[arg(long)]
    timing: bool,
}

impl RunArgs {
    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            timeout: seconds(Some(self.timeout)),
            timing: self.timing,
            ..AnalysisOptions::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FixtureName {
    Fig2,
    Fig3,
}

#[derive(Clone, Copy, ValueEnum)]
enum MultArg {
    Table,
    Meet,
    Trivial,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sense {
    Order,
    Mult,
}

/// An error that already knows its exit code.
struct Failure {
    code: u8,
    diagnostic: serde_json::Value,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match &err {
            Error::Parse(_) => EXIT_IO,
            Error::Timeout => EXIT_TIMEOUT,
            e if e.is_invalid_structure() => EXIT_INVALID,
            _ => EXIT_FAILS,
        };
        Failure {
            code,
            diagnostic: diagnostic(&err),
        }
    }
}

fn io_failure(path: &std::path::Path, err: io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        diagnostic: json!({ "error": format!("{}: {err}", path.display()) }),
    }
}

fn seconds(value: Option<f64>) -> Option<Duration> {
    value
        .filter(|s| *s > 0.0)
        .map(|s| Duration::try_from_secs_f64(s).unwrap_or(Duration::MAX))
}

fn fixture_file(name: FixtureName) -> (&'static str, LatticeFile) {
    match name {
        FixtureName::Fig2 => ("fig2", LatticeFile::from_mult_lattice(&fixtures::fig2())),
        FixtureName::Fig3 => ("fig3", LatticeFile::from_mult_lattice(&fixtures::fig3())),
    }
}

fn load_file(input: &InputArgs) -> Result<(String, LatticeFile), Failure> {
    if let Some(name) = input.fixture {
        let (id, file) = fixture_file(name);
        return Ok((id.to_string(), file));
    }
    let path = input.file.as_ref().expect("clap requires file or fixture");
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    Ok((path.display().to_string(), LatticeFile::parse(&text)?))
}

fn load(input: &InputArgs) -> Result<(String, MultLattice), Failure> {
    let (id, file) = load_file(input)?;
    let spec = match input.mult {
        None => None,
        Some(MultArg::Meet) => Some(MultSpec::Meet),
        Some(MultArg::Trivial) => Some(MultSpec::Trivial),
        Some(MultArg::Table) => match &file.multiplication {
            Some(zdlat::MultBlock::Table { table }) => Some(MultSpec::Table(table.clone())),
            _ => {
                return Err(
                    Error::IncompleteTable("input has no multiplication table".into()).into(),
                )
            }
        },
    };
    Ok((id, file.mult_lattice(spec.as_ref())?))
}

fn element(ml: &MultLattice, name: Option<&str>) -> Result<usize, Failure> {
    let l = ml.lattice();
    match name {
        None => Ok(l.bottom()),
        Some(n) => l
            .index_of(n)
            .ok_or_else(|| Error::UnknownName(n.to_string()).into()),
    }
}

fn print_json(value: &impl serde::Serialize) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn verdict_code(report: &BeckReport) -> u8 {
    if report.verdict == Verdict::Fails {
        EXIT_FAILS
    } else {
        0
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate(input) => {
            let (id, ml) = load(&input)?;
            print_json(&json!({
                "instance": id,
                "valid": true,
                "elements": ml.len(),
                "reduced": ml.is_reduced(),
            }));
            Ok(0)
        }
        Command::Analyze {
            input,
            element: elem,
            run,
        } => {
            let (id, ml) = load(&input)?;
            let i = element(&ml, elem.as_deref())?;
            match analyze(&ml, &id, i, &run.options()) {
                Ok(report) => {
                    print_json(&report);
                    Ok(verdict_code(&report))
                }
                Err(Error::Timeout) => {
                    print_json(&partial_report(&ml, &id, i));
                    Err(Error::Timeout.into())
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Graph {
            input,
            sense,
            element: elem,
            ideal,
            dot,
            color,
            timeout,
        } => {
            let (_, ml) = load(&input)?;
            let l = ml.lattice();
            let graph = match sense {
                Sense::Mult => gamma_mult(&ml, element(&ml, elem.as_deref())?),
                Sense::Order => {
                    let mask: Mask = match ideal {
                        None => bit(l.bottom()),
                        Some(names) => {
                            let mut mask = 0;
                            for n in &names {
                                mask |= bit(element(&ml, Some(n))?);
                            }
                            mask
                        }
                    };
                    gamma_order(l, &ElementSubset::new(l, mask))?
                }
            };
            let coloring = if color {
                let deadline = seconds(timeout.or(Some(30.0)))
                    .map_or_else(zdlat::Deadline::none, zdlat::Deadline::after);
                Some(chromatic_number_within(graph.graph(), &deadline)?.1)
            } else {
                None
            };
            let text = export_dot(&graph, l.names(), coloring.as_ref());
            match dot {
                Some(path) => fs::write(&path, text).map_err(|e| io_failure(&path, e))?,
                None => {
                    let _ = io::stdout().lock().write_all(text.as_bytes());
                }
            }
            Ok(0)
        }
        Command::Ring {
            modulus,
            sweep,
            run,
        } => {
            let options = run.options();
            if let Some(n) = modulus {
                let report = analyze_ring(n, &options)?;
                print_json(&report);
                return Ok(verdict_code(&report));
            }
            let range = sweep.expect("clap requires modulus or sweep");
            let (lo, hi) = match FamilySpec::parse(&format!("divisor:{range}"))? {
                FamilySpec::Divisor(lo, hi) => (lo, hi),
                _ => unreachable!(),
            };
            let mut code = 0;
            let mut out = io::stdout().lock();
            for n in lo.max(2)..=hi {
                let report = analyze_ring(n, &options)?;
                code = code.max(verdict_code(&report));
                let line = serde_json::to_string(&report).expect("serializable");
                writeln!(out, "{line}").ok();
            }
            Ok(code)
        }
        Command::Search {
            families,
            seed,
            budget,
            timeout,
        } => {
            let mut config = SearchConfig::new(FamilySpec::parse_list(&families)?, seed, budget);
            config.timeout = seconds(timeout.or(Some(30.0)));
            let outcome = search_counterexamples(&config)?;
            let mut out = io::stdout().lock();
            for f in &outcome.findings {
                writeln!(out, "{}", serde_json::to_string(f).expect("serializable")).ok();
            }
            for s in &outcome.skipped {
                eprintln!("skipped {}: {}", s.instance, s.reason);
            }
            eprintln!(
                "analyzed {} instances, {} findings, {} skipped",
                outcome.analyzed,
                outcome.findings.len(),
                outcome.skipped.len()
            );
            Ok(if outcome.findings.is_empty() {
                0
            } else {
                EXIT_FAILS
            })
        }
        Command::Fixture { name } => {
            let _ = writeln!(
                io::stdout().lock(),
                "{}",
                fixture_file(name).1.to_json_pretty()
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // Usage errors share the parse exit code; clap's own default (2) is
    // reserved for invalid structures.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_IO } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("{}", failure.diagnostic);
            ExitCode::from(failure.code)
        }
    }
}
