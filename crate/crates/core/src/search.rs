//! Counterexample search over generated families.
//!
//! Family specs are comma separated:
//!
//! | spec            | instances                                        |
//! |-----------------|--------------------------------------------------|
//! | `chain:5`       | the 5-element chain (`chain:2..6` for a range)   |
//! | `boolean:4`     | subsets of a 4-set (`boolean:1..5`)              |
//! | `divisor:2310`  | `Id(Z_2310)` with the ring product (`divisor:2..100`) |
//! | `random:20x16`  | 20 random distributive lattices of size ≤ 16     |
//! | `fig2`, `fig3`  | the two fixtures                                 |
//! | `file:PATH`     | a lattice file                                   |
//!
//! Ranges are inclusive. Random seeds are drawn from one generator seeded by
//! the search seed, in spec order.

use std::time::Duration;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::LatticeFile;
use crate::generate::{generate, Family, GenMult};
use crate::graph::gamma_mult;
use crate::mult::MultLattice;
use crate::solver::{
    brute_force_chromatic, brute_force_clique, chromatic_number_within, clique_number_within,
    Deadline, BRUTE_FORCE_CAP, DEFAULT_TIMEOUT,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Chain(usize, usize),
    Boolean(usize, usize),
    Divisor(u64, u64),
    Random { count: usize, size: usize },
    Fig2,
    Fig3,
    File(String),
}

fn parse_range<T: std::str::FromStr + PartialOrd + Copy>(spec: &str, arg: &str) -> Result<(T, T)> {
    let bad = || Error::InvalidFamily(format!("cannot parse `{spec}`"));
    let (lo, hi) = match arg.split_once("..") {
        Some((lo, hi)) => (
            lo.parse().map_err(|_| bad())?,
            hi.parse().map_err(|_| bad())?,
        ),
        None => {
            let v = arg.parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

impl FamilySpec {
    pub fn parse(spec: &str) -> Result<FamilySpec> {
        let spec = spec.trim();
        let bad = || Error::InvalidFamily(format!("cannot parse `{spec}`"));
        let (name, arg) = match spec.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (spec, None),
        };
        match (name, arg) {
            ("fig2", None) => Ok(FamilySpec::Fig2),
            ("fig3", None) => Ok(FamilySpec::Fig3),
            ("file", Some(path)) if !path.is_empty() => Ok(FamilySpec::File(path.to_string())),
            ("chain", Some(a)) => parse_range(spec, a).map(|(lo, hi)| FamilySpec::Chain(lo, hi)),
            ("boolean", Some(a)) => {
                parse_range(spec, a).map(|(lo, hi)| FamilySpec::Boolean(lo, hi))
            }
            ("divisor", Some(a)) => {
                parse_range(spec, a).map(|(lo, hi)| FamilySpec::Divisor(lo, hi))
            }
            ("random", Some(a)) => {
                let (count, size) = a.split_once('x').ok_or_else(bad)?;
                Ok(FamilySpec::Random {
                    count: count.parse().map_err(|_| bad())?,
                    size: size.parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }

    pub fn parse_list(list: &str) -> Result<Vec<FamilySpec>> {
        list.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(FamilySpec::parse)
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub families: Vec<FamilySpec>,
    pub seed: u64,
    /// Maximum number of instances to examine.
    pub budget: usize,
    pub timeout: Option<Duration>,
}

impl SearchConfig {
    pub fn new(families: Vec<FamilySpec>, seed: u64, budget: usize) -> Self {
        SearchConfig {
            families,
            seed,
            budget,
            timeout: Some(DEFAULT_TIMEOUT),
        }
    }
}

/// An instance with `χ ≠ ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub instance: String,
    pub elements: usize,
    pub vertices: usize,
    pub chi: usize,
    pub omega: usize,
    pub reduced: bool,
    pub modular: bool,
    /// Modular and not reduced.
    pub notable: bool,
    pub oracle_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub instance: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    pub findings: Vec<Finding>,
    pub analyzed: usize,
    pub skipped: Vec<Skipped>,
}

enum Source {
    Generated(Family),
    File(String),
}

impl Source {
    fn name(&self) -> String {
        match self {
            Source::Generated(f) => f.to_string(),
            Source::File(path) => format!("file:{path}"),
        }
    }

    fn load(&self) -> Result<MultLattice> {
        match self {
            Source::Generated(f) => generate(*f, GenMult::Default),
            Source::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{path}: {e}")))?;
                LatticeFile::parse(&text)?.mult_lattice(None)
            }
        }
    }
}

fn expand(config: &SearchConfig) -> Vec<Source> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::new();
    for spec in &config.families {
        let room = config.budget.saturating_sub(out.len());
        match spec {
            FamilySpec::Chain(lo, hi) => out.extend(
                (*lo..=*hi)
                    .take(room)
                    .map(|k| Source::Generated(Family::Chain(k))),
            ),
            FamilySpec::Boolean(lo, hi) => out.extend(
                (*lo..=*hi)
                    .take(room)
                    .map(|k| Source::Generated(Family::Boolean(k))),
            ),
            FamilySpec::Divisor(lo, hi) => out.extend(
                (*lo..=*hi)
                    .take(room)
                    .map(|n| Source::Generated(Family::Divisor(n))),
            ),
            FamilySpec::Random { count, size } => {
                for _ in 0..(*count).min(room) {
                    out.push(Source::Generated(Family::RandomDistributive {
                        seed: rng.next_u64(),
                        size: *size,
                    }));
                }
            }
            FamilySpec::Fig2 => out.push(Source::Generated(Family::Fig2)),
            FamilySpec::Fig3 => out.push(Source::Generated(Family::Fig3)),
            FamilySpec::File(path) => out.push(Source::File(path.clone())),
        }
        if out.len() >= config.budget {
            break;
        }
    }
    out.truncate(config.budget);
    out
}

/// Outcome of examining one instance.
pub enum Examined {
    Clean { oracle_checked: bool },
    Finding(Finding),
}

/// Computes `χ` and `ω` of `Γ^m(L, 0)`, checks them against brute force on
/// small graphs and enforces `χ = ω` on reduced instances.
pub fn examine(ml: &MultLattice, instance: &str, deadline: &Deadline) -> Result<Examined> {
    let graph = gamma_mult(ml, ml.lattice().bottom());
    let g = graph.graph();
    let (omega, _) = clique_number_within(g, deadline)?;
    let (chi, _) = chromatic_number_within(g, deadline)?;
    let oracle_checked = g.order() <= BRUTE_FORCE_CAP;
    if oracle_checked {
        let bf_chi = brute_force_chromatic(g, BRUTE_FORCE_CAP)?;
        let bf_omega = brute_force_clique(g, BRUTE_FORCE_CAP)?;
        if (bf_chi, bf_omega) != (chi, omega) {
            return Err(Error::OracleMismatch {
                instance: instance.to_string(),
                detail: format!(
                    "solver chi={chi} omega={omega}, brute force chi={bf_chi} omega={bf_omega}"
                ),
            });
        }
    }
    if chi == omega {
        return Ok(Examined::Clean { oracle_checked });
    }
    let reduced = ml.is_reduced();
    if reduced {
        return Err(Error::ReducedCounterexample(instance.to_string()));
    }
    let modular = ml.lattice().is_modular();
    Ok(Examined::Finding(Finding {
        instance: instance.to_string(),
        elements: ml.len(),
        vertices: g.order(),
        chi,
        omega,
        reduced,
        modular,
        notable: modular && !reduced,
        oracle_checked,
    }))
}

/// Runs the search. Instances that time out or cannot be built are skipped
/// and logged; a reduced counterexample or an oracle mismatch aborts.
pub fn search_counterexamples(config: &SearchConfig) -> Result<SearchOutcome> {
    if config.budget == 0 {
        return Err(Error::InvalidFamily("budget must be positive".into()));
    }
    let mut outcome = SearchOutcome::default();
    for source in expand(config) {
        let name = source.name();
        let ml = match source.load() {
            Ok(ml) => ml,
            Err(e) => {
                outcome.skipped.push(Skipped {
                    instance: name,
                    reason: e.to_string(),
                });
                continue;
            }
        };
        let deadline = config.timeout.map_or_else(Deadline::none, Deadline::after);
        match examine(&ml, &name, &deadline) {
            Ok(Examined::Clean { .. }) => outcome.analyzed += 1,
            Ok(Examined::Finding(f)) => {
                outcome.analyzed += 1;
                outcome.findings.push(f);
            }
            Err(Error::Timeout) => outcome.skipped.push(Skipped {
                instance: name,
                reason: Error::Timeout.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(outcome)
}
