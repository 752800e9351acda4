//! End-to-end analysis of one multiplicative lattice.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::gamma_mult;
use crate::lattice::{Elem, DEFAULT_DOWN_SET_CAP};
use crate::mult::MultLattice;
use crate::prime::{check_lemma_suite, LemmaReport, PrimeStructure};
use crate::solver::{chromatic_number_within, clique_number_within, Deadline, DEFAULT_TIMEOUT};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub down_set_cap: usize,
    pub timeout: Option<Duration>,
    /// Include wall time in the report. Off by default so that reports are
    /// byte-identical across runs.
    pub timing: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            down_set_cap: DEFAULT_DOWN_SET_CAP,
            timeout: Some(DEFAULT_TIMEOUT),
            timing: false,
        }
    }
}

impl AnalysisOptions {
    pub fn deadline(&self) -> Deadline {
        self.timeout.map_or_else(Deadline::none, Deadline::after)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    EmptyGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentWitness {
    pub element: String,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagonNames {
    pub bottom: String,
    pub low: String,
    pub high: String,
    pub side: String,
    pub top: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredVertex {
    pub vertex: String,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeckReport {
    pub instance: String,
    pub elements: usize,
    /// The element `i` of the graph `Γ^m_i`.
    pub element: String,
    pub reduced: bool,
    pub nilpotent_witness: Option<NilpotentWitness>,
    pub distributive: bool,
    pub modular: bool,
    pub modularity_witness: Option<PentagonNames>,
    pub zero_distributive: bool,
    pub vertices: usize,
    pub edges: usize,
    pub chi: usize,
    pub omega: usize,
    pub clique_witness: Vec<String>,
    pub coloring: Vec<ColoredVertex>,
    pub minimal_prime_elements: Vec<String>,
    pub minimal_prime_element_count: usize,
    /// `None` when down-set enumeration exceeded its cap.
    pub minimal_prime_semi_ideal_count: Option<usize>,
    pub minimal_prime_ideal_count: usize,
    pub maximal_annihilator_count: usize,
    pub verdict: Verdict,
    pub lemmas: LemmaReport,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// What is known about an instance whose solve ran out of time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialReport {
    pub instance: String,
    pub elements: usize,
    pub element: String,
    pub reduced: bool,
    pub modular: bool,
    pub zero_distributive: bool,
    pub vertices: usize,
    pub edges: usize,
    pub status: String,
}

pub fn partial_report(ml: &MultLattice, instance: &str, element: Elem) -> PartialReport {
    let l = ml.lattice();
    let graph = gamma_mult(ml, element);
    PartialReport {
        instance: instance.to_string(),
        elements: l.len(),
        element: l.name(element).to_string(),
        reduced: ml.is_reduced(),
        modular: l.is_modular(),
        zero_distributive: l.is_zero_distributive(),
        vertices: graph.order(),
        edges: graph.graph().edge_count(),
        status: "timeout".to_string(),
    }
}

/// Analyzes `Γ^m_i(L)` for `i = element` together with the prime structure
/// of the lattice.
pub fn analyze(
    ml: &MultLattice,
    instance: &str,
    element: Elem,
    options: &AnalysisOptions,
) -> Result<BeckReport> {
    let started = Instant::now();
    let deadline = options.deadline();
    let l = ml.lattice();
    let name = |x: Elem| l.name(x).to_string();

    let graph = gamma_mult(ml, element);
    let (omega, clique) = clique_number_within(graph.graph(), &deadline)?;
    let (chi, coloring) = chromatic_number_within(graph.graph(), &deadline)?;
    assert!(omega <= chi, "clique number exceeds chromatic number");

    let reduced = ml.is_reduced();
    // Lowest index first, so the witness is as short as possible.
    let nilpotent_witness = ml
        .nonzero_nilpotents()
        .into_iter()
        .map(|x| (ml.nilpotency_index(x).expect("nilpotent"), x))
        .min()
        .map(|(exponent, x)| NilpotentWitness {
            element: name(x),
            exponent,
        });
    let primes = PrimeStructure::compute(ml, options.down_set_cap);
    let lemmas = check_lemma_suite(ml, options.down_set_cap, &deadline);

    let verdict = if graph.is_empty() {
        Verdict::EmptyGraph
    } else if chi != omega {
        Verdict::Fails
    } else {
        Verdict::Holds
    };
    if reduced && verdict == Verdict::Fails && element == l.bottom() {
        return Err(Error::ReducedCounterexample(instance.to_string()));
    }

    let semi_count = primes.minimal_prime_semi_ideals.as_ref().map(Vec::len);
    let mut notes = Vec::new();
    if !reduced {
        notes
            .push("not reduced: a* is the join of all x with a^k·x = 0 for some k ≥ 1".to_string());
    }
    match semi_count {
        None => notes.push(format!(
            "down-set enumeration exceeds cap {}; semi-ideal count omitted",
            options.down_set_cap
        )),
        Some(c) if c != primes.minimal_prime_elements.len() => notes.push(format!(
            "minimal prime semi-ideals ({c}) and minimal prime elements ({}) differ",
            primes.minimal_prime_elements.len()
        )),
        _ => {}
    }
    if let Some(failed) = lemmas.failures().next() {
        notes.push(format!("check {} failed: {}", failed.id, failed.detail));
    }

    Ok(BeckReport {
        instance: instance.to_string(),
        elements: l.len(),
        element: name(element),
        reduced,
        nilpotent_witness,
        distributive: l.is_distributive(),
        modular: l.is_modular(),
        modularity_witness: l.modularity_witness().map(|w| PentagonNames {
            bottom: name(w.bottom),
            low: name(w.low),
            high: name(w.high),
            side: name(w.side),
            top: name(w.top),
        }),
        zero_distributive: l.is_zero_distributive(),
        vertices: graph.order(),
        edges: graph.graph().edge_count(),
        chi,
        omega,
        clique_witness: clique
            .vertices
            .iter()
            .map(|&v| name(graph.vertices()[v]))
            .collect(),
        coloring: graph
            .vertices()
            .iter()
            .zip(&coloring.assignment)
            .map(|(&x, &color)| ColoredVertex {
                vertex: name(x),
                color,
            })
            .collect(),
        minimal_prime_elements: primes
            .minimal_prime_elements
            .iter()
            .map(|&p| name(p))
            .collect(),
        minimal_prime_element_count: primes.minimal_prime_elements.len(),
        minimal_prime_semi_ideal_count: semi_count,
        minimal_prime_ideal_count: primes.minimal_prime_ideals.len(),
        maximal_annihilator_count: primes.maximal_annihilators.len(),
        verdict,
        lemmas,
        notes,
        wall_time_ms: options.timing.then(|| started.elapsed().as_millis() as u64),
    })
}
