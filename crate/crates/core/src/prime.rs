//! Prime structure of a multiplicative lattice and the checks that tie it to
//! the zero-divisor graph.
//!
//! Semi-ideals are found by exhaustive down-set enumeration (cap-guarded).
//! Ideals of a finite lattice are principal, so prime ideals come from the
//! principal down-sets instead; the two routes are compared on every reduced
//! instance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::gamma_mult;
use crate::lattice::{bit, Elem, ElementSubset, Lattice, Mask};
use crate::mult::MultLattice;
use crate::solver::{beck_coloring, clique_number_within, Deadline};

/// Inclusion-minimal prime down-sets, ascending by member bitmask.
pub fn minimal_prime_semi_ideals(lattice: &Lattice, cap: usize) -> Result<Vec<ElementSubset>> {
    let primes: Vec<Mask> = lattice
        .down_set_masks(cap)?
        .into_iter()
        .filter(|&m| lattice.is_prime_down_set(m))
        .collect();
    Ok(minimal_by_inclusion(&primes)
        .into_iter()
        .map(|m| ElementSubset::new(lattice, m).with_minimal())
        .collect())
}

/// Inclusion-minimal prime ideals, ascending by member bitmask.
pub fn minimal_prime_ideals(lattice: &Lattice) -> Vec<ElementSubset> {
    let mut primes: Vec<Mask> = lattice
        .elements()
        .map(|a| lattice.down_mask(a))
        .filter(|&m| lattice.is_prime_down_set(m))
        .collect();
    primes.sort_unstable();
    minimal_by_inclusion(&primes)
        .into_iter()
        .map(|m| ElementSubset::new(lattice, m).with_minimal())
        .collect()
}

fn minimal_by_inclusion(sets: &[Mask]) -> Vec<Mask> {
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && t & !s == 0))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeStructure {
    /// `None` when the down-set enumeration exceeded its cap.
    pub minimal_prime_semi_ideals: Option<Vec<ElementSubset>>,
    pub minimal_prime_ideals: Vec<ElementSubset>,
    pub minimal_prime_elements: Vec<Elem>,
    pub maximal_annihilators: Vec<Elem>,
}

impl PrimeStructure {
    pub fn compute(ml: &MultLattice, cap: usize) -> PrimeStructure {
        let l = ml.lattice();
        PrimeStructure {
            minimal_prime_semi_ideals: minimal_prime_semi_ideals(l, cap).ok(),
            minimal_prime_ideals: minimal_prime_ideals(l),
            minimal_prime_elements: ml.minimal_prime_elements(),
            maximal_annihilators: ml.maximal_annihilator_elements(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub id: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    fn push(&mut self, id: &str, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(LemmaCheck {
            id: id.to_string(),
            status,
            detail: detail.into(),
        });
    }

    fn verdict(&mut self, id: &str, failure: Option<String>, ok: impl Into<String>) {
        match failure {
            Some(w) => self.push(id, CheckStatus::Fail, w),
            None => self.push(id, CheckStatus::Pass, ok),
        }
    }

    pub fn get(&self, id: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

pub mod checks {
    pub const ZERO_DISTRIBUTIVE: &str = "reduced_implies_zero_distributive";
    pub const SEMI_IDEALS_ARE_IDEALS: &str = "minimal_prime_semi_ideals_are_ideals";
    pub const MAXIMAL_ANNIHILATORS_PRIME: &str = "maximal_annihilators_are_prime";
    pub const PRIME_ANNIHILATORS_ANNIHILATE: &str = "distinct_prime_annihilators_multiply_to_zero";
    pub const ANNIHILATOR_ACC: &str = "annihilators_satisfy_acc";
    pub const MAXIMAL_ANNIHILATORS_FINITE: &str = "maximal_annihilators_bounded_by_clique";
    pub const MINIMAL_PRIMES_MEET_TO_ZERO: &str = "minimal_primes_meet_to_zero";
    pub const MINIMAL_PRIMES_ARE_ANNIHILATORS: &str = "minimal_primes_are_annihilators";
    pub const PRIME_COLORING: &str = "prime_coloring_is_optimal";
}

/// Runs every structural check. Checks that need a reduced lattice are
/// skipped otherwise. A failure on a reduced input is a defect in this crate.
pub fn check_lemma_suite(ml: &MultLattice, cap: usize, deadline: &Deadline) -> LemmaReport {
    use checks::*;
    let l = ml.lattice();
    let mut report = LemmaReport::default();
    let reduced = ml.is_reduced();
    let zero = l.bottom();
    let name = |x: Elem| l.name(x).to_string();

    let zd = l.zero_distributivity_witness();
    if reduced {
        report.verdict(
            ZERO_DISTRIBUTIVE,
            zd.map(|w| format!("a={}, b={}, c={}", name(w.a), name(w.b), name(w.c))),
            "lattice is 0-distributive",
        );
    } else if zd.is_none() {
        report.push(
            ZERO_DISTRIBUTIVE,
            CheckStatus::Pass,
            "lattice is 0-distributive (not reduced)",
        );
    } else {
        report.push(
            ZERO_DISTRIBUTIVE,
            CheckStatus::Skipped,
            "hypothesis unmet (not reduced); lattice is not 0-distributive",
        );
    }

    let unmet = "hypothesis unmet (not reduced)";
    if !reduced {
        for id in [
            SEMI_IDEALS_ARE_IDEALS,
            MAXIMAL_ANNIHILATORS_PRIME,
            PRIME_ANNIHILATORS_ANNIHILATE,
        ] {
            report.push(id, CheckStatus::Skipped, unmet);
        }
        report.push(ANNIHILATOR_ACC, CheckStatus::Trivial, "trivial (finite)");
        for id in [
            MAXIMAL_ANNIHILATORS_FINITE,
            MINIMAL_PRIMES_MEET_TO_ZERO,
            MINIMAL_PRIMES_ARE_ANNIHILATORS,
            PRIME_COLORING,
        ] {
            report.push(id, CheckStatus::Skipped, unmet);
        }
        return report;
    }

    match minimal_prime_semi_ideals(l, cap) {
        Ok(semi) => {
            let semi: Vec<Mask> = semi.iter().map(|s| s.mask()).collect();
            let ideals: Vec<Mask> = minimal_prime_ideals(l).iter().map(|s| s.mask()).collect();
            let failure = (semi != ideals).then(|| {
                format!(
                    "semi-ideals {:?} vs ideals {:?}",
                    semi.iter().map(|&m| l.format_set(m)).collect::<Vec<_>>(),
                    ideals.iter().map(|&m| l.format_set(m)).collect::<Vec<_>>()
                )
            });
            report.verdict(
                SEMI_IDEALS_ARE_IDEALS,
                failure,
                format!("{} minimal prime semi-ideals, all ideals", semi.len()),
            );
        }
        Err(Error::CapExceeded(c)) => report.push(
            SEMI_IDEALS_ARE_IDEALS,
            CheckStatus::Skipped,
            format!("down-set enumeration exceeds cap {c}"),
        ),
        Err(e) => report.push(SEMI_IDEALS_ARE_IDEALS, CheckStatus::Fail, e.to_string()),
    }

    let maximal = ml.maximal_annihilator_elements();
    let failure = maximal
        .iter()
        .find(|&&m| !ml.is_prime_element(m))
        .map(|&m| format!("{} is not prime", name(m)));
    report.verdict(
        MAXIMAL_ANNIHILATORS_PRIME,
        failure,
        format!("{} maximal annihilators, all prime", maximal.len()),
    );

    let stars: Vec<(Elem, Elem)> = l
        .elements()
        .filter(|&x| x != zero)
        .map(|x| (x, ml.annihilator_star(x)))
        .filter(|&(_, s)| ml.is_prime_element(s))
        .collect();
    let mut failure = None;
    'outer: for &(x, sx) in &stars {
        for &(y, sy) in &stars {
            if sx != sy && ml.mul(x, y) != zero {
                failure = Some(format!("x={}, y={}", name(x), name(y)));
                break 'outer;
            }
        }
    }
    report.verdict(PRIME_ANNIHILATORS_ANNIHILATE, failure, "holds");

    report.push(ANNIHILATOR_ACC, CheckStatus::Trivial, "trivial (finite)");

    let representatives: Vec<Elem> = maximal
        .iter()
        .filter_map(|&m| ml.annihilator_source(m))
        .collect();
    let graph = gamma_mult(ml, zero);
    let mut failure = None;
    if representatives.len() != maximal.len() {
        failure = Some("maximal annihilator without a source element".to_string());
    }
    for (i, &x) in representatives.iter().enumerate() {
        for &y in &representatives[i + 1..] {
            if failure.is_none() && ml.mul(x, y) != zero {
                failure = Some(format!(
                    "representatives {} and {} do not annihilate",
                    name(x),
                    name(y)
                ));
            }
        }
    }
    let omega = match clique_number_within(graph.graph(), deadline) {
        Ok((w, _)) => Some(w),
        Err(_) => None,
    };
    match omega {
        None => report.push(
            MAXIMAL_ANNIHILATORS_FINITE,
            CheckStatus::Skipped,
            "clique search timed out",
        ),
        Some(w) => {
            // A single representative forms no edge, so the bound only binds
            // from two maximal annihilators upward.
            if failure.is_none() && maximal.len() >= 2 && maximal.len() > w {
                failure = Some(format!(
                    "{} maximal annihilators but clique number {w}",
                    maximal.len()
                ));
            }
            report.verdict(
                MAXIMAL_ANNIHILATORS_FINITE,
                failure,
                format!("{} maximal annihilators, clique number {w}", maximal.len()),
            );
        }
    }

    let minimal = ml.minimal_prime_elements();
    let maximal_mask = maximal.iter().fold(0, |m, &x| m | bit(x));
    let failure = if l.meet_all(maximal_mask) != zero {
        Some(format!(
            "meet of maximal annihilators is {}",
            name(l.meet_all(maximal_mask))
        ))
    } else if minimal != maximal {
        Some(format!(
            "minimal primes {} differ from maximal annihilators {}",
            l.format_set(minimal.iter().fold(0, |m, &x| m | bit(x))),
            l.format_set(maximal_mask)
        ))
    } else {
        None
    };
    report.verdict(
        MINIMAL_PRIMES_MEET_TO_ZERO,
        failure,
        format!("{} minimal primes meet to {}", minimal.len(), name(zero)),
    );

    let failure = minimal
        .iter()
        .find(|&&p| ml.annihilator_source(p).is_none())
        .map(|&p| format!("{} is not an annihilator", name(p)));
    report.verdict(MINIMAL_PRIMES_ARE_ANNIHILATORS, failure, "holds");

    match (beck_coloring(ml), omega) {
        (Ok(coloring), Some(w)) => {
            let n = if graph.is_empty() { 0 } else { minimal.len() };
            let failure = if !coloring.is_proper(graph.graph()) {
                Some("coloring is not proper".to_string())
            } else if coloring.color_count > n {
                Some(format!(
                    "{} colors exceed {n} minimal primes",
                    coloring.color_count
                ))
            } else if w != n {
                Some(format!("clique number {w} differs from {n} minimal primes"))
            } else {
                None
            };
            report.verdict(
                PRIME_COLORING,
                failure,
                format!("{} colors, clique number {w}", coloring.color_count),
            );
        }
        (Err(e), _) => report.push(PRIME_COLORING, CheckStatus::Fail, e.to_string()),
        (_, None) => report.push(
            PRIME_COLORING,
            CheckStatus::Skipped,
            "clique search timed out",
        ),
    }

    report
}

/// Subsets rendered as `{x,y,...}`, for diagnostics.
pub fn describe(lattice: &Lattice, subsets: &[ElementSubset]) -> Vec<String> {
    subsets
        .iter()
        .map(|s| lattice.format_set(s.mask()))
        .collect()
}
