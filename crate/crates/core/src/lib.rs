//! Multiplicative lattices, their zero-divisor graphs and the coloring
//! questions around them.
//!
//! Lattices are finite with at most 64 elements; subsets are `u64` masks.

pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod graph;
pub mod lattice;
pub mod mult;
pub mod prime;
pub mod report;
pub mod ring;
pub mod search;
pub mod solver;

pub use error::{Error, Result};
pub use format::{diagnostic, LatticeFile, MultBlock};
pub use generate::{generate, Family, GenMult};
pub use graph::{export_dot, gamma_mult, gamma_order, SimpleGraph, ZdGraph};
pub use lattice::{Elem, ElementSubset, Lattice, Mask, RelationKind};
pub use mult::{attach_multiplication, Axiom, MultLattice, MultSpec};
pub use prime::{check_lemma_suite, LemmaReport, PrimeStructure};
pub use report::{analyze, AnalysisOptions, BeckReport, PartialReport, Verdict};
pub use ring::{analyze_ring, ideal_lattice_zn, ZnIdealLattice};
pub use search::{search_counterexamples, FamilySpec, Finding, SearchConfig, SearchOutcome};
pub use solver::{chromatic_number, clique_number, Coloring, Deadline};
