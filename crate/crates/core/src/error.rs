use thiserror::Error;

use crate::mult::Axiom;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice has no elements")]
    Empty,
    #[error("lattice has {0} elements; at most 64 are supported")]
    TooManyElements(usize),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not a lattice: `{x}` and `{y}` have no unique {missing}")]
    NotALattice {
        x: String,
        y: String,
        missing: &'static str,
    },
    #[error("ordered set has no {0}")]
    NoBoundedStructure(&'static str),

    #[error("multiplication table is incomplete: {0}")]
    IncompleteTable(String),
    #[error("axiom {axiom} violated at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<String> },

    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("ideal is the whole lattice")]
    ImproperIdeal,

    #[error("down-set enumeration exceeded the cap of {0} sets")]
    CapExceeded(usize),
    #[error("graph has {0} vertices, brute-force oracle is capped at {1}")]
    TooLarge(usize, usize),
    #[error("solver exceeded its time budget")]
    Timeout,

    #[error("multiplicative lattice is not reduced")]
    NotReduced,
    #[error("no minimal prime elements meet to zero")]
    NoPrimesFound,

    #[error("invalid modulus {0}; must be at least 2")]
    InvalidModulus(u64),

    #[error("invalid generator parameters: {0}")]
    InvalidFamily(String),
    #[error("reduced instance `{0}` violates chi = omega")]
    ReducedCounterexample(String),
    #[error("solver disagrees with brute force on `{instance}`: {detail}")]
    OracleMismatch { instance: String, detail: String },

    #[error("malformed lattice file: {0}")]
    Parse(String),
}

impl Error {
    /// Errors that describe a structurally invalid input (as opposed to a
    /// parse failure, a timeout or an internal inconsistency).
    pub fn is_invalid_structure(&self) -> bool {
        matches!(
            self,
            Error::Empty
                | Error::TooManyElements(_)
                | Error::DuplicateName(_)
                | Error::UnknownName(_)
                | Error::NotAPartialOrder(_)
                | Error::NotALattice { .. }
                | Error::NoBoundedStructure(_)
                | Error::IncompleteTable(_)
                | Error::AxiomViolation { .. }
                | Error::NotAnIdeal
                | Error::ImproperIdeal
                | Error::InvalidModulus(_)
                | Error::InvalidFamily(_)
        )
    }
}
