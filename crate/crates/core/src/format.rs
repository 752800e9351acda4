//! The JSON lattice file.
//!
//! ```json
//! { "elements": ["0", "a", "b", "1"],
//!   "order": { "kind": "covers", "pairs": [["0","a"], ["0","b"], ["a","1"], ["b","1"]] },
//!   "multiplication": { "kind": "meet" } }
//! ```
//!
//! A pair `[x, y]` means `x ≤ y`. `multiplication` is optional; unknown keys
//! are rejected everywhere.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, RelationKind};
use crate::mult::{MultLattice, MultSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub order: OrderBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplication: Option<MultBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderBlock {
    pub kind: RelationKind,
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MultBlock {
    Table { table: Vec<Vec<String>> },
    Meet {},
    Trivial {},
}

impl From<&MultBlock> for MultSpec {
    fn from(block: &MultBlock) -> Self {
        match block {
            MultBlock::Table { table } => MultSpec::Table(table.clone()),
            MultBlock::Meet {} => MultSpec::Meet,
            MultBlock::Trivial {} => MultSpec::Trivial,
        }
    }
}

impl LatticeFile {
    pub fn parse(text: &str) -> Result<LatticeFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("lattice file serializes")
    }

    pub fn lattice(&self) -> Result<Lattice> {
        let pairs: Vec<(&str, &str)> = self
            .order
            .pairs
            .iter()
            .map(|(x, y)| (x.as_str(), y.as_str()))
            .collect();
        let names: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        Lattice::build(&names, &pairs, self.order.kind)
    }

    /// Builds the multiplicative lattice. `spec` overrides the file's own
    /// block; with neither, the meet is used.
    pub fn mult_lattice(&self, spec: Option<&MultSpec>) -> Result<MultLattice> {
        let lattice = self.lattice()?;
        let own = self.multiplication.as_ref().map(MultSpec::from);
        let spec = spec.or(own.as_ref()).unwrap_or(&MultSpec::Meet);
        MultLattice::attach(lattice, spec)
    }

    /// Cover relation plus the full product table.
    pub fn from_mult_lattice(ml: &MultLattice) -> LatticeFile {
        let mut file = LatticeFile::from_lattice(ml.lattice());
        file.multiplication = Some(MultBlock::Table {
            table: ml.table_names(),
        });
        file
    }

    pub fn from_lattice(l: &Lattice) -> LatticeFile {
        LatticeFile {
            elements: l.names().to_vec(),
            order: OrderBlock {
                kind: RelationKind::Covers,
                pairs: l
                    .covers()
                    .into_iter()
                    .map(|(x, y)| (l.name(x).to_string(), l.name(y).to_string()))
                    .collect(),
            },
            multiplication: None,
        }
    }
}

/// Machine-readable description of an error, for stderr diagnostics.
pub fn diagnostic(err: &Error) -> Value {
    let mut out = json!({ "error": err.to_string() });
    if let Error::AxiomViolation { axiom, witness } = err {
        out["axiom"] = json!(axiom.to_string());
        out["witness"] = json!(witness);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::mult::Axiom;

    const DIAMOND: &str = r#"{
        "elements": ["0", "a", "b", "c", "1"],
        "order": {"kind": "covers", "pairs": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]},
        "multiplication": {"kind": "meet"}
    }"#;

    #[test]
    fn diamond_meet_is_rejected_with_m3() {
        let file = LatticeFile::parse(DIAMOND).unwrap();
        let err = file.mult_lattice(None).unwrap_err();
        let diag = diagnostic(&err);
        assert_eq!(diag["axiom"], "M3");
        assert_eq!(diag["witness"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = r#"{"elements": ["0"], "order": {"kind": "leq", "pairs": []}, "extra": 1}"#;
        assert!(matches!(LatticeFile::parse(text), Err(Error::Parse(_))));
        let text = r#"{"elements": ["0"], "order": {"kind": "leq", "pairs": []},
                      "multiplication": {"kind": "meet", "table": []}}"#;
        assert!(matches!(LatticeFile::parse(text), Err(Error::Parse(_))));
    }

    #[test]
    fn single_element_lattice() {
        let text = r#"{"elements": ["0"], "order": {"kind": "leq", "pairs": []}}"#;
        let ml = LatticeFile::parse(text)
            .unwrap()
            .mult_lattice(None)
            .unwrap();
        assert_eq!(ml.len(), 1);
    }

    #[test]
    fn fixture_round_trip() {
        let ml = fixtures::fig3();
        let file = LatticeFile::from_mult_lattice(&ml);
        let back = LatticeFile::parse(&file.to_json_pretty()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.mult_lattice(None).unwrap(), ml);
        assert_eq!(file.order.pairs.len(), 22);
    }

    #[test]
    fn override_beats_file_block() {
        let file = LatticeFile::from_mult_lattice(&fixtures::fig3());
        let err = file.mult_lattice(Some(&MultSpec::Meet)).unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                axiom: Axiom::M3,
                ..
            }
        ));
        let trivial = LatticeFile::from_lattice(&fixtures::fig2_lattice())
            .mult_lattice(Some(&MultSpec::Trivial))
            .unwrap();
        assert_eq!(trivial, fixtures::fig2());
    }
}
