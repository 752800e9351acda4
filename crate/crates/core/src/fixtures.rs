//! Built-in example lattices.
//!
//! `fig2` is the six-element lattice `0 < a < b < d < 1`, `0 < c < d` with the
//! trivial multiplication. `fig3` is a fourteen-element non-modular,
//! non-reduced multiplicative lattice whose zero-divisor graph has chromatic
//! number 4 but clique number 3.

use crate::lattice::{Lattice, RelationKind};
use crate::mult::{MultLattice, MultSpec};

pub const FIG2_ELEMENTS: [&str; 6] = ["0", "a", "b", "c", "d", "1"];

pub const FIG2_COVERS: [(&str, &str); 6] = [
    ("0", "a"),
    ("a", "b"),
    ("b", "d"),
    ("0", "c"),
    ("c", "d"),
    ("d", "1"),
];

pub const FIG3_ELEMENTS: [&str; 14] = [
    "0", "a", "b", "c", "d", "e", "f", "a∨c", "a∨d", "b∨e", "c∨e", "b∨d", "t", "1",
];

pub const FIG3_COVERS: [(&str, &str); 22] = [
    ("0", "f"),
    ("f", "a"),
    ("f", "b"),
    ("f", "c"),
    ("f", "d"),
    ("f", "e"),
    ("a", "a∨c"),
    ("c", "a∨c"),
    ("a", "a∨d"),
    ("d", "a∨d"),
    ("b", "b∨e"),
    ("e", "b∨e"),
    ("c", "c∨e"),
    ("e", "c∨e"),
    ("b", "b∨d"),
    ("d", "b∨d"),
    ("a∨c", "t"),
    ("a∨d", "t"),
    ("b∨e", "t"),
    ("c∨e", "t"),
    ("b∨d", "t"),
    ("t", "1"),
];

// Columns follow FIG3_ELEMENTS up to `t`; the last column (times 1) is the
// row element itself. `0` and `f` are the only other products that occur.
const FIG3_ROWS: [&str; 14] = [
    "0000000000000",
    "0f0ff00ff0fff",
    "00f0ff00fffff",
    "0f0f0f0ffff0f",
    "0ff0f00fff0ff",
    "00ff0f0f0ffff",
    "0000000000000",
    "0f0fff0ffffff",
    "0ffff00ffffff",
    "00ffff0ffffff",
    "0fff0f0ffffff",
    "0ff0ff0ffffff",
    "0fffff0ffffff",
    "",
];

pub fn fig2_lattice() -> Lattice {
    Lattice::build(&FIG2_ELEMENTS, &FIG2_COVERS, RelationKind::Covers)
        .expect("fig2 fixture is a lattice")
}

pub fn fig3_lattice() -> Lattice {
    Lattice::build(&FIG3_ELEMENTS, &FIG3_COVERS, RelationKind::Covers)
        .expect("fig3 fixture is a lattice")
}

/// The printed product table for `fig3`, row-major over [`FIG3_ELEMENTS`].
pub fn fig3_table() -> Vec<Vec<String>> {
    let n = FIG3_ELEMENTS.len();
    FIG3_ROWS
        .iter()
        .enumerate()
        .map(|(i, row)| {
            if i == n - 1 {
                return FIG3_ELEMENTS.iter().map(|s| s.to_string()).collect();
            }
            let mut out: Vec<String> = row
                .chars()
                .map(|c| if c == 'f' { "f" } else { "0" }.to_string())
                .collect();
            out.push(FIG3_ELEMENTS[i].to_string());
            out
        })
        .collect()
}

/// The `fig2` lattice with the trivial multiplication.
pub fn fig2() -> MultLattice {
    MultLattice::attach(fig2_lattice(), &MultSpec::Trivial).expect("trivial product is valid")
}

/// The `fig3` lattice with its printed multiplication table.
pub fn fig3() -> MultLattice {
    MultLattice::attach(fig3_lattice(), &MultSpec::Table(fig3_table()))
        .expect("printed table satisfies the axioms")
}
