//! Multiplicative lattices: a lattice together with a commutative, associative,
//! join-distributive product satisfying `a·b ≤ a∧b` and `a·1 = a`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{bit, members, Elem, Lattice, Mask};

/// The five multiplicative lattice axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    /// `a·b = b·a`
    M1,
    /// `a·(b·c) = (a·b)·c`
    M2,
    /// `a·(b∨c) = (a·b)∨(a·c)` and `a·0 = 0`
    M3,
    /// `a·b ≤ a∧b`
    M4,
    /// `a·1 = a`
    M5,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::M1 => "M1",
            Axiom::M2 => "M2",
            Axiom::M3 => "M3",
            Axiom::M4 => "M4",
            Axiom::M5 => "M5",
        };
        f.write_str(s)
    }
}

/// How the product of a lattice is defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultSpec {
    /// Row-major table of element names in element order.
    Table(Vec<Vec<String>>),
    /// `x·y = x∧y`
    Meet,
    /// `x·y = 0` unless one factor is the top, and `x·1 = x`.
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultLattice {
    base: Lattice,
    product: Vec<Elem>,
}

impl MultLattice {
    pub fn attach(base: Lattice, spec: &MultSpec) -> Result<MultLattice> {
        let n = base.len();
        let product = match spec {
            MultSpec::Table(rows) => {
                if rows.len() != n {
                    return Err(Error::IncompleteTable(format!(
                        "expected {n} rows, found {}",
                        rows.len()
                    )));
                }
                let mut product = Vec::with_capacity(n * n);
                for (i, row) in rows.iter().enumerate() {
                    if row.len() != n {
                        return Err(Error::IncompleteTable(format!(
                            "row `{}` has {} entries, expected {n}",
                            base.name(i),
                            row.len()
                        )));
                    }
                    for entry in row {
                        let x = base
                            .index_of(entry)
                            .ok_or_else(|| Error::UnknownName(entry.clone()))?;
                        product.push(x);
                    }
                }
                product
            }
            MultSpec::Meet => {
                let mut product = Vec::with_capacity(n * n);
                for x in 0..n {
                    for y in 0..n {
                        product.push(base.meet(x, y));
                    }
                }
                product
            }
            MultSpec::Trivial => {
                let (zero, one) = (base.bottom(), base.top());
                let mut product = Vec::with_capacity(n * n);
                for x in 0..n {
                    for y in 0..n {
                        product.push(if y == one {
                            x
                        } else if x == one {
                            y
                        } else {
                            zero
                        });
                    }
                }
                product
            }
        };
        MultLattice::from_product(base, product)
    }

    /// Validates a row-major product table given by element indices.
    pub fn from_product(base: Lattice, product: Vec<Elem>) -> Result<MultLattice> {
        let n = base.len();
        if product.len() != n * n {
            return Err(Error::IncompleteTable(format!(
                "expected {} entries, found {}",
                n * n,
                product.len()
            )));
        }
        if let Some(&bad) = product.iter().find(|&&x| x >= n) {
            return Err(Error::UnknownName(format!("#{bad}")));
        }
        let ml = MultLattice { base, product };
        if let Some((axiom, witness)) = ml.first_violation() {
            return Err(Error::AxiomViolation {
                axiom,
                witness: witness
                    .into_iter()
                    .map(|x| ml.base.name(x).to_string())
                    .collect(),
            });
        }
        Ok(ml)
    }

    fn first_violation(&self) -> Option<(Axiom, Vec<Elem>)> {
        let l = &self.base;
        let els = || l.elements();
        for a in els() {
            for b in els() {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((Axiom::M1, vec![a, b]));
                }
            }
        }
        for a in els() {
            for b in els() {
                let ab = self.mul(a, b);
                for c in els() {
                    if self.mul(a, self.mul(b, c)) != self.mul(ab, c) {
                        return Some((Axiom::M2, vec![a, b, c]));
                    }
                }
            }
        }
        for a in els() {
            if self.mul(a, l.bottom()) != l.bottom() {
                return Some((Axiom::M3, vec![a, l.bottom()]));
            }
            for b in els() {
                for c in els() {
                    let lhs = self.mul(a, l.join(b, c));
                    let rhs = l.join(self.mul(a, b), self.mul(a, c));
                    if lhs != rhs {
                        return Some((Axiom::M3, vec![a, b, c]));
                    }
                }
            }
        }
        for a in els() {
            for b in els() {
                if !l.leq(self.mul(a, b), l.meet(a, b)) {
                    return Some((Axiom::M4, vec![a, b]));
                }
            }
        }
        for a in els() {
            if self.mul(a, l.top()) != a {
                return Some((Axiom::M5, vec![a]));
            }
        }
        None
    }

    pub fn lattice(&self) -> &Lattice {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.product[a * self.base.len() + b]
    }

    /// Product table as element names, row-major.
    pub fn table_names(&self) -> Vec<Vec<String>> {
        let n = self.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.base.name(self.mul(a, b)).to_string())
                    .collect()
            })
            .collect()
    }

    /// `a^k` for `k ≥ 1`.
    pub fn power(&self, a: Elem, k: u32) -> Elem {
        assert!(k >= 1, "exponent must be positive");
        let mut p = a;
        for _ in 1..k {
            p = self.mul(p, a);
        }
        p
    }

    /// The first power of `a` that either repeats or vanishes, with its
    /// exponent. Powers descend (`a^(k+1) ≤ a^k`), so this happens within
    /// `n` steps.
    pub fn stable_power(&self, a: Elem) -> (Elem, u32) {
        let zero = self.base.bottom();
        let mut p = a;
        let mut k = 1;
        loop {
            if p == zero {
                return (p, k);
            }
            let next = self.mul(p, a);
            if next == p {
                return (p, k);
            }
            p = next;
            k += 1;
        }
    }

    /// Smallest `k` with `a^k = 0`, if any.
    pub fn nilpotency_index(&self, a: Elem) -> Option<u32> {
        let (p, k) = self.stable_power(a);
        (p == self.base.bottom()).then_some(k)
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.nilpotency_index(a).is_some()
    }

    /// Non-zero nilpotent elements, ascending.
    pub fn nonzero_nilpotents(&self) -> Vec<Elem> {
        self.base
            .elements()
            .filter(|&a| a != self.base.bottom() && self.is_nilpotent(a))
            .collect()
    }

    pub fn is_reduced(&self) -> bool {
        self.nonzero_nilpotents().is_empty()
    }

    /// `a* = ⋁{x | a^k·x = 0 for some k ≥ 1}`.
    ///
    /// Since `a^k·x` descends in `k`, it is enough to test the stable power.
    /// In a reduced lattice this is `⋁{x | a·x = 0}`.
    pub fn annihilator_star(&self, a: Elem) -> Elem {
        let (s, _) = self.stable_power(a);
        let zero = self.base.bottom();
        let killed = self
            .base
            .elements()
            .filter(|&x| self.mul(s, x) == zero)
            .fold(0, |m, x| m | bit(x));
        self.base.join_all(killed)
    }

    /// `(a:b) = ⋁{x | x·b ≤ a}`.
    pub fn residual(&self, a: Elem, b: Elem) -> Elem {
        let set = self
            .base
            .elements()
            .filter(|&x| self.base.leq(self.mul(x, b), a))
            .fold(0, |m, x| m | bit(x));
        self.base.join_all(set)
    }

    pub fn is_prime_element(&self, p: Elem) -> bool {
        let l = &self.base;
        if p == l.top() {
            return false;
        }
        let outside: Vec<Elem> = l.elements().filter(|&x| !l.leq(x, p)).collect();
        outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !l.leq(self.mul(a, b), p)))
    }

    pub fn prime_elements(&self) -> Vec<Elem> {
        self.base
            .elements()
            .filter(|&p| self.is_prime_element(p))
            .collect()
    }

    fn prime_mask(&self) -> Mask {
        self.prime_elements().into_iter().fold(0, |m, p| m | bit(p))
    }

    pub fn minimal_prime_elements(&self) -> Vec<Elem> {
        members(self.base.minimal_of(self.prime_mask())).collect()
    }

    /// The set `{a* | a ≠ 0, a* ≠ 1}` as a mask.
    pub fn proper_annihilators(&self) -> Mask {
        let l = &self.base;
        l.elements()
            .filter(|&a| a != l.bottom())
            .map(|a| self.annihilator_star(a))
            .filter(|&s| s != l.top())
            .fold(0, |m, s| m | bit(s))
    }

    /// ≤-maximal members of `{a* | a ≠ 0, a* ≠ 1}`, ascending.
    pub fn maximal_annihilator_elements(&self) -> Vec<Elem> {
        members(self.base.maximal_of(self.proper_annihilators())).collect()
    }

    /// Some `x ≠ 0` with `x* = target`, smallest index first.
    pub fn annihilator_source(&self, target: Elem) -> Option<Elem> {
        self.base
            .elements()
            .find(|&x| x != self.base.bottom() && self.annihilator_star(x) == target)
    }

    /// Whether some non-zero `y` has `x·y = 0`, for non-zero `x`.
    pub fn is_zero_divisor(&self, x: Elem) -> bool {
        let zero = self.base.bottom();
        x != zero
            && self
                .base
                .elements()
                .any(|y| y != zero && self.mul(x, y) == zero)
    }
}

/// Attaches a multiplication to a lattice, verifying every axiom.
pub fn attach_multiplication(base: Lattice, spec: &MultSpec) -> Result<MultLattice> {
    MultLattice::attach(base, spec)
}
