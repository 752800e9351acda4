//! Finite bounded lattices stored as precomputed order, meet and join tables.
//!
//! Elements are identified by their index in input order; names only matter at
//! the I/O boundary. Subsets of elements are `u64` bitmasks, which caps a
//! lattice at 64 elements. Every finite lattice is complete and every element
//! is compact, so those notions need no separate machinery here.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of an element in its lattice.
pub type Elem = usize;

/// A set of elements, bit `i` standing for element `i`.
pub type Mask = u64;

pub const MAX_ELEMENTS: usize = 64;

/// Default cap for [`Lattice::enumerate_down_sets`].
pub const DEFAULT_DOWN_SET_CAP: usize = 1 << 20;

#[inline]
pub fn bit(x: Elem) -> Mask {
    1u64 << x
}

/// Iterates the elements of a mask in ascending index order.
pub fn members(mut mask: Mask) -> impl Iterator<Item = Elem> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let x = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(x)
        }
    })
}

fn full_mask(n: usize) -> Mask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    /// Pairs are covering (or any generating) relations; the order is their
    /// reflexive-transitive closure.
    Covers,
    /// Pairs already form the order; reflexive pairs may be omitted.
    Leq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    names: Vec<String>,
    down: Vec<Mask>,
    up: Vec<Mask>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

/// A pentagon sublattice `bottom < low < high < top` with `side` incomparable
/// to the chain, `side ∧ high = bottom` and `side ∨ low = top`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagonWitness {
    pub bottom: Elem,
    pub low: Elem,
    pub high: Elem,
    pub side: Elem,
    pub top: Elem,
}

/// A triple `(x, y, z)` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributivityWitness {
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
}

/// A triple with `a ∧ b = 0 = a ∧ c` but `a ∧ (b ∨ c) ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroDistributivityWitness {
    pub a: Elem,
    pub b: Elem,
    pub c: Elem,
}

impl Lattice {
    /// Builds and validates a lattice from element names and order pairs
    /// `(x, y)` meaning `x ≤ y`.
    pub fn build<S: AsRef<str>>(
        names: &[S],
        pairs: &[(S, S)],
        kind: RelationKind,
    ) -> Result<Lattice> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownName(s.to_string()))
        };
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            idx_pairs.push((lookup(x.as_ref())?, lookup(y.as_ref())?));
        }
        Lattice::from_indexed(names, &idx_pairs, kind)
    }

    /// Same as [`Lattice::build`] with pairs given as element indices.
    pub fn from_indexed(
        names: Vec<String>,
        pairs: &[(Elem, Elem)],
        kind: RelationKind,
    ) -> Result<Lattice> {
        let n = names.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        // up[x] = { y | x ≤ y }
        let mut up: Vec<Mask> = (0..n).map(bit).collect();
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::UnknownName(format!("#{}", x.max(y))));
            }
            up[x] |= bit(y);
        }
        match kind {
            RelationKind::Covers => {
                // Warshall closure on bitsets.
                for k in 0..n {
                    for x in 0..n {
                        if up[x] & bit(k) != 0 {
                            up[x] |= up[k];
                        }
                    }
                }
            }
            RelationKind::Leq => {
                for x in 0..n {
                    for y in members(up[x]) {
                        if up[y] & !up[x] != 0 {
                            let z = members(up[y] & !up[x]).next().unwrap_or(y);
                            return Err(Error::NotAPartialOrder(format!(
                                "not transitive: {} ≤ {} ≤ {} but {} ≰ {}",
                                names[x], names[y], names[z], names[x], names[z]
                            )));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in members(up[x]) {
                if y != x && up[y] & bit(x) != 0 {
                    return Err(Error::NotAPartialOrder(format!(
                        "{} ≤ {} and {} ≤ {} for distinct elements",
                        names[x], names[y], names[y], names[x]
                    )));
                }
            }
        }
        let mut down = vec![0u64; n];
        for x in 0..n {
            for y in members(up[x]) {
                down[y] |= bit(x);
            }
        }
        let all = full_mask(n);
        let bottom = (0..n)
            .find(|&x| up[x] == all)
            .ok_or(Error::NoBoundedStructure("least element"))?;
        let top = (0..n)
            .find(|&x| down[x] == all)
            .ok_or(Error::NoBoundedStructure("greatest element"))?;

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let lower = down[x] & down[y];
                let glb = members(lower).find(|&z| lower & !down[z] == 0);
                let upper = up[x] & up[y];
                let lub = members(upper).find(|&z| upper & !up[z] == 0);
                let missing = |what| Error::NotALattice {
                    x: names[x].clone(),
                    y: names[y].clone(),
                    missing: what,
                };
                let glb = glb.ok_or_else(|| missing("meet"))?;
                let lub = lub.ok_or_else(|| missing("join"))?;
                meet[x * n + y] = glb;
                meet[y * n + x] = glb;
                join[x * n + y] = lub;
                join[y * n + x] = lub;
            }
        }
        Ok(Lattice {
            names,
            down,
            up,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn all(&self) -> Mask {
        full_mask(self.len())
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.down[y] & bit(x) != 0
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.len() + y]
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.len() + y]
    }

    /// Meet of every element of `mask`; the empty meet is the top.
    pub fn meet_all(&self, mask: Mask) -> Elem {
        members(mask).fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of every element of `mask`; the empty join is the bottom.
    pub fn join_all(&self, mask: Mask) -> Elem {
        members(mask).fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `(a] = { x | x ≤ a }` as a mask.
    pub fn down_mask(&self, a: Elem) -> Mask {
        self.down[a]
    }

    /// `[a) = { x | a ≤ x }` as a mask.
    pub fn up_mask(&self, a: Elem) -> Mask {
        self.up[a]
    }

    /// Cover pairs `(x, y)` with `x ⋖ y`, ordered by `y` then `x`.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for y in self.elements() {
            for x in members(self.maximal_of(self.down[y] & !bit(y))) {
                out.push((x, y));
            }
        }
        out
    }

    pub fn principal_down_set(&self, a: Elem) -> ElementSubset {
        ElementSubset::new(self, self.down[a])
    }

    pub fn principal_up_set(&self, a: Elem) -> ElementSubset {
        ElementSubset::new(self, self.up[a])
    }

    /// The ≤-minimal elements of `mask`.
    pub fn minimal_of(&self, mask: Mask) -> Mask {
        members(mask)
            .filter(|&x| self.down[x] & mask == bit(x))
            .fold(0, |m, x| m | bit(x))
    }

    /// The ≤-maximal elements of `mask`.
    pub fn maximal_of(&self, mask: Mask) -> Mask {
        members(mask)
            .filter(|&x| self.up[x] & mask == bit(x))
            .fold(0, |m, x| m | bit(x))
    }

    pub fn format_set(&self, mask: Mask) -> String {
        let items: Vec<&str> = members(mask).map(|x| self.name(x)).collect();
        format!("{{{}}}", items.join(","))
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn distributivity_witness(&self) -> Option<DistributivityWitness> {
        for x in self.elements() {
            for y in self.elements() {
                for z in self.elements() {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some(DistributivityWitness { x, y, z });
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    /// Scans the modular law `x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z` and turns the
    /// first failure into a pentagon sublattice.
    pub fn modularity_witness(&self) -> Option<PentagonWitness> {
        for x in self.elements() {
            for z in members(self.up[x]) {
                for y in self.elements() {
                    let low = self.join(x, self.meet(y, z));
                    let high = self.meet(self.join(x, y), z);
                    if low != high {
                        return Some(PentagonWitness {
                            bottom: self.meet(y, high),
                            low,
                            high,
                            side: y,
                            top: self.join(y, low),
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_zero_distributive(&self) -> bool {
        self.zero_distributivity_witness().is_none()
    }

    pub fn zero_distributivity_witness(&self) -> Option<ZeroDistributivityWitness> {
        let zero = self.bottom;
        for a in self.elements() {
            let disjoint: Vec<Elem> = self
                .elements()
                .filter(|&b| self.meet(a, b) == zero)
                .collect();
            for (i, &b) in disjoint.iter().enumerate() {
                for &c in &disjoint[i..] {
                    if self.meet(a, self.join(b, c)) != zero {
                        return Some(ZeroDistributivityWitness { a, b, c });
                    }
                }
            }
        }
        None
    }

    /// Every down-set (including the empty one), sorted by member bitmask.
    pub fn enumerate_down_sets(&self, cap: usize) -> Result<Vec<ElementSubset>> {
        Ok(self
            .down_set_masks(cap)?
            .into_iter()
            .map(|m| ElementSubset::new(self, m))
            .collect())
    }

    /// Down-sets as raw masks, sorted ascending.
    pub fn down_set_masks(&self, cap: usize) -> Result<Vec<Mask>> {
        let mut out = Vec::new();
        self.collect_down_sets(0, self.all(), cap, &mut out)?;
        out.sort_unstable();
        Ok(out)
    }

    // Each branch either puts `x` in (with everything below it) or out (with
    // everything above it); both choices stay consistent, so every leaf is a
    // distinct down-set.
    fn collect_down_sets(
        &self,
        included: Mask,
        undecided: Mask,
        cap: usize,
        out: &mut Vec<Mask>,
    ) -> Result<()> {
        if undecided == 0 {
            if out.len() >= cap {
                return Err(Error::CapExceeded(cap));
            }
            out.push(included);
            return Ok(());
        }
        let x = undecided.trailing_zeros() as usize;
        self.collect_down_sets(included | self.down[x], undecided & !self.down[x], cap, out)?;
        self.collect_down_sets(included, undecided & !self.up[x], cap, out)
    }

    pub fn is_down_set(&self, mask: Mask) -> bool {
        members(mask).all(|x| self.down[x] & !mask == 0)
    }

    pub fn is_up_set(&self, mask: Mask) -> bool {
        members(mask).all(|x| self.up[x] & !mask == 0)
    }

    pub fn is_join_closed(&self, mask: Mask) -> bool {
        members(mask).all(|x| members(mask).all(|y| mask & bit(self.join(x, y)) != 0))
    }

    pub fn is_meet_closed(&self, mask: Mask) -> bool {
        members(mask).all(|x| members(mask).all(|y| mask & bit(self.meet(x, y)) != 0))
    }

    /// Non-empty down-set closed under binary joins.
    pub fn is_ideal(&self, mask: Mask) -> bool {
        mask != 0 && self.is_down_set(mask) && self.is_join_closed(mask)
    }

    /// Non-empty up-set closed under binary meets.
    pub fn is_filter(&self, mask: Mask) -> bool {
        mask != 0 && self.is_up_set(mask) && self.is_meet_closed(mask)
    }

    /// Proper non-empty down-set with `a ∧ b ∈ I ⇒ a ∈ I or b ∈ I`.
    pub fn is_prime_down_set(&self, mask: Mask) -> bool {
        let complement = self.all() & !mask;
        mask != 0 && complement != 0 && self.is_down_set(mask) && self.is_meet_closed(complement)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lattice of {} elements", self.len())
    }
}

/// A set of lattice elements with its structural flags computed up front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    mask: Mask,
    down_set: bool,
    ideal: bool,
    filter: bool,
    prime: bool,
    proper: bool,
    minimal: bool,
}

impl ElementSubset {
    pub fn new(lattice: &Lattice, mask: Mask) -> Self {
        let down_set = lattice.is_down_set(mask);
        ElementSubset {
            mask,
            down_set,
            ideal: down_set && lattice.is_ideal(mask),
            filter: lattice.is_filter(mask),
            prime: lattice.is_prime_down_set(mask),
            proper: mask != lattice.all(),
            minimal: false,
        }
    }

    pub(crate) fn with_minimal(mut self) -> Self {
        self.minimal = true;
        self
    }

    pub fn mask(&self) -> Mask {
        self.mask
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> {
        members(self.mask)
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.mask & bit(x) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_down_set(&self) -> bool {
        self.down_set
    }

    pub fn is_ideal(&self) -> bool {
        self.ideal
    }

    pub fn is_filter(&self) -> bool {
        self.filter
    }

    pub fn is_prime(&self) -> bool {
        self.prime
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }

    /// Set only on subsets returned by a minimality query.
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }
}
