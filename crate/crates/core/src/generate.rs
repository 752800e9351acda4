//! Generators for families of multiplicative lattices.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::lattice::{bit, members, Elem, Lattice, Mask, RelationKind};
use crate::mult::{MultLattice, MultSpec};
use crate::ring::ideal_lattice_zn;

pub const MAX_BOOLEAN_RANK: usize = 6;
pub const MAX_RANDOM_SIZE: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// The chain `0 < 1 < … < k-1`.
    Chain(usize),
    /// Subsets of a `k`-element set.
    Boolean(usize),
    /// The ideal lattice of `Z_n`.
    Divisor(u64),
    /// Down-set lattice of a seeded random poset, at most `size` elements.
    RandomDistributive {
        seed: u64,
        size: usize,
    },
    Fig2,
    Fig3,
}

/// Which product to attach. `Default` is the family's natural one: the ring
/// product for divisor lattices, the printed table for `fig3`, the trivial
/// product for `fig2` and the meet everywhere else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GenMult {
    #[default]
    Default,
    Meet,
    Trivial,
}

impl FromStr for GenMult {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(GenMult::Default),
            "meet" => Ok(GenMult::Meet),
            "trivial" => Ok(GenMult::Trivial),
            other => Err(Error::InvalidFamily(format!(
                "unknown multiplication `{other}`"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Chain(k) => write!(f, "chain:{k}"),
            Family::Boolean(k) => write!(f, "boolean:{k}"),
            Family::Divisor(n) => write!(f, "divisor:{n}"),
            Family::RandomDistributive { seed, size } => write!(f, "random:{size}@{seed}"),
            Family::Fig2 => f.write_str("fig2"),
            Family::Fig3 => f.write_str("fig3"),
        }
    }
}

fn index_lattice(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Lattice> {
    let n = names.len();
    let pairs: Vec<(Elem, Elem)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| leq(x, y))
        .collect();
    Lattice::from_indexed(names, &pairs, RelationKind::Leq)
}

pub fn chain(k: usize) -> Result<Lattice> {
    if k == 0 || k > 64 {
        return Err(Error::InvalidFamily(format!(
            "chain length {k} outside 1..=64"
        )));
    }
    index_lattice((0..k).map(|i| i.to_string()).collect(), |x, y| x <= y)
}

/// Elements are named by their members, e.g. `{1,3}`; the empty set is `0`.
pub fn boolean(k: usize) -> Result<Lattice> {
    if k > MAX_BOOLEAN_RANK {
        return Err(Error::InvalidFamily(format!(
            "boolean rank {k} exceeds {MAX_BOOLEAN_RANK}"
        )));
    }
    let names = (0..1usize << k)
        .map(|m| {
            if m == 0 {
                "0".to_string()
            } else {
                let items: Vec<String> = members(m as Mask).map(|i| (i + 1).to_string()).collect();
                format!("{{{}}}", items.join(","))
            }
        })
        .collect();
    index_lattice(names, |x, y| x & y == x)
}

/// Down-sets of a poset on `points` points given by `below[j]` (the points
/// strictly below `j`, transitively closed), ascending by mask.
fn poset_down_sets(points: usize, below: &[Mask]) -> Vec<Mask> {
    (0..1u64 << points)
        .filter(|&s| members(s).all(|j| below[j] & !s == 0))
        .collect()
}

/// The down-set lattice of a random poset. Always distributive.
pub fn random_distributive(seed: u64, size: usize) -> Result<Lattice> {
    if !(2..=MAX_RANDOM_SIZE).contains(&size) {
        return Err(Error::InvalidFamily(format!(
            "random lattice size {size} outside 2..={MAX_RANDOM_SIZE}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: usize = rng.gen_range(2..=6);
    let density: f64 = rng.gen_range(0.15..0.7);
    let mut below = vec![0u64; points];
    for j in 0..points {
        for i in 0..j {
            if rng.gen_bool(density) {
                below[j] |= bit(i) | below[i];
            }
        }
    }
    // Drop the newest point until the lattice fits; `below` only refers to
    // earlier points, so a prefix is still a closed poset.
    let sets = loop {
        let sets = poset_down_sets(points, &below);
        if sets.len() <= size {
            break sets;
        }
        points -= 1;
    };
    let names = sets
        .iter()
        .map(|&s| {
            let items: Vec<String> = members(s).map(|i| format!("p{i}")).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    index_lattice(names, |x, y| sets[x] & !sets[y] == 0)
}

/// Builds the family member and attaches the requested product.
pub fn generate(family: Family, mult: GenMult) -> Result<MultLattice> {
    let attach = |l: Lattice| match mult {
        GenMult::Trivial => MultLattice::attach(l, &MultSpec::Trivial),
        GenMult::Meet | GenMult::Default => MultLattice::attach(l, &MultSpec::Meet),
    };
    match family {
        Family::Chain(k) => attach(chain(k)?),
        Family::Boolean(k) => attach(boolean(k)?),
        Family::RandomDistributive { seed, size } => attach(random_distributive(seed, size)?),
        Family::Divisor(n) => {
            let zn = ideal_lattice_zn(n)?;
            match mult {
                GenMult::Default => Ok(zn.embedded),
                _ => attach(zn.embedded.lattice().clone()),
            }
        }
        Family::Fig2 => match mult {
            GenMult::Default | GenMult::Trivial => Ok(fixtures::fig2()),
            GenMult::Meet => attach(fixtures::fig2_lattice()),
        },
        Family::Fig3 => match mult {
            GenMult::Default => Ok(fixtures::fig3()),
            _ => attach(fixtures::fig3_lattice()),
        },
    }
}
