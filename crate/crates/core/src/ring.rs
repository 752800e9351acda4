//! The ideal lattice of `Z_n`.
//!
//! The ideal `dZ_n` is written `(d)` for each divisor `d` of `n`. Inclusion is
//! reverse divisibility, so `(n)` is the zero ideal and `(1)` the whole ring.
//! Join is `gcd`, meet is `lcm` and the ideal product is `(gcd(d1·d2, n))`.
//! The zero-divisor graph at `(n)` is the annihilating-ideal graph of `Z_n`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice, RelationKind};
use crate::mult::MultLattice;
use crate::report::{analyze, AnalysisOptions, BeckReport};

#[derive(Debug, Clone)]
pub struct ZnIdealLattice {
    pub n: u64,
    /// Ascending; element `k` of the lattice is the ideal `(divisors[k])`.
    pub divisors: Vec<u64>,
    pub embedded: MultLattice,
}

impl ZnIdealLattice {
    pub fn index_of(&self, d: u64) -> Option<Elem> {
        self.divisors.binary_search(&d).ok()
    }

    /// Elements `(p)` for the primes `p | n`, in element order.
    pub fn prime_ideals(&self) -> Vec<Elem> {
        prime_factors(self.n)
            .into_iter()
            .filter_map(|p| self.index_of(p))
            .collect()
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d <= n / d {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p <= n / p {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_squarefree(n: u64) -> bool {
    n / prime_factors(n).iter().product::<u64>() == 1
}

/// Builds `Id(Z_n)` and validates it as a multiplicative lattice.
pub fn ideal_lattice_zn(n: u64) -> Result<ZnIdealLattice> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let divisors = divisors(n);
    let names: Vec<String> = divisors.iter().map(|d| format!("({d})")).collect();
    let index = |d: u64| divisors.binary_search(&d).expect("divisor");
    // (d1) is covered by (d2) when d1 / d2 is prime.
    let mut covers = Vec::new();
    for &d in &divisors {
        for p in prime_factors(n / d) {
            covers.push((index(d * p), index(d)));
        }
    }
    let lattice = Lattice::from_indexed(names, &covers, RelationKind::Covers)?;
    let mut product = Vec::with_capacity(divisors.len() * divisors.len());
    for &a in &divisors {
        for &b in &divisors {
            // gcd(a·b, n) = a·gcd(b, n/a) since a | n; no overflow.
            product.push(index(a * b.gcd(&(n / a))));
        }
    }
    let embedded = MultLattice::from_product(lattice, product)?;
    Ok(ZnIdealLattice {
        n,
        divisors,
        embedded,
    })
}

/// Full analysis of the annihilating-ideal graph of `Z_n`.
pub fn analyze_ring(n: u64, options: &AnalysisOptions) -> Result<BeckReport> {
    let zn = ideal_lattice_zn(n)?;
    let mut report = analyze(
        &zn.embedded,
        &format!("Z_{n}"),
        zn.embedded.lattice().bottom(),
        options,
    )?;
    if !report.reduced {
        report.notes.push(
            "non-reduced ring: values are reported, the general equality is not claimed".into(),
        );
    }
    Ok(report)
}
