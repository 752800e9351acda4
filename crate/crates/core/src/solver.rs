//! Exact clique and chromatic numbers with witnesses.
//!
//! The clique search is a Tomita-style branch and bound with greedy coloring
//! bounds. The chromatic search is DSATUR branch and bound, seeded with a
//! maximum clique for the lower bound and a largest-degree-first greedy
//! coloring for the upper bound. Both are deterministic for a fixed vertex
//! order. The brute-force oracles share no code with either.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{gamma_mult, SimpleGraph};
use crate::lattice::{bit, members, Mask};
use crate::mult::MultLattice;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(30);
pub const BRUTE_FORCE_CAP: usize = 12;

/// A proper coloring; `assignment[v]` is the 0-based color of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub color_count: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let distinct: std::collections::BTreeSet<usize> = assignment.iter().copied().collect();
        Coloring {
            color_count: distinct.len(),
            assignment,
        }
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn is_proper(&self, g: &SimpleGraph) -> bool {
        self.assignment.len() == g.order()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CliqueWitness {
    pub vertices: Vec<usize>,
}

impl CliqueWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn mask(&self) -> Mask {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }
}

/// Wall-clock budget for a solve. Only ever aborts a search; it never
/// changes a result that completes.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    pub fn none() -> Self {
        Deadline { at: None }
    }

    pub fn after(limit: Duration) -> Self {
        Deadline {
            at: Instant::now().checked_add(limit),
        }
    }

    fn check(&self) -> Result<()> {
        match self.at {
            Some(at) if Instant::now() >= at => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

impl Default for Deadline {
    fn default() -> Self {
        Deadline::after(DEFAULT_TIMEOUT)
    }
}

/// Vertices by descending degree, ties by index.
fn degree_order(g: &SimpleGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

struct CliqueSearch<'a> {
    // adjacency in rank space: vertex k is `order[k]`
    adj: Vec<Mask>,
    order: Vec<usize>,
    best: Vec<usize>,
    current: Vec<usize>,
    deadline: &'a Deadline,
    steps: u64,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, candidates: Mask) -> Result<()> {
        self.steps += 1;
        if self.steps % 4096 == 1 {
            self.deadline.check()?;
        }
        // Greedy color classes give an upper bound on the clique inside each
        // prefix of the sequence.
        let mut sequence = Vec::with_capacity(candidates.count_ones() as usize);
        let mut uncolored = candidates;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut available = uncolored;
            while available != 0 {
                let v = available.trailing_zeros() as usize;
                available &= !self.adj[v] & !bit(v);
                uncolored &= !bit(v);
                sequence.push((v, color));
            }
        }
        let mut remaining = candidates;
        while let Some((v, bound)) = sequence.pop() {
            if self.current.len() + bound <= self.best.len() {
                return Ok(());
            }
            self.current.push(v);
            let next = remaining & self.adj[v];
            if next == 0 {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            remaining &= !bit(v);
        }
        Ok(())
    }
}

/// Exact clique number with a witness; `ω = 0` for the empty graph.
pub fn clique_number(g: &SimpleGraph) -> (usize, CliqueWitness) {
    clique_number_within(g, &Deadline::none()).expect("no deadline")
}

pub fn clique_number_within(
    g: &SimpleGraph,
    deadline: &Deadline,
) -> Result<(usize, CliqueWitness)> {
    let n = g.order();
    if n == 0 {
        return Ok((0, CliqueWitness::default()));
    }
    let order = degree_order(g);
    let mut rank = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    let adj = order
        .iter()
        .map(|&v| members(g.neighbors(v)).fold(0, |m, u| m | bit(rank[u])))
        .collect();
    let mut search = CliqueSearch {
        adj,
        order,
        best: Vec::new(),
        current: Vec::new(),
        deadline,
        steps: 0,
    };
    search.expand(g.vertex_mask())?;
    let mut vertices: Vec<usize> = search.best.iter().map(|&k| search.order[k]).collect();
    vertices.sort_unstable();
    Ok((vertices.len(), CliqueWitness { vertices }))
}

/// Largest-degree-first greedy coloring.
pub fn greedy_coloring(g: &SimpleGraph) -> Coloring {
    let mut colors = vec![usize::MAX; g.order()];
    for v in degree_order(g) {
        let used = members(g.neighbors(v))
            .filter(|&u| colors[u] != usize::MAX)
            .fold(0u64, |m, u| m | bit(colors[u]));
        colors[v] = (!used).trailing_zeros() as usize;
    }
    Coloring::new(colors)
}

struct ColorSearch<'a> {
    g: &'a SimpleGraph,
    colors: Vec<Option<usize>>,
    best: Coloring,
    lower: usize,
    deadline: &'a Deadline,
    steps: u64,
}

impl ColorSearch<'_> {
    fn neighbor_colors(&self, v: usize) -> Mask {
        members(self.g.neighbors(v))
            .filter_map(|u| self.colors[u])
            .fold(0, |m, c| m | bit(c))
    }

    /// Returns `true` once an optimal coloring (matching the lower bound) is
    /// known.
    fn search(&mut self, used: usize, uncolored: Mask) -> Result<bool> {
        self.steps += 1;
        if self.steps % 4096 == 1 {
            self.deadline.check()?;
        }
        if uncolored == 0 {
            let assignment = self
                .colors
                .iter()
                .map(|c| c.expect("all colored"))
                .collect();
            self.best = Coloring::new(assignment);
            return Ok(self.best.color_count <= self.lower);
        }
        // DSATUR choice: most distinct neighbor colors, then most uncolored
        // neighbors, then lowest index.
        let v = members(uncolored)
            .max_by_key(|&v| {
                (
                    self.neighbor_colors(v).count_ones(),
                    (self.g.neighbors(v) & uncolored).count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("non-empty");
        let forbidden = self.neighbor_colors(v);
        for c in 0..used {
            if forbidden & bit(c) == 0 {
                self.colors[v] = Some(c);
                if self.search(used, uncolored & !bit(v))? {
                    return Ok(true);
                }
            }
        }
        if used + 1 < self.best.color_count {
            self.colors[v] = Some(used);
            if self.search(used + 1, uncolored & !bit(v))? {
                return Ok(true);
            }
        }
        self.colors[v] = None;
        Ok(false)
    }
}

/// Exact chromatic number with a proper witness using exactly `χ` colors;
/// `χ = 0` for the empty graph.
pub fn chromatic_number(g: &SimpleGraph) -> (usize, Coloring) {
    chromatic_number_within(g, &Deadline::none()).expect("no deadline")
}

pub fn chromatic_number_within(g: &SimpleGraph, deadline: &Deadline) -> Result<(usize, Coloring)> {
    if g.order() == 0 {
        return Ok((0, Coloring::default()));
    }
    let (omega, clique) = clique_number_within(g, deadline)?;
    let greedy = greedy_coloring(g);
    if greedy.color_count == omega {
        return Ok((omega, greedy));
    }
    let mut search = ColorSearch {
        g,
        colors: vec![None; g.order()],
        best: greedy,
        lower: omega,
        deadline,
        steps: 0,
    };
    // Any optimal coloring can be permuted so the clique gets colors 0..ω.
    for (c, &v) in clique.vertices.iter().enumerate() {
        search.colors[v] = Some(c);
    }
    search.search(omega, g.vertex_mask() & !clique.mask())?;
    let best = search.best;
    Ok((best.color_count, best))
}

/// Smallest `k` admitting a proper `k`-labeling, by exhaustive search over
/// set partitions of the vertices. Only for graphs with at most
/// `max_vertices` vertices.
pub fn brute_force_chromatic(g: &SimpleGraph, max_vertices: usize) -> Result<usize> {
    let n = g.order();
    if n > max_vertices {
        return Err(Error::TooLarge(n, max_vertices));
    }
    fn assign(g: &SimpleGraph, labels: &mut Vec<usize>, blocks: usize, best: &mut usize) {
        let v = labels.len();
        if blocks >= *best {
            return;
        }
        if v == g.order() {
            *best = blocks;
            return;
        }
        // A new vertex joins an existing block or opens the next one, which
        // enumerates each partition once.
        for b in 0..=blocks {
            if (0..v).any(|u| labels[u] == b && g.has_edge(u, v)) {
                continue;
            }
            labels.push(b);
            assign(g, labels, blocks.max(b + 1), best);
            labels.pop();
        }
    }
    let mut best = n + 1;
    assign(g, &mut Vec::with_capacity(n), 0, &mut best);
    Ok(if n == 0 { 0 } else { best })
}

/// Largest clique by checking every vertex subset.
pub fn brute_force_clique(g: &SimpleGraph, max_vertices: usize) -> Result<usize> {
    let n = g.order();
    if n > max_vertices {
        return Err(Error::TooLarge(n, max_vertices));
    }
    Ok((0u64..1 << n)
        .filter(|&s| g.is_clique(s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// The coloring `x ↦ min{ k | x ≰ p_k }` of `Γ^m(L)` over the minimal prime
/// elements `p_0 < p_1 < …` (ascending element index) of a reduced lattice.
/// `assignment` is indexed by vertex position in `gamma_mult(ml, 0)`.
pub fn beck_coloring(ml: &MultLattice) -> Result<Coloring> {
    if !ml.is_reduced() {
        return Err(Error::NotReduced);
    }
    let l = ml.lattice();
    let graph = gamma_mult(ml, l.bottom());
    if graph.is_empty() {
        return Ok(Coloring::default());
    }
    let primes = ml.minimal_prime_elements();
    let prime_mask = primes.iter().fold(0, |m, &p| m | bit(p));
    if primes.is_empty() || l.meet_all(prime_mask) != l.bottom() {
        return Err(Error::NoPrimesFound);
    }
    let assignment = graph
        .vertices()
        .iter()
        .map(|&x| {
            primes
                .iter()
                .position(|&p| !l.leq(x, p))
                .ok_or(Error::NoPrimesFound)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring::new(assignment))
}
