//! Zero-divisor graphs of a lattice: the order-sense graph relative to an
//! ideal `I` and the multiplicative graph relative to an element `i`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{bit, members, Elem, ElementSubset, Lattice, Mask};
use crate::mult::MultLattice;
use crate::solver::Coloring;

/// A simple undirected graph on at most 64 vertices `0..n`, adjacency as
/// bitsets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Mask>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64, "graphs are limited to 64 vertices");
        SimpleGraph { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    /// Adds `u – v`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertex_mask(&self) -> Mask {
        match self.order() {
            64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Mask {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| members(self.adj[u] & !((bit(u) << 1) - 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn is_clique(&self, set: Mask) -> bool {
        members(set).all(|v| set & !bit(v) & !self.adj[v] == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "sense")]
pub enum Provenance {
    /// Adjacency `a ∧ b ∈ I` for an ideal `I`.
    OrderSense { ideal: Mask },
    /// Adjacency `a · b ≤ i` for an element `i`.
    MultSense { element: Elem },
}

/// A zero-divisor graph whose vertices are lattice elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZdGraph {
    vertices: Vec<Elem>,
    graph: SimpleGraph,
    provenance: Provenance,
}

impl ZdGraph {
    /// Lattice elements, ascending; position `k` is vertex `k` of [`Self::graph`].
    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, x: Elem) -> Option<usize> {
        self.vertices.binary_search(&x).ok()
    }

    pub fn vertex_mask(&self) -> Mask {
        self.vertices.iter().fold(0, |m, &x| m | bit(x))
    }

    /// Whether lattice elements `x` and `y` are adjacent.
    pub fn adjacent(&self, x: Elem, y: Elem) -> bool {
        match (self.position(x), self.position(y)) {
            (Some(u), Some(v)) => self.graph.has_edge(u, v),
            _ => false,
        }
    }

    /// Edges as lattice element pairs `(x, y)` with `x < y`, lexicographic.
    pub fn element_edges(&self) -> Vec<(Elem, Elem)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| (self.vertices[u], self.vertices[v]))
            .collect()
    }

    fn from_relation(
        vertices: Vec<Elem>,
        provenance: Provenance,
        adjacent: impl Fn(Elem, Elem) -> bool,
    ) -> ZdGraph {
        let mut graph = SimpleGraph::new(vertices.len());
        for (u, &x) in vertices.iter().enumerate() {
            for (v, &y) in vertices.iter().enumerate().skip(u + 1) {
                if adjacent(x, y) {
                    graph.add_edge(u, v);
                }
            }
        }
        ZdGraph {
            vertices,
            graph,
            provenance,
        }
    }
}

/// `Γ_I(L)`: vertices `x ∉ I` with `x ∧ y ∈ I` for some `y ∉ I`; distinct
/// `x`, `y` adjacent iff `x ∧ y ∈ I`.
pub fn gamma_order(lattice: &Lattice, ideal: &ElementSubset) -> Result<ZdGraph> {
    if !ideal.is_ideal() {
        return Err(Error::NotAnIdeal);
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let inside = ideal.mask();
    let outside: Vec<Elem> = lattice
        .elements()
        .filter(|&x| inside & bit(x) == 0)
        .collect();
    let in_ideal = |x: Elem, y: Elem| inside & bit(lattice.meet(x, y)) != 0;
    let vertices = outside
        .iter()
        .copied()
        .filter(|&x| outside.iter().any(|&y| in_ideal(x, y)))
        .collect();
    Ok(ZdGraph::from_relation(
        vertices,
        Provenance::OrderSense { ideal: inside },
        in_ideal,
    ))
}

/// `Γ^m_i(L)`: vertices `x ≰ i` with `x · y ≤ i` for some `y ≰ i` (`y = x`
/// allowed); distinct `a`, `b` adjacent iff `a · b ≤ i`.
pub fn gamma_mult(ml: &MultLattice, i: Elem) -> ZdGraph {
    let l = ml.lattice();
    let outside: Vec<Elem> = l.elements().filter(|&x| !l.leq(x, i)).collect();
    let below = |x: Elem, y: Elem| l.leq(ml.mul(x, y), i);
    let vertices = outside
        .iter()
        .copied()
        .filter(|&x| outside.iter().any(|&y| below(x, y)))
        .collect();
    ZdGraph::from_relation(vertices, Provenance::MultSense { element: i }, below)
}

/// Rebuilds the adjacency of `graph` from its own vertex list.
pub fn rebuild(ml: &MultLattice, graph: &ZdGraph) -> ZdGraph {
    let l = ml.lattice();
    let vertices = graph.vertices.clone();
    match graph.provenance {
        Provenance::OrderSense { ideal } => {
            ZdGraph::from_relation(vertices, graph.provenance.clone(), |x, y| {
                ideal & bit(l.meet(x, y)) != 0
            })
        }
        Provenance::MultSense { element } => {
            ZdGraph::from_relation(vertices, graph.provenance.clone(), |x, y| {
                l.leq(ml.mul(x, y), element)
            })
        }
    }
}

/// Fill colors used by [`export_dot`], indexed by color class modulo 12.
pub const DOT_PALETTE: [&str; 12] = [
    "red", "blue", "green", "yellow", "orange", "purple", "cyan", "magenta", "brown", "pink",
    "gold", "gray",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the graph as Graphviz DOT. `names` maps lattice elements to
/// labels; the coloring, when given, must be over this graph's vertices.
pub fn export_dot(graph: &ZdGraph, names: &[String], coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    for (pos, &x) in graph.vertices.iter().enumerate() {
        let label = quote(&names[x]);
        match coloring {
            Some(c) => {
                let color = DOT_PALETTE[c.color_of(pos) % DOT_PALETTE.len()];
                let _ = writeln!(out, "  {label} [style=filled,fillcolor={color}];");
            }
            None => {
                let _ = writeln!(out, "  {label};");
            }
        }
    }
    for (x, y) in graph.element_edges() {
        let _ = writeln!(out, "  {} -- {};", quote(&names[x]), quote(&names[y]));
    }
    out.push_str("}\n");
    out
}
