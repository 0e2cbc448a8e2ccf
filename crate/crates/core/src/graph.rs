//! Plain weighted-graph realization of a labeled grid.
//!
//! Vertices are the integer points `(2r + s, s)` with `0 <= r <= n` and
//! `0 <= s <= n - r`; two vertices are adjacent when they differ by
//! `(1, 1)`, `(2, 0)` or `(1, -1)`. Edge weights are conductances.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::grid::{Grid, Side};
use crate::rational::{is_positive, Rational};

pub type Vertex = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedGraph {
    vertices: BTreeSet<Vertex>,
    edges: BTreeMap<(Vertex, Vertex), Rational>,
}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl WeightedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.vertices.insert(v);
    }

    /// Adds (or replaces) the edge `u`-`v` with the given conductance.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex, conductance: Rational) -> Result<()> {
        if u == v {
            return Err(Error::invalid(format!("self loop at {u:?}")));
        }
        if !is_positive(&conductance) {
            return Err(Error::invalid(format!("conductance must be positive, got {conductance}")));
        }
        self.vertices.insert(u);
        self.vertices.insert(v);
        self.edges.insert(key(u, v), conductance);
        Ok(())
    }

    /// Adds a resistor, stored as its conductance.
    pub fn add_resistor(&mut self, u: Vertex, v: Vertex, resistance: &Rational) -> Result<()> {
        if !is_positive(resistance) {
            return Err(Error::invalid(format!("resistance must be positive, got {resistance}")));
        }
        self.add_edge(u, v, resistance.recip())
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, &Rational)> {
        self.edges.iter().map(|(&(u, v), c)| (u, v, c))
    }

    pub fn conductance(&self, u: Vertex, v: Vertex) -> Option<&Rational> {
        self.edges.get(&key(u, v))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.keys().filter(|(a, b)| *a == v || *b == v).count()
    }

    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Coordinates of lattice vertex `(i, j)` (row `i` from the top) of an n-grid.
pub fn lattice_point(n: usize, i: usize, j: usize) -> Vertex {
    let y = (n - i) as i64;
    (y + 2 * j as i64, y)
}

pub fn to_weighted_graph(g: &Grid) -> WeightedGraph {
    let n = g.n();
    let mut wg = WeightedGraph::new();
    for s in 0..=n as i64 {
        for r in 0..=(n as i64 - s) {
            wg.add_vertex((2 * r + s, s));
        }
    }
    for (e, label) in g.labeled_edges() {
        let (r, d) = (e.tri.r, e.tri.d);
        let apex = lattice_point(n, r - 1, d - 1);
        let bl = lattice_point(n, r, d - 1);
        let br = lattice_point(n, r, d);
        let (u, v) = match e.side {
            Side::Left => (apex, bl),
            Side::Right => (apex, br),
            Side::Base => (bl, br),
        };
        wg.add_resistor(u, v, label).expect("grid labels are positive");
    }
    wg
}
