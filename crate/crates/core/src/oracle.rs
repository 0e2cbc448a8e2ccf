//! Effective resistance from the graph Laplacian.
//!
//! Grounding `v` and solving `L' x = e_u` gives `R(u, v) = x_u`. The exact
//! solver scales the grounded Laplacian to integers and runs fraction-free
//! (Bareiss) elimination with `u` ordered last, so the answer is the ratio
//! of the final augmented entry to the final pivot.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{to_weighted_graph, Vertex, WeightedGraph};
use crate::grid::ones_grid;
use crate::rational::{to_f64, Rational};

/// Largest `n` for which [`exact_corner_resistance`] runs without an override.
pub const DEFAULT_EXACT_MAX_N: usize = 8;

/// Degree-2 corners of an n-grid: `(top, bottom_left, bottom_right)`.
pub fn corner_vertices(n: usize) -> (Vertex, Vertex, Vertex) {
    let n = n as i64;
    ((n, n), (0, 0), (2 * n, 0))
}

fn is_connected(wg: &WeightedGraph) -> bool {
    let Some(&start) = wg.vertices().iter().next() else {
        return true;
    };
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for (a, b, _) in wg.edges() {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in adj.get(&x).into_iter().flatten() {
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen.len() == wg.vertex_count()
}

fn check_query(wg: &WeightedGraph, u: Vertex, v: Vertex) -> Result<()> {
    if u == v {
        return Err(Error::invalid("effective resistance needs two distinct vertices"));
    }
    for x in [u, v] {
        if !wg.vertices().contains(&x) {
            return Err(Error::invalid(format!("vertex {x:?} is not in the graph")));
        }
    }
    if !is_connected(wg) {
        return Err(Error::NoPath);
    }
    Ok(())
}

/// Row/column order of the grounded system: every vertex except `v`, with `u` last.
fn unknowns(wg: &WeightedGraph, u: Vertex, v: Vertex) -> BTreeMap<Vertex, usize> {
    let mut order: Vec<Vertex> = wg.vertices().iter().copied().filter(|&x| x != u && x != v).collect();
    order.push(u);
    order.into_iter().enumerate().map(|(i, x)| (x, i)).collect()
}

/// Exact effective resistance between `u` and `v`.
pub fn effective_resistance(wg: &WeightedGraph, u: Vertex, v: Vertex) -> Result<Rational> {
    check_query(wg, u, v)?;
    let index = unknowns(wg, u, v);
    let k = index.len();

    let scale = wg
        .edges()
        .fold(BigInt::one(), |acc, (_, _, c)| acc.lcm(c.denom()));
    let mut m = vec![vec![BigInt::zero(); k + 1]; k];
    for (a, b, c) in wg.edges() {
        let w = (c * Rational::from_integer(scale.clone())).to_integer();
        let (ia, ib) = (index.get(&a).copied(), index.get(&b).copied());
        if let Some(i) = ia {
            m[i][i] += &w;
        }
        if let Some(j) = ib {
            m[j][j] += &w;
        }
        if let (Some(i), Some(j)) = (ia, ib) {
            m[i][j] -= &w;
            m[j][i] -= &w;
        }
    }
    // (scale * L') x = scale * e_u
    m[k - 1][k] = scale;

    let mut prev = BigInt::one();
    for p in 0..k {
        if m[p][p].is_zero() {
            let swap = (p + 1..k).find(|&i| !m[i][p].is_zero()).ok_or(Error::NoPath)?;
            m.swap(p, swap);
        }
        let (head, tail) = m.split_at_mut(p + 1);
        let pivot_row = &head[p];
        for row in tail.iter_mut() {
            for j in p + 1..=k {
                let t = &pivot_row[p] * &row[j] - &row[p] * &pivot_row[j];
                row[j] = t / &prev;
            }
            row[p] = BigInt::zero();
        }
        prev = m[p][p].clone();
    }
    // Row swaps reorder equations only; column k-1 still belongs to `u`.
    Ok(Rational::new(m[k - 1][k].clone(), m[k - 1][k - 1].clone()))
}

/// Floating-point effective resistance, for sizes beyond the exact solver.
pub fn float_effective_resistance(wg: &WeightedGraph, u: Vertex, v: Vertex) -> Result<f64> {
    check_query(wg, u, v)?;
    let index = unknowns(wg, u, v);
    let k = index.len();
    let mut lap = DMatrix::<f64>::zeros(k, k);
    for (a, b, c) in wg.edges() {
        let w = to_f64(c);
        let (ia, ib) = (index.get(&a).copied(), index.get(&b).copied());
        if let Some(i) = ia {
            lap[(i, i)] += w;
        }
        if let Some(j) = ib {
            lap[(j, j)] += w;
        }
        if let (Some(i), Some(j)) = (ia, ib) {
            lap[(i, j)] -= w;
            lap[(j, i)] -= w;
        }
    }
    let mut rhs = DVector::<f64>::zeros(k);
    rhs[k - 1] = 1.0;
    let x = lap.lu().solve(&rhs).ok_or(Error::NoPath)?;
    Ok(x[k - 1])
}

/// Exact resistance between the top and bottom-left corners of `T(n)`.
/// Refuses `n` above `limit` (default [`DEFAULT_EXACT_MAX_N`]).
pub fn exact_corner_resistance(n: usize, limit: Option<usize>) -> Result<Rational> {
    let limit = limit.unwrap_or(DEFAULT_EXACT_MAX_N);
    if n > limit {
        return Err(Error::Budget(format!(
            "exact oracle capped at n = {limit}, asked for n = {n}"
        )));
    }
    let wg = to_weighted_graph(&ones_grid(n)?);
    let (top, bl, _) = corner_vertices(n);
    effective_resistance(&wg, top, bl)
}
