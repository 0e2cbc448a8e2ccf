//! Row reduction of labeled grids.
//!
//! One reduction replaces every upright triangle of an n-grid by its
//! equivalent star, keeps the three degree-1 legs at the grid corners as
//! tails, joins each remaining degree-2 boundary vertex's legs in series and
//! turns each interior degree-3 star back into a triangle. The star centres
//! of the parent become the vertices of the (n-1)-row child.
//!
//! [`reduce_once`] does this literally, vertex by vertex. The per-edge rules
//! ([`base_edge_value`], [`boundary_edge_value`], [`left_edge_value`],
//! [`right_edge_value`]) compute single child edges from the few parent
//! triangles they depend on and serve as an independent fast path.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grid::{ones_grid, triangle_count, EdgeRef, Grid, PreType, Provenance, Side, TriRef};
use crate::rational::Rational;
use crate::structure;
use crate::transforms::{delta_unchecked as delta, wye_unchecked as wye};

/// Star legs of one upright triangle, named by clock position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Legs {
    /// 12 o'clock, towards the apex.
    pub top: Rational,
    /// 8 o'clock, towards the bottom-left vertex.
    pub bottom_left: Rational,
    /// 4 o'clock, towards the bottom-right vertex.
    pub bottom_right: Rational,
}

impl Legs {
    pub fn of(pt: &PreType) -> Legs {
        Legs::from_sides(&pt.left, &pt.right, &pt.base)
    }

    fn of_triple([l, r, b]: &[Rational; 3]) -> Legs {
        Legs::from_sides(l, r, b)
    }

    // Each leg is a delta transform; the three share one perimeter.
    fn from_sides(l: &Rational, r: &Rational, b: &Rational) -> Legs {
        let perimeter = l + r + b;
        Legs {
            top: l * r / &perimeter,
            bottom_left: b * l / &perimeter,
            bottom_right: r * b / &perimeter,
        }
    }
}

/// Degree-1 tails split off at the three grid corners during one reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerTails {
    pub top: Rational,
    pub bottom_left: Rational,
    pub bottom_right: Rational,
}

impl CornerTails {
    pub fn get(&self, corner: Corner) -> &Rational {
        match corner {
            Corner::Top => &self.top,
            Corner::BottomLeft => &self.bottom_left,
            Corner::BottomRight => &self.bottom_right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    Top,
    BottomLeft,
    BottomRight,
}

/// Tails of a complete reduction, one entry per step, plus the one-row grid
/// reached just before the last triangle is collapsed.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub tails: Vec<CornerTails>,
    pub last_grid: Grid,
}

impl ReductionTrace {
    /// Resistance between two distinct corners of the original grid: the
    /// tails of both corners summed over every step.
    pub fn corner_to_corner(&self, a: Corner, b: Corner) -> Rational {
        assert!(a != b, "corners must differ");
        self.tails
            .iter()
            .fold(Rational::from_integer(0.into()), |acc, t| acc + t.get(a) + t.get(b))
    }
}

// Lattice vertex (i, j): row i = 0..=n from the top, position j = 0..=i.
// Triangle <r,d> has apex (r-1, d-1), bottom-left (r, d-1), bottom-right (r, d),
// and its star centre becomes child vertex (r-1, d-1).
type Vertex = (usize, usize);

/// The child edge joining two adjacent lattice vertices of a grid.
fn edge_between(p: Vertex, q: Vertex) -> EdgeRef {
    let (upper, lower) = if p.0 <= q.0 { (p, q) } else { (q, p) };
    if upper.0 == lower.0 {
        let j = upper.1.max(lower.1);
        debug_assert_eq!(upper.1.abs_diff(lower.1), 1);
        return EdgeRef::new(upper.0, j, Side::Base);
    }
    debug_assert_eq!(lower.0, upper.0 + 1);
    let tri = TriRef::new(lower.0, upper.1 + 1);
    if lower.1 == upper.1 {
        tri.edge(Side::Left)
    } else {
        debug_assert_eq!(lower.1, upper.1 + 1);
        tri.edge(Side::Right)
    }
}

/// Star legs incident to parent vertex `(i, j)` of an n-grid, as
/// `(child vertex, leg)`.
fn incident_legs(n: usize, legs: &[Legs], (i, j): Vertex) -> Vec<(Vertex, &Rational)> {
    let slot = |r: usize, d: usize| (r - 1) * r / 2 + (d - 1);
    let mut out = Vec::with_capacity(3);
    if i < n {
        out.push(((i, j), &legs[slot(i + 1, j + 1)].top));
    }
    if i >= 1 && j < i {
        out.push(((i - 1, j), &legs[slot(i, j + 1)].bottom_left));
    }
    if j >= 1 {
        out.push(((i - 1, j - 1), &legs[slot(i, j)].bottom_right));
    }
    out
}

enum Piece {
    Edge(EdgeRef, Rational),
    Tail(Corner, Rational),
}

fn resolve_vertex(n: usize, legs: &[Legs], v: Vertex) -> Vec<Piece> {
    let inc = incident_legs(n, legs, v);
    match inc.as_slice() {
        [(_, leg)] => {
            let corner = match v {
                (0, 0) => Corner::Top,
                (i, 0) if i == n => Corner::BottomLeft,
                _ => Corner::BottomRight,
            };
            vec![Piece::Tail(corner, (*leg).clone())]
        }
        [(a, x), (b, y)] => vec![Piece::Edge(edge_between(*a, *b), *x + *y)],
        [(a, x), (b, y), (c, z)] => vec![
            Piece::Edge(edge_between(*b, *c), wye(x, y, z)),
            Piece::Edge(edge_between(*a, *c), wye(y, x, z)),
            Piece::Edge(edge_between(*a, *b), wye(z, x, y)),
        ],
        _ => unreachable!("lattice vertices have degree 1, 2 or 3 after delta-wye"),
    }
}

pub fn reduce_once(g: &Grid) -> Result<(Grid, CornerTails)> {
    reduce_once_with(g, Exec::default())
}

/// One full reduction; the child keeps `g`'s provenance with one more step.
pub fn reduce_once_with(g: &Grid, exec: Exec) -> Result<(Grid, CornerTails)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::invalid(
            "reduce_once needs at least two rows; use reduce_final on a one-row grid",
        ));
    }
    let tris: Vec<TriRef> = g.triangles().collect();
    let legs: Vec<Legs> = exec.map(&tris, |&t| Legs::of_triple(g.triple(t)));

    let rows: Vec<Vec<Piece>> = exec.map_index(n + 1, |i| {
        (0..=i)
            .flat_map(|j| resolve_vertex(n, &legs, (i, j)))
            .collect()
    });

    let m = n - 1;
    let mut slots: Vec<[Option<Rational>; 3]> = vec![[None, None, None]; triangle_count(m)];
    let mut tails = [None, None, None];
    for piece in rows.into_iter().flatten() {
        match piece {
            Piece::Edge(e, v) => {
                let slot = &mut slots[(e.tri.r - 1) * e.tri.r / 2 + (e.tri.d - 1)][e.side as usize - 1];
                assert!(slot.replace(v).is_none(), "child edge {e} produced twice");
            }
            Piece::Tail(c, v) => {
                let k = c as usize;
                assert!(tails[k].replace(v).is_none(), "corner {c:?} produced twice");
            }
        }
    }
    let labels = slots
        .into_iter()
        .map(|[l, r, b]| [l.unwrap(), r.unwrap(), b.unwrap()])
        .collect();
    let [top, bottom_left, bottom_right] = tails.map(Option::unwrap);
    let prov = g.provenance();
    let child = Grid::from_labels(
        m,
        labels,
        Provenance {
            original_n: prov.original_n,
            reductions: prov.reductions + 1,
        },
    );
    Ok((
        child,
        CornerTails {
            top,
            bottom_left,
            bottom_right,
        },
    ))
}

/// Collapses the last triangle of a one-row grid into its three legs.
pub fn reduce_final(g: &Grid) -> Result<CornerTails> {
    if g.n() != 1 {
        return Err(Error::invalid(format!(
            "reduce_final needs a one-row grid, got {} rows",
            g.n()
        )));
    }
    let legs = Legs::of_triple(g.triple(TriRef::new(1, 1)));
    Ok(CornerTails {
        top: legs.top,
        bottom_left: legs.bottom_left,
        bottom_right: legs.bottom_right,
    })
}

pub fn reduce_to(g: &Grid, k_prime: usize) -> Result<(Grid, Vec<CornerTails>)> {
    reduce_to_with(g, k_prime, Exec::default())
}

/// Applies `g.n() - k_prime` reductions, collecting tails in step order.
pub fn reduce_to_with(g: &Grid, k_prime: usize, exec: Exec) -> Result<(Grid, Vec<CornerTails>)> {
    if k_prime < 1 || k_prime > g.n() {
        return Err(Error::invalid(format!(
            "target row count {k_prime} must lie in 1..={}",
            g.n()
        )));
    }
    let mut cur = g.clone();
    let mut tails = Vec::with_capacity(g.n() - k_prime);
    while cur.n() > k_prime {
        let (child, t) = reduce_once_with(&cur, exec)?;
        tails.push(t);
        cur = child;
    }
    Ok((cur, tails))
}

/// Reduces `g` all the way: `n - 1` row reductions and the final collapse.
pub fn reduce_all(g: &Grid, exec: Exec) -> Result<ReductionTrace> {
    let (last_grid, mut tails) = reduce_to_with(g, 1, exec)?;
    tails.push(reduce_final(&last_grid)?);
    Ok(ReductionTrace { tails, last_grid })
}

/// Resistance between two degree-2 corners of `T(n)`, as twice the sum of
/// the top tails over all `n` steps.
pub fn corner_resistance(n: usize) -> Result<Rational> {
    corner_resistance_with(n, Exec::default())
}

pub fn corner_resistance_with(n: usize, exec: Exec) -> Result<Rational> {
    let trace = reduce_all(&ones_grid(n)?, exec)?;
    Ok(top_tail_sum(&trace.tails) * Rational::from_integer(2.into()))
}

pub(crate) fn top_tail_sum(tails: &[CornerTails]) -> Rational {
    tails
        .iter()
        .fold(Rational::from_integer(0.into()), |acc, t| acc + &t.top)
}

// ---------------------------------------------------------------------------
// Per-edge rules. Triangle letters follow the usual figure convention: each
// source triangle contributes its (left, right, base) as (a, b, c), (e, f, g)
// and (h, i, j) in reading order.

/// Base edge of child `<r,d>` from `<r+1,d>`, `<r+1,d+1>`, `<r+2,d+1>`.
pub fn base_rule(upper_left: &PreType, upper_right: &PreType, lower: &PreType) -> Rational {
    let (a, b, c) = (&upper_left.left, &upper_left.right, &upper_left.base);
    let (e, f, g) = (&upper_right.left, &upper_right.right, &upper_right.base);
    let (h, i, j) = (&lower.left, &lower.right, &lower.base);
    let y12 = delta(h, i, j);
    let y4 = delta(b, c, a);
    let y8 = delta(g, e, f);
    wye(&y12, &y4, &y8)
}

/// Left boundary edge of child `<r,1>` from `<r,1>` and `<r+1,1>`.
pub fn boundary_rule(upper: &PreType, lower: &PreType) -> Rational {
    let (a, b, c) = (&upper.left, &upper.right, &upper.base);
    let (e, f, g) = (&lower.left, &lower.right, &lower.base);
    delta(c, a, b) + delta(e, f, g)
}

/// Left edge of child `<r,d>`, `d >= 2`, from `<r,d-1>`, `<r,d>`, `<r+1,d>`.
pub fn left_rule(upper_left: &PreType, upper_right: &PreType, lower: &PreType) -> Rational {
    let (a, b, c) = (&upper_left.left, &upper_left.right, &upper_left.base);
    let (e, f, g) = (&upper_right.left, &upper_right.right, &upper_right.base);
    let (h, i, j) = (&lower.left, &lower.right, &lower.base);
    wye(&delta(b, c, a), &delta(g, e, f), &delta(h, i, j))
}

/// Right edge of child `<r,d>`, `d <= r-1`, from `<r,d>`, `<r,d+1>`, `<r+1,d+1>`.
pub fn right_rule(upper_left: &PreType, upper_right: &PreType, lower: &PreType) -> Rational {
    let (a, b, c) = (&upper_left.left, &upper_left.right, &upper_left.base);
    let (e, f, g) = (&upper_right.left, &upper_right.right, &upper_right.base);
    let (h, i, j) = (&lower.left, &lower.right, &lower.base);
    wye(&delta(g, e, f), &delta(h, i, j), &delta(b, c, a))
}

// The same four rules on precomputed star legs, for loops that reuse each
// triangle's legs several times.

pub fn base_rule_legs(upper_left: &Legs, upper_right: &Legs, lower: &Legs) -> Rational {
    wye(&lower.top, &upper_left.bottom_right, &upper_right.bottom_left)
}

pub fn boundary_rule_legs(upper: &Legs, lower: &Legs) -> Rational {
    &upper.bottom_left + &lower.top
}

pub fn left_rule_legs(upper_left: &Legs, upper_right: &Legs, lower: &Legs) -> Rational {
    wye(&upper_left.bottom_right, &upper_right.bottom_left, &lower.top)
}

pub fn right_rule_legs(upper_left: &Legs, upper_right: &Legs, lower: &Legs) -> Rational {
    wye(&upper_right.bottom_left, &lower.top, &upper_left.bottom_right)
}

/// `right_rule_legs` and `base_rule_legs` on the same three parents at once.
/// The legs meet at one lattice vertex, so both labels share the numerator
/// of a single wye-delta step.
pub fn right_and_base_legs(upper_left: &Legs, upper_right: &Legs, lower: &Legs) -> (Rational, Rational) {
    let (x, y, z) = (&upper_left.bottom_right, &upper_right.bottom_left, &lower.top);
    let pairs = x * y + y * z + z * x;
    (&pairs / y, pairs / z)
}

fn pt(g: &Grid, r: usize, d: usize) -> PreType {
    g.pretype(TriRef::new(r, d)).expect("caller checked the range")
}

fn out_of_range(g: &Grid, r: usize, d: usize, side: Side, reason: &'static str) -> Error {
    Error::EdgeOutOfRange {
        edge: EdgeRef::new(r, d, side),
        n: g.n(),
        reason,
    }
}

/// Base edge `<r,d,3>` of the child of `g`; needs `1 <= d <= r <= n-2`.
pub fn base_edge_value(g: &Grid, r: usize, d: usize) -> Result<Rational> {
    let n = g.n();
    if !(1 <= d && d <= r && r + 2 <= n) {
        return Err(out_of_range(g, r, d, Side::Base, "base rule needs 1 <= d <= r <= n-2"));
    }
    Ok(base_rule(&pt(g, r + 1, d), &pt(g, r + 1, d + 1), &pt(g, r + 2, d + 1)))
}

/// Left boundary edge `<r,1,1>` of the child of `g`; needs `1 <= r <= n-1`.
pub fn boundary_edge_value(g: &Grid, r: usize) -> Result<Rational> {
    if !(1 <= r && r < g.n()) {
        return Err(out_of_range(g, r, 1, Side::Left, "boundary rule needs 1 <= r <= n-1"));
    }
    Ok(boundary_rule(&pt(g, r, 1), &pt(g, r + 1, 1)))
}

/// Left edge `<r,d,1>` of the child of `g`; needs `2 <= d <= r <= n-1`.
pub fn left_edge_value(g: &Grid, r: usize, d: usize) -> Result<Rational> {
    if !(2 <= d && d <= r && r < g.n()) {
        return Err(out_of_range(g, r, d, Side::Left, "left rule needs 2 <= d <= r <= n-1"));
    }
    Ok(left_rule(&pt(g, r, d - 1), &pt(g, r, d), &pt(g, r + 1, d)))
}

/// Right edge `<r,d,2>` of the child of `g`; needs `1 <= d <= r-1`, `r <= n-1`.
pub fn right_edge_value(g: &Grid, r: usize, d: usize) -> Result<Rational> {
    if !(1 <= d && d < r && r < g.n()) {
        return Err(out_of_range(g, r, d, Side::Right, "right rule needs 1 <= d <= r-1 <= n-2"));
    }
    Ok(right_rule(&pt(g, r, d), &pt(g, r, d + 1), &pt(g, r + 1, d + 1)))
}

/// Child edge `e` of `g` by whichever per-edge rule covers it, if any.
pub fn rule_value(g: &Grid, e: EdgeRef) -> Option<Rational> {
    let TriRef { r, d } = e.tri;
    match e.side {
        Side::Left if d == 1 => boundary_edge_value(g, r).ok(),
        Side::Left => left_edge_value(g, r, d).ok(),
        Side::Right => right_edge_value(g, r, d).ok(),
        Side::Base => base_edge_value(g, r, d).ok(),
    }
}

/// Reduction of a symmetric grid through the per-edge rules alone: each
/// symmetry orbit of child edges is evaluated at a member some rule covers
/// and copied to the rest of the orbit.
pub fn reduce_once_symmetric(g: &Grid) -> Result<Grid> {
    let n = g.n();
    if n < 2 {
        return Err(Error::invalid("reduce_once_symmetric needs at least two rows"));
    }
    structure::check_symmetric(g)
        .map_err(|v| Error::ConstraintViolation(format!("input grid is not symmetric: {v}")))?;
    let m = n - 1;
    let mut labels: Vec<[Option<Rational>; 3]> = vec![[None, None, None]; triangle_count(m)];
    for orbit in structure::edge_orbits(m) {
        let value = orbit
            .iter()
            .find_map(|&e| rule_value(g, e))
            .ok_or_else(|| Error::ConstraintViolation(format!("no rule covers the orbit of {}", orbit[0])))?;
        for e in orbit {
            labels[(e.tri.r - 1) * e.tri.r / 2 + e.tri.d - 1][e.side as usize - 1] = Some(value.clone());
        }
    }
    let labels = labels
        .into_iter()
        .map(|[l, r, b]| [l.unwrap(), r.unwrap(), b.unwrap()])
        .collect();
    let prov = g.provenance();
    Ok(Grid::from_labels(
        m,
        labels,
        Provenance {
            original_n: prov.original_n,
            reductions: prov.reductions + 1,
        },
    ))
}
