//! Symmetries, the upper left half, s-subgrids and uniform centres.

// Violations carry both offending labels by value.
#![allow(clippy::result_large_err)]

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::grid::{edges, EdgeRef, Grid, PreType, Side, TriRef};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Vertical,
    Rotational,
    Slide,
}

/// First label identity a grid fails: `lhs` and `rhs` should carry equal labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryViolation {
    pub symmetry: Symmetry,
    pub lhs: EdgeRef,
    pub rhs: EdgeRef,
    pub lhs_value: Rational,
    pub rhs_value: Rational,
}

impl fmt::Display for SymmetryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} symmetry: {} = {} but {} = {}",
            self.symmetry, self.lhs, self.lhs_value, self.rhs, self.rhs_value
        )
    }
}

fn next_side(s: Side) -> Side {
    match s {
        Side::Left => Side::Right,
        Side::Right => Side::Base,
        Side::Base => Side::Left,
    }
}

/// Mirror image of `e` across the vertical axis.
pub fn vertical_image(e: EdgeRef) -> EdgeRef {
    let TriRef { r, d } = e.tri;
    let side = match e.side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
        Side::Base => Side::Base,
    };
    EdgeRef::new(r, r + 1 - d, side)
}

/// Image of `e` under the rotation taking left edges to right edges,
/// right to base and base to left.
pub fn rotational_image(n: usize, e: EdgeRef) -> EdgeRef {
    let TriRef { r, d } = e.tri;
    EdgeRef::new(n + d - r, n + 1 - r, next_side(e.side))
}

/// Image of `e` under the slide reflection `<r,d> -> <n+d-r,d>`. Left edges
/// stay left edges (`<r,d,1> = <n+d-r,d,1>`); right and base edges swap.
pub fn slide_image(n: usize, e: EdgeRef) -> EdgeRef {
    let TriRef { r, d } = e.tri;
    let side = match e.side {
        Side::Left => Side::Left,
        Side::Right => Side::Base,
        Side::Base => Side::Right,
    };
    EdgeRef::new(n + d - r, d, side)
}

fn check_pairs<I>(g: &Grid, symmetry: Symmetry, pairs: I) -> std::result::Result<(), SymmetryViolation>
where
    I: IntoIterator<Item = (EdgeRef, EdgeRef)>,
{
    for (lhs, rhs) in pairs {
        let (a, b) = (g.at(lhs), g.at(rhs));
        if a != b {
            return Err(SymmetryViolation {
                symmetry,
                lhs,
                rhs,
                lhs_value: a.clone(),
                rhs_value: b.clone(),
            });
        }
    }
    Ok(())
}

pub fn check_vertical(g: &Grid) -> std::result::Result<(), SymmetryViolation> {
    check_pairs(g, Symmetry::Vertical, g.edges().map(|e| (e, vertical_image(e))))
}

pub fn check_rotational(g: &Grid) -> std::result::Result<(), SymmetryViolation> {
    let n = g.n();
    check_pairs(g, Symmetry::Rotational, g.edges().map(|e| (e, rotational_image(n, e))))
}

pub fn check_slide(g: &Grid) -> std::result::Result<(), SymmetryViolation> {
    let n = g.n();
    check_pairs(g, Symmetry::Slide, g.edges().map(|e| (e, slide_image(n, e))))
}

/// Vertical, rotational and slide symmetry together.
pub fn check_symmetric(g: &Grid) -> std::result::Result<(), SymmetryViolation> {
    check_vertical(g)?;
    check_rotational(g)?;
    check_slide(g)
}

pub fn is_vertically_symmetric(g: &Grid) -> bool {
    check_vertical(g).is_ok()
}

pub fn is_rotationally_symmetric(g: &Grid) -> bool {
    check_rotational(g).is_ok()
}

pub fn is_slide_symmetric(g: &Grid) -> bool {
    check_slide(g).is_ok()
}

pub fn is_symmetric(g: &Grid) -> bool {
    check_symmetric(g).is_ok()
}

/// Orbits of the edges of an n-grid under the full symmetry group, each
/// sorted, listed by smallest member.
pub fn edge_orbits(n: usize) -> Vec<Vec<EdgeRef>> {
    orbits_under(n, &[Symmetry::Vertical, Symmetry::Rotational])
}

/// Orbits under the group generated by the given symmetries.
pub fn orbits_under(n: usize, generators: &[Symmetry]) -> Vec<Vec<EdgeRef>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in edges(n) {
        if seen.contains(&start) {
            continue;
        }
        let mut orbit = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(e) = stack.pop() {
            for sym in generators {
                let image = match sym {
                    Symmetry::Vertical => vertical_image(e),
                    Symmetry::Rotational => rotational_image(n, e),
                    Symmetry::Slide => slide_image(n, e),
                };
                if orbit.insert(image) {
                    stack.push(image);
                }
            }
        }
        seen.extend(orbit.iter().copied());
        out.push(orbit.into_iter().collect());
    }
    out
}

/// Triangles of the upper left half:
/// `1 <= d <= (n+2)/3`, `2d-1 <= r <= (n+d)/2` (integer division).
pub fn upper_left_half(n: usize) -> Vec<TriRef> {
    let mut out = Vec::new();
    for d in 1..=n.div_ceil(3) {
        for r in (2 * d - 1)..=((n + d) / 2) {
            if r <= n {
                out.push(TriRef::new(r, d));
            }
        }
    }
    out
}

pub fn extract_upper_left_half(g: &Grid) -> BTreeMap<TriRef, PreType> {
    upper_left_half(g.n())
        .into_iter()
        .map(|t| (t, g.pretype(t).expect("upper left half lies inside the grid")))
        .collect()
}

/// Rebuilds the unique symmetric grid that agrees with `given` on the upper
/// left half. Fails when a triangle of the half is missing, when `given`
/// names a triangle outside it, or when two given labels in the same
/// symmetry orbit disagree.
pub fn complete_from_upper_left_half(n: usize, given: &BTreeMap<TriRef, PreType>) -> Result<Grid> {
    if n == 0 {
        return Err(Error::invalid("a grid needs at least one row"));
    }
    let half: BTreeSet<TriRef> = upper_left_half(n).into_iter().collect();
    if let Some(t) = half.iter().find(|t| !given.contains_key(t)) {
        return Err(Error::invalid(format!("missing label for upper-left-half triangle {t}")));
    }
    if let Some(t) = given.keys().find(|t| !half.contains(t)) {
        return Err(Error::invalid(format!("{t} is not in the upper left half of a {n}-grid")));
    }
    let mut values: BTreeMap<EdgeRef, Rational> = BTreeMap::new();
    for orbit in edge_orbits(n) {
        let mut pinned: Option<(EdgeRef, &Rational)> = None;
        for &e in &orbit {
            if let Some(pt) = given.get(&e.tri) {
                let v = pt.get(e.side);
                match pinned {
                    None => pinned = Some((e, v)),
                    Some((first, w)) if w != v => {
                        return Err(Error::ConstraintViolation(format!(
                            "{first} = {w} and {e} = {v} lie in one symmetry orbit"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        let (_, v) = pinned.ok_or_else(|| {
            Error::ConstraintViolation(format!("orbit of {} has no edge in the upper left half", orbit[0]))
        })?;
        for e in orbit {
            values.insert(e, v.clone());
        }
    }
    Grid::from_fn(n, |t| {
        PreType::new(
            values[&t.edge(Side::Left)].clone(),
            values[&t.edge(Side::Right)].clone(),
            values[&t.edge(Side::Base)].clone(),
        )
    })
}

/// Index sets of the s-subgrid of an n-row grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgridSpec {
    pub n: usize,
    pub s: usize,
    pub corners: [TriRef; 3],
    pub triangles: BTreeSet<TriRef>,
    /// Triangles of the s-rim: members with at least one edge on the boundary.
    pub boundary_triangles: BTreeSet<TriRef>,
    pub boundary_edges: BTreeSet<EdgeRef>,
    pub interior_edges: BTreeSet<EdgeRef>,
}

impl SubgridSpec {
    pub fn contains(&self, t: TriRef) -> bool {
        self.triangles.contains(&t)
    }
}

/// The s-subgrid of an n-row grid, with corners `<2s-1,s>`, `<n+1-s,s>`,
/// `<n+1-s,n+2-2s>`. A single triangle is a valid (degenerate) subgrid.
pub fn subgrid(n: usize, s: usize) -> Result<SubgridSpec> {
    if s == 0 {
        return Err(Error::invalid("subgrid index s starts at 1"));
    }
    // corners exist iff 2s-1 <= n+1-s
    if 3 * s > n + 2 {
        return Err(Error::invalid(format!("a {n}-row grid has no {s}-subgrid")));
    }
    let bottom = n + 1 - s;
    let corners = [
        TriRef::new(2 * s - 1, s),
        TriRef::new(bottom, s),
        TriRef::new(bottom, n + 2 - 2 * s),
    ];
    let triangles: BTreeSet<TriRef> = (2 * s - 1..=bottom)
        .flat_map(|r| (s..=r + 1 - s).map(move |d| TriRef::new(r, d)))
        .collect();
    let mut boundary_edges = BTreeSet::new();
    for r in 2 * s - 1..=bottom {
        boundary_edges.insert(EdgeRef::new(r, s, Side::Left));
        boundary_edges.insert(EdgeRef::new(r, r + 1 - s, Side::Right));
    }
    for d in s..=n + 2 - 2 * s {
        boundary_edges.insert(EdgeRef::new(bottom, d, Side::Base));
    }
    let interior_edges = triangles
        .iter()
        .flat_map(|t| Side::ALL.map(|side| t.edge(side)))
        .filter(|e| !boundary_edges.contains(e))
        .collect();
    let boundary_triangles = boundary_edges.iter().map(|e| e.tri).collect();
    Ok(SubgridSpec {
        n,
        s,
        corners,
        triangles,
        boundary_triangles,
        boundary_edges,
        interior_edges,
    })
}

/// Rows `s+d ..= n-2s` of diagonal `d` in the uniform centre of `T(n, n-s)`,
/// where `n` is the row count of the original grid.
pub fn uniform_center(n: usize, s: usize, d: usize) -> Result<RangeInclusive<usize>> {
    if s == 0 || n < 4 * s {
        return Err(Error::invalid(format!("uniform centre needs s >= 1 and n >= 4s, got n = {n}, s = {s}")));
    }
    if d == 0 || d > s {
        return Err(Error::invalid(format!("diagonal {d} is outside 1..={s}")));
    }
    Ok(s + d..=n - 2 * s)
}

/// Triangles of diagonal `d` in the uniform centre together with their
/// vertical mirror images.
pub fn uniform_center_triangles(n: usize, s: usize, d: usize) -> Result<Vec<TriRef>> {
    let rows = uniform_center(n, s, d)?;
    let mut out: BTreeSet<TriRef> = BTreeSet::new();
    for r in rows {
        out.insert(TriRef::new(r, d));
        out.insert(TriRef::new(r, r + 1 - d));
    }
    Ok(out.into_iter().collect())
}
