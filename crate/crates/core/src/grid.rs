//! The labeled triangular grid.
//!
//! An n-grid has rows `r = 1..=n` (top to bottom) and, in row `r`, upright
//! triangles on diagonals `d = 1..=r` (left to right). Every edge of the grid
//! belongs to exactly one upright triangle, so storing a `(left, right, base)`
//! triple per upright triangle labels each physical edge exactly once.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{is_positive, one, Rational};

/// Upright triangle `<r, d>`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriRef {
    pub r: usize,
    pub d: usize,
}

impl TriRef {
    pub const fn new(r: usize, d: usize) -> Self {
        TriRef { r, d }
    }

    pub fn is_in(self, n: usize) -> bool {
        1 <= self.d && self.d <= self.r && self.r <= n
    }

    pub fn edge(self, side: Side) -> EdgeRef {
        EdgeRef { tri: self, side }
    }
}

impl fmt::Display for TriRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.r, self.d)
    }
}

/// Edge selector of an upright triangle: 1 = left, 2 = right, 3 = base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left = 1,
    Right = 2,
    Base = 3,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Left, Side::Right, Side::Base];

    pub fn from_index(e: u8) -> Result<Side> {
        match e {
            1 => Ok(Side::Left),
            2 => Ok(Side::Right),
            3 => Ok(Side::Base),
            _ => Err(Error::invalid(format!("edge selector {e} is not in {{1,2,3}}"))),
        }
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    fn slot(self) -> usize {
        self as usize - 1
    }
}

/// Edge `<r, d, e>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub tri: TriRef,
    pub side: Side,
}

impl EdgeRef {
    pub const fn new(r: usize, d: usize, side: Side) -> Self {
        EdgeRef {
            tri: TriRef { r, d },
            side,
        }
    }

    /// `<r, d, e>` with a numeric selector.
    pub fn parse(r: usize, d: usize, e: u8) -> Result<Self> {
        Ok(EdgeRef::new(r, d, Side::from_index(e)?))
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{},{}>", self.tri.r, self.tri.d, self.side.index())
    }
}

/// Ordered `(left, right, base)` triple of one triangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreType {
    pub left: Rational,
    pub right: Rational,
    pub base: Rational,
}

impl PreType {
    pub fn new(left: Rational, right: Rational, base: Rational) -> Self {
        PreType { left, right, base }
    }

    pub fn uniform(v: Rational) -> Self {
        PreType::new(v.clone(), v.clone(), v)
    }

    pub fn ones() -> Self {
        PreType::uniform(one())
    }

    pub fn get(&self, side: Side) -> &Rational {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
            Side::Base => &self.base,
        }
    }

    /// The six relabelings reachable by the vertical mirror (left and right
    /// swap) and the two rotations (left -> right -> base -> left).
    pub fn orbit(&self) -> [PreType; 6] {
        let (l, r, b) = (&self.left, &self.right, &self.base);
        let p = |x: &Rational, y: &Rational, z: &Rational| PreType::new(x.clone(), y.clone(), z.clone());
        [
            p(l, r, b),
            p(b, l, r),
            p(r, b, l),
            p(r, l, b),
            p(b, r, l),
            p(l, b, r),
        ]
    }

    pub fn same_type(&self, other: &PreType) -> bool {
        self.orbit().iter().any(|q| q == other)
    }

    fn into_array(self) -> [Rational; 3] {
        [self.left, self.right, self.base]
    }
}

impl fmt::Display for PreType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.left, self.right, self.base)
    }
}

pub fn same_type(p: &PreType, q: &PreType) -> bool {
    p.same_type(q)
}

/// Where a grid came from: `original_n = Some(k)` and `reductions = k - k'`
/// identify `T(k, k')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Provenance {
    pub original_n: Option<usize>,
    pub reductions: usize,
}

/// Number of upright triangles in an n-grid.
pub const fn triangle_count(n: usize) -> usize {
    n * (n + 1) / 2
}

fn slot_of(tri: TriRef) -> usize {
    (tri.r - 1) * tri.r / 2 + (tri.d - 1)
}

/// A labeled n-grid. Equality compares row count and labels only.
#[derive(Debug, Clone)]
pub struct Grid {
    n: usize,
    labels: Vec<[Rational; 3]>,
    provenance: Provenance,
}

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.labels == other.labels
    }
}

impl Eq for Grid {}

impl Grid {
    /// Builds a grid from a per-triangle label function, checking positivity.
    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Grid>
    where
        F: FnMut(TriRef) -> PreType,
    {
        if n == 0 {
            return Err(Error::invalid("a grid needs at least one row"));
        }
        let mut labels = Vec::with_capacity(triangle_count(n));
        for tri in triangles(n) {
            let pt = f(tri);
            for side in Side::ALL {
                if !is_positive(pt.get(side)) {
                    return Err(Error::invalid(format!(
                        "label of {} must be positive, got {}",
                        tri.edge(side),
                        pt.get(side)
                    )));
                }
            }
            labels.push(pt.into_array());
        }
        Ok(Grid {
            n,
            labels,
            provenance: Provenance::default(),
        })
    }

    /// Crate-internal constructor for labels already known to be positive.
    pub(crate) fn from_labels(n: usize, labels: Vec<[Rational; 3]>, provenance: Provenance) -> Grid {
        debug_assert_eq!(labels.len(), triangle_count(n));
        Grid {
            n,
            labels,
            provenance,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Grid {
        self.provenance = provenance;
        self
    }

    pub fn contains(&self, tri: TriRef) -> bool {
        tri.is_in(self.n)
    }

    fn check(&self, tri: TriRef) -> Result<()> {
        if self.contains(tri) {
            Ok(())
        } else {
            Err(Error::TriangleOutOfRange { tri, n: self.n })
        }
    }

    pub fn get(&self, edge: EdgeRef) -> Result<&Rational> {
        self.check(edge.tri)?;
        Ok(self.at(edge))
    }

    /// Unchecked lookup; panics when `edge` lies outside the grid.
    pub fn at(&self, edge: EdgeRef) -> &Rational {
        &self.labels[slot_of(edge.tri)][edge.side.slot()]
    }

    pub(crate) fn triple(&self, tri: TriRef) -> &[Rational; 3] {
        &self.labels[slot_of(tri)]
    }

    /// Returns a copy of this grid with `edge` relabeled to `v`.
    pub fn set(&self, edge: EdgeRef, v: Rational) -> Result<Grid> {
        self.check(edge.tri)?;
        if !is_positive(&v) {
            return Err(Error::invalid(format!(
                "label of {edge} must be positive, got {v}"
            )));
        }
        let mut out = self.clone();
        out.labels[slot_of(edge.tri)][edge.side.slot()] = v;
        Ok(out)
    }

    pub fn pretype(&self, tri: TriRef) -> Result<PreType> {
        self.check(tri)?;
        let [l, r, b] = self.triple(tri).clone();
        Ok(PreType::new(l, r, b))
    }

    pub fn triangles(&self) -> impl Iterator<Item = TriRef> {
        triangles(self.n)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> {
        edges(self.n)
    }

    /// `(edge, label)` pairs in row-major order.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (EdgeRef, &Rational)> + '_ {
        self.edges().map(move |e| (e, self.at(e)))
    }
}

/// Upright triangles of an n-grid in row-major order.
pub fn triangles(n: usize) -> impl Iterator<Item = TriRef> {
    (1..=n).flat_map(|r| (1..=r).map(move |d| TriRef::new(r, d)))
}

/// Edges of an n-grid, row-major, then left/right/base.
pub fn edges(n: usize) -> impl Iterator<Item = EdgeRef> {
    triangles(n).flat_map(|t| Side::ALL.into_iter().map(move |s| t.edge(s)))
}

/// `T(n)` when `label = 1`; every edge set to `label`.
pub fn make_uniform_grid(n: usize, label: &Rational) -> Result<Grid> {
    if !is_positive(label) {
        return Err(Error::invalid(format!("label must be positive, got {label}")));
    }
    let g = Grid::from_fn(n, |_| PreType::uniform(label.clone()))?;
    let original_n = (*label == one()).then_some(n);
    Ok(g.with_provenance(Provenance {
        original_n,
        reductions: 0,
    }))
}

/// `T(n)`: the all-ones n-grid.
pub fn ones_grid(n: usize) -> Result<Grid> {
    make_uniform_grid(n, &one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn uniform_three_grid() {
        let g = ones_grid(3).unwrap();
        assert_eq!(g.triangles().count(), 6);
        for t in g.triangles() {
            assert_eq!(g.pretype(t).unwrap(), PreType::ones());
        }
        assert_eq!(g.provenance().original_n, Some(3));
        assert_eq!(*g.get(EdgeRef::new(2, 1, Side::Base)).unwrap(), one());
    }

    #[test]
    fn uniform_small_and_scaled() {
        let g = ones_grid(1).unwrap();
        assert_eq!(g.pretype(TriRef::new(1, 1)).unwrap(), PreType::ones());
        let g = make_uniform_grid(2, &rat(5, 7)).unwrap();
        assert_eq!(g.triangles().count(), 3);
        assert!(g.labeled_edges().all(|(_, v)| *v == rat(5, 7)));
        assert_eq!(g.provenance().original_n, None);
    }

    #[test]
    fn uniform_rejects_bad_arguments() {
        assert!(matches!(ones_grid(0), Err(Error::InvalidArgument(_))));
        assert!(make_uniform_grid(2, &int(0)).is_err());
        assert!(make_uniform_grid(2, &rat(-1, 2)).is_err());
    }

    #[test]
    fn out_of_range_lookups() {
        let g = ones_grid(3).unwrap();
        for (r, d) in [(0, 1), (1, 0), (2, 3), (4, 1)] {
            assert!(matches!(
                g.get(EdgeRef::new(r, d, Side::Left)),
                Err(Error::TriangleOutOfRange { .. })
            ));
            assert!(g.pretype(TriRef::new(r, d)).is_err());
        }
        assert!(EdgeRef::parse(1, 1, 4).is_err());
        assert!(EdgeRef::parse(1, 1, 0).is_err());
    }

    #[test]
    fn set_is_local_and_non_destructive() {
        let g = ones_grid(2).unwrap();
        let e = EdgeRef::new(1, 1, Side::Left);
        let h = g.set(e, rat(2, 3)).unwrap();
        assert_eq!(*h.at(e), rat(2, 3));
        assert_eq!(*g.at(e), one());
        let changed: Vec<_> = h.labeled_edges().filter(|(_, v)| **v != one()).collect();
        assert_eq!(changed.len(), 1);
        assert_eq!(h.edges().count(), 9);
        assert!(g.set(e, int(0)).is_err());
        assert!(g.set(EdgeRef::new(3, 1, Side::Left), one()).is_err());
    }

    #[test]
    fn same_type_examples() {
        let b = PreType::new(rat(2, 3), one(), one());
        assert!(same_type(&b, &PreType::new(one(), rat(2, 3), one())));
        assert!(same_type(&PreType::ones(), &PreType::ones()));
        assert!(!same_type(&b, &PreType::new(one(), one(), int(2))));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (1i64..6, 1i64..4).prop_map(|(p, q)| rat(p, q))
    }

    fn pretype() -> impl Strategy<Value = PreType> {
        (small_rational(), small_rational(), small_rational()).prop_map(|(l, r, b)| PreType::new(l, r, b))
    }

    // Independent oracle: the orbit generated by a swap and a 3-cycle is the
    // full symmetric group on the triple, so same type means same multiset.
    fn sorted(p: &PreType) -> Vec<Rational> {
        let mut v = vec![p.left.clone(), p.right.clone(), p.base.clone()];
        v.sort();
        v
    }

    proptest! {
        #[test]
        fn same_type_matches_multiset_oracle(p in pretype(), q in pretype()) {
            prop_assert_eq!(same_type(&p, &q), sorted(&p) == sorted(&q));
        }

        #[test]
        fn same_type_is_an_equivalence(p in pretype(), q in pretype(), r in pretype()) {
            prop_assert!(same_type(&p, &p));
            prop_assert_eq!(same_type(&p, &q), same_type(&q, &p));
            if same_type(&p, &q) && same_type(&q, &r) {
                prop_assert!(same_type(&p, &r));
            }
        }

        #[test]
        fn store_load_laws(n in 1usize..6, seed in any::<u64>(), v in small_rational(), w in small_rational()) {
            let g = ones_grid(n).unwrap();
            let count = triangle_count(n) * 3;
            let e = edges(n).nth((seed as usize) % count).unwrap();
            let h = g.set(e, v.clone()).unwrap();
            prop_assert_eq!(h.get(e).unwrap(), &v);
            let h2 = h.set(e, w.clone()).unwrap();
            prop_assert_eq!(h2.get(e).unwrap(), &w);
            prop_assert_eq!(h.set(e, h.get(e).unwrap().clone()).unwrap(), h.clone());
        }
    }
}
