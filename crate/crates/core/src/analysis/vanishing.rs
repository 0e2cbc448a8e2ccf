use std::cmp::Ordering;
use std::fmt;

use super::{Backing, Budget, Table};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grid::{ones_grid, EdgeRef, Grid};
use crate::rational::{format_rational, one, Rational};
use crate::reduction::reduce_once_with;
use crate::structure::subgrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    LessThanOne,
    EqualOne,
    GreaterThanOne,
}

impl EdgeClass {
    pub fn of(v: &Rational) -> EdgeClass {
        match v.cmp(&one()) {
            Ordering::Less => EdgeClass::LessThanOne,
            Ordering::Equal => EdgeClass::EqualOne,
            Ordering::Greater => EdgeClass::GreaterThanOne,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeClass::LessThanOne => "< 1",
            EdgeClass::EqualOne => "= 1",
            EdgeClass::GreaterThanOne => "> 1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedEdge {
    pub edge: EdgeRef,
    pub value: Rational,
    pub observed: EdgeClass,
    pub predicted: EdgeClass,
}

impl ClassifiedEdge {
    pub fn agrees(&self) -> bool {
        self.observed == self.predicted
    }
}

/// Every edge of `T(n, n-s)` with its observed and predicted class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    pub n: usize,
    pub s: usize,
    pub edges: Vec<ClassifiedEdge>,
}

impl EdgeClassification {
    pub fn disagreements(&self) -> impl Iterator<Item = &ClassifiedEdge> {
        self.edges.iter().filter(|c| !c.agrees())
    }
}

/// Largest s for which the s-th reduction is predicted to keep a core of ones.
fn ones_limit(n: usize) -> usize {
    (n + 1) / 4
}

/// Classifies the edges of `g = T(n, n-s)`. Interior edges of the s-subgrid
/// are predicted to be 1, edges on the boundary of any s'-subgrid with
/// `1 <= s' <= s` below 1, and everything else above 1.
pub fn classify_edges(g: &Grid, s: usize) -> Result<EdgeClassification> {
    let m = g.n();
    let n = m + s;
    if s == 0 || s > ones_limit(n) {
        return Err(Error::invalid(format!(
            "no edge prediction for s = {s} on a {n}-grid (need 1 <= s <= {})",
            ones_limit(n)
        )));
    }
    let inner = subgrid(m, s)?;
    let mut rims = Vec::with_capacity(s);
    for sp in 1..=s {
        rims.push(subgrid(m, sp)?.boundary_edges);
    }
    let edges = g
        .labeled_edges()
        .map(|(edge, v)| {
            let predicted = if inner.interior_edges.contains(&edge) {
                EdgeClass::EqualOne
            } else if rims.iter().any(|b| b.contains(&edge)) {
                EdgeClass::LessThanOne
            } else {
                EdgeClass::GreaterThanOne
            };
            ClassifiedEdge { edge, value: v.clone(), observed: EdgeClass::of(v), predicted }
        })
        .collect();
    Ok(EdgeClassification { n, s, edges })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Part::A => "a",
            Part::B => "b",
            Part::C => "c",
            Part::D => "d",
        };
        f.write_str(c)
    }
}

/// One checked (n, s, part) cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartResult {
    pub n: usize,
    pub s: usize,
    pub part: Part,
    pub backing: Backing,
    pub checked: usize,
    /// First offending edge in grid order, its value and the expected class.
    pub counterexample: Option<(EdgeRef, Rational, EdgeClass)>,
}

impl PartResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn detail(&self) -> String {
        match &self.counterexample {
            None => format!("{} edges checked", self.checked),
            Some((e, v, want)) => format!("{e} = {}, expected {}", format_rational(v), want.as_str()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub n: usize,
    pub rows: Vec<PartResult>,
}

impl VanishingReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(PartResult::passed)
    }

    /// Failures among theorem-backed rows only.
    pub fn theorem_failures(&self) -> impl Iterator<Item = &PartResult> {
        self.rows.iter().filter(|r| r.backing == Backing::Theorem && !r.passed())
    }

    pub fn header() -> Vec<&'static str> {
        vec!["n", "s", "part", "status", "backing", "detail"]
    }

    pub fn append_rows(&self, t: &mut Table) {
        for r in &self.rows {
            t.push(vec![
                r.n.to_string(),
                r.s.to_string(),
                r.part.to_string(),
                if r.passed() { "pass" } else { "fail" }.to_string(),
                r.backing.as_str().to_string(),
                r.detail(),
            ]);
        }
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(Self::header());
        self.append_rows(&mut t);
        t
    }
}

fn first_mismatch<'a>(
    edges: impl Iterator<Item = (EdgeRef, &'a Rational)>,
    want: EdgeClass,
    negate: bool,
) -> (usize, Option<(EdgeRef, Rational, EdgeClass)>) {
    let mut checked = 0;
    for (e, v) in edges {
        checked += 1;
        let ok = (EdgeClass::of(v) == want) != negate;
        if !ok {
            return (checked, Some((e, v.clone(), want)));
        }
    }
    (checked, None)
}

fn check_level(n: usize, s: usize, g: &Grid) -> Result<Vec<PartResult>> {
    if s > ones_limit(n) {
        // nothing should be exactly one; report the class it must avoid
        let (checked, bad) = first_mismatch(g.labeled_edges(), EdgeClass::EqualOne, true);
        return Ok(vec![PartResult { n, s, part: Part::D, backing: Backing::Conjecture, checked, counterexample: bad }]);
    }
    let cls = classify_edges(g, s)?;
    let interior = subgrid(g.n(), s)?.interior_edges;
    let (checked, bad) = first_mismatch(
        g.labeled_edges().filter(|(e, _)| interior.contains(e)),
        EdgeClass::EqualOne,
        false,
    );
    let b = PartResult {
        n,
        s,
        part: Part::B,
        backing: if n >= 4 * s { Backing::Theorem } else { Backing::Conjecture },
        checked,
        counterexample: bad,
    };
    let outside: Vec<&ClassifiedEdge> = cls.edges.iter().filter(|c| !interior.contains(&c.edge)).collect();
    let c = PartResult {
        n,
        s,
        part: Part::C,
        backing: Backing::Conjecture,
        checked: outside.len(),
        counterexample: outside
            .iter()
            .find(|c| !c.agrees())
            .map(|c| (c.edge, c.value.clone(), c.predicted)),
    };
    Ok(vec![b, c])
}

pub fn check_vanishing_ones(n: usize) -> Result<VanishingReport> {
    check_vanishing_ones_with(n, Exec::default(), Budget::from_env())
}

/// Reduces `T(n)` one step at a time and checks every level `s = 0..n-1`.
pub fn check_vanishing_ones_with(n: usize, exec: Exec, budget: Budget) -> Result<VanishingReport> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    budget.check(n)?;
    let mut g = ones_grid(n)?;
    let (checked, bad) = first_mismatch(g.labeled_edges(), EdgeClass::EqualOne, false);
    let mut rows = vec![PartResult { n, s: 0, part: Part::A, backing: Backing::Theorem, checked, counterexample: bad }];
    for s in 1..n {
        g = reduce_once_with(&g, exec)?.0;
        rows.extend(check_level(n, s, &g)?);
    }
    Ok(VanishingReport { n, rows })
}

/// Runs [`check_vanishing_ones_with`] for each `n`, cells in parallel,
/// reports in the order given.
pub fn vanishing_ones_sweep(ns: &[usize], exec: Exec, budget: Budget) -> Result<Vec<VanishingReport>> {
    exec.map(ns, |&n| check_vanishing_ones_with(n, exec, budget)).into_iter().collect()
}
