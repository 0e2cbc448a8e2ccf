use super::Table;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grid::{ones_grid, PreType, TriRef};
use crate::rational::{format_rational, int, one, Rational};
use crate::reduction::{
    boundary_rule_legs, left_rule_legs, reduce_to_with, right_and_base_legs, Legs,
};

/// Left and right labels of the first diagonal of the uniform centre after
/// `s` reductions. Index 0 holds `s = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySequences {
    pub l: Vec<Rational>,
    pub b: Vec<Rational>,
}

impl BoundarySequences {
    pub fn len(&self) -> usize {
        self.l.len()
    }

    pub fn is_empty(&self) -> bool {
        self.l.is_empty()
    }

    /// `L_s` for `s >= 1`; `L_0 = 1` is the unreduced grid.
    pub fn l_at(&self, s: usize) -> Rational {
        if s == 0 { one() } else { self.l[s - 1].clone() }
    }

    /// `B_s` for `s >= 1`; `B_0 = 1`.
    pub fn b_at(&self, s: usize) -> Rational {
        if s == 0 { one() } else { self.b[s - 1].clone() }
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(vec!["s", "L_s", "B_s", "L_s_float", "B_s_float"]);
        for s in 1..=self.len() {
            let (l, b) = (self.l_at(s), self.b_at(s));
            t.push(vec![
                s.to_string(),
                format_rational(&l),
                format_rational(&b),
                format!("{:.12}", crate::rational::to_f64(&l)),
                format!("{:.12}", crate::rational::to_f64(&b)),
            ]);
        }
        t
    }
}

/// Pre-types of diagonals `1..=s` deep inside the uniform centre, for each
/// `s = 1..=s_max`. Far from the grid's bottom and right edge the centre is
/// invariant along its diagonals, so a single row of pre-types determines
/// the next one: child diagonal d depends only on parent diagonals d-1, d
/// and d+1, and diagonals beyond s are still all ones.
pub fn center_strip(s_max: usize, exec: Exec) -> Vec<Vec<PreType>> {
    strip_rows(s_max, false, exec)
}

// With `cone` set, row s keeps only diagonals d <= s_max - s + 1: child
// diagonal d reads parent diagonals up to d+1, so that is exactly what the
// first diagonal of every later row depends on.
fn strip_rows(s_max: usize, cone: bool, exec: Exec) -> Vec<Vec<PreType>> {
    let ones = Legs::of(&PreType::ones());
    let mut out: Vec<Vec<PreType>> = Vec::with_capacity(s_max);
    let mut legs: Vec<Legs> = Vec::new();
    for s in 1..=s_max {
        let len = if cone { s.min(s_max + 1 - s) } else { s };
        let at = |d: usize| if d <= legs.len() { &legs[d - 1] } else { &ones };
        let next = exec.map_index(len, |i| {
            let d = i + 1;
            let left = if d == 1 {
                boundary_rule_legs(at(1), at(1))
            } else {
                left_rule_legs(at(d - 1), at(d), at(d))
            };
            let (right, base) = right_and_base_legs(at(d), at(d + 1), at(d + 1));
            PreType::new(left, right, base)
        });
        legs = exec.map(&next, Legs::of);
        out.push(next);
    }
    out
}

/// `L_s` and `B_s` for `s = 1..=s_max` from the centre recurrence.
pub fn boundary_sequences(s_max: usize, exec: Exec) -> Result<BoundarySequences> {
    if s_max == 0 {
        return Err(Error::invalid("s_max must be at least 1"));
    }
    let strip = strip_rows(s_max, true, exec);
    Ok(BoundarySequences {
        l: strip.iter().map(|row| row[0].left.clone()).collect(),
        b: strip.iter().map(|row| row[0].right.clone()).collect(),
    })
}

/// The same sequences read off fully reduced grids: `T(4s+2)` reduced `s`
/// times, triangle `<s+1,1>`.
pub fn full_grid_sequences(s_max: usize, exec: Exec) -> Result<BoundarySequences> {
    if s_max == 0 {
        return Err(Error::invalid("s_max must be at least 1"));
    }
    let cells: Vec<Result<PreType>> = exec.map_index(s_max, |i| {
        let s = i + 1;
        let n = 4 * s + 2;
        let g = reduce_to_with(&ones_grid(n)?, n - s, exec)?.0;
        g.pretype(TriRef::new(s + 1, 1))
    });
    let mut seq = BoundarySequences { l: Vec::new(), b: Vec::new() };
    for p in cells {
        let p = p?;
        seq.l.push(p.left);
        seq.b.push(p.right);
    }
    Ok(seq)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPathRow {
    pub s: usize,
    /// Whole strip row (all s diagonals) matched the reduced grid.
    pub agrees: bool,
    pub detail: String,
}

/// Compares every centre diagonal from the recurrence with a full reduction
/// of `T(4s+2)`, for `s = 1..=s_max`.
pub fn dual_path_check(s_max: usize, exec: Exec) -> Result<Vec<DualPathRow>> {
    let strip = center_strip(s_max, exec);
    let rows: Vec<Result<DualPathRow>> = exec.map_index(s_max, |i| {
        let s = i + 1;
        let n = 4 * s + 2;
        let g = reduce_to_with(&ones_grid(n)?, n - s, exec)?.0;
        for d in 1..=s {
            let t = TriRef::new(s + d, d);
            let got = g.pretype(t)?;
            if got != strip[i][d - 1] {
                return Ok(DualPathRow {
                    s,
                    agrees: false,
                    detail: format!("{t}: grid {got}, recurrence {}", strip[i][d - 1]),
                });
            }
        }
        Ok(DualPathRow { s, agrees: true, detail: format!("{s} diagonals on T({n})") })
    });
    rows.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneRow {
    pub s: usize,
    pub decreasing: bool,
    pub below_one: bool,
    pub product_identity: bool,
    pub reciprocal_identity: bool,
}

impl MonotoneRow {
    pub fn passed(&self) -> bool {
        self.decreasing && self.below_one && self.product_identity && self.reciprocal_identity
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneReport {
    pub rows: Vec<MonotoneRow>,
}

impl MonotoneReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(MonotoneRow::passed)
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(vec!["s", "decreasing", "below_one", "product_identity", "reciprocal_identity"]);
        for r in &self.rows {
            t.push(vec![
                r.s.to_string(),
                r.decreasing.to_string(),
                r.below_one.to_string(),
                r.product_identity.to_string(),
                r.reciprocal_identity.to_string(),
            ]);
        }
        t
    }
}

/// For each `s` with `L_{s+1}` available: `L_{s+1} < L_s`, `L_s < 1`,
/// `L_{s+1} L_s = 2 B_s (L_s - L_{s+1})` and
/// `1/(2 B_s) = 1/L_{s+1} - 1/L_s`.
pub fn check_monotone_identity(seq: &BoundarySequences) -> Result<MonotoneReport> {
    if seq.len() < 2 {
        return Err(Error::invalid("need at least two terms"));
    }
    let two = int(2);
    let rows = (1..seq.len())
        .map(|s| {
            let (l, l1, b) = (seq.l_at(s), seq.l_at(s + 1), seq.b_at(s));
            MonotoneRow {
                s,
                decreasing: l1 < l,
                below_one: l < one() && l1 < one(),
                product_identity: &l1 * &l == &two * &b * (&l - &l1),
                reciprocal_identity: (&two * &b).recip() == l1.recip() - l.recip(),
            }
        })
        .collect();
    Ok(MonotoneReport { rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryRow {
    pub s: usize,
    /// `2 (1/L_{s+1} - 1/L_s)`, the printed right-hand side for `B_{s+1}`.
    pub printed_rhs: Rational,
    pub b_next: Rational,
    pub printed_holds: bool,
    /// `1/L_{s+1} - 1/L_s`, the right-hand side of the reciprocal form.
    pub derived_rhs: Rational,
    pub derived_lhs: Rational,
    pub derived_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryReport {
    pub rows: Vec<CorollaryRow>,
}

impl CorollaryReport {
    pub fn printed_holds_everywhere(&self) -> bool {
        self.rows.iter().all(|r| r.printed_holds)
    }

    pub fn derived_holds_everywhere(&self) -> bool {
        self.rows.iter().all(|r| r.derived_holds)
    }

    pub fn first_printed_failure(&self) -> Option<&CorollaryRow> {
        self.rows.iter().find(|r| !r.printed_holds)
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(vec![
            "s",
            "B_next",
            "printed_rhs",
            "printed_holds",
            "inv_2B_s",
            "diff_inv_L",
            "derived_holds",
        ]);
        for r in &self.rows {
            t.push(vec![
                r.s.to_string(),
                format_rational(&r.b_next),
                format_rational(&r.printed_rhs),
                r.printed_holds.to_string(),
                format_rational(&r.derived_lhs),
                format_rational(&r.derived_rhs),
                r.derived_holds.to_string(),
            ]);
        }
        t
    }
}

/// Evaluates `B_{s+1} = 2 (1/L_{s+1} - 1/L_s)` as written, next to the
/// reciprocal form `1/(2 B_s) = 1/L_{s+1} - 1/L_s`, for `s = 0..len-1`
/// using `L_0 = B_0 = 1`.
pub fn check_printed_corollary(seq: &BoundarySequences) -> Result<CorollaryReport> {
    if seq.is_empty() {
        return Err(Error::invalid("need at least one term"));
    }
    let two = int(2);
    let rows = (0..seq.len())
        .map(|s| {
            let (l, l1) = (seq.l_at(s), seq.l_at(s + 1));
            let diff = l1.recip() - l.recip();
            let printed_rhs = &two * &diff;
            let b_next = seq.b_at(s + 1);
            let derived_lhs = (&two * seq.b_at(s)).recip();
            CorollaryRow {
                s,
                printed_holds: printed_rhs == b_next,
                printed_rhs,
                b_next,
                derived_holds: derived_lhs == diff,
                derived_lhs,
                derived_rhs: diff,
            }
        })
        .collect();
    Ok(CorollaryReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn first_terms() {
        let seq = boundary_sequences(3, Exec::Sequential).unwrap();
        assert_eq!(seq.l, vec![rat(2, 3), rat(1, 2), rat(13, 32)]);
        assert_eq!(seq.b[..2], [one(), rat(13, 12)]);
    }

    #[test]
    fn recurrence_matches_closed_step() {
        // L_{s+1} = 2 L_s B_s / (L_s + 2 B_s), independent of the strip code
        let seq = boundary_sequences(12, Exec::Sequential).unwrap();
        for s in 0..12 {
            let (l, b) = (seq.l_at(s), seq.b_at(s));
            let two = int(2);
            assert_eq!(seq.l_at(s + 1), &two * &l * &b / (&l + &two * &b), "s = {s}");
        }
    }

    #[test]
    fn both_paths_agree() {
        let a = boundary_sequences(3, Exec::Sequential).unwrap();
        let b = full_grid_sequences(3, Exec::Sequential).unwrap();
        assert_eq!(a, b);
        assert!(dual_path_check(3, Exec::Parallel).unwrap().iter().all(|r| r.agrees));
    }

    #[test]
    fn monotone_identity_small() {
        let seq = boundary_sequences(10, Exec::Sequential).unwrap();
        let rep = check_monotone_identity(&seq).unwrap();
        assert_eq!(rep.rows.len(), 9);
        assert!(rep.all_passed());
        assert!(check_monotone_identity(&boundary_sequences(1, Exec::Sequential).unwrap()).is_err());
    }

    #[test]
    fn printed_corollary_breaks_at_one() {
        let seq = boundary_sequences(4, Exec::Sequential).unwrap();
        let rep = check_printed_corollary(&seq).unwrap();
        assert!(rep.rows[0].printed_holds);
        let bad = rep.first_printed_failure().unwrap();
        assert_eq!(bad.s, 1);
        assert_eq!(bad.printed_rhs, one());
        assert_eq!(bad.b_next, rat(13, 12));
        assert!(rep.derived_holds_everywhere());
        assert_eq!(rep.rows[2].derived_lhs, rat(6, 13));
    }

    #[test]
    fn strip_modes_agree() {
        assert_eq!(center_strip(8, Exec::Sequential), center_strip(8, Exec::Parallel));
    }

    #[test]
    fn cone_keeps_first_diagonal() {
        let full = center_strip(20, Exec::Sequential);
        let cone = strip_rows(20, true, Exec::Sequential);
        for (s, (a, b)) in full.iter().zip(&cone).enumerate() {
            assert_eq!(b.len(), (s + 1).min(20 - s));
            assert_eq!(a[..b.len()], b[..], "row {}", s + 1);
        }
    }
}
