use super::{Budget, Table};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grid::{ones_grid, EdgeRef, Side};
use crate::rational::{format_rational, int, to_f64, Rational};
use crate::reduction::{reduce_all, top_tail_sum};

/// 3/(2e), the value the single-triangle label is expected to approach.
pub const THREE_OVER_TWO_E: f64 = 1.5 / std::f64::consts::E;

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticsRow {
    pub n: usize,
    /// Edge label of the one-row grid `T(n, 1)`.
    pub e_n: Rational,
    /// Corner-to-corner resistance of `T(n)`.
    pub r_n: Rational,
    /// `exp(r_{n+1}) - exp(r_n)`; absent on the last row.
    pub exp_diff: Option<f64>,
    pub r_over_harmonic: f64,
    /// Min and max over `i` of `t_1(n,i) * i / t_1(n,1)`, where `t_1(n,i)`
    /// is the top tail produced by reduction step `i`.
    pub tail_ratio: (f64, f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticsReport {
    pub rows: Vec<AsymptoticsRow>,
    /// `(n, |e_{n+1} - e_n|)` for `n >= 4`.
    pub differences: Vec<(usize, Rational)>,
}

impl AsymptoticsReport {
    /// True when the differences from `n = 4` on are strictly decreasing.
    /// Exact comparison; vacuous with fewer than two differences.
    pub fn differences_shrink(&self) -> bool {
        self.differences.windows(2).all(|w| w[1].1 < w[0].1)
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(vec![
            "n",
            "e_n",
            "e_n_float",
            "abs_e_n_minus_3_over_2e",
            "r_n",
            "r_n_float",
            "exp_diff",
            "r_n_over_H_n",
            "tail_ratio_min",
            "tail_ratio_max",
        ]);
        for r in &self.rows {
            let e = to_f64(&r.e_n);
            t.push(vec![
                r.n.to_string(),
                format_rational(&r.e_n),
                format!("{e:.12}"),
                format!("{:.12}", (e - THREE_OVER_TWO_E).abs()),
                format_rational(&r.r_n),
                format!("{:.12}", to_f64(&r.r_n)),
                r.exp_diff.map(|x| format!("{x:.12}")).unwrap_or_default(),
                format!("{:.12}", r.r_over_harmonic),
                format!("{:.12}", r.tail_ratio.0),
                format!("{:.12}", r.tail_ratio.1),
            ]);
        }
        t
    }
}

struct Cell {
    e_n: Rational,
    r_n: Rational,
    tail_ratio: (f64, f64),
}

fn cell(n: usize, exec: Exec) -> Result<Cell> {
    let trace = reduce_all(&ones_grid(n)?, exec)?;
    let e_n = trace.last_grid.at(EdgeRef::new(1, 1, Side::Left)).clone();
    let r_n = top_tail_sum(&trace.tails) * int(2);
    let t1 = &trace.tails[0].top;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (i, t) in trace.tails.iter().enumerate() {
        let ratio = to_f64(&(&t.top * int(i as i64 + 1) / t1));
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    Ok(Cell { e_n, r_n, tail_ratio: (lo, hi) })
}

/// Tabulates `e_n`, `r_n` and related quantities for `n = 1..=n_max`.
pub fn asymptotics_report(n_max: usize, exec: Exec, budget: Budget) -> Result<AsymptoticsReport> {
    if n_max < 3 {
        return Err(Error::invalid("n_max must be at least 3"));
    }
    budget.check(n_max)?;
    let cells: Vec<Cell> = exec
        .map_index(n_max, |i| cell(i + 1, exec))
        .into_iter()
        .collect::<Result<_>>()?;
    let mut harmonic = 0.0;
    let rows = cells
        .iter()
        .enumerate()
        .map(|(i, c)| {
            harmonic += 1.0 / (i as f64 + 1.0);
            let r = to_f64(&c.r_n);
            AsymptoticsRow {
                n: i + 1,
                e_n: c.e_n.clone(),
                r_n: c.r_n.clone(),
                exp_diff: cells.get(i + 1).map(|next| to_f64(&next.r_n).exp() - r.exp()),
                r_over_harmonic: r / harmonic,
                tail_ratio: c.tail_ratio,
            }
        })
        .collect();
    let differences = (4..n_max)
        .map(|n| {
            let d = &cells[n].e_n - &cells[n - 1].e_n;
            (n, if d < int(0) { -d } else { d })
        })
        .collect();
    Ok(AsymptoticsReport { rows, differences })
}
