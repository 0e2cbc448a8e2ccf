//! Verification sweeps over repeatedly reduced all-ones grids.
//!
//! Every verdict here is an exact rational comparison. Floats only appear
//! in report columns. Checks that follow from proven results are tagged
//! [`Backing::Theorem`]; the rest are [`Backing::Conjecture`] and are data,
//! not failures.

mod asymptotics;
mod center;
mod gcd;
mod sequences;
mod table;
mod vanishing;

pub use asymptotics::{asymptotics_report, AsymptoticsReport, AsymptoticsRow, THREE_OVER_TWO_E};
pub use center::{check_uniform_center, check_uniform_center_with, uniform_center_sweep, CenterPart, UniformCenterReport};
pub use gcd::{default_variants, gcd_scan, GcdReport, GcdRow, SeqName, Term, Variant};
pub use sequences::{
    boundary_sequences, center_strip, check_monotone_identity, check_printed_corollary, dual_path_check,
    full_grid_sequences, BoundarySequences, CorollaryReport, CorollaryRow, DualPathRow, MonotoneReport, MonotoneRow,
};
pub use table::Table;
pub use vanishing::{
    check_vanishing_ones, check_vanishing_ones_with, classify_edges, vanishing_ones_sweep, ClassifiedEdge,
    EdgeClass, EdgeClassification, Part, PartResult, VanishingReport,
};

use crate::error::{Error, Result};

/// Whether a check restates a proven result or tests a conjecture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Backing {
    Theorem,
    Conjecture,
}

impl Backing {
    pub fn as_str(self) -> &'static str {
        match self {
            Backing::Theorem => "theorem",
            Backing::Conjecture => "conjecture",
        }
    }
}

/// Environment variable that overrides [`Budget::default`]'s row cap.
pub const BUDGET_ENV: &str = "TRIGRID_MAX_N";

/// Cap on the size of grids that sweeps will reduce exactly. Label sizes
/// grow quickly under repeated wye-delta steps, so this keeps runtimes
/// predictable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_full_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_full_n: 20 }
    }
}

impl Budget {
    /// Default budget, overridden by `TRIGRID_MAX_N` when it parses.
    pub fn from_env() -> Budget {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_full_n| Budget { max_full_n })
            .unwrap_or_default()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_full_n {
            Err(Error::Budget(format!(
                "full reduction of a {n}-grid exceeds the cap of {} rows (set {BUDGET_ENV} to raise it)",
                self.max_full_n
            )))
        } else {
            Ok(())
        }
    }
}
