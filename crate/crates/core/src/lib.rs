//! Exact row reduction of triangular resistor grids.
//!
//! The crate labels every edge of an n-row triangular grid with an exact
//! rational resistance and reduces the grid one row at a time with
//! delta-wye, series and wye-delta steps, tracking the corner tails that
//! carry corner-to-corner resistance. An independent Laplacian solver
//! certifies the reductions, and the [`analysis`] module sweeps the
//! structural patterns (uniform centres, vanishing ones, boundary
//! sequences) that appear in repeatedly reduced all-ones grids.
//!
//! ```
//! use trigrid_core::{grid::ones_grid, reduction::reduce_once, rational::rat};
//!
//! let (child, tails) = reduce_once(&ones_grid(3).unwrap()).unwrap();
//! assert_eq!(child.n(), 2);
//! assert_eq!(tails.top, rat(1, 3));
//! ```

pub mod analysis;
pub mod error;
pub mod exec;
pub mod graph;
pub mod grid;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod reduction;
pub mod structure;
pub mod transforms;

pub use error::{Error, Result};
pub use exec::Exec;
pub use grid::{EdgeRef, Grid, PreType, Side, TriRef};
pub use rational::Rational;
