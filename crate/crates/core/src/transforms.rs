//! Series, delta-wye and wye-delta kernels on exact rationals.
//!
//! Scalar forms follow the usual shorthand: `delta(x, y, z) = xy / (x+y+z)`
//! is the star leg at the vertex where the edges `x` and `y` meet, and
//! `wye(x, y, z) = (xy + yz + zx) / x` is the triangle edge opposite the
//! leg `x`. All kernels reject non-positive resistances.

use crate::error::{Error, Result};
use crate::rational::{is_positive, Rational};

fn require_positive(name: &str, values: &[&Rational]) -> Result<()> {
    match values.iter().find(|v| !is_positive(v)) {
        Some(bad) => Err(Error::invalid(format!(
            "{name}: resistances must be positive, got {bad}"
        ))),
        None => Ok(()),
    }
}

pub fn series(a: &Rational, b: &Rational) -> Result<Rational> {
    require_positive("series", &[a, b])?;
    Ok(a + b)
}

pub fn delta(x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
    require_positive("delta", &[x, y, z])?;
    Ok(delta_unchecked(x, y, z))
}

pub fn wye(x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
    require_positive("wye", &[x, y, z])?;
    Ok(wye_unchecked(x, y, z))
}

// The reduction only feeds these with labels that are positive by
// construction, so the hot loops skip the checks.
pub(crate) fn delta_unchecked(x: &Rational, y: &Rational, z: &Rational) -> Rational {
    (x * y) / (x + y + z)
}

pub(crate) fn wye_unchecked(x: &Rational, y: &Rational, z: &Rational) -> Rational {
    (x * y + y * z + z * x) / x
}

/// Triangle `(R_A, R_B, R_C)` to star `(R_1, R_2, R_3)`. `R_A`, `R_B`, `R_C`
/// are the sides opposite nodes 1, 2, 3 and `R_k` is the star leg at node k,
/// so `R_1 = R_B R_C / (R_A + R_B + R_C)`.
pub fn delta_to_y(
    ra: &Rational,
    rb: &Rational,
    rc: &Rational,
) -> Result<(Rational, Rational, Rational)> {
    require_positive("delta_to_y", &[ra, rb, rc])?;
    let sum = ra + rb + rc;
    Ok(((rb * rc) / &sum, (ra * rc) / &sum, (ra * rb) / &sum))
}

/// Star `(R_1, R_2, R_3)` to triangle `(R_A, R_B, R_C)`; inverse of [`delta_to_y`].
pub fn y_to_delta(
    r1: &Rational,
    r2: &Rational,
    r3: &Rational,
) -> Result<(Rational, Rational, Rational)> {
    require_positive("y_to_delta", &[r1, r2, r3])?;
    let p = r1 * r2 + r1 * r3 + r2 * r3;
    Ok((&p / r1, &p / r2, &p / r3))
}
