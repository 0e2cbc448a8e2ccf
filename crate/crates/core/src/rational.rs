//! Exact rational values used for every resistance label.
//!
//! Values are `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator. The helpers here add the canonical
//! `p/q` text form used by the interchange formats.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Builds `p/q` from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn is_positive(v: &Rational) -> bool {
    v.is_positive()
}

/// Canonical text form: always `p/q`, even when `q == 1`.
pub fn format_rational(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Parses `p/q` (or a bare integer `p`) in base 10. The result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = p
        .parse()
        .map_err(|_| format!("bad numerator {p:?} in {text:?}"))?;
    let denom: BigInt = q
        .parse()
        .map_err(|_| format!("bad denominator {q:?} in {text:?}"))?;
    if denom.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Lossy conversion for reports; exact values are never derived from it.
pub fn to_f64(v: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    match v.to_f64() {
        Some(f) if f.is_finite() => f,
        // num's conversion can overflow on huge numerators and denominators
        // even when the quotient is modest, so fall back to scaling by bit length.
        _ => {
            let shift = v.numer().bits().max(v.denom().bits()).saturating_sub(1000);
            let n = (v.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (v.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}
