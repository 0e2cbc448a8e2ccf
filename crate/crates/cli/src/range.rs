use std::ops::RangeInclusive;

/// Parses `a`, `a..b` or `a..=b`; both range forms include `b`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("`{s}` is not a non-negative integer"));
    let (lo, hi) = match text.split_once("..") {
        None => {
            let v = num(text)?;
            (v, v)
        }
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
    };
    if lo > hi {
        return Err(format!("empty range `{text}`"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_range("4..10").unwrap(), 4..=10);
        assert_eq!(parse_range("4..=10").unwrap(), 4..=10);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x..2").is_err());
        assert!(parse_range("-1").is_err());
    }
}
