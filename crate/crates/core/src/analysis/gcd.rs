use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{BoundarySequences, Table};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqName {
    L,
    B,
}

/// `L_{s+offset}` or `B_{s+offset}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub seq: SeqName,
    pub offset: usize,
}

impl Term {
    pub fn new(seq: SeqName, offset: usize) -> Term {
        Term { seq, offset }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.seq {
            SeqName::L => "L",
            SeqName::B => "B",
        };
        match self.offset {
            0 => write!(f, "{name}_s"),
            k => write!(f, "{name}_{{s+{k}}}"),
        }
    }
}

/// A pairing of two sequence terms whose numerators are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Variant(pub Term, pub Term);

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

pub fn default_variants() -> Vec<Variant> {
    use SeqName::{B, L};
    vec![
        Variant(Term::new(L, 0), Term::new(L, 1)),
        Variant(Term::new(L, 0), Term::new(B, 0)),
        Variant(Term::new(B, 0), Term::new(B, 1)),
        Variant(Term::new(L, 0), Term::new(B, 1)),
        Variant(Term::new(B, 0), Term::new(L, 1)),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdRow {
    pub variant: Variant,
    pub s: usize,
    pub first: BigInt,
    pub second: BigInt,
    pub gcd: BigInt,
}

impl GcdRow {
    pub fn exceeds_one(&self) -> bool {
        self.gcd > BigInt::from(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdReport {
    pub rows: Vec<GcdRow>,
}

impl GcdReport {
    /// Per variant: number of rows, rows with gcd > 1, first s with gcd = 1.
    pub fn summary(&self) -> Vec<(Variant, usize, usize, Option<usize>)> {
        let mut out: Vec<(Variant, usize, usize, Option<usize>)> = Vec::new();
        for r in &self.rows {
            if out.last().map(|x| x.0) != Some(r.variant) {
                out.push((r.variant, 0, 0, None));
            }
            let e = out.last_mut().expect("just pushed");
            e.1 += 1;
            if r.exceeds_one() {
                e.2 += 1;
            } else if e.3.is_none() {
                e.3 = Some(r.s);
            }
        }
        out
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(vec!["variant", "s", "num_first", "num_second", "gcd", "gcd_gt_1"]);
        for r in &self.rows {
            t.push(vec![
                r.variant.to_string(),
                r.s.to_string(),
                r.first.to_string(),
                r.second.to_string(),
                r.gcd.to_string(),
                r.exceeds_one().to_string(),
            ]);
        }
        t
    }
}

/// gcd of the reduced numerators for each variant and each `s >= 1` whose
/// terms are both available. Report only: nothing here is a verdict.
pub fn gcd_scan(seq: &BoundarySequences, variants: &[Variant]) -> Result<GcdReport> {
    if seq.len() < 2 {
        return Err(Error::invalid("need at least two terms"));
    }
    let num = |t: Term, s: usize| -> BigInt {
        let v = match t.seq {
            SeqName::L => seq.l_at(s + t.offset),
            SeqName::B => seq.b_at(s + t.offset),
        };
        v.numer().clone()
    };
    let mut rows = Vec::new();
    for &v in variants {
        let reach = v.0.offset.max(v.1.offset);
        for s in 1..=seq.len().saturating_sub(reach) {
            let (a, b) = (num(v.0, s), num(v.1, s));
            rows.push(GcdRow { variant: v, s, gcd: a.gcd(&b), first: a, second: b });
        }
    }
    Ok(GcdReport { rows })
}
