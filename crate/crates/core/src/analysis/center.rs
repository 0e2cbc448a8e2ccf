use super::{Backing, Table};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grid::{ones_grid, same_type, Grid, PreType, TriRef};
use crate::rational::{format_rational, one};
use crate::reduction::reduce_to_with;
use crate::structure::{subgrid, uniform_center, uniform_center_triangles};

/// One part of the uniform-centre check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterPart {
    pub name: &'static str,
    /// None when the part holds; otherwise a description of the first failure.
    pub failure: Option<String>,
}

impl CenterPart {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformCenterReport {
    pub n: usize,
    pub s: usize,
    /// Pre-type of the first centre triangle on each diagonal `d = 1..=s`.
    pub diagonal_types: Vec<PreType>,
    pub parts: [CenterPart; 3],
}

impl UniformCenterReport {
    pub fn all_passed(&self) -> bool {
        self.parts.iter().all(CenterPart::passed)
    }

    pub fn header() -> Vec<&'static str> {
        vec!["n", "s", "part", "status", "backing", "detail"]
    }

    pub fn append_rows(&self, t: &mut Table) {
        let types = self.diagonal_types.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
        for p in &self.parts {
            t.push(vec![
                self.n.to_string(),
                self.s.to_string(),
                p.name.to_string(),
                if p.passed() { "pass" } else { "fail" }.to_string(),
                Backing::Theorem.as_str().to_string(),
                p.failure.clone().unwrap_or_else(|| types.clone()),
            ]);
        }
    }

    pub fn table(&self) -> Table {
        let mut t = Table::new(Self::header());
        self.append_rows(&mut t);
        t
    }
}

pub fn check_uniform_center(n: usize, s: usize) -> Result<UniformCenterReport> {
    check_uniform_center_with(n, s, Exec::default())
}

pub fn check_uniform_center_with(n: usize, s: usize, exec: Exec) -> Result<UniformCenterReport> {
    if s == 0 || n < 4 * s {
        return Err(Error::invalid(format!("uniform centre needs s >= 1 and n >= 4s, got n = {n}, s = {s}")));
    }
    let g = reduce_to_with(&ones_grid(n)?, n - s, exec)?.0;
    inspect(&g, n, s)
}

fn inspect(g: &Grid, n: usize, s: usize) -> Result<UniformCenterReport> {
    let mut diagonal_types = Vec::with_capacity(s);
    let mut same = None;
    for d in 1..=s {
        let tris = uniform_center_triangles(n, s, d)?;
        let first = g.pretype(tris[0])?;
        if same.is_none() {
            for &t in &tris[1..] {
                let p = g.pretype(t)?;
                if !same_type(&first, &p) {
                    same = Some(format!("diagonal {d}: {} is {first} but {t} is {p}", tris[0]));
                    break;
                }
            }
        }
        diagonal_types.push(first);
    }

    let sg = subgrid(g.n(), s)?;
    let mut interior = None;
    if let Some(e) = sg.interior_edges.iter().find(|e| *g.at(**e) != one()) {
        interior = Some(format!("interior edge {e} = {}", format_rational(g.at(*e))));
    } else {
        let mut it = sg.boundary_edges.iter();
        if let Some(first) = it.next() {
            let v = g.at(*first);
            if let Some(e) = it.find(|e| g.at(**e) != v) {
                interior = Some(format!(
                    "boundary edges {first} = {} and {e} = {} differ",
                    format_rational(v),
                    format_rational(g.at(*e))
                ));
            }
        }
    }

    let mut right_base = None;
    'outer: for d in 1..=s {
        for r in uniform_center(n, s, d)? {
            let t = TriRef::new(r, d);
            let p = g.pretype(t)?;
            if p.right != p.base {
                right_base = Some(format!("{t} has right {} and base {}", format_rational(&p.right), format_rational(&p.base)));
                break 'outer;
            }
            let m = TriRef::new(r, r + 1 - d);
            let q = g.pretype(m)?;
            if q.left != q.base {
                right_base = Some(format!("mirror {m} has left {} and base {}", format_rational(&q.left), format_rational(&q.base)));
                break 'outer;
            }
        }
    }

    Ok(UniformCenterReport {
        n,
        s,
        diagonal_types,
        parts: [
            CenterPart { name: "a", failure: same },
            CenterPart { name: "b", failure: interior },
            CenterPart { name: "c", failure: right_base },
        ],
    })
}

/// Checks every `(n, s)` pair, cells in parallel, reports in input order.
pub fn uniform_center_sweep(cells: &[(usize, usize)], exec: Exec) -> Result<Vec<UniformCenterReport>> {
    exec.map(cells, |&(n, s)| check_uniform_center_with(n, s, exec)).into_iter().collect()
}
