//! Grid JSON interchange format.
//!
//! ```json
//! {"n": 2, "original_n": 3, "reductions": 1,
//!  "triangles": [{"r": 1, "d": 1, "edges": ["2/3", "2/3", "1/1"]}, ...]}
//! ```
//!
//! Edges are ordered left, right, base; values are base-10 `p/q` strings;
//! triangles are written row-major.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{triangles, Grid, PreType, Provenance, Side, TriRef};
use crate::rational::{format_rational, is_positive, parse_rational, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridDoc {
    n: usize,
    original_n: Option<usize>,
    #[serde(default)]
    reductions: usize,
    triangles: Vec<TriangleDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangleDoc {
    r: usize,
    d: usize,
    edges: [String; 3],
}

fn to_doc(g: &Grid) -> GridDoc {
    let prov = g.provenance();
    GridDoc {
        n: g.n(),
        original_n: prov.original_n,
        reductions: prov.reductions,
        triangles: g
            .triangles()
            .map(|t| TriangleDoc {
                r: t.r,
                d: t.d,
                edges: Side::ALL.map(|s| format_rational(g.at(t.edge(s)))),
            })
            .collect(),
    }
}

pub fn serialize(g: &Grid) -> String {
    serde_json::to_string(&to_doc(g)).expect("grid documents always serialize")
}

pub fn serialize_pretty(g: &Grid) -> String {
    serde_json::to_string_pretty(&to_doc(g)).expect("grid documents always serialize")
}

pub fn deserialize(text: &str) -> Result<Grid> {
    let doc: GridDoc = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    if doc.n == 0 {
        return Err(Error::parse("n", "a grid needs at least one row"));
    }
    let mut labels: BTreeMap<TriRef, PreType> = BTreeMap::new();
    for (k, t) in doc.triangles.iter().enumerate() {
        let tri = TriRef::new(t.r, t.d);
        let loc = |what: &str| format!("triangles[{k}]{what}");
        if !tri.is_in(doc.n) {
            return Err(Error::parse(loc(""), format!("{tri} is outside a {}-grid", doc.n)));
        }
        let mut vals: Vec<Rational> = Vec::with_capacity(3);
        for (i, text) in t.edges.iter().enumerate() {
            let v = parse_rational(text).map_err(|m| Error::parse(loc(&format!(".edges[{i}]")), m))?;
            if !is_positive(&v) {
                return Err(Error::parse(
                    loc(&format!(".edges[{i}]")),
                    format!("resistance {text:?} is not positive"),
                ));
            }
            vals.push(v);
        }
        let [l, r, b]: [Rational; 3] = vals.try_into().expect("three edges");
        if labels.insert(tri, PreType::new(l, r, b)).is_some() {
            return Err(Error::parse(loc(""), format!("duplicate triangle {tri}")));
        }
    }
    if let Some(missing) = triangles(doc.n).find(|t| !labels.contains_key(t)) {
        return Err(Error::parse("triangles", format!("missing triangle {missing}")));
    }
    let grid = Grid::from_fn(doc.n, |t| labels.remove(&t).expect("checked above"))?;
    Ok(grid.with_provenance(Provenance {
        original_n: doc.original_n,
        reductions: doc.reductions,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{ones_grid, EdgeRef};
    use crate::rational::rat;
    use crate::reduction::reduce_to;
    use proptest::prelude::*;

    #[test]
    fn round_trip_of_reduced_grid() {
        let (g, _) = reduce_to(&ones_grid(3).unwrap(), 2).unwrap();
        let text = serialize(&g);
        assert!(text.contains("\"2/3\""));
        assert!(text.contains("\"original_n\":3"));
        let back = deserialize(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.provenance(), g.provenance());
    }

    #[test]
    fn written_row_major() {
        let text = serialize(&ones_grid(2).unwrap());
        let a = text.find("\"r\":1,\"d\":1").unwrap();
        let b = text.find("\"r\":2,\"d\":1").unwrap();
        let c = text.find("\"r\":2,\"d\":2").unwrap();
        assert!(a < b && b < c);
    }

    const TWO_GRID: &str = r#"{"n":2,"original_n":null,"reductions":0,"triangles":[
        {"r":1,"d":1,"edges":["1/1","1/1","1/1"]},
        {"r":2,"d":1,"edges":["1/1","1/1","1/1"]},
        {"r":2,"d":2,"edges":["1/1","1/1","1/1"]}]}"#;

    #[test]
    fn accepts_well_formed() {
        let g = deserialize(TWO_GRID).unwrap();
        assert_eq!(g, ones_grid(2).unwrap());
        assert_eq!(g.provenance().original_n, None);
    }

    fn parse_err(text: &str) -> (String, String) {
        match deserialize(text) {
            Err(Error::Parse { location, message }) => (location, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_missing_triangle() {
        let text = TWO_GRID.replace(r#"{"r":2,"d":1,"edges":["1/1","1/1","1/1"]},"#, "");
        let (loc, msg) = parse_err(&text);
        assert_eq!(loc, "triangles");
        assert!(msg.contains("<2,1>"), "{msg}");
    }

    #[test]
    fn rejects_non_positive_label() {
        let text = TWO_GRID.replacen("\"1/1\"", "\"0/1\"", 1);
        let (loc, _) = parse_err(&text);
        assert_eq!(loc, "triangles[0].edges[0]");
        let text = TWO_GRID.replacen("\"1/1\"", "\"-2/3\"", 1);
        assert!(deserialize(&text).is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(deserialize("{"), Err(Error::Parse { .. })));
        let (loc, _) = parse_err(&TWO_GRID.replacen("\"1/1\"", "\"x\"", 1));
        assert_eq!(loc, "triangles[0].edges[0]");
        let dup = TWO_GRID.replace(r#"{"r":2,"d":2"#, r#"{"r":2,"d":1"#);
        assert!(parse_err(&dup).1.contains("duplicate"));
        let outside = TWO_GRID.replace(r#"{"r":2,"d":2"#, r#"{"r":3,"d":2"#);
        assert!(deserialize(&outside).is_err());
        assert!(deserialize(&TWO_GRID.replace("\"n\":2", "\"n\":0")).is_err());
        assert!(deserialize(&TWO_GRID.replace("\"reductions\"", "\"bogus\"")).is_err());
    }

    fn label() -> impl Strategy<Value = Rational> {
        (1i64..10_000, 1i64..10_000).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn round_trip_is_exact(n in 1usize..6, vals in prop::collection::vec(label(), 63)) {
            let mut g = ones_grid(n).unwrap();
            for (k, e) in g.edges().collect::<Vec<EdgeRef>>().into_iter().enumerate() {
                g = g.set(e, vals[k % vals.len()].clone()).unwrap();
            }
            let back = deserialize(&serialize(&g)).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
