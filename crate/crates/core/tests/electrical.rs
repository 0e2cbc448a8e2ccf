//! Electrical equivalence of the transforms and the row reduction, checked
//! against the Laplacian oracle.

mod common;

use rand::Rng;
use trigrid_core::graph::{to_weighted_graph, Vertex, WeightedGraph};
use trigrid_core::grid::{ones_grid, Grid, PreType};
use trigrid_core::oracle::{corner_vertices, effective_resistance, float_effective_resistance};
use trigrid_core::rational::{int, to_f64};
use trigrid_core::reduction::{corner_resistance, reduce_once};
use trigrid_core::transforms::delta_to_y;
use trigrid_core::Exec;

fn v(k: i64) -> Vertex {
    (k, 0)
}

#[test]
fn delta_to_y_preserves_resistance_in_a_host_graph() {
    let mut rng = common::rng(11);
    for _ in 0..100 {
        let (ra, rb, rc) = (common::positive(&mut rng, 20), common::positive(&mut rng, 20), common::positive(&mut rng, 20));
        // host: vertices 3 and 4 hang off the triangle 0-1-2
        let mut host = WeightedGraph::new();
        host.add_resistor(v(3), v(rng.gen_range(0..3)), &common::positive(&mut rng, 20)).unwrap();
        host.add_resistor(v(4), v(rng.gen_range(0..3)), &common::positive(&mut rng, 20)).unwrap();
        host.add_resistor(v(3), v(4), &common::positive(&mut rng, 20)).unwrap();

        let mut with_delta = host.clone();
        with_delta.add_resistor(v(1), v(2), &ra).unwrap();
        with_delta.add_resistor(v(0), v(2), &rb).unwrap();
        with_delta.add_resistor(v(0), v(1), &rc).unwrap();

        let (r0, r1, r2) = delta_to_y(&ra, &rb, &rc).unwrap();
        let mut with_star = host;
        with_star.add_resistor(v(0), v(5), &r0).unwrap();
        with_star.add_resistor(v(1), v(5), &r1).unwrap();
        with_star.add_resistor(v(2), v(5), &r2).unwrap();

        for a in 0..5 {
            for b in a + 1..5 {
                assert_eq!(
                    effective_resistance(&with_delta, v(a), v(b)).unwrap(),
                    effective_resistance(&with_star, v(a), v(b)).unwrap(),
                    "pair ({a}, {b})"
                );
            }
        }
    }
}

fn random_grid(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Grid {
    Grid::from_fn(n, |_| {
        PreType::new(common::positive(rng, 9), common::positive(rng, 9), common::positive(rng, 9))
    })
    .unwrap()
}

#[test]
fn one_reduction_preserves_corner_resistance() {
    let mut rng = common::rng(12);
    for k in 0..60 {
        let n = rng.gen_range(2..=5);
        let g = if k % 2 == 0 { random_grid(&mut rng, n) } else { common::symmetric_grid(&mut rng, n, 9) };
        let (child, tails) = reduce_once(&g).unwrap();
        let (top, bl, br) = corner_vertices(n);
        let (ctop, cbl, cbr) = corner_vertices(n - 1);
        let parent = to_weighted_graph(&g);
        let reduced = to_weighted_graph(&child);
        assert_eq!(
            effective_resistance(&parent, top, bl).unwrap(),
            &tails.top + &tails.bottom_left + effective_resistance(&reduced, ctop, cbl).unwrap()
        );
        assert_eq!(
            effective_resistance(&parent, bl, br).unwrap(),
            &tails.bottom_left + &tails.bottom_right + effective_resistance(&reduced, cbl, cbr).unwrap()
        );
    }
}

#[test]
fn raising_a_resistance_never_lowers_corner_resistance() {
    let mut rng = common::rng(13);
    for _ in 0..40 {
        let n = rng.gen_range(1..=5);
        let g = random_grid(&mut rng, n);
        let e = g.edges().nth(rng.gen_range(0..3 * n * (n + 1) / 2)).unwrap();
        let bumped = g.set(e, g.at(e) + common::positive(&mut rng, 9)).unwrap();
        let (top, bl, _) = corner_vertices(n);
        let before = effective_resistance(&to_weighted_graph(&g), top, bl).unwrap();
        let after = effective_resistance(&to_weighted_graph(&bumped), top, bl).unwrap();
        assert!(after >= before, "{e}: {before} -> {after}");
    }
}

#[test]
fn corner_resistance_grows_with_n() {
    let mut prev = int(0);
    for n in 1..=12 {
        let exact = corner_resistance(n).unwrap();
        assert!(exact > prev, "n = {n}");
        let (top, bl, _) = corner_vertices(n);
        let float = float_effective_resistance(&to_weighted_graph(&ones_grid(n).unwrap()), top, bl).unwrap();
        let rel = (float - to_f64(&exact)).abs() / to_f64(&exact);
        assert!(rel < 1e-9, "n = {n}: float {float}, exact {exact}");
        println!("n = {n:2}: r_n = {float:.10}");
        prev = exact;
    }
}

#[test]
fn sequential_and_parallel_reductions_agree() {
    let mut rng = common::rng(14);
    let g = random_grid(&mut rng, 9);
    let a = trigrid_core::reduction::reduce_all(&g, Exec::Sequential).unwrap();
    let b = trigrid_core::reduction::reduce_all(&g, Exec::Parallel).unwrap();
    assert_eq!(a.tails, b.tails);
    assert_eq!(a.last_grid, b.last_grid);
}
