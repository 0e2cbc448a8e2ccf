//! Acceptance criteria, one line each. Run with
//! `cargo test -p trigrid-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use trigrid_core::analysis::{
    asymptotics_report, boundary_sequences, check_monotone_identity, check_printed_corollary, dual_path_check,
    uniform_center_sweep, vanishing_ones_sweep, Backing, Budget, THREE_OVER_TWO_E,
};
use trigrid_core::grid::{ones_grid, EdgeRef, Grid, Side};
use trigrid_core::oracle::exact_corner_resistance;
use trigrid_core::rational::{format_rational, int, one, rat};
use trigrid_core::reduction::{corner_resistance, reduce_once, reduce_to, rule_value};
use trigrid_core::structure::{
    check_symmetric, is_rotationally_symmetric, is_slide_symmetric, is_vertically_symmetric, Symmetry,
};
use trigrid_core::transforms::{delta, delta_to_y, series, wye, y_to_delta};
use trigrid_core::Exec;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn kernels() -> Verdict {
    let third = rat(1, 3);
    let d = delta(&one(), &one(), &one()).unwrap();
    let y = wye(&third, &third, &third).unwrap();
    let s = series(&third, &third).unwrap();
    let pass = d == third && y == one() && s == rat(2, 3);
    verdict(
        pass,
        format!("delta(1,1,1) = {}, Y(1/3,1/3,1/3) = {}, series(1/3,1/3) = {}", format_rational(&d), format_rational(&y), format_rational(&s)),
    )
}

fn round_trip() -> Verdict {
    let mut rng = common::rng(0x5eed_0002);
    for k in 0..1000 {
        let (a, b, c) = (
            common::positive(&mut rng, 1_000_000),
            common::positive(&mut rng, 1_000_000),
            common::positive(&mut rng, 1_000_000),
        );
        let (r1, r2, r3) = delta_to_y(&a, &b, &c).unwrap();
        let back = y_to_delta(&r1, &r2, &r3).unwrap();
        if back != (a.clone(), b.clone(), c.clone()) {
            return verdict(false, format!("triple {k}: ({a}, {b}, {c}) came back as {back:?}"));
        }
    }
    verdict(true, "1000 random triples")
}

fn on_outer_boundary(e: EdgeRef, n: usize) -> bool {
    match e.side {
        Side::Left => e.tri.d == 1,
        Side::Right => e.tri.d == e.tri.r,
        Side::Base => e.tri.r == n,
    }
}

fn first_reduction() -> Verdict {
    for n in 2..=12 {
        let g = reduce_once(&ones_grid(n).unwrap()).unwrap().0;
        for (e, v) in g.labeled_edges() {
            let want = if on_outer_boundary(e, n - 1) { rat(2, 3) } else { one() };
            if *v != want {
                return verdict(false, format!("T({n},{}) {e} = {}", n - 1, format_rational(v)));
            }
        }
    }
    verdict(true, "n = 2..12: rim 2/3, interior 1")
}

fn oracle() -> Verdict {
    for n in 1..=8 {
        let red = corner_resistance(n).unwrap();
        let lap = exact_corner_resistance(n, None).unwrap();
        if red != lap {
            return verdict(false, format!("n = {n}: reduction {} vs Laplacian {}", format_rational(&red), format_rational(&lap)));
        }
    }
    verdict(true, format!("n = 1..8, r_8 = {}", format_rational(&corner_resistance(8).unwrap())))
}

fn lemma_rules() -> Verdict {
    let mut rng = common::rng(0x5eed_0005);
    let mut compared = 0usize;
    for k in 0..200 {
        let n = rng.gen_range(2..=7);
        let g = common::symmetric_grid(&mut rng, n, 9);
        let child = reduce_once(&g).unwrap().0;
        for e in child.edges() {
            if let Some(v) = rule_value(&g, e) {
                compared += 1;
                if &v != child.at(e) {
                    return verdict(false, format!("grid {k} (n = {n}) edge {e}: rule {v}, reduction {}", child.at(e)));
                }
            }
        }
    }
    verdict(true, format!("200 grids, {compared} child edges compared"))
}

fn uniform_center() -> Verdict {
    let cells: Vec<(usize, usize)> = (1..=3).flat_map(|s| (4 * s..=4 * s + 6).map(move |n| (n, s))).collect();
    let reports = uniform_center_sweep(&cells, Exec::default()).unwrap();
    for r in &reports {
        if let Some(p) = r.parts.iter().find(|p| !p.passed()) {
            return verdict(false, format!("n = {}, s = {}, part ({}): {}", r.n, r.s, p.name, p.failure.as_deref().unwrap_or("")));
        }
    }
    verdict(true, format!("{} cells, s = 1..3, n = 4s..4s+6, parts a/b/c", cells.len()))
}

fn vanishing_ones() -> Verdict {
    let ns: Vec<usize> = (1..=14).collect();
    let reports = vanishing_ones_sweep(&ns, Exec::default(), Budget { max_full_n: 14 }).unwrap();
    let rows: Vec<_> = reports.iter().flat_map(|r| &r.rows).collect();
    let theorem = rows.iter().filter(|r| r.backing == Backing::Theorem).count();
    if let Some(bad) = rows.iter().find(|r| !r.passed()) {
        let (e, v, want) = bad.counterexample.as_ref().unwrap();
        return verdict(
            false,
            format!("n = {}, s = {}, part ({}) [{}]: {e} = {}, expected {}", bad.n, bad.s, bad.part, bad.backing.as_str(), format_rational(v), want.as_str()),
        );
    }
    verdict(true, format!("n = 1..14, {} cells ({theorem} theorem-backed)", rows.len()))
}

fn sequences() -> Verdict {
    let seq = boundary_sequences(64, Exec::default()).unwrap();
    if seq.l_at(1) != rat(2, 3) {
        return verdict(false, format!("L_1 = {}", format_rational(&seq.l_at(1))));
    }
    let mono = check_monotone_identity(&seq).unwrap();
    if let Some(r) = mono.rows.iter().find(|r| !r.passed()) {
        return verdict(false, format!("s = {}: {r:?}", r.s));
    }
    if let Some(r) = dual_path_check(4, Exec::default()).unwrap().into_iter().find(|r| !r.agrees) {
        return verdict(false, format!("dual path s = {}: {}", r.s, r.detail));
    }
    let cor = check_printed_corollary(&seq).unwrap();
    println!("      corollary table (first rows):");
    for line in cor.table().to_csv().lines().take(5) {
        println!("        {line}");
    }
    let printed = match cor.first_printed_failure() {
        Some(r) => format!("printed form first fails at s = {}", r.s),
        None => "printed form holds".to_string(),
    };
    verdict(
        cor.derived_holds_everywhere(),
        format!("s <= 64 decreasing, < 1, identity exact; dual path s <= 4; {printed}; derived form holds"),
    )
}

fn symmetry() -> Verdict {
    for n in 1..=10 {
        let top = ones_grid(n).unwrap();
        for m in (1..=n).rev() {
            let g: Grid = reduce_to(&top, m).unwrap().0;
            if let Err(v) = check_symmetric(&g) {
                return verdict(false, format!("T({n},{m}): {v}"));
            }
        }
    }
    use Symmetry::*;
    let families: [&[Symmetry]; 6] = [&[Vertical, Rotational], &[Vertical, Slide], &[Vertical], &[Rotational], &[Slide], &[]];
    let mut rng = common::rng(0x5eed_0009);
    let mut both = 0;
    for k in 0..500 {
        let n = rng.gen_range(1..=7);
        let fam = families[k % families.len()];
        let mut g = common::orbit_grid(n, fam, || int(rng.gen_range(1..=3)));
        if rng.gen_bool(0.25) {
            let e = g.edges().nth(rng.gen_range(0..3 * n * (n + 1) / 2)).unwrap();
            g = g.set(e, int(rng.gen_range(1..=3))).unwrap();
        }
        let vs = is_vertically_symmetric(&g) && is_slide_symmetric(&g);
        let vr = is_vertically_symmetric(&g) && is_rotationally_symmetric(&g);
        if vs != vr {
            return verdict(false, format!("random grid {k} (n = {n}): V+S = {vs}, V+R = {vr}"));
        }
        both += usize::from(vs);
    }
    verdict(true, format!("T(n,m) for n <= 10; 500 random grids, {both} symmetric"))
}

fn asymptotics() -> Verdict {
    let rep = asymptotics_report(14, Exec::default(), Budget { max_full_n: 14 }).unwrap();
    let table = rep.table();
    let tabulated = table.rows.len() == 14 && table.header.contains(&"abs_e_n_minus_3_over_2e");
    let e14 = trigrid_core::rational::to_f64(&rep.rows[13].e_n);
    let bad = rep.differences.windows(2).find(|w| w[1].1 >= w[0].1).map(|w| (w[0].0, w[1].0));
    match bad {
        None => verdict(tabulated, format!("|e_(n+1) - e_n| shrinks for n = 4..14; e_14 = {e14:.6}, 3/(2e) = {THREE_OVER_TWO_E:.6}")),
        Some((a, b)) => verdict(
            false,
            format!(
                "|e_{} - e_{}| >= |e_{} - e_{}|, difference grows before shrinking; e_14 = {e14:.6}, 3/(2e) = {THREE_OVER_TWO_E:.6}",
                b + 1,
                b,
                a + 1,
                a
            ),
        ),
    }
}

type Criterion = (u32, &'static str, Duration, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "transformation kernels exact", Duration::from_secs(1), kernels),
        (2, "delta/wye round trip", Duration::from_secs(1), round_trip),
        (3, "first reduction 2/3 rim, ones inside", Duration::from_secs(5), first_reduction),
        (4, "reduction matches Laplacian oracle", Duration::from_secs(30), oracle),
        (5, "per-edge rules match reduce_once", Duration::from_secs(30), lemma_rules),
        (6, "uniform centre theorem", Duration::from_secs(60), uniform_center),
        (7, "vanishing ones conjecture, n <= 14", Duration::from_secs(120), vanishing_ones),
        (8, "boundary sequences", Duration::from_secs(10), sequences),
        (9, "symmetry preservation", Duration::from_secs(10), symmetry),
        (10, "final-triangle differences shrink", Duration::from_secs(60), asymptotics),
    ];
    // Criteria known to fail on exact data; see the README. They print FAIL
    // but do not fail the run as long as the failure is the recorded one.
    let known_red = |id: u32, v: &Verdict| id == 10 && v.detail.starts_with("|e_7 - e_6| >= |e_6 - e_5|");

    let mut unexpected = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let mut v = run();
        let took = start.elapsed();
        if took > limit {
            v.pass = false;
            v.detail = format!("{} (over the {:?} limit)", v.detail, limit);
        }
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {id:>2} {name} ({:.2?}): {}", took, v.detail);
        if !v.pass {
            if known_red(id, &v) {
                println!("      known failure, recorded; not counted");
            } else {
                unexpected += 1;
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criterion/criteria failed");
        ExitCode::FAILURE
    }
}
