#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trigrid_core::grid::{EdgeRef, Grid, PreType, Side};
use trigrid_core::rational::rat;
use trigrid_core::structure::{orbits_under, Symmetry};
use trigrid_core::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// p/q with p, q drawn from 1..=max.
pub fn positive(rng: &mut ChaCha8Rng, max: i64) -> Rational {
    rat(rng.gen_range(1..=max), rng.gen_range(1..=max))
}

/// A grid whose labels are constant on the orbits of the given symmetries,
/// each orbit labelled by `pick`.
pub fn orbit_grid(n: usize, generators: &[Symmetry], mut pick: impl FnMut() -> Rational) -> Grid {
    let mut labels: BTreeMap<EdgeRef, Rational> = BTreeMap::new();
    for orbit in orbits_under(n, generators) {
        let v = pick();
        for e in orbit {
            labels.insert(e, v.clone());
        }
    }
    Grid::from_fn(n, |t| {
        PreType::new(
            labels[&t.edge(Side::Left)].clone(),
            labels[&t.edge(Side::Right)].clone(),
            labels[&t.edge(Side::Base)].clone(),
        )
    })
    .expect("positive labels")
}

/// Symmetric (vertical + rotational) grid with random labels p/q, p, q <= max.
pub fn symmetric_grid(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Grid {
    orbit_grid(n, &[Symmetry::Vertical, Symmetry::Rotational], || positive(rng, max))
}
