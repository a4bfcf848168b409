//! Shared fixtures for the benchmarks.

use arc_ic_core::lattice::cone_from_generators;
use arc_ic_core::{LatticePoint, SaturatedMonoid};

pub fn monoid(rank: usize, gens: &[&[i64]]) -> SaturatedMonoid {
    let gens: Vec<LatticePoint> = gens.iter().map(|g| LatticePoint::from_i64s(g)).collect();
    SaturatedMonoid::new(cone_from_generators(rank, &gens).unwrap()).unwrap()
}
