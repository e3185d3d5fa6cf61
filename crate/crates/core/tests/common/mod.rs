//! Brute-force oracles shared by the integration tests. None of them uses the
//! ellipsoid box or the peeling recursion they are checked against.

#![allow(dead_code)]

use std::collections::HashSet;

use quartic_acm::cohomology::cohomology;
use quartic_acm::{catalog, DivisorClass, EffectiveCone, PolarizedK3Lattice};

pub fn class(v: &[i64]) -> DivisorClass {
    DivisorClass::new(v.to_vec())
}

pub fn cones() -> Vec<EffectiveCone> {
    catalog::all().into_iter().map(EffectiveCone::new).collect()
}

pub fn rank2_cones() -> Vec<EffectiveCone> {
    cones()
        .into_iter()
        .filter(|c| c.lattice().rank() == 2)
        .collect()
}

/// Every rank-2 class with coordinates in `[-r, r]²`.
pub fn square_box(r: i64) -> impl Iterator<Item = DivisorClass> {
    (-r..=r).flat_map(move |a| (-r..=r).map(move |b| class(&[a, b])))
}

/// All classes of a rank-1 or rank-2 lattice with coordinates in `[-r, r]`.
pub fn coordinate_box(lat: &PolarizedK3Lattice, r: i64) -> Vec<DivisorClass> {
    match lat.rank() {
        1 => (-r..=r).map(|a| class(&[a])).collect(),
        2 => square_box(r).collect(),
        n => panic!("coordinate_box: rank {n} not supported"),
    }
}

/// (−2)-classes of degree `1..=max_degree` found by scanning a plain box.
pub fn roots_by_box(lat: &PolarizedK3Lattice, max_degree: i64, r: i64) -> Vec<DivisorClass> {
    let mut out: Vec<DivisorClass> = coordinate_box(lat, r)
        .into_iter()
        .filter(|c| lat.square(c) == -2 && (1..=max_degree).contains(&lat.degree(c)))
        .collect();
    out.sort_by_key(|c| (lat.degree(c), c.clone()));
    out
}

/// Classes reachable as non-negative integer combinations of `generators`
/// with total degree at most `max_degree` (bounded knapsack by degree).
pub fn knapsack_closure(
    lat: &PolarizedK3Lattice,
    generators: &[DivisorClass],
    max_degree: i64,
) -> HashSet<DivisorClass> {
    let mut by_degree: Vec<HashSet<DivisorClass>> = vec![HashSet::new(); max_degree as usize + 1];
    by_degree[0].insert(lat.zero());
    for e in 1..=max_degree {
        let mut layer = HashSet::new();
        for g in generators {
            let gd = lat.degree(g);
            if gd <= e {
                for base in &by_degree[(e - gd) as usize] {
                    layer.insert(base + g);
                }
            }
        }
        by_degree[e as usize] = layer;
    }
    by_degree.into_iter().flatten().collect()
}

/// ACM by scanning a fixed, generous range of twists instead of the window.
pub fn acm_by_wide_scan(cone: &EffectiveCone, d: &DivisorClass, range: i64) -> bool {
    let h = cone.lattice().polarization();
    (-range..=range).all(|l| cohomology(cone, &(d + &(l * h))).h1 == 0)
}
