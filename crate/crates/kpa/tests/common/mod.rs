//! Shared generators for the integration suites.

use kpa::algebra::{Algebra, AlgebraElement};
use kpa::degree::Degree;
use kpa::fixtures::fixture;
use kpa::graph::{KGraph, Path};
use kpa::ring::RingSpec;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub fn algebra(name: &str, ring: &str) -> Algebra {
    let g = Arc::new(fixture(name).expect("fixture exists"));
    Algebra::new(g, RingSpec::parse(ring).expect("ring parses")).expect("source-free")
}

pub fn random_degree(rng: &mut ChaCha8Rng, k: usize, max: u32) -> Degree {
    Degree((0..k).map(|_| rng.gen_range(0..=max)).collect())
}

/// A uniformly-picked path with a random range and degree `<= max`.
pub fn random_path(g: &Arc<KGraph>, rng: &mut ChaCha8Rng, max: u32) -> Path {
    let verts: Vec<_> = g.vertices().collect();
    loop {
        let v = verts[rng.gen_range(0..verts.len())];
        let deg = random_degree(rng, g.k(), max);
        let paths = g.paths_from(v, &deg);
        if !paths.is_empty() {
            return paths[rng.gen_range(0..paths.len())].clone();
        }
    }
}

/// A random span-form element with up to `max_terms` monomials of path
/// degrees `<= max_deg` and small integer-like coefficients.
pub fn random_element(
    alg: &Algebra,
    rng: &mut ChaCha8Rng,
    max_deg: u32,
    max_terms: usize,
) -> AlgebraElement {
    let g = alg.graph();
    let k = g.k();
    let mut x = alg.zero();
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let alpha = random_path(g, rng, max_deg);
        let s = g.source(&alpha);
        // all candidate ghosts sharing the source, the vertex path included
        let mut ghosts = Vec::new();
        for deg in Degree::box_range(&Degree::zero(k), &Degree::uniform(k, max_deg)) {
            ghosts.extend(g.paths_with_source(s, &deg));
        }
        let beta = ghosts[rng.gen_range(0..ghosts.len())].clone();
        let mut c = rng.gen_range(-9i64..=9);
        if c == 0 {
            c = 1;
        }
        let coeff = alg.ring().from_i64(c);
        let m = alg.monomial(coeff, &alpha, &beta).expect("shared source");
        x = x.add(&m).expect("same algebra");
    }
    x
}

pub fn random_nonzero_element(
    alg: &Algebra,
    rng: &mut ChaCha8Rng,
    max_deg: u32,
    max_terms: usize,
) -> AlgebraElement {
    loop {
        let x = random_element(alg, rng, max_deg, max_terms);
        if !x.is_zero().expect("expansion in range") {
            return x;
        }
    }
}
