#![allow(dead_code)]

pub mod goldens;
pub mod strategies;
pub mod unimod;

use std::sync::Arc;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use regchains::arith::{Field, Monomial, Poly, Ring};

pub const NAMES: [&str; 3] = ["z", "y", "x"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(nvars: usize, field: Field) -> Arc<Ring> {
    Ring::new(&NAMES[3 - nvars..], field).unwrap()
}

/// A random polynomial of total degree at most `deg` with coefficients in `0..7`.
pub fn random_poly(r: &mut ChaCha8Rng, ring: &Arc<Ring>, deg: u32, max_terms: usize) -> Poly {
    let n = ring.nvars();
    let terms = r.gen_range(1..=max_terms);
    let mut p = Poly::zero(ring);
    for _ in 0..terms {
        let mut budget = r.gen_range(0..=deg);
        let mut exps = vec![0u32; n];
        for e in exps.iter_mut() {
            let k = r.gen_range(0..=budget);
            *e = k;
            budget -= k;
        }
        let c = r.gen_range(0..7i64);
        let m = Monomial::from_exponents(exps);
        p = p + Poly::monomial(ring, m, ring.field().from_i64(c));
    }
    p
}

/// A random system: up to three variables, up to three polynomials of total
/// degree at most three, small integer coefficients.
pub fn random_system(seed: u64, field: Field) -> (Arc<Ring>, Vec<Poly>) {
    let mut r = rng(seed);
    let nvars = r.gen_range(1..=3);
    let ring = ring(nvars, field);
    let npolys = r.gen_range(1..=3);
    let f = (0..npolys).map(|_| random_poly(&mut r, &ring, 3, 4)).collect();
    (ring, f)
}

/// Re-reads a system over another field.
pub fn over(ring: &Arc<Ring>, f: &[Poly], field: Field) -> (Arc<Ring>, Vec<Poly>) {
    let target = ring.with_field(field);
    let g = f.iter().map(|p| p.map_ring(&target).unwrap()).collect();
    (target, g)
}
