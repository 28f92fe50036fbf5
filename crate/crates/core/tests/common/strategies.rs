//! Proptest strategies for polynomials and small systems.

use std::sync::Arc;

use proptest::prelude::*;

use regchains::arith::{Field, Monomial, Poly, Ring, Var};
use regchains::rchain::RegularChain;

fn from_terms(ring: &Arc<Ring>, terms: Vec<(Vec<u32>, i64)>, deg: u32) -> Poly {
    let f = ring.field();
    let mut p = Poly::zero(ring);
    for (mut exps, c) in terms {
        exps.resize(ring.nvars(), 0);
        // lower exponents until the term fits the degree budget
        while exps.iter().sum::<u32>() > deg {
            let i = exps.iter().position(|&e| e > 0).unwrap();
            exps[i] -= 1;
        }
        p = p + Poly::monomial(ring, Monomial::from_exponents(exps), f.from_i64(c));
    }
    p
}

/// Terms of total degree at most `deg`, coefficients in `-3..=3`.
pub fn poly(ring: Arc<Ring>, deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    poly_upto(ring.clone(), ring.nvars() - 1, deg, max_terms)
}

/// Like [`poly`] but only in the variables up to `top`.
pub fn poly_upto(ring: Arc<Ring>, top: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    let term = (prop::collection::vec(0..=deg, top + 1), -3i64..=3);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| from_terms(&ring, terms, deg))
}

/// A polynomial with main variable `v`: a random lower part plus a leading
/// term `h * v^d` with a random initial `h`.
pub fn poly_with_mvar(ring: Arc<Ring>, v: usize, deg: u32) -> impl Strategy<Value = Poly> {
    let below = if v == 0 {
        Just(Poly::from_i64(&ring, 1)).boxed()
    } else {
        poly_upto(ring.clone(), v - 1, 1, 2).boxed()
    };
    (poly_upto(ring.clone(), v, deg, 3), below, 1..=deg, 1i64..=3).prop_map(move |(p, h, d, c)| {
        let h = if h.is_zero() { Poly::from_i64(&ring, c) } else { h };
        let lead = h.shift(Var(v), d);
        let low = (0..d).fold(Poly::zero(&ring), |acc, k| {
            &acc + &p.coeff_in(Var(v), k).shift(Var(v), k)
        });
        &low + &lead
    })
}

/// A regular chain, possibly empty, over the variables of `ring`.
pub fn chain(ring: Arc<Ring>, deg: u32) -> impl Strategy<Value = RegularChain> {
    let n = ring.nvars();
    let parts: Vec<_> = (0..n)
        .map(|v| prop::option::weighted(0.6, poly_with_mvar(ring.clone(), v, deg)))
        .collect();
    parts.prop_filter_map("not a regular chain", move |polys| {
        RegularChain::from_polys(&ring, polys.into_iter().flatten().collect()).ok()
    })
}

/// A polynomial whose main variable is the greatest variable of the ring.
pub fn poly_in_top(ring: Arc<Ring>, deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    let top = Var(ring.nvars() - 1);
    let r2 = ring.clone();
    (poly(ring, deg, max_terms), 1..=deg, 1i64..=3).prop_map(move |(p, d, c)| {
        let lead = Poly::from_i64(&r2, c).shift(top, d);
        if p.degree(top) >= d {
            p
        } else {
            &p + &lead
        }
    })
}

pub fn ring(names: &[&str], field: Field) -> Arc<Ring> {
    Ring::new(names, field).unwrap()
}

/// One to three polynomials over `ring`.
pub fn system(ring: Arc<Ring>, deg: u32) -> impl Strategy<Value = Vec<Poly>> {
    prop::collection::vec(poly(ring, deg, 4), 1..=3)
}
