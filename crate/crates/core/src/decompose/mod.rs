//! The incremental solver: intersection of a hypersurface with the
//! quasi-component of a regular chain, regularization, regular gcds and the
//! driver that folds them over a polynomial system.

mod engine;
mod intersect;
mod options;
mod regularize;
mod triangularize;

use std::sync::Arc;

pub use engine::{Engine, GcdRecord, Pairs, SolveStats};
pub use options::{Mode, SolveOptions};
pub use triangularize::{solve, triangularize, Solution};

use crate::arith::{Poly, Ring, Var};
use crate::error::Result;
use crate::rchain::{RegularChain, Split};
use crate::subres::SubresChain;

fn engine(ring: &Arc<Ring>) -> Engine {
    Engine::new(ring, &SolveOptions::default())
}

/// Regular split of `(p, T)`; chains higher than `bound` are dropped.
pub fn intersect(p: &Poly, t: &RegularChain, bound: Option<usize>) -> Result<Split> {
    Ok(Split::new(engine(t.ring()).intersect(p, t, bound, None)?))
}

pub fn regularize(p: &Poly, t: &RegularChain) -> Result<Pairs> {
    engine(t.ring()).regularize(p, t, None)
}

pub fn regular_gcd(p: &Poly, q: &Poly, v: Var, src: &SubresChain, t: &RegularChain) -> Result<Pairs> {
    engine(t.ring()).regular_gcd(p, q, v, src, t, None)
}

pub fn intersect_free(p: &Poly, xi: Var, c: &RegularChain) -> Result<Split> {
    Ok(Split::new(engine(c.ring()).intersect_free(p, xi, c, None, None)?))
}

pub fn intersect_algebraic(p: &Poly, t: &RegularChain, xi: Var, src: &SubresChain, c: &RegularChain) -> Result<Split> {
    Ok(Split::new(
        engine(c.ring()).intersect_algebraic(p, t, xi, src, c, None, None)?,
    ))
}

pub fn clean_chain(c: &RegularChain, t: &RegularChain, xi: Var) -> Result<Split> {
    Ok(Split::new(engine(c.ring()).clean_chain(c, t, xi, None, None)?))
}

pub fn extend(c: &RegularChain, t: &RegularChain, xi: Var) -> Result<Split> {
    Ok(Split::new(engine(c.ring()).extend(c, t, xi, None)?))
}

/// Whether a branch whose chains are at least `height_so_far` high survives
/// a height bound.
pub fn kalkbrener_prune(height_so_far: usize, bound: usize) -> bool {
    height_so_far <= bound
}
