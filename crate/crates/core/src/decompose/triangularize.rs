use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::deadline::{self, Cancelled};
use crate::arith::{rank_compare, Poly, Ring};
use crate::error::{Error, Result};
use crate::rchain::{RegularChain, Split};

use super::engine::{Engine, GcdRecord, SolveStats};
use super::options::{Mode, SolveOptions};

const STACK_SIZE: usize = 256 << 20;

/// A decomposition together with what was observed while computing it.
#[derive(Clone, Debug)]
pub struct Solution {
    pub split: Split,
    pub stats: SolveStats,
    pub gcd_records: Vec<GcdRecord>,
}

/// Order in which the polynomials are intersected: the recursive formulation
/// removes a polynomial of maximal rank first (ties broken by the smallest
/// term map) and intersects it last.
fn intersection_order(f: &[Poly]) -> Vec<Poly> {
    let mut rest: Vec<Poly> = f.to_vec();
    let mut picked = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best = 0;
        for i in 1..rest.len() {
            let o = rank_compare(&rest[i], &rest[best]);
            if o == Ordering::Greater || (o == Ordering::Equal && rest[i] < rest[best]) {
                best = i;
            }
        }
        picked.push(rest.remove(best));
    }
    picked.reverse();
    picked
}

/// Triangular decomposition of `V(F)`: Lazard-Wu or Kalkbrener depending on
/// the options.
pub fn solve(ring: &Arc<Ring>, f: &[Poly], opts: &SolveOptions) -> Result<Solution> {
    opts.validate()?;
    if f.iter().any(|p| !crate::arith::ring::same_ring(p.ring(), ring)) {
        return Err(Error::ContextMismatch);
    }
    let distinct: Vec<Poly> = f.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let bound = match opts.mode {
        Mode::LazardWu => None,
        Mode::Kalkbrener => Some(opts.height_bound.unwrap_or(distinct.len())),
    };
    let order = intersection_order(&distinct);
    let engine = Engine::new(ring, opts);
    let run = || -> Result<Vec<RegularChain>> {
        let mut level: Vec<RegularChain> = vec![RegularChain::empty(ring)];
        for p in &order {
            let parts: Vec<Vec<RegularChain>> = if opts.jobs > 1 {
                level
                    .par_iter()
                    .map(|t| engine.intersect(p, t, bound, None))
                    .collect::<Result<_>>()?
            } else {
                level
                    .iter()
                    .map(|t| engine.intersect(p, t, bound, None))
                    .collect::<Result<_>>()?
            };
            let next: BTreeSet<RegularChain> = parts.into_iter().flatten().collect();
            level = next.into_iter().collect();
            if level.is_empty() {
                break;
            }
        }
        Ok(level)
    };
    let guarded = || {
        let out = match std::panic::catch_unwind(std::panic::AssertUnwindSafe(run)) {
            Ok(r) => r,
            Err(e) if e.is::<Cancelled>() => Err(Error::Timeout),
            Err(e) => std::panic::resume_unwind(e),
        };
        deadline::set(None);
        out
    };
    let chains = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .stack_size(STACK_SIZE)
            .build()
            .map_err(|e| Error::InvalidOptions(e.to_string()))?;
        pool.install(guarded)?
    } else {
        std::thread::scope(|s| {
            std::thread::Builder::new()
                .stack_size(STACK_SIZE)
                .spawn_scoped(s, guarded)
                .expect("spawn solver thread")
                .join()
                .unwrap_or_else(|e| std::panic::resume_unwind(e))
        })?
    };
    Ok(Solution {
        split: Split::new(chains),
        stats: engine.stats(),
        gcd_records: engine.gcd_records(),
    })
}

/// Decomposition only; see [`solve`].
pub fn triangularize(ring: &Arc<Ring>, f: &[Poly], opts: &SolveOptions) -> Result<Split> {
    Ok(solve(ring, f, opts)?.split)
}
