use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{Field, Poly, Ring};
use crate::error::{Error, Result};
use crate::rchain::RegularChain;

/// Largest number of points an enumeration may visit.
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// Points of `GF(p)^n`, coordinates indexed by variable rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    pub prime: u64,
    pub nvars: usize,
    pub points: BTreeSet<Vec<u64>>,
}

impl PointSet {
    pub fn empty(prime: u64, nvars: usize) -> Self {
        PointSet {
            prime,
            nvars,
            points: BTreeSet::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, pt: &[u64]) -> bool {
        self.points.contains(pt)
    }

    pub fn union_with(&mut self, other: &PointSet) {
        self.points.extend(other.points.iter().cloned());
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn difference(&self, other: &PointSet) -> Vec<Vec<u64>> {
        self.points.difference(&other.points).cloned().collect()
    }
}

/// The ring of `ring`'s variables over GF(p).
pub fn prime_ring(ring: &Arc<Ring>, prime: u64) -> Result<Arc<Ring>> {
    let c = ring.field().characteristic();
    if c != 0 && c != prime {
        return Err(Error::FieldMismatch);
    }
    Ok(ring.with_field(Field::prime(prime)?))
}

/// Reduces polynomials modulo `prime`.
pub fn reduce(polys: &[Poly], target: &Arc<Ring>) -> Result<Vec<Poly>> {
    polys.iter().map(|p| p.map_ring(target)).collect()
}

fn check_cap(prime: u64, nvars: usize) -> Result<u64> {
    let total = (prime as u128).checked_pow(nvars as u32).unwrap_or(u128::MAX);
    if total > ENUMERATION_CAP as u128 {
        return Err(Error::EnumerationTooLarge {
            points: total,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(total as u64)
}

/// All points of `GF(p)^n` satisfying `pred`.
pub(crate) fn enumerate(prime: u64, nvars: usize, pred: impl Fn(&[u64]) -> bool + Sync) -> Result<PointSet> {
    let total = check_cap(prime, nvars)?;
    let found: Vec<Vec<u64>> = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut pt = vec![0u64; nvars];
            for c in pt.iter_mut() {
                *c = idx % prime;
                idx /= prime;
            }
            pred(&pt).then_some(pt)
        })
        .collect();
    Ok(PointSet {
        prime,
        nvars,
        points: found.into_iter().collect(),
    })
}

/// Common zeros of `f` in `GF(p)^n`, by exhaustive search.
pub fn enumerate_variety(ring: &Arc<Ring>, f: &[Poly], prime: u64) -> Result<PointSet> {
    let target = prime_ring(ring, prime)?;
    let f = reduce(f, &target)?;
    enumerate(prime, ring.nvars(), |pt| f.iter().all(|p| p.eval_mod(pt) == 0))
}

/// Points of `V(T)` where no initial of `T` vanishes.
pub fn quasi_component_points(t: &RegularChain, prime: u64) -> Result<PointSet> {
    let target = prime_ring(t.ring(), prime)?;
    // Scaling by a rational does not move the zero set, and the primitive
    // form keeps as much as possible alive modulo p.
    let prim: Vec<Poly> = t.iter_desc().map(Poly::primitive).collect();
    let polys = reduce(&prim, &target)?;
    let inits: Vec<Poly> = prim
        .iter()
        .map(|p| p.init().unwrap().map_ring(&target))
        .collect::<Result<_>>()?;
    enumerate(prime, t.ring().nvars(), |pt| {
        polys.iter().all(|p| p.eval_mod(pt) == 0) && inits.iter().all(|h| h.eval_mod(pt) != 0)
    })
}

/// Union of the quasi-components of several chains.
pub fn union_of_quasi_components(ring: &Arc<Ring>, chains: &[RegularChain], prime: u64) -> Result<PointSet> {
    let mut acc = PointSet::empty(prime, ring.nvars());
    for t in chains {
        acc.union_with(&quasi_component_points(t, prime)?);
    }
    Ok(acc)
}
