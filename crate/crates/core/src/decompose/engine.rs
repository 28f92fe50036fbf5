use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::{Poly, Ring, Var};
use crate::error::{Error, Result};
use crate::rchain::{process_compare, Process, RegularChain};

use super::options::SolveOptions;

/// Polynomial-chain pairs as returned by regularization and regular gcds.
pub type Pairs = Vec<(Poly, RegularChain)>;

/// Counters gathered while solving.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub intersect_calls: u64,
    pub regularize_calls: u64,
    pub regular_gcd_calls: u64,
    pub process_checks: u64,
    pub process_violations: u64,
}

/// A regular gcd `g` of `p` and `q` in `v` modulo the saturated ideal of `chain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdRecord {
    pub p: Poly,
    pub q: Poly,
    pub v: Var,
    pub g: Poly,
    pub chain: RegularChain,
}

#[derive(Default)]
struct Counters {
    intersect: AtomicU64,
    regularize: AtomicU64,
    regular_gcd: AtomicU64,
    checks: AtomicU64,
    violations: AtomicU64,
}

/// Shared state of one decomposition run. Safe to use from several threads.
pub struct Engine {
    pub(crate) ring: Arc<Ring>,
    pub(crate) squarefree: bool,
    deadline: Option<Instant>,
    counters: Counters,
    gcds: Option<Mutex<Vec<GcdRecord>>>,
}

impl Engine {
    pub fn new(ring: &Arc<Ring>, opts: &SolveOptions) -> Self {
        Engine {
            ring: ring.clone(),
            squarefree: opts.squarefree,
            deadline: opts.timeout.map(|t| Instant::now() + t),
            counters: Counters::default(),
            gcds: opts.record_gcds.then(|| Mutex::new(Vec::new())),
        }
    }

    pub fn stats(&self) -> SolveStats {
        let c = &self.counters;
        let get = |a: &AtomicU64| a.load(AtomicOrdering::Relaxed);
        SolveStats {
            intersect_calls: get(&c.intersect),
            regularize_calls: get(&c.regularize),
            regular_gcd_calls: get(&c.regular_gcd),
            process_checks: get(&c.checks),
            process_violations: get(&c.violations),
        }
    }

    pub fn gcd_records(&self) -> Vec<GcdRecord> {
        self.gcds
            .as_ref()
            .map(|m| m.lock().unwrap().clone())
            .unwrap_or_default()
    }

    pub(crate) fn record_gcd(&self, rec: impl FnOnce() -> GcdRecord) {
        if let Some(m) = &self.gcds {
            m.lock().unwrap().push(rec());
        }
    }

    pub(crate) fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }

    /// Bookkeeping on entry to one of the two recursive routines: the new
    /// process must be strictly below the one that (transitively) called it.
    pub(crate) fn enter(&self, is_intersect: bool, cur: &Process<'_>, parent: Option<&Process<'_>>) -> Result<()> {
        self.check_deadline()?;
        // arithmetic below this call may run on a fresh worker thread
        crate::arith::deadline::set(self.deadline);
        let counter = if is_intersect {
            &self.counters.intersect
        } else {
            &self.counters.regularize
        };
        counter.fetch_add(1, AtomicOrdering::Relaxed);
        if let Some(par) = parent {
            self.counters.checks.fetch_add(1, AtomicOrdering::Relaxed);
            if process_compare(cur, par) != Ordering::Less {
                self.counters.violations.fetch_add(1, AtomicOrdering::Relaxed);
                debug_assert!(
                    false,
                    "process order did not decrease: ({}, {}) after ({}, {})",
                    cur.p, cur.t, par.p, par.t
                );
            }
        }
        Ok(())
    }

    pub(crate) fn count_regular_gcd(&self) {
        self.counters.regular_gcd.fetch_add(1, AtomicOrdering::Relaxed);
    }

    /// The variable just above `v`; may be one past the last variable, which
    /// never occurs in a chain.
    pub(crate) fn next_var(v: Var) -> Var {
        Var(v.0 + 1)
    }
}

/// Whether a chain fits under an optional height bound.
pub(crate) fn fits(c: &RegularChain, bound: Option<usize>) -> bool {
    bound.is_none_or(|b| c.height() <= b)
}
