//! Brute-force checking over small prime fields, plus symbolic radical
//! membership through regularization.

mod points;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use points::{
    enumerate_variety, prime_ring, quasi_component_points, reduce, union_of_quasi_components, PointSet, ENUMERATION_CAP,
};

use crate::arith::{Poly, Ring};
use crate::decompose::{self, Mode};
use crate::error::Result;
use crate::rchain::RegularChain;

/// How much a failed check says about the decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    /// Equality of point sets that must hold exactly.
    Exact,
    /// A necessary condition; a failure is a real defect.
    Necessary,
    /// Points that may legitimately lie only in a closure. Never fails the report.
    Advisory,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub strength: Strength,
    pub passed: bool,
    /// Up to [`MAX_WITNESSES`] offending points.
    pub witnesses: Vec<Vec<u64>>,
}

pub const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub prime: u64,
    pub passed: bool,
    /// Point counts of the two sides being compared.
    pub expected_points: usize,
    pub covered_points: usize,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(prime: u64, expected: &PointSet, covered: &PointSet, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed || c.strength == Strength::Advisory);
        Report {
            prime,
            passed,
            expected_points: expected.len(),
            covered_points: covered.len(),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| !c.passed && c.strength != Strength::Advisory)
    }
}

fn subset_check(name: &str, strength: Strength, a: &PointSet, b: &PointSet) -> Check {
    let missing = a.difference(b);
    Check {
        name: name.to_string(),
        strength,
        passed: missing.is_empty(),
        witnesses: missing.into_iter().take(MAX_WITNESSES).collect(),
    }
}

fn vanish_check(name: &str, polys: &[Poly], pts: &PointSet) -> Check {
    let bad: Vec<Vec<u64>> = pts
        .points
        .iter()
        .filter(|pt| polys.iter().any(|f| f.eval_mod(pt) != 0))
        .take(MAX_WITNESSES)
        .cloned()
        .collect();
    Check {
        name: name.to_string(),
        strength: Strength::Necessary,
        passed: bad.is_empty(),
        witnesses: bad,
    }
}

/// Checks a decomposition of `V(F)` at one prime.
///
/// In Lazard-Wu mode the union of quasi-components must equal `V(F)`. In
/// Kalkbrener mode only the inclusion into `V(F)` is exact; points of `V(F)`
/// outside every quasi-component are reported as advisory.
pub fn check_decomposition(
    ring: &Arc<Ring>,
    f: &[Poly],
    chains: &[RegularChain],
    mode: Mode,
    prime: u64,
) -> Result<Report> {
    let f: Vec<Poly> = f.iter().map(Poly::primitive).collect();
    let v = enumerate_variety(ring, &f, prime)?;
    let w = union_of_quasi_components(ring, chains, prime)?;
    let cover = match mode {
        Mode::LazardWu => Strength::Exact,
        Mode::Kalkbrener => Strength::Advisory,
    };
    let checks = vec![
        subset_check("components inside variety", Strength::Exact, &w, &v),
        subset_check("variety covered by components", cover, &v, &w),
    ];
    Ok(Report::new(prime, &v, &w, checks))
}

/// Checks a regular split of `(p, T)` at one prime: `V(p) ∩ W(T)` must lie in
/// the union of the output quasi-components (exact), and both `p` and the
/// polynomials of `T` must vanish on that union (necessary).
pub fn check_split(p: &Poly, t: &RegularChain, chains: &[RegularChain], prime: u64) -> Result<Report> {
    let ring = t.ring();
    let target = prime_ring(ring, prime)?;
    let p_red = p.primitive().map_ring(&target)?;
    let mut z = quasi_component_points(t, prime)?;
    z.points.retain(|pt| p_red.eval_mod(pt) == 0);
    let w = union_of_quasi_components(ring, chains, prime)?;
    let t_red = reduce(&t.iter_desc().map(Poly::primitive).collect::<Vec<_>>(), &target)?;
    let checks = vec![
        subset_check("split covers V(p) and W(T)", Strength::Exact, &z, &w),
        vanish_check("p vanishes on components", &[p_red], &w),
        vanish_check("T vanishes on components", &t_red, &w),
    ];
    Ok(Report::new(prime, &z, &w, checks))
}

/// Whether reducing modulo `prime` is safe for these inputs and outputs.
///
/// The prime is rejected when it divides a denominator or a coefficient of
/// the primitive form of an input or chain polynomial (this covers the
/// leading content of every initial), or when a reduced chain stops being
/// regular. Primes that pass can still be unlucky; callers compare several.
pub fn admissible_prime(f: &[Poly], chains: &[RegularChain], prime: u64) -> bool {
    let Some(ring) = chains.first().map(|t| t.ring()).or_else(|| f.first().map(|p| p.ring())) else {
        return true;
    };
    let Ok(target) = prime_ring(ring, prime) else {
        return false;
    };
    let survives = |p: &Poly| -> Option<Poly> {
        let q = p.primitive().map_ring(&target).ok()?;
        (q.num_terms() == p.num_terms()).then_some(q)
    };
    if !f.iter().all(|p| survives(p).is_some()) {
        return false;
    }
    chains.iter().all(|t| {
        let Some(polys) = t.iter_desc().map(survives).collect::<Option<Vec<Poly>>>() else {
            return false;
        };
        RegularChain::from_polys(&target, polys).is_ok()
    })
}

/// Whether `f` lies in the radical of the saturated ideal of `T`: every
/// branch of the regularization of `f` must report zero.
pub fn radical_membership(f: &Poly, t: &RegularChain) -> Result<bool> {
    Ok(decompose::regularize(f, t)?.iter().all(|(g, _)| g.is_zero()))
}
