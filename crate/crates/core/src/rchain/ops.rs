use crate::arith::{prem, Poly};
use crate::subres::resultant;

use super::chain::{RegularChain, Triangular};

/// Iterated pseudo-remainder by the chain, greatest main variable first.
pub fn prem_chain(p: &Poly, t: &impl Triangular) -> Poly {
    let mut r = p.clone();
    for q in t.polys().iter().rev() {
        if r.is_zero() {
            break;
        }
        let v = q.mvar().unwrap();
        r = prem(&r, q, v).expect("chain polynomials are nonconstant");
    }
    r
}

/// Like [`prem_chain`] but dropping the numeric content after every step,
/// which keeps rational coefficients small. The result differs from the
/// iterated remainder by a nonzero constant.
pub fn prem_chain_primitive(p: &Poly, t: &impl Triangular) -> Poly {
    let mut r = p.primitive();
    for q in t.polys().iter().rev() {
        if r.is_zero() {
            break;
        }
        let v = q.mvar().unwrap();
        r = prem(&r, q, v).expect("chain polynomials are nonconstant").primitive();
    }
    r
}

/// Primitive remainder of `p` modulo the chain `below`, whose main variables
/// are all below `mvar(p)`. On `W(below)` it differs from `p` by a nonzero
/// factor, so both the zero set and the regularity of the initial are kept.
/// Returns `p` itself if the main degree would drop.
pub fn reduce_mod(p: &Poly, below: &impl Triangular) -> Poly {
    if below.polys().is_empty() {
        return p.clone();
    }
    let q = prem_chain_primitive(p, below);
    match (q.mvar(), p.mvar()) {
        (Some(a), Some(b)) if a == b && q.degree(a) == p.degree(b) => q,
        _ => p.clone(),
    }
}

/// `res(p, T) = res(res(p, T_v, v), T_{<v})` with `v` the greatest main variable of `T`.
pub fn iterated_resultant(p: &Poly, t: &impl Triangular) -> Poly {
    let mut r = p.clone();
    for q in t.polys().iter().rev() {
        if r.is_zero() {
            break;
        }
        let v = q.mvar().unwrap();
        r = resultant(&r, q, v).expect("chain polynomials are nonconstant");
    }
    r
}

/// Same zero test as [`iterated_resultant`], dividing out numeric content
/// at every step to limit coefficient growth.
fn iterated_resultant_is_zero(p: &Poly, t: &impl Triangular) -> bool {
    let mut r = p.primitive();
    for q in t.polys().iter().rev() {
        if r.is_zero() {
            return true;
        }
        let v = q.mvar().unwrap();
        r = resultant(&r, q, v)
            .expect("chain polynomials are nonconstant")
            .primitive();
    }
    r.is_zero()
}

/// Whether `p` is regular (neither zero nor a zero divisor) modulo the
/// saturated ideal of `t`.
pub fn is_regular(p: &Poly, t: &RegularChain) -> bool {
    !iterated_resultant_is_zero(p, t)
}
