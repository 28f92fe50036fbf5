use super::poly::Poly;
use super::ring::Var;
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// Result of pseudo-dividing `p` by `q`: `init(q)^power * p = q * quotient + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoDivision {
    pub quotient: Poly,
    pub remainder: Poly,
    pub power: u32,
}

pub fn pseudo_divide(p: &Poly, q: &Poly, v: Var) -> Result<PseudoDivision> {
    if !p.same_ring(q) {
        return Err(Error::ContextMismatch);
    }
    let qu = UniPoly::new(q, v);
    let dq = match qu.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ConstantDivisor),
    };
    let ring = p.ring();
    let b = qu.lc().clone();
    let monic = b.is_one();
    let mut r = UniPoly::new(p, v);
    let mut quo = UniPoly::zero(ring, v);
    let one = UniPoly::new(&Poly::one(ring), v);
    let mut power = 0u32;
    while let Some(dr) = r.degree().filter(|&d| d >= dq) {
        super::deadline::checkpoint();
        let lr = r.lc().clone();
        let k = dr - dq;
        if monic {
            r = r.sub_shifted(&lr, k, &qu);
            quo = quo.sub_shifted(&-&lr, k, &one);
        } else {
            r = r.scale(&b).sub_shifted(&lr, k, &qu);
            quo = quo.scale(&b).sub_shifted(&-&lr, k, &one);
            power += 1;
        }
        debug_assert!(r.degree().is_none_or(|d| d < dr));
    }
    let out = PseudoDivision {
        quotient: quo.to_poly(),
        remainder: r.to_poly(),
        power,
    };
    debug_assert_eq!(
        &b.pow(power) * p,
        q * &out.quotient + &out.remainder,
        "pseudo-division identity"
    );
    Ok(out)
}

pub fn prem(p: &Poly, q: &Poly, v: Var) -> Result<Poly> {
    Ok(pseudo_divide(p, q, v)?.remainder)
}

pub fn pquo(p: &Poly, q: &Poly, v: Var) -> Result<Poly> {
    Ok(pseudo_divide(p, q, v)?.quotient)
}

/// Pseudo-remainder with the multiplier raised to the full power
/// `deg(p, v) - deg(q, v) + 1`, as the subresultant recurrences expect.
pub(crate) fn prem_full(p: &Poly, q: &Poly, v: Var) -> Result<Poly> {
    let d = pseudo_divide(p, q, v)?;
    let (dp, dq) = (p.degree(v), q.degree(v));
    let bound = if dp >= dq { dp - dq + 1 } else { 0 };
    let missing = bound.saturating_sub(d.power);
    if missing == 0 || d.remainder.is_zero() {
        return Ok(d.remainder);
    }
    Ok(&q.coeff_in(v, dq).pow(missing) * &d.remainder)
}
