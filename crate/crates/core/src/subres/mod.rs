//! Determinant polynomials, subresultant chains, resultants and squarefree parts.

pub mod chain;
pub mod matrix;

pub use chain::{naive_subresultant_chain, subresultant_chain, SubresChain};
pub use matrix::{determinant, determinant_polynomial};

use crate::arith::gcd::lower_content_free;
use crate::arith::{pquo, Poly, Var};
use crate::error::{Error, Result};

/// `res(p, q, v)`; equals `p` when `p` does not involve `v`.
pub fn resultant(p: &Poly, q: &Poly, v: Var) -> Result<Poly> {
    if !p.same_ring(q) {
        return Err(Error::ContextMismatch);
    }
    if q.degree(v) == 0 {
        return Err(Error::ConstantDivisor);
    }
    if p.degree(v) == 0 {
        return Ok(p.clone());
    }
    Ok(chain::chain_fast(p, q, v).entries.swap_remove(0))
}

/// The last nonzero subresultant: `S_k` for the least `k` with `s_k != 0`.
/// Over the fraction field of the lower variables this is a gcd of the inputs.
pub fn last_nonzero_subresultant(chain: &SubresChain) -> &Poly {
    (0..=chain.lambda)
        .find(|&k| !chain.principal(k).is_zero())
        .map(|k| chain.entry(k))
        .unwrap_or_else(|| chain.entry(chain.lambda))
}

/// Fails when the characteristic does not exceed the main degree of `p`.
pub fn check_characteristic(p: &Poly) -> Result<()> {
    let c = p.field().characteristic();
    let d = p.mdeg()?;
    if c != 0 && c <= d as u64 {
        return Err(Error::CharacteristicTooSmall {
            characteristic: c,
            degree: d,
        });
    }
    Ok(())
}

/// Squarefree part of `p` in its main variable, with every factor free of
/// the main variable removed. The result is in unit normal form.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    check_characteristic(p)?;
    let v = p.mvar().ok_or(Error::NoMainVariable)?;
    if p.degree(v) == 1 {
        return Ok(lower_content_free(p));
    }
    let dp = p.derivative(v);
    let chain = chain::chain_fast(p, &dp, v);
    let g = last_nonzero_subresultant(&chain);
    let q = if g.degree(v) == 0 { p.clone() } else { pquo(p, g, v)? };
    Ok(lower_content_free(&q))
}
