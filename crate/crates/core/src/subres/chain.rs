use crate::arith::pseudo::prem_full;
use crate::arith::{Poly, Var};
use crate::error::{Error, Result};

use super::matrix::determinant_polynomial;

/// Subresultants `S_0..S_{λ+1}` of `p` and `q` in `v`, with principal
/// coefficients `s_i`.
///
/// Below `λ = min(deg p, deg q)` the entries are determinant polynomials. The
/// two top entries are the inputs themselves: when `deg p >= deg q`,
/// `S_λ = q` and `S_{λ+1} = p`, otherwise `S_λ = p` and `S_{λ+1} = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubresChain {
    pub v: Var,
    pub p: Poly,
    pub q: Poly,
    pub entries: Vec<Poly>,
    pub principals: Vec<Poly>,
    pub lambda: usize,
}

impl SubresChain {
    pub fn entry(&self, i: usize) -> &Poly {
        &self.entries[i]
    }

    pub fn principal(&self, i: usize) -> &Poly {
        &self.principals[i]
    }

    /// `S_0`, the resultant.
    pub fn resultant(&self) -> &Poly {
        &self.entries[0]
    }

    /// Number of entries, `λ + 2`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn assemble(p: &Poly, q: &Poly, v: Var, lower: Vec<Poly>) -> SubresChain {
        let (m, n) = (p.degree(v) as usize, q.degree(v) as usize);
        let lambda = m.min(n);
        debug_assert_eq!(lower.len(), lambda);
        let mut entries = lower;
        if m >= n {
            entries.push(q.clone());
            entries.push(p.clone());
        } else {
            entries.push(p.clone());
            entries.push(q.clone());
        }
        let mut principals: Vec<Poly> = entries[..lambda]
            .iter()
            .enumerate()
            .map(|(i, s)| s.coeff_in(v, i as u32))
            .collect();
        principals.push(entries[lambda].coeff_in(v, entries[lambda].degree(v)));
        principals.push(entries[lambda + 1].coeff_in(v, entries[lambda + 1].degree(v)));
        SubresChain {
            v,
            p: p.clone(),
            q: q.clone(),
            entries,
            principals,
            lambda,
        }
    }
}

fn check_inputs(p: &Poly, q: &Poly, v: Var) -> Result<()> {
    if !p.same_ring(q) {
        return Err(Error::ContextMismatch);
    }
    if p.is_constant() || q.is_constant() {
        return Err(Error::NoMainVariable);
    }
    if p.mvar() != Some(v) || q.mvar() != Some(v) {
        return Err(Error::MainVariableMismatch {
            expected: p.ring().name(v).to_string(),
        });
    }
    Ok(())
}

/// Optimized chain via the subresultant pseudo-remainder recurrence.
pub fn subresultant_chain(p: &Poly, q: &Poly, v: Var) -> Result<SubresChain> {
    check_inputs(p, q, v)?;
    Ok(chain_fast(p, q, v))
}

/// Reference chain built from determinant polynomials of shifted rows.
pub fn naive_subresultant_chain(p: &Poly, q: &Poly, v: Var) -> Result<SubresChain> {
    check_inputs(p, q, v)?;
    let (m, n) = (p.degree(v) as usize, q.degree(v) as usize);
    let lambda = m.min(n);
    let fc = p.coeffs_in(v);
    let gc = q.coeffs_in(v);
    let ring = p.ring();
    let mut lower = Vec::with_capacity(lambda);
    for i in 0..lambda {
        let cols = m + n - i;
        let row = |coeffs: &[Poly], deg: usize, shift: usize| -> Vec<Poly> {
            (0..cols)
                .map(|c| {
                    // column c holds the coefficient of v^(cols-1-c)
                    let power = cols - 1 - c;
                    if power >= shift && power - shift <= deg {
                        coeffs[power - shift].clone()
                    } else {
                        Poly::zero(ring)
                    }
                })
                .collect()
        };
        let mut rows = Vec::with_capacity(m + n - 2 * i);
        for j in (0..n - i).rev() {
            rows.push(row(&fc, m, j));
        }
        for j in (0..m - i).rev() {
            rows.push(row(&gc, n, j));
        }
        lower.push(determinant_polynomial(ring, &rows, v)?);
    }
    Ok(SubresChain::assemble(p, q, v, lower))
}

/// Fast path without input checks; `p` and `q` must have positive degree in `v`.
pub(crate) fn chain_fast(p: &Poly, q: &Poly, v: Var) -> SubresChain {
    let (m, n) = (p.degree(v) as usize, q.degree(v) as usize);
    let lower = if m >= n {
        lower_entries(p, q, v)
    } else {
        // S_i(p, q) = (-1)^((m-i)(n-i)) S_i(q, p)
        lower_entries(q, p, v)
            .into_iter()
            .enumerate()
            .map(|(i, s)| if (m - i) * (n - i) % 2 == 1 { -s } else { s })
            .collect()
    };
    SubresChain::assemble(p, q, v, lower)
}

fn lc(p: &Poly, v: Var) -> Poly {
    p.coeff_in(v, p.degree(v))
}

/// `S_0..S_{q-1}` for `deg p >= deg q`.
fn lower_entries(p: &Poly, q: &Poly, v: Var) -> Vec<Poly> {
    let ring = p.ring();
    let (dp, dq) = (p.degree(v) as usize, q.degree(v) as usize);
    let mut out = vec![Poly::zero(ring); dq];
    let mut s = lc(q, v).pow((dp - dq) as u32);
    let mut a = q.clone();
    let mut b = prem_full(p, &-q, v).expect("positive degree divisor");
    loop {
        if b.is_zero() {
            return out;
        }
        let d = a.degree(v) as usize;
        let e = b.degree(v) as usize;
        out[d - 1] = b.clone();
        let delta = d - e;
        let c = if delta > 1 {
            let num = &lc(&b, v).pow((delta - 1) as u32) * &b;
            let c = num
                .div_exact(&s.pow((delta - 1) as u32))
                .expect("subresultant recurrence divides exactly");
            out[e] = c.clone();
            c
        } else {
            b.clone()
        };
        if e == 0 {
            return out;
        }
        let num = prem_full(&a, &-&b, v).expect("positive degree divisor");
        b = num
            .div_exact(&(&s.pow(delta as u32) * &lc(&a, v)))
            .expect("subresultant recurrence divides exactly");
        a = c;
        s = lc(&a, v);
    }
}
