use std::sync::Arc;

use crate::arith::{Poly, Ring, Var};
use crate::error::{Error, Result};

/// Determinant by fraction-free elimination; all divisions are exact.
pub fn determinant(ring: &Arc<Ring>, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(ring);
    }
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut prev = Poly::one(ring);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("fraction-free step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `det(M_k) v^(l-k) + ... + det(M_l)` where `M_i` keeps the first `k-1`
/// columns and column `i` (1-based) of the `k x l` matrix.
pub fn determinant_polynomial(ring: &Arc<Ring>, m: &[Vec<Poly>], v: Var) -> Result<Poly> {
    let k = m.len();
    let l = m.first().map_or(0, |r| r.len());
    if m.iter().any(|r| r.len() != l) {
        return Err(Error::InvalidOptions("ragged matrix rows".into()));
    }
    if k > l {
        return Err(Error::TooManyRows { rows: k, cols: l });
    }
    if k == 0 {
        return Ok(Poly::one(ring));
    }
    let mut acc = Poly::zero(ring);
    for col in k - 1..l {
        let sub: Vec<Vec<Poly>> = m
            .iter()
            .map(|row| {
                let mut r: Vec<Poly> = row[..k - 1].to_vec();
                r.push(row[col].clone());
                r
            })
            .collect();
        let d = determinant(ring, &sub);
        acc = &acc + &d.shift(v, (l - 1 - col) as u32);
    }
    Ok(acc)
}
