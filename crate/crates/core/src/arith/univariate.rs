use std::sync::Arc;

use super::poly::Poly;
use super::ring::{Ring, Var};

/// Recursive view of a polynomial in one variable, coefficients lowest first.
///
/// The coefficient list is trimmed: it is empty for zero and otherwise ends
/// in a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    ring: Arc<Ring>,
    var: Var,
    coeffs: Vec<Poly>,
}

impl UniPoly {
    pub fn new(p: &Poly, v: Var) -> Self {
        let mut u = UniPoly {
            ring: p.ring().clone(),
            var: v,
            coeffs: if p.is_zero() { Vec::new() } else { p.coeffs_in(v) },
        };
        u.trim();
        u
    }

    pub fn from_coeffs(ring: &Arc<Ring>, v: Var, coeffs: Vec<Poly>) -> Self {
        let mut u = UniPoly {
            ring: ring.clone(),
            var: v,
            coeffs,
        };
        u.trim();
        u
    }

    pub fn zero(ring: &Arc<Ring>, v: Var) -> Self {
        Self::from_coeffs(ring, v, Vec::new())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs.get(k).cloned().unwrap_or_else(|| Poly::zero(&self.ring))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient. Panics on zero.
    pub fn lc(&self) -> &Poly {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(&self.ring, self.var, &self.coeffs)
    }

    pub fn scale(&self, c: &Poly) -> UniPoly {
        Self::from_coeffs(&self.ring, self.var, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `self - c * v^k * other`.
    pub fn sub_shifted(&self, c: &Poly, k: usize, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len() + k);
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = if i >= k { other.coeffs.get(i - k) } else { None };
            out.push(match (a, b) {
                (Some(a), Some(b)) => a - &(c * b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -(c * b),
                (None, None) => Poly::zero(&self.ring),
            });
        }
        Self::from_coeffs(&self.ring, self.var, out)
    }

    /// Divides every coefficient exactly by `d`.
    pub fn div_exact(&self, d: &Poly) -> Option<UniPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.div_exact(d)?);
        }
        Some(Self::from_coeffs(&self.ring, self.var, out))
    }
}
