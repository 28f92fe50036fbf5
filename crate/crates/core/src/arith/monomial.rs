use std::cmp::Ordering;

use super::ring::Var;

/// Exponent vector indexed by variable rank.
///
/// Ordering is lexicographic starting from the greatest variable, so the
/// largest monomial of a polynomial carries its main variable and main degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, v: Var, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[v.0] = e;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.0[v.0]
    }

    pub fn set_degree(&mut self, v: Var, e: u32) {
        self.0[v.0] = e;
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Greatest variable with a positive exponent.
    pub fn top_var(&self) -> Option<Var> {
        self.0.iter().rposition(|&e| e > 0).map(Var)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
