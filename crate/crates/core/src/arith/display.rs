use std::fmt;

use super::field::Coeff;
use super::monomial::Monomial;
use super::poly::Poly;
use super::ring::{Ring, Var};

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for i in (0..m.exponents().len()).rev() {
        let e = m.exponents()[i];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.name(Var(i)))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Terms are printed from the greatest monomial down, e.g. `3*y*x^2 - y + 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let (neg, abs) = match c {
                Coeff::Rational(r) if c.is_negative() => (true, Coeff::Rational(-r)),
                _ => (false, c.clone()),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !field.is_one(&abs) {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
