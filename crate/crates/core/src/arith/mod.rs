//! Coefficient fields and multivariate polynomial arithmetic.

pub mod deadline;
mod display;
pub mod field;
pub mod gcd;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod pseudo;
pub mod ring;
pub mod univariate;

pub use field::{Coeff, Field};
pub use gcd::{gcd, radical};
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::{rank_compare, Attributes, Poly};
pub use pseudo::{pquo, prem, pseudo_divide, PseudoDivision};
pub use ring::{Ring, Var, VarOrder};
pub use univariate::UniPoly;
