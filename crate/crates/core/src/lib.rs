//! Triangular decomposition of polynomial systems with regular chains.

pub mod arith;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod rchain;
pub mod squarefree;
pub mod subres;
pub mod verify;

pub use error::{Error, Result};
