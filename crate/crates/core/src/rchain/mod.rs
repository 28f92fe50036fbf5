//! Triangular sets, regular chains and the orders used to prove termination.

pub mod chain;
pub mod ops;
pub mod order;

pub use chain::{Construction, RegularChain, Triangular, TriangularSet};
pub use ops::{is_regular, iterated_resultant, prem_chain, prem_chain_primitive, reduce_mod};
pub use order::{chain_rank_compare, process_compare, Process};

/// A finite set of regular chains, kept sorted canonically and without
/// syntactic duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Split {
    chains: Vec<RegularChain>,
}

impl Split {
    pub fn new(mut chains: Vec<RegularChain>) -> Self {
        chains.sort();
        chains.dedup();
        Split { chains }
    }

    pub fn chains(&self) -> &[RegularChain] {
        &self.chains
    }

    pub fn into_chains(self) -> Vec<RegularChain> {
        self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RegularChain> {
        self.chains.iter()
    }
}

impl IntoIterator for Split {
    type Item = RegularChain;
    type IntoIter = std::vec::IntoIter<RegularChain>;
    fn into_iter(self) -> Self::IntoIter {
        self.chains.into_iter()
    }
}

impl<'a> IntoIterator for &'a Split {
    type Item = &'a RegularChain;
    type IntoIter = std::slice::Iter<'a, RegularChain>;
    fn into_iter(self) -> Self::IntoIter {
        self.chains.iter()
    }
}
