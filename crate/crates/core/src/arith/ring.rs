use std::fmt;
use std::sync::Arc;

use super::field::Field;
use crate::error::{Error, Result};

/// A variable, identified by its rank in the ring's order (0 is the smallest).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub usize);

impl Var {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Ordered variable names, smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarOrder {
    names: Vec<String>,
}

impl VarOrder {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyContext);
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref().to_string();
            if out.contains(&n) {
                return Err(Error::DuplicateVariable(n));
            }
            out.push(n);
        }
        Ok(VarOrder { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name).map(Var)
    }
}

/// The polynomial ring `K[x1 < ... < xn]` every polynomial of a computation lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    order: VarOrder,
    field: Field,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S], field: Field) -> Result<Arc<Ring>> {
        Ok(Arc::new(Ring {
            order: VarOrder::new(names)?,
            field,
        }))
    }

    pub fn with_order(order: VarOrder, field: Field) -> Arc<Ring> {
        Arc::new(Ring { order, field })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &VarOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.len()
    }

    pub fn vars(&self) -> impl DoubleEndedIterator<Item = Var> {
        (0..self.nvars()).map(Var)
    }

    pub fn var(&self, name: &str) -> Option<Var> {
        self.order.position(name)
    }

    pub fn name(&self, v: Var) -> &str {
        &self.order.names[v.0]
    }

    /// Same variables, different coefficient field.
    pub fn with_field(&self, field: Field) -> Arc<Ring> {
        Arc::new(Ring {
            order: self.order.clone(),
            field,
        })
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.field.characteristic();
        if c == 0 {
            write!(f, "Q[{}]", self.order.names.join(" < "))
        } else {
            write!(f, "GF({c})[{}]", self.order.names.join(" < "))
        }
    }
}
