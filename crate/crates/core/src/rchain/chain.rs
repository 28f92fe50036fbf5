use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::arith::{Poly, Ring, Var};
use crate::error::{Error, Result};

/// Read access shared by triangular sets and regular chains.
pub trait Triangular {
    fn ring(&self) -> &Arc<Ring>;
    /// Polynomials sorted by increasing main variable.
    fn polys(&self) -> Vec<Poly>;
    fn poly_in(&self, v: Var) -> Option<Poly>;

    fn height(&self) -> usize {
        self.polys().len()
    }

    fn mvars(&self) -> Vec<Var> {
        self.polys().iter().map(|p| p.mvar().unwrap()).collect()
    }
}

/// Nonconstant polynomials with pairwise distinct main variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangularSet {
    ring: Arc<Ring>,
    polys: Vec<Poly>,
}

impl TriangularSet {
    pub fn new(ring: &Arc<Ring>, polys: Vec<Poly>) -> Result<Self> {
        let mut polys = polys;
        for p in &polys {
            if !crate::arith::ring::same_ring(p.ring(), ring) {
                return Err(Error::ContextMismatch);
            }
            if p.is_constant() {
                return Err(Error::NotTriangular(format!("constant polynomial {p}")));
            }
        }
        polys.sort_by_key(|p| p.mvar());
        for w in polys.windows(2) {
            if w[0].mvar() == w[1].mvar() {
                let v = w[0].mvar().unwrap();
                return Err(Error::NotTriangular(format!(
                    "two polynomials with main variable `{}`",
                    ring.name(v)
                )));
            }
        }
        Ok(TriangularSet {
            ring: ring.clone(),
            polys,
        })
    }

    pub fn empty(ring: &Arc<Ring>) -> Self {
        TriangularSet {
            ring: ring.clone(),
            polys: Vec::new(),
        }
    }
}

impl Triangular for TriangularSet {
    fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn polys(&self) -> Vec<Poly> {
        self.polys.clone()
    }

    fn poly_in(&self, v: Var) -> Option<Poly> {
        self.polys.iter().find(|p| p.mvar() == Some(v)).cloned()
    }

    fn height(&self) -> usize {
        self.polys.len()
    }
}

/// How a chain came to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Empty,
    /// Built from a list of polynomials and checked for regularity.
    Checked,
    /// Produced by the solver, regular by construction.
    Solver,
}

#[derive(Debug)]
struct Link {
    poly: Poly,
    mvar: Var,
    below: Option<Arc<Link>>,
    height: usize,
}

/// Regular chain stored as a persistent list from the greatest main variable
/// down, so extensions share their lower part.
#[derive(Clone)]
pub struct RegularChain {
    ring: Arc<Ring>,
    top: Option<Arc<Link>>,
    construction: Construction,
}

impl RegularChain {
    pub fn empty(ring: &Arc<Ring>) -> Self {
        RegularChain {
            ring: ring.clone(),
            top: None,
            construction: Construction::Empty,
        }
    }

    /// Builds a chain and checks that every initial is regular modulo the
    /// saturated ideal of the polynomials below it.
    pub fn from_polys(ring: &Arc<Ring>, polys: Vec<Poly>) -> Result<Self> {
        let t = TriangularSet::new(ring, polys)?;
        let mut c = RegularChain::empty(ring);
        for p in t.polys {
            let init = p.init()?;
            if !super::ops::is_regular(&init, &c) {
                return Err(Error::NotRegular(ring.name(p.mvar().unwrap()).to_string()));
            }
            c = c.push(p);
        }
        c.construction = if c.top.is_some() {
            Construction::Checked
        } else {
            Construction::Empty
        };
        Ok(c)
    }

    /// Builds a chain from a triangular set without checking regularity.
    pub fn from_polys_unchecked(ring: &Arc<Ring>, polys: Vec<Poly>) -> Result<Self> {
        let t = TriangularSet::new(ring, polys)?;
        Ok(RegularChain::empty(ring).push_all(t.polys))
    }

    /// Adds `p` on top. The caller guarantees that `mvar(p)` exceeds every
    /// main variable of the chain and that `init(p)` is regular.
    pub(crate) fn push(&self, p: Poly) -> Self {
        let mvar = p.mvar().expect("nonconstant chain polynomial");
        debug_assert!(self.top_var().is_none_or(|v| v < mvar));
        RegularChain {
            ring: self.ring.clone(),
            top: Some(Arc::new(Link {
                poly: p,
                mvar,
                height: self.height() + 1,
                below: self.top.clone(),
            })),
            construction: Construction::Solver,
        }
    }

    /// Pushes several polynomials in increasing main-variable order.
    pub(crate) fn push_all(&self, polys: impl IntoIterator<Item = Poly>) -> Self {
        polys.into_iter().fold(self.clone(), |c, p| c.push(p))
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_none()
    }

    pub fn height(&self) -> usize {
        self.top.as_ref().map_or(0, |l| l.height)
    }

    /// Dimension of the saturated ideal, `n - height`.
    pub fn dim(&self) -> usize {
        self.ring.nvars() - self.height()
    }

    pub fn top_var(&self) -> Option<Var> {
        self.top.as_ref().map(|l| l.mvar)
    }

    /// The polynomial of greatest main variable.
    pub fn top_poly(&self) -> Option<&Poly> {
        self.top.as_ref().map(|l| &l.poly)
    }

    fn links(&self) -> impl Iterator<Item = &Link> {
        let mut cur = self.top.as_deref();
        std::iter::from_fn(move || {
            let l = cur?;
            cur = l.below.as_deref();
            Some(l)
        })
    }

    /// Polynomials from the greatest main variable down.
    pub fn iter_desc(&self) -> impl Iterator<Item = &Poly> {
        self.links().map(|l| &l.poly)
    }

    pub fn get(&self, v: Var) -> Option<&Poly> {
        self.links()
            .take_while(|l| l.mvar >= v)
            .find(|l| l.mvar == v)
            .map(|l| &l.poly)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.get(v).is_some()
    }

    /// `T_{<v}`, sharing storage with `self`.
    pub fn below(&self, v: Var) -> RegularChain {
        let mut cur = self.top.clone();
        while let Some(l) = cur.as_ref().filter(|l| l.mvar >= v) {
            cur = l.below.clone();
        }
        RegularChain {
            ring: self.ring.clone(),
            top: cur,
            construction: self.construction,
        }
    }

    /// `T_{<=v}`.
    pub fn at_or_below(&self, v: Var) -> RegularChain {
        match self.get(v) {
            Some(_) => {
                let mut cur = self.top.clone();
                while let Some(l) = cur.as_ref().filter(|l| l.mvar > v) {
                    cur = l.below.clone();
                }
                RegularChain {
                    ring: self.ring.clone(),
                    top: cur,
                    construction: self.construction,
                }
            }
            None => self.below(v),
        }
    }

    /// `T_{>=v}` in increasing main-variable order.
    pub fn at_or_above(&self, v: Var) -> Vec<Poly> {
        let mut out: Vec<Poly> = self
            .links()
            .take_while(|l| l.mvar >= v)
            .map(|l| l.poly.clone())
            .collect();
        out.reverse();
        out
    }

    /// `T_{>v}` in increasing main-variable order.
    pub fn above(&self, v: Var) -> Vec<Poly> {
        let mut out: Vec<Poly> = self
            .links()
            .take_while(|l| l.mvar > v)
            .map(|l| l.poly.clone())
            .collect();
        out.reverse();
        out
    }

    /// Number of polynomials with main variable at least `v`.
    pub fn count_at_or_above(&self, v: Var) -> usize {
        self.links().take_while(|l| l.mvar >= v).count()
    }

    /// Product of the initials.
    pub fn initials_product(&self) -> Poly {
        self.iter_desc()
            .fold(Poly::one(&self.ring), |acc, p| &acc * &p.init().unwrap())
    }

    pub fn to_triangular_set(&self) -> TriangularSet {
        TriangularSet {
            ring: self.ring.clone(),
            polys: self.polys(),
        }
    }

    /// Compares the polynomial lists, greatest main variable first.
    pub fn cmp_terms(&self, other: &RegularChain) -> Ordering {
        self.iter_desc().cmp(other.iter_desc())
    }
}

impl Triangular for RegularChain {
    fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    fn polys(&self) -> Vec<Poly> {
        let mut v: Vec<Poly> = self.iter_desc().cloned().collect();
        v.reverse();
        v
    }

    fn poly_in(&self, v: Var) -> Option<Poly> {
        self.get(v).cloned()
    }

    fn height(&self) -> usize {
        RegularChain::height(self)
    }
}

impl PartialEq for RegularChain {
    fn eq(&self, other: &Self) -> bool {
        self.height() == other.height() && self.iter_desc().eq(other.iter_desc())
    }
}

impl Eq for RegularChain {}

impl std::hash::Hash for RegularChain {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for p in self.iter_desc() {
            p.hash(state);
        }
    }
}

/// Canonical order: height, then chain rank, then term maps.
impl Ord for RegularChain {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| super::order::chain_rank_compare(self, other))
            .then_with(|| self.cmp_terms(other))
    }
}

impl PartialOrd for RegularChain {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RegularChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.iter_desc().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for RegularChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RegularChain{self}")
    }
}
