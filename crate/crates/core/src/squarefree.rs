//! Squarefree regular chains: attaching a polynomial squarefree-wise and
//! splitting an existing chain into squarefree ones.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::arith::{pquo, radical, Poly, Ring, Var};
use crate::decompose::{Engine, SolveOptions};
use crate::error::{Error, Result};
use crate::rchain::{Process, RegularChain, Split, Triangular};
use crate::subres::chain::chain_fast;
use crate::subres::{check_characteristic, squarefree_part, SubresChain};

impl Engine {
    /// `base ∪ p`, split into squarefree chains when the option is on.
    /// Repeated factors of `p` are dropped first; this changes neither the
    /// quasi-component nor regularity.
    pub(crate) fn attach(
        &self,
        base: &RegularChain,
        p: &Poly,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        let p = radical(p);
        if self.squarefree {
            self.squarefree_attach(&p, base, parent)
        } else {
            Ok(vec![base.push(p)])
        }
    }

    /// Squarefree chains splitting `T ∪ p`, for `T` squarefree below `mvar(p)`.
    pub fn squarefree_attach(
        &self,
        p: &Poly,
        t: &RegularChain,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        let xi = p.mvar().ok_or(Error::NoMainVariable)?;
        let p = squarefree_part(p)?;
        if p.degree(xi) == 1 {
            return Ok(vec![t.push(p)]);
        }
        let src = chain_fast(&p, &p.derivative(xi), xi);
        self.squarefree_with_src(&p, xi, &src, t, parent)
    }

    /// Core of [`Engine::squarefree_attach`]; `src` is the subresultant chain
    /// of `p` and its derivative in `xi`.
    pub fn squarefree_with_src(
        &self,
        p: &Poly,
        xi: Var,
        src: &SubresChain,
        t: &RegularChain,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        check_characteristic(p)?;
        let dp = p.derivative(xi);
        let init = p.init()?;
        let r = src.resultant().primitive();
        let mut out = Vec::new();
        let mut work = VecDeque::new();
        for (f, c) in self.regularize(&r, t, parent)? {
            if !f.is_zero() {
                out.push(c.push(p.clone()));
            } else if c.dim() == t.dim() {
                work.push_back(c);
            } else {
                for (f2, d) in self.regularize(&init, &c, parent)? {
                    if !f2.is_zero() {
                        work.push_back(d);
                    }
                }
            }
        }
        while let Some(c) = work.pop_front() {
            for (g, d) in self.regular_gcd(p, &dp, xi, src, &c, parent)? {
                let base = if d.dim() == c.dim() {
                    // normalized like the inputs, so that a second pass is a no-op
                    out.push(d.push(squarefree_part(&pquo(p, &g, xi)?)?));
                    self.intersect(&g.init()?, &d, None, parent)?
                } else {
                    vec![d]
                };
                for e in base {
                    for (f, e2) in self.regularize(&init, &e, parent)? {
                        if !f.is_zero() {
                            work.push_back(e2);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Splits a regular chain into squarefree ones, level by level.
    pub fn squarefree_chain(&self, t: &RegularChain) -> Result<Vec<RegularChain>> {
        let mut polys = Vec::with_capacity(t.height());
        for p in t.polys() {
            polys.push(squarefree_part(&p)?);
        }
        let t = RegularChain::empty(&self.ring).push_all(polys);
        let mut level = vec![RegularChain::empty(&self.ring)];
        for i in 0..self.ring.nvars() {
            let xi = Var(i);
            let next = Engine::next_var(xi);
            let mut out = Vec::new();
            for c in &level {
                match t.get(xi) {
                    None => out.extend(self.clean_chain(c, &t, next, None, None)?),
                    Some(tx) if tx.degree(xi) == 1 => {
                        out.extend(self.clean_chain(&c.push(tx.clone()), &t, next, None, None)?)
                    }
                    Some(tx) => {
                        let src = chain_fast(tx, &tx.derivative(xi), xi);
                        for d in self.squarefree_with_src(tx, xi, &src, c, None)? {
                            out.extend(self.clean_chain(&d, &t, next, None, None)?);
                        }
                    }
                }
            }
            level = out;
        }
        Ok(level)
    }
}

fn engine(ring: &Arc<Ring>) -> Engine {
    Engine::new(ring, &SolveOptions::default().with_squarefree(true))
}

/// Squarefree chains `T_1, ..., T_e` with `T ∪ p ⟶ T_1, ..., T_e`.
pub fn squarefree_attach(p: &Poly, xi: Var, t: &RegularChain) -> Result<Split> {
    if p.mvar() != Some(xi) {
        return Err(Error::MainVariableMismatch {
            expected: p.ring().name(xi).to_string(),
        });
    }
    Ok(Split::new(engine(t.ring()).squarefree_attach(p, t, None)?))
}

/// As [`squarefree_attach`] for an already squarefree `p` and the
/// subresultant chain of `p` and its derivative.
pub fn squarefree_with_src(p: &Poly, xi: Var, src: &SubresChain, t: &RegularChain) -> Result<Split> {
    Ok(Split::new(engine(t.ring()).squarefree_with_src(p, xi, src, t, None)?))
}

/// Squarefree chains `T_1, ..., T_e` with `T ⟶ T_1, ..., T_e`.
pub fn squarefree_chain(t: &RegularChain) -> Result<Split> {
    Ok(Split::new(engine(t.ring()).squarefree_chain(t)?))
}
