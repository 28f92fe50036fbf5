use std::collections::BTreeMap;

use crate::arith::{radical, Poly, Var};
use crate::error::Result;
use crate::rchain::{prem_chain_primitive, reduce_mod, Process, RegularChain};
use crate::subres::chain::chain_fast;
use crate::subres::SubresChain;

use super::engine::{fits, Engine};

impl Engine {
    /// Regular chains covering `V(p) ∩ W(T)`. With a bound, chains higher
    /// than the bound are never produced.
    pub fn intersect(
        &self,
        p: &Poly,
        t: &RegularChain,
        bound: Option<usize>,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        let me = Process::new(p, t);
        self.enter(true, &me, parent)?;
        let me = Some(&me);
        // V(p) and V(prem(p, T)) agree on W(T)
        let p = &prem_chain_primitive(p, t);
        if p.is_zero() {
            return Ok(if fits(t, bound) { vec![t.clone()] } else { vec![] });
        }
        if p.is_constant() {
            return Ok(vec![]);
        }

        // project p through the chain; each resultant drops the main variable
        let mut projections: BTreeMap<Var, Poly> = BTreeMap::new();
        let mut chains: BTreeMap<Var, SubresChain> = BTreeMap::new();
        // Only the zero set of each projection matters, so repeated factors
        // are dropped before they can compound in the next resultant.
        let mut r = radical(p);
        projections.insert(r.mvar().unwrap(), r.clone());
        while let Some(tv) = r.mvar().and_then(|v| t.get(v)) {
            let v = r.mvar().unwrap();
            let src = chain_fast(&r, &reduce_mod(tv, &t.below(v)), v);
            r = radical(src.resultant());
            chains.insert(v, src);
            if r.is_zero() {
                break;
            }
            if r.is_constant() {
                return Ok(vec![]);
            }
            projections.insert(r.mvar().unwrap(), r.clone());
        }

        let n = self.ring.nvars();
        let mut level = vec![RegularChain::empty(&self.ring)];
        for i in 0..n {
            let xi = Var(i);
            let next = Engine::next_var(xi);
            let h = bound.map(|a| a.saturating_sub(t.count_at_or_above(next)));
            let mut out = Vec::new();
            for c in &level {
                match (projections.get(&xi), t.get(xi)) {
                    (None, None) => out.extend(self.clean_chain(c, t, next, h, me)?),
                    (None, Some(tx)) => {
                        for d in self.attach_bounded(c, tx, h, me)? {
                            out.extend(self.clean_chain(&d, t, next, h, me)?);
                        }
                    }
                    (Some(px), None) => {
                        for d in self.intersect_free(px, xi, c, h, me)? {
                            out.extend(self.clean_chain(&d, t, next, h, me)?);
                        }
                    }
                    (Some(px), Some(_)) => {
                        let src = &chains[&xi];
                        for d in self.intersect_algebraic(px, t, xi, src, c, h, me)? {
                            out.extend(self.clean_chain(&d, t, next, h, me)?);
                        }
                    }
                }
            }
            level = out;
        }
        Ok(level)
    }

    fn attach_bounded(
        &self,
        c: &RegularChain,
        p: &Poly,
        bound: Option<usize>,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        if bound.is_some_and(|b| c.height() + 1 > b) {
            return Ok(vec![]);
        }
        let mut v = self.attach(c, p, parent)?;
        v.retain(|d| fits(d, bound));
        Ok(v)
    }

    /// Intersects with `p` whose main variable `xi` is free over `C`.
    pub fn intersect_free(
        &self,
        p: &Poly,
        xi: Var,
        c: &RegularChain,
        bound: Option<usize>,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        debug_assert_eq!(p.mvar(), Some(xi));
        let init = p.init()?;
        let tail = p.tail()?;
        let mut out = Vec::new();
        for (f, d) in self.regularize(&init, c, parent)? {
            if f.is_zero() {
                out.extend(self.intersect(&tail, &d, bound, parent)?);
                continue;
            }
            out.extend(self.attach_bounded(&d, p, bound, parent)?);
            if bound.is_some_and(|b| d.height() >= b) {
                continue;
            }
            for e in self.intersect(&init, &d, bound, parent)? {
                out.extend(self.intersect(&tail, &e, bound, parent)?);
            }
        }
        Ok(out)
    }

    /// Intersects with `p` whose main variable `xi` is algebraic over `C`
    /// through `T_xi`; `src` is the subresultant chain of `p` and `T_xi`.
    #[allow(clippy::too_many_arguments)]
    pub fn intersect_algebraic(
        &self,
        p: &Poly,
        t: &RegularChain,
        xi: Var,
        src: &SubresChain,
        c: &RegularChain,
        bound: Option<usize>,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        let tx = &reduce_mod(t.get(xi).expect("xi is a main variable of T"), &t.below(xi));
        let mut out = Vec::new();
        for (g, d) in self.regular_gcd(p, tx, xi, src, c, parent)? {
            if d.dim() < c.dim() {
                if bound.is_some_and(|b| d.height() + 1 > b) {
                    continue;
                }
                for e in self.clean_chain(&d, t, xi, bound, parent)? {
                    out.extend(self.intersect_algebraic(p, t, xi, src, &e, bound, parent)?);
                }
                continue;
            }
            out.extend(self.attach_bounded(&d, &g, bound, parent)?);
            if bound.is_some_and(|b| d.height() + 2 > b) {
                continue;
            }
            let hg = g.init()?;
            for e in self.intersect(&hg, &d, bound, parent)? {
                for f in self.clean_chain(&e, t, xi, bound, parent)? {
                    out.extend(self.intersect_algebraic(p, t, xi, src, &f, bound, parent)?);
                }
            }
        }
        Ok(out)
    }

    /// Keeps the part of `C` where the initial of `T_xi` does not vanish,
    /// unless nothing needs cleaning.
    pub fn clean_chain(
        &self,
        c: &RegularChain,
        t: &RegularChain,
        xi: Var,
        bound: Option<usize>,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        let Some(tx) = t.get(xi) else {
            return Ok(if fits(c, bound) { vec![c.clone()] } else { vec![] });
        };
        if c.dim() == t.below(xi).dim() {
            return Ok(if fits(c, bound) { vec![c.clone()] } else { vec![] });
        }
        let mut out = Vec::new();
        for (f, d) in self.regularize(&tx.init()?, c, parent)? {
            if !f.is_zero() && fits(&d, bound) {
                out.push(d);
            }
        }
        Ok(out)
    }
}
