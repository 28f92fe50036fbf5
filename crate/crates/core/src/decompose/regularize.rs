use std::collections::VecDeque;

use crate::arith::{pquo, radical, Poly, Var};
use crate::error::Result;
use crate::rchain::{prem_chain_primitive, reduce_mod, Process, RegularChain};
use crate::subres::SubresChain;

use super::engine::{Engine, GcdRecord, Pairs};

impl Engine {
    /// Splits `T` so that on each branch `p` is either zero or regular
    /// modulo the radical of the saturated ideal. A zero flag means
    /// `p` vanishes on the branch.
    pub fn regularize(&self, p: &Poly, t: &RegularChain, parent: Option<&Process<'_>>) -> Result<Pairs> {
        let me = Process::new(p, t);
        self.enter(false, &me, parent)?;
        let me = Some(&me);
        if p.is_constant() || t.is_empty() {
            return Ok(vec![(p.clone(), t.clone())]);
        }
        // work with the remainder modulo T; it differs from p by a factor
        // regular on T, while the returned flags keep p itself
        let q = prem_chain_primitive(p, t);
        if q.is_zero() {
            return Ok(vec![(q, t.clone())]);
        }
        if q.is_constant() {
            return Ok(vec![(p.clone(), t.clone())]);
        }
        let v = q.mvar().unwrap();
        let mut out = Vec::new();
        if !t.contains_var(v) {
            let init = q.init()?;
            for (f, c) in self.regularize(&init, t, me)? {
                if f.is_zero() {
                    for (g, d) in self.regularize(&q.tail()?, &c, me)? {
                        let g = if g.is_zero() { g } else { p.clone() };
                        out.push((g, d));
                    }
                } else {
                    out.push((p.clone(), c));
                }
            }
            return Ok(out);
        }
        let below = t.below(v);
        let tv = &reduce_mod(t.get(v).unwrap(), &below);
        let src = crate::subres::chain::chain_fast(&q, tv, v);
        let r = radical(src.resultant());
        for (f, c) in self.regularize(&r, &below, me)? {
            if c.dim() < below.dim() {
                for d in self.extend(&c, t, v, me)? {
                    out.extend(self.regularize(p, &d, me)?);
                }
            } else if !f.is_zero() {
                self.output_regular(p, &c, t, v, &mut out, me)?;
            } else {
                for (g, d) in self.regular_gcd(&q, tv, v, &src, &c, me)? {
                    if d.dim() < c.dim() {
                        for e in self.extend(&d, t, v, me)? {
                            out.extend(self.regularize(p, &e, me)?);
                        }
                        continue;
                    }
                    if g.degree(v) == tv.degree(v) {
                        for y in self.build(&d, t.get(v), t, Engine::next_var(v), me)? {
                            out.push((Poly::zero(&self.ring), y));
                        }
                        continue;
                    }
                    for y in self.build(&d, Some(&g), t, Engine::next_var(v), me)? {
                        out.push((Poly::zero(&self.ring), y));
                    }
                    let q = pquo(tv, &g, v)?.primitive();
                    for y in self.build(&d, Some(&q), t, Engine::next_var(v), me)? {
                        out.extend(self.regularize(p, &y, me)?);
                    }
                    let hg = g.init()?;
                    for e in self.intersect(&hg, &d, None, me)? {
                        for f in self.extend(&e, t, v, me)? {
                            out.extend(self.regularize(p, &f, me)?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Emits `[p, C ∪ T_{>=v}]` where `p` is known to be regular. In
    /// squarefree mode the reattached chain may split; branches that lose
    /// dimension are regularized again.
    fn output_regular(
        &self,
        p: &Poly,
        c: &RegularChain,
        t: &RegularChain,
        v: Var,
        out: &mut Pairs,
        me: Option<&Process<'_>>,
    ) -> Result<()> {
        if !self.squarefree {
            out.push((p.clone(), c.push_all(t.at_or_above(v))));
            return Ok(());
        }
        let full_dim = c.dim() - t.count_at_or_above(v);
        for y in self.build(c, None, t, v, me)? {
            if y.dim() == full_dim {
                out.push((p.clone(), y));
            } else {
                out.extend(self.regularize(p, &y, me)?);
            }
        }
        Ok(())
    }

    /// `base ∪ first ∪ T_{>=from}`; in squarefree mode the new polynomials are
    /// attached one at a time, possibly splitting.
    pub(crate) fn build(
        &self,
        base: &RegularChain,
        first: Option<&Poly>,
        t: &RegularChain,
        from: Var,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        if !self.squarefree {
            let b = match first {
                Some(g) => base.push(radical(g)),
                None => base.clone(),
            };
            return Ok(vec![b.push_all(t.at_or_above(from))]);
        }
        let starts = match first {
            Some(g) => self.attach(base, g, parent)?,
            None => vec![base.clone()],
        };
        let mut out = Vec::new();
        for s in starts {
            out.extend(self.extend(&s, t, from, parent)?);
        }
        Ok(out)
    }

    /// Regular gcds of `p` and `q` in `v` modulo the saturated ideal of
    /// branches of `T`, read off the subresultant chain `src` by scanning the
    /// principal coefficients upward. A zero `g` marks a branch of lower
    /// dimension, on which no gcd is computed.
    pub fn regular_gcd(
        &self,
        p: &Poly,
        q: &Poly,
        v: Var,
        src: &SubresChain,
        t: &RegularChain,
        parent: Option<&Process<'_>>,
    ) -> Result<Pairs> {
        self.count_regular_gcd();
        debug_assert!(t.top_var().is_none_or(|w| w < v));
        let mut out = Vec::new();
        let mut work: VecDeque<(RegularChain, usize)> = VecDeque::from([(t.clone(), 1)]);
        while let Some((c, i)) = work.pop_front() {
            assert!(
                i < src.len(),
                "regular gcd scan ran past the chain; the initial of q must be regular"
            );
            for (f, d) in self.regularize(src.principal(i), &c, parent)? {
                if d.dim() < c.dim() {
                    out.push((Poly::zero(&self.ring), d));
                } else if f.is_zero() {
                    work.push_back((d, i + 1));
                } else {
                    let g = src.entry(i).primitive();
                    self.record_gcd(|| GcdRecord {
                        p: p.clone(),
                        q: q.clone(),
                        v,
                        g: g.clone(),
                        chain: d.clone(),
                    });
                    out.push((g, d));
                }
            }
        }
        Ok(out)
    }

    /// Reattaches `T_{>=xi}` above `C`, keeping the branches on which every
    /// reattached initial stays regular.
    pub fn extend(
        &self,
        c: &RegularChain,
        t: &RegularChain,
        xi: Var,
        parent: Option<&Process<'_>>,
    ) -> Result<Vec<RegularChain>> {
        let mut chains = vec![c.clone()];
        for p in t.at_or_above(xi) {
            let init = p.init()?;
            let mut next = Vec::new();
            for d in &chains {
                for (f, e) in self.regularize(&init, d, parent)? {
                    if !f.is_zero() {
                        next.extend(self.attach(&e, &p, parent)?);
                    }
                }
            }
            chains = next;
        }
        Ok(chains)
    }
}
