use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Coeff, Field};
use super::monomial::Monomial;
use super::ring::{same_ring, Ring, Var};
use crate::error::{Error, Result};

/// Multivariate polynomial in canonical distributed form.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Coeff>,
}

/// The derived attributes of a nonconstant polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attributes {
    pub mvar: Var,
    pub init: Poly,
    pub mdeg: u32,
    pub rank: Poly,
    pub head: Poly,
    pub tail: Poly,
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Poly {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<Ring>, c: i64) -> Poly {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Self::from_i64(ring, 1)
    }

    pub fn var(ring: &Arc<Ring>, v: Var) -> Poly {
        Self::var_pow(ring, v, 1)
    }

    pub fn var_pow(ring: &Arc<Ring>, v: Var, e: u32) -> Poly {
        Self::monomial(ring, Monomial::var(ring.nvars(), v, e), ring.field().one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Poly {
        let mut terms = BTreeMap::new();
        if !ring.field().is_zero(&c) {
            terms.insert(m, c);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, merging duplicates.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Poly {
        let f = ring.field();
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.exponents().len(), ring.nvars());
            accumulate(&mut map, f, m, c);
        }
        map.retain(|_, c| !f.is_zero(c));
        Poly {
            ring: ring.clone(),
            terms: map,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn same_ring(&self, other: &Poly) -> bool {
        same_ring(&self.ring, &other.ring)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.field().is_one(self.leading_coeff())
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(self.field().zero()),
            1 if self.is_constant() => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Coefficient of the greatest monomial. Panics on the zero polynomial.
    pub fn leading_coeff(&self) -> &Coeff {
        self.terms
            .values()
            .next_back()
            .expect("leading coefficient of the zero polynomial")
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Poly) -> Poly {
        let f = self.field();
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.terms.clone(), &other.terms)
        } else {
            (other.terms.clone(), &self.terms)
        };
        for (m, c) in small {
            accumulate(&mut big, f, m.clone(), c.clone());
        }
        big.retain(|_, c| !f.is_zero(c));
        Poly {
            ring: self.ring.clone(),
            terms: big,
        }
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        super::deadline::checkpoint();
        let f = self.field();
        let mut map = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut map, f, m1.mul(m2), f.mul(c1, c2));
            }
        }
        map.retain(|_, c| !f.is_zero(c));
        Poly {
            ring: self.ring.clone(),
            terms: map,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        let f = self.field();
        if f.is_zero(c) {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), f.mul(x, c))).collect(),
        }
    }

    /// Multiplies by `v^e`.
    pub fn shift(&self, v: Var, e: u32) -> Poly {
        if e == 0 {
            return self.clone();
        }
        let m = Monomial::var(self.ring.nvars(), v, e);
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(&m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let f = self.field();
        Poly::from_terms(
            &self.ring,
            self.terms.iter().filter(|(m, _)| m.degree(v) > 0).map(|(m, c)| {
                let e = m.degree(v);
                let mut m2 = m.clone();
                m2.set_degree(v, e - 1);
                (m2, f.mul(c, &f.from_i64(e as i64)))
            }),
        )
    }

    /// Greatest variable appearing in the polynomial.
    pub fn mvar(&self) -> Option<Var> {
        self.leading_monomial().and_then(|m| m.top_var())
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.degree(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.degree(v) > 0)
    }

    pub fn mdeg(&self) -> Result<u32> {
        let v = self.mvar().ok_or(Error::NoMainVariable)?;
        Ok(self.leading_monomial().unwrap().degree(v))
    }

    /// (main variable, main degree); `None` for constants.
    pub fn rank(&self) -> Option<(Var, u32)> {
        let v = self.mvar()?;
        Some((v, self.leading_monomial().unwrap().degree(v)))
    }

    pub fn init(&self) -> Result<Poly> {
        let (v, d) = self.rank().ok_or(Error::NoMainVariable)?;
        Ok(self.coeff_in(v, d))
    }

    pub fn tail(&self) -> Result<Poly> {
        let (v, d) = self.rank().ok_or(Error::NoMainVariable)?;
        Ok(Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(v) < d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn attributes(&self) -> Result<Attributes> {
        let (mvar, mdeg) = self.rank().ok_or(Error::NoMainVariable)?;
        let init = self.coeff_in(mvar, mdeg);
        let head = init.shift(mvar, mdeg);
        Ok(Attributes {
            mvar,
            rank: Poly::var_pow(&self.ring, mvar, mdeg),
            tail: self - &head,
            init,
            mdeg,
            head,
        })
    }

    /// Coefficient of `v^k`, as a polynomial free of `v`.
    pub fn coeff_in(&self, v: Var, k: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(v) == k)
                .map(|(m, c)| {
                    let mut m2 = m.clone();
                    m2.set_degree(v, 0);
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    /// All coefficients in `v`, lowest degree first.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree(v) as usize;
        let mut maps: Vec<BTreeMap<Monomial, Coeff>> = vec![BTreeMap::new(); d + 1];
        for (m, c) in &self.terms {
            let k = m.degree(v) as usize;
            let mut m2 = m.clone();
            m2.set_degree(v, 0);
            maps[k].insert(m2, c.clone());
        }
        maps.into_iter()
            .map(|terms| Poly {
                ring: self.ring.clone(),
                terms,
            })
            .collect()
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs(ring: &Arc<Ring>, v: Var, coeffs: &[Poly]) -> Poly {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                debug_assert_eq!(m.degree(v), 0);
                let mut m2 = m.clone();
                m2.set_degree(v, k as u32);
                terms.insert(m2, x.clone());
            }
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Substitutes values for some variables.
    pub fn substitute(&self, values: &[(Var, Coeff)]) -> Poly {
        let f = self.field();
        let mut powers: Vec<Vec<Coeff>> = Vec::new();
        Poly::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, c)| {
                let mut m2 = m.clone();
                let mut c2 = c.clone();
                for (i, (v, val)) in values.iter().enumerate() {
                    let e = m.degree(*v) as usize;
                    if e == 0 {
                        continue;
                    }
                    if powers.len() <= i {
                        powers.resize(i + 1, Vec::new());
                    }
                    let table = &mut powers[i];
                    if table.is_empty() {
                        table.push(f.one());
                    }
                    while table.len() <= e {
                        let next = f.mul(table.last().unwrap(), val);
                        table.push(next);
                    }
                    c2 = f.mul(&c2, &table[e]);
                    m2.set_degree(*v, 0);
                }
                (m2, c2)
            }),
        )
    }

    /// Evaluates at a point given for every variable, indexed by rank.
    pub fn eval(&self, point: &[Coeff]) -> Result<Coeff> {
        let f = self.field();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point
                    .get(i)
                    .ok_or_else(|| Error::MissingValue(self.ring.name(Var(i)).to_string()))?;
                t = f.mul(&t, &f.pow(x, e as u64));
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Fast evaluation over GF(p) at a point of residues.
    pub fn eval_mod(&self, point: &[u64]) -> u64 {
        let p = self.field().characteristic() as u128;
        debug_assert!(p > 0);
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let mut t = match c {
                Coeff::Modular(v) => *v as u128,
                Coeff::Rational(_) => unreachable!("eval_mod over the rationals"),
            };
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t * point[i] as u128 % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc as u64
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        let f = self.field();
        if let Some(c) = d.constant_value() {
            let inv = f.inv(&c)?;
            return Some(self.scale(&inv));
        }
        let (dm, dc) = d.terms.iter().next_back().unwrap();
        let dinv = f.inv(dc).unwrap();
        let mut r = self.terms.clone();
        let mut q = BTreeMap::new();
        while let Some((m, c)) = r.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&m) {
                return None;
            }
            let qm = dm.quotient_of(&m);
            let qc = f.mul(&c, &dinv);
            for (m2, c2) in &d.terms {
                let prod = f.neg(&f.mul(&qc, c2));
                accumulate(&mut r, f, qm.mul(m2), prod);
            }
            r.retain(|_, c| !f.is_zero(c));
            debug_assert!(!r.contains_key(&m));
            q.insert(qm, qc);
        }
        Some(Poly {
            ring: self.ring.clone(),
            terms: q,
        })
    }

    /// Positive rational number whose quotient leaves coprime integer coefficients.
    pub fn numeric_content(&self) -> Coeff {
        let f = self.field();
        if !f.is_rational() || self.is_zero() {
            return f.one();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            let r = c.as_rational().unwrap();
            num = num.gcd(r.numer());
            den = den.lcm(r.denom());
        }
        Coeff::Rational(BigRational::new(num, den))
    }

    /// Divides out the numeric content over the rationals; identity over GF(p).
    pub fn primitive(&self) -> Poly {
        let c = self.numeric_content();
        if self.field().is_one(&c) {
            return self.clone();
        }
        self.scale(&self.field().inv(&c).unwrap())
    }

    /// Unit normal form: primitive with positive leading coefficient over the
    /// rationals, monic over GF(p).
    pub fn normalize_unit(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let f = self.field();
        if f.is_rational() {
            let p = self.primitive();
            if p.leading_coeff().is_negative() {
                -&p
            } else {
                p
            }
        } else {
            self.scale(&f.inv(self.leading_coeff()).unwrap())
        }
    }

    /// Reinterprets the coefficients in another ring with the same variables.
    pub fn map_ring(&self, ring: &Arc<Ring>) -> Result<Poly> {
        if ring.order() != self.ring.order() {
            return Err(Error::ContextMismatch);
        }
        let f = ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.clone(), f.convert(c)?));
        }
        Ok(Poly::from_terms(ring, terms))
    }

    /// Compares the term maps from the greatest monomial down.
    pub fn cmp_terms(&self, other: &Poly) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    o => return o,
                },
            }
        }
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Coeff>, f: Field, m: Monomial, c: Coeff) {
    match map.get_mut(&m) {
        Some(x) => *x = f.add(x, &c),
        None => {
            map.insert(m, c);
        }
    }
}

/// Compares polynomials by rank: constants first, then main variable, then
/// main degree. `Equal` means the two are similar.
pub fn rank_compare(p: &Poly, q: &Poly) -> Ordering {
    p.rank().cmp(&q.rank())
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.same_ring(other)
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical term-map order; only meaningful within one ring.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_terms(other)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field();
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                assert!(self.same_ring(rhs), "polynomials belong to different rings");
                $body(self, rhs)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Poly, b: &Poly| a.add_unchecked(b));
binop!(Sub, sub, |a: &Poly, b: &Poly| a.add_unchecked(&-b));
binop!(Mul, mul, |a: &Poly, b: &Poly| a.mul_unchecked(b));
