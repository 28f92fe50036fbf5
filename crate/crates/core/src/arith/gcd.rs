//! Multivariate gcd by recursion on the greatest variable with primitive
//! remainder sequences, short-circuited by a modular coprimality test.

use super::field::mod_inverse;
use super::poly::Poly;
use super::pseudo::prem;
use super::ring::Var;

/// 2^61 - 1; used for the coprimality test over the rationals.
const TEST_PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u32, m: u64) -> u64 {
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Coefficients in `w`, modulo `m`, of `p` with every other variable sent
/// to `point`. `None` if a coefficient does not reduce.
fn specialize(p: &Poly, w: Var, point: &[u64], m: u64) -> Option<Vec<u64>> {
    let f = p.field();
    let mut out = vec![0u64; p.degree(w) as usize + 1];
    for (mono, c) in p.terms() {
        let mut t = f.residue(c, m).ok()?;
        for (i, &e) in mono.exponents().iter().enumerate() {
            if i != w.0 && e > 0 {
                t = mulmod(t, powmod(point[i], e, m), m);
            }
        }
        let k = mono.degree(w) as usize;
        out[k] = (out[k] + t) % m;
    }
    Some(out)
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree of the gcd of two univariate polynomials over GF(m).
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, m: u64) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = mod_inverse(*b.last().unwrap(), m).unwrap();
        while a.len() >= b.len() {
            let q = mulmod(*a.last().unwrap(), inv, m);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + m - mulmod(q, bc, m)) % m;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True only if `a` and `b` have no common factor: for each shared variable,
/// an image with all other variables specialized keeps both leading
/// coefficients and has a trivial gcd. A false answer proves nothing.
fn certainly_coprime(a: &Poly, b: &Poly) -> bool {
    let ch = a.field().characteristic();
    let m = if ch == 0 { TEST_PRIME } else { ch };
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let point: Vec<u64> = (0..a.ring().nvars())
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 3) % m
        })
        .collect();
    a.ring()
        .vars()
        .filter(|&w| a.contains_var(w) && b.contains_var(w))
        .all(|w| {
            let (Some(fa), Some(fb)) = (specialize(a, w, &point, m), specialize(b, w, &point, m)) else {
                return false;
            };
            fa.last() != Some(&0) && fb.last() != Some(&0) && gcd_degree_mod(fa, fb, m) == 0
        })
}

/// Greatest common divisor, in unit normal form (see [`Poly::normalize_unit`]).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    assert!(a.same_ring(b), "polynomials belong to different rings");
    if a.is_zero() {
        return b.normalize_unit();
    }
    if b.is_zero() {
        return a.normalize_unit();
    }
    if certainly_coprime(a, b) {
        return Poly::one(a.ring());
    }
    let v = match a.mvar().max(b.mvar()) {
        None => return Poly::one(a.ring()),
        Some(v) => v,
    };
    if !a.contains_var(v) {
        return gcd(a, &content(b, v));
    }
    if !b.contains_var(v) {
        return gcd(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree(v) < g.degree(v) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = prem(&f, &g, v).expect("divisor has positive degree");
        if r.is_zero() {
            break;
        }
        if !r.contains_var(v) {
            return c.normalize_unit();
        }
        f = g;
        g = primitive_part(&r, v).primitive();
    }
    (&c * &primitive_part(&g, v)).normalize_unit()
}

/// Gcd of the coefficients of `p` viewed in `v`.
pub fn content(p: &Poly, v: Var) -> Poly {
    let mut acc = Poly::zero(p.ring());
    for c in p.coeffs_in(v).into_iter().rev() {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_constant() {
            return Poly::one(p.ring());
        }
    }
    acc
}

/// `p` divided by its content in `v`.
pub fn primitive_part(p: &Poly, v: Var) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    p.div_exact(&content(p, v)).expect("content divides")
}

/// Removes every factor of `p` that does not involve its main variable.
pub fn lower_content_free(p: &Poly) -> Poly {
    match p.mvar() {
        Some(v) => primitive_part(p, v).normalize_unit(),
        None => p.normalize_unit(),
    }
}

/// Product of the distinct irreducible factors of `p`, which has the same
/// zero set as `p`. In characteristic `c`, factors in a variable whose degree
/// reaches `c` are left as they are. Returns `p` itself when nothing repeats,
/// up to the sign, which is chosen to make the leading coefficient positive.
pub fn radical(p: &Poly) -> Poly {
    let r = radical_rec(p);
    let r = if r.total_degree() == p.total_degree() {
        p.clone()
    } else {
        r.primitive()
    };
    if !r.is_zero() && r.leading_coeff().is_negative() {
        -r
    } else {
        r
    }
}

fn radical_rec(p: &Poly) -> Poly {
    let Some(v) = p.mvar() else {
        return p.clone();
    };
    let c = content(p, v);
    let pp = p.div_exact(&c).expect("content divides");
    let ch = p.field().characteristic();
    let top = if pp.degree(v) < 2 || (ch != 0 && u64::from(pp.degree(v)) >= ch) {
        pp
    } else {
        let g = gcd(&pp, &pp.derivative(v));
        pp.div_exact(&g).expect("gcd divides")
    };
    if c.is_constant() {
        top
    } else {
        &radical_rec(&c) * &top
    }
}
