//! Dense univariate polynomials over GF(p), coefficients low degree first.
//! Written independently of the library so that it can serve as an oracle.

use regchains::arith::{Poly, Var};

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

pub fn monic(a: &[u64], p: u64) -> Vec<u64> {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&lc) => {
            let i = inv(lc, p);
            a.iter().map(|c| c * i % p).collect()
        }
    }
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by zero");
    let ib = inv(b[db], p);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r).filter(|&d| d >= db) {
        let c = r[dr] * ib % p;
        for (j, &bj) in b.iter().enumerate() {
            let k = dr - db + j;
            r[k] = (r[k] + p - c * bj % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic gcd; the gcd of two zero polynomials is zero.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn scale(a: &[u64], c: u64, p: u64) -> Vec<u64> {
    trim(a.iter().map(|x| x * (c % p) % p).collect())
}

/// Determinant mod p by Gaussian elimination.
pub fn det(m: &[Vec<u64>], p: u64) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut d = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_multiple_of(p)) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            d = (p - d) % p;
        }
        d = d * a[k][k] % p;
        let ik = inv(a[k][k], p);
        let pivot = a[k].clone();
        for row in a.iter_mut().skip(k + 1) {
            let f = row[k] * ik % p;
            for (x, &y) in row[k..].iter_mut().zip(&pivot[k..]) {
                *x = (*x + p - f * y % p) % p;
            }
        }
    }
    d
}

/// Determinant polynomial of rows given as coefficient lists (low degree
/// first); the matrix has `1 + max degree` columns.
pub fn dpol(rows: &[Vec<u64>], p: u64) -> Vec<u64> {
    let k = rows.len();
    let width = 1 + rows.iter().filter_map(|r| degree(r)).max().unwrap_or(0);
    assert!(k <= width && k > 0);
    // column c holds the coefficient of x^(width - 1 - c)
    let m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| (0..width).map(|c| r.get(width - 1 - c).copied().unwrap_or(0)).collect())
        .collect();
    let mut out = vec![0; width - k + 1];
    for col in k - 1..width {
        let sub: Vec<Vec<u64>> = m
            .iter()
            .map(|row| {
                let mut r = row[..k - 1].to_vec();
                r.push(row[col]);
                r
            })
            .collect();
        out[width - 1 - col] = det(&sub, p);
    }
    trim(out)
}

pub fn shift(a: &[u64], e: usize) -> Vec<u64> {
    let mut v = vec![0; e];
    v.extend_from_slice(a);
    trim(v)
}

/// Substitutes `values[i]` for every variable other than `v` and returns the
/// coefficients in `v`. Only for polynomials over GF(p).
pub fn specialize(f: &Poly, v: Var, values: &[u64], p: u64) -> Vec<u64> {
    let field = f.field();
    let mut out = vec![0u64; f.degree(v) as usize + 1];
    for (m, c) in f.terms() {
        let mut t = field.residue(c, p).unwrap();
        for (i, &e) in m.exponents().iter().enumerate() {
            if i != v.0 {
                t = t * pow(values[i], e as u64, p) % p;
            }
        }
        let k = m.exponents().get(v.0).copied().unwrap_or(0) as usize;
        out[k] = (out[k] + t) % p;
    }
    trim(out)
}
