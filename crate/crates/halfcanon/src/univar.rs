//! Dense univariate helpers over GF(p): extraction from a multivariate
//! polynomial supported on one variable, Euclidean gcd, squarefreeness.
//! Used by the reducedness test on zero-dimensional intersection schemes.

use crate::field::Fp;
use crate::poly::Poly;

/// Dense coefficient vector (ascending powers) of a polynomial supported on
/// the single variable `var`; None if any other variable occurs.
pub fn to_dense(f: &Poly, var: usize) -> Option<Vec<u64>> {
    let n = f.ring().nvars();
    let mut coeffs = vec![0u64; f.degree().map_or(0, |d| d as usize) + 1];
    for (m, c) in f.terms() {
        for v in 0..n {
            if v != var && m.exp(v) > 0 {
                return None;
            }
        }
        coeffs[m.exp(var) as usize] = *c;
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    Some(coeffs)
}

pub fn deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of a mod b (b nonzero).
fn rem(field: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let db = deg(b).expect("division by zero polynomial");
    let lead_inv = field.inv(b[db]).unwrap();
    let mut r = a.to_vec();
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let factor = field.mul(r[dr], lead_inv);
        for k in 0..=db {
            let sub = field.mul(factor, b[k]);
            r[dr - db + k] = field.sub(r[dr - db + k], sub);
        }
    }
    trim(r)
}

/// Monic gcd by the Euclidean algorithm.
pub fn gcd(field: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(field, &x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = deg(&x) {
        let inv = field.inv(x[d]).unwrap();
        for c in x.iter_mut() {
            *c = field.mul(*c, inv);
        }
    }
    x
}

pub fn derivative(field: Fp, a: &[u64]) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    trim(
        (1..a.len())
            .map(|k| field.mul(a[k], (k as u64) % field.modulus()))
            .collect(),
    )
}

/// Squarefree iff gcd(f, f') is constant. Valid here because the
/// characteristic exceeds every degree in play.
pub fn is_squarefree(field: Fp, a: &[u64]) -> bool {
    let da = derivative(field, a);
    if da.is_empty() {
        // constant, or characteristic divides every exponent
        return deg(a).is_none_or(|d| d == 0);
    }
    let g = gcd(field, a, &da);
    deg(&g) == Some(0)
}
