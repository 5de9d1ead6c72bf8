//! Hilbert series of monomial quotients by pivot-variable recursion.
//!
//! For a homogeneous ideal the Hilbert series of S/I equals that of the
//! leading-term quotient, so everything here works on monomial generator
//! sets. The series is N(t) / (1-t)^n; the recursion splits on a pivot
//! variable x via the exact sequence
//! 0 -> S/(M:x)(-1) -> S/M -> S/(M+(x)) -> 0.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Integer polynomials in one formal variable, dense coefficient vectors.
pub(crate) fn zpoly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub(crate) fn zpoly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zpoly_shift(a: &[i64], k: usize) -> Vec<i64> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + k];
    out[k..].copy_from_slice(a);
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Evaluates at t = 1.
fn eval_one(a: &[i64]) -> i64 {
    a.iter().sum()
}

/// Divides by (1 - t); caller guarantees a(1) = 0.
fn divide_by_one_minus_t(a: &[i64]) -> Vec<i64> {
    // a(t) = (1-t) q(t): q_0 = a_0, q_i = a_i + q_{i-1}
    let mut q = vec![0i64; a.len().saturating_sub(1)];
    let mut carry = 0i64;
    for i in 0..a.len().saturating_sub(1) {
        carry += a[i];
        q[i] = carry;
    }
    trim(q)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new(); // unit ideal: zero series
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let d = m.degree() as usize;
            let mut factor = vec![0i64; d + 1];
            factor[0] = 1;
            factor[d] = -1;
            acc = zpoly_mul(&acc, &factor);
        }
        return acc;
    }

    // pivot: the variable hitting the most generators
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (v, cnt) in counts.iter_mut().enumerate() {
            if m.exp(v) > 0 {
                *cnt += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&v| counts[v]).unwrap();

    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exp(pivot) > 0 {
                let mut n = *m;
                n.set_exp(pivot, m.exp(pivot) - 1);
                n
            } else {
                *m
            }
        })
        .collect();
    let mut sum: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exp(pivot) == 0)
        .cloned()
        .collect();
    sum.push(Monomial::var(pivot));

    zpoly_add(
        &zpoly_shift(&numerator_rec(colon, nvars), 1),
        &numerator_rec(sum, nvars),
    )
}

/// Hilbert data of a graded quotient S/I, computed from the leading terms of
/// a Groebner basis of I.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator N(t) of the series N(t) / (1-t)^nvars.
    pub numerator: Vec<i64>,
    pub nvars: usize,
    /// Krull dimension of S/I (0 for Artinian quotients and the zero ring).
    pub krull_dim: usize,
    /// Degree of the projective scheme: value at 1 of the fully reduced
    /// numerator. For Artinian quotients this is the k-vector-space length.
    pub degree: i64,
    /// Arithmetic genus, defined when the scheme is a curve (Krull dim 2).
    pub genus: Option<i64>,
}

impl HilbertData {
    pub fn from_leading_terms(lts: Vec<Monomial>, nvars: usize) -> HilbertData {
        let numerator = numerator_rec(lts, nvars);
        if numerator.is_empty() {
            // unit ideal
            return HilbertData {
                numerator,
                nvars,
                krull_dim: 0,
                degree: 0,
                genus: None,
            };
        }
        let mut reduced = numerator.clone();
        let mut cancelled = 0usize;
        while cancelled < nvars && eval_one(&reduced) == 0 {
            reduced = divide_by_one_minus_t(&reduced);
            cancelled += 1;
        }
        let krull_dim = nvars - cancelled;
        let degree = eval_one(&reduced);
        let genus = if krull_dim == 2 {
            // HP(m) = sum_j N*_j (m - j + 1) = d*m + (1 - g)
            let c: i64 = reduced
                .iter()
                .enumerate()
                .map(|(j, &n)| n * (1 - j as i64))
                .sum();
            Some(1 - c)
        } else {
            None
        };
        HilbertData {
            numerator,
            nvars,
            krull_dim,
            degree,
            genus,
        }
    }

    /// Projective dimension of the scheme (-1 when empty).
    pub fn proj_dim(&self) -> isize {
        self.krull_dim as isize - 1
    }

    pub fn genus_checked(&self) -> Result<i64> {
        self.genus.ok_or(Error::NotACurve {
            dim: self.proj_dim(),
        })
    }

    /// Exact Hilbert function value dim_k (S/I)_m.
    pub fn hilbert_function(&self, m: i64) -> i64 {
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                let x = m - j as i64;
                if x < 0 {
                    0
                } else {
                    c * binom(x + n - 1, n - 1)
                }
            })
            .sum()
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps)
    }

    #[test]
    fn polynomial_ring_itself() {
        let h = HilbertData::from_leading_terms(vec![], 6);
        assert_eq!(h.numerator, vec![1]);
        assert_eq!(h.krull_dim, 6);
        assert_eq!(h.hilbert_function(2), 21);
    }

    #[test]
    fn line_in_p5() {
        // (x0, x1, x2, x5): a line, HP = m + 1
        let h = HilbertData::from_leading_terms(
            vec![
                mono(&[1, 0, 0, 0, 0, 0]),
                mono(&[0, 1, 0, 0, 0, 0]),
                mono(&[0, 0, 1, 0, 0, 0]),
                mono(&[0, 0, 0, 0, 0, 1]),
            ],
            6,
        );
        assert_eq!(h.krull_dim, 2);
        assert_eq!(h.degree, 1);
        assert_eq!(h.genus, Some(0));
        assert_eq!(h.hilbert_function(3), 4);
    }

    #[test]
    fn irrelevant_ideal_is_artinian() {
        let gens = (0..6)
            .map(Monomial::var)
            .collect::<Vec<_>>();
        let h = HilbertData::from_leading_terms(gens, 6);
        assert_eq!(h.krull_dim, 0);
        assert_eq!(h.degree, 1); // the length of k
    }

    #[test]
    fn unit_ideal() {
        let h = HilbertData::from_leading_terms(vec![Monomial::one()], 6);
        assert_eq!(h.krull_dim, 0);
        assert_eq!(h.degree, 0);
        assert!(h.numerator.is_empty());
    }

    #[test]
    fn plane_quartic() {
        // quartic + 3 linear forms in P^5: degree 4, genus 3
        let h = HilbertData::from_leading_terms(
            vec![
                mono(&[1, 0, 0, 0, 0, 0]),
                mono(&[0, 1, 0, 0, 0, 0]),
                mono(&[0, 0, 1, 0, 0, 0]),
                mono(&[0, 0, 0, 4, 0, 0]),
            ],
            6,
        );
        assert_eq!(h.krull_dim, 2);
        assert_eq!(h.degree, 4);
        assert_eq!(h.genus, Some(3));
    }

    #[test]
    fn non_coprime_recursion() {
        // (x0*x1, x1*x2) in 3 vars: S/I has dim 2, degree 1+1? V = {x1=0} plane
        // union {x0=x2=0} line: Krull dimide 2? x1=0 plane (dim 2 affine cone =
        // Krull 2)... components: V(x1) Krull 2 and V(x0,x2) Krull 1: total 2.
        let h = HilbertData::from_leading_terms(
            vec![mono(&[1, 1, 0]), mono(&[0, 1, 1])],
            3,
        );
        assert_eq!(h.krull_dim, 2);
        // degree of top-dimensional part: the plane, degree 1
        assert_eq!(h.degree, 1);
    }
}
