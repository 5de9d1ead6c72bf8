//! Homogeneous ideals with cached Groebner data and the ideal-theoretic
//! toolbox: membership, sum, product, intersection, colon, saturation,
//! elimination, Hilbert data.
//!
//! Caches are write-once (`OnceLock`), so ideals can be shared freely across
//! threads; recomputation races are benign and produce identical values.

use std::sync::{Arc, OnceLock};

use crate::error::Result;
use crate::groebner::{self, normal_form};
use crate::hilbert::HilbertData;
use crate::poly::Poly;
use crate::ring::RingRef;

#[derive(Clone)]
pub struct Ideal {
    inner: Arc<Inner>,
}

struct Inner {
    ring: RingRef,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
    hilbert: OnceLock<HilbertData>,
}

impl Ideal {
    /// Builds an ideal from homogeneous generators (zeros are dropped).
    pub fn new(ring: &RingRef, gens: Vec<Poly>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            assert!(g.ring() == ring, "generator from a different ring");
            if g.is_zero() {
                continue;
            }
            g.homogeneous_degree()?;
            kept.push(g);
        }
        Ok(Ideal {
            inner: Arc::new(Inner {
                ring: ring.clone(),
                gens: kept,
                gb: OnceLock::new(),
                hilbert: OnceLock::new(),
            }),
        })
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![]).expect("no generators to reject")
    }

    pub fn ring(&self) -> &RingRef {
        &self.inner.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.inner.gens
    }

    /// The reduced Groebner basis (cached).
    pub fn groebner(&self) -> &[Poly] {
        self.inner
            .gb
            .get_or_init(|| groebner::reduced_groebner(&self.inner.gens))
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form(f, self.groebner())
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens().iter().all(|g| self.contains(g))
    }

    /// Equality of ideals: identical reduced Groebner bases.
    pub fn ideal_eq(&self, other: &Ideal) -> bool {
        self.ring() == other.ring() && self.groebner() == other.groebner()
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner();
        gb.len() == 1 && gb[0].degree() == Some(0)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.groebner().is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.inner.gens.clone();
        gens.extend(other.inner.gens.iter().cloned());
        Ideal::new(self.ring(), gens).expect("generators already homogeneous")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in self.gens() {
            for b in other.gens() {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(self.ring(), gens).expect("products of homogeneous are homogeneous")
    }

    /// I ∩ J by the auxiliary-variable construction: eliminate w from
    /// w·I + (1-w)·J in a block order with w leading.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert!(self.ring() == other.ring(), "ideals in different rings");
        let ring = self.ring();
        if self.inner.gens.is_empty() || other.inner.gens.is_empty() {
            return Ideal::zero(ring);
        }
        let ext = ring.extend_front(&["w@"]).expect("room for one aux var");
        let w = Poly::var(&ext, 0);
        let one_minus_w = Poly::constant(&ext, 1).sub(&w);
        let mut gens: Vec<Poly> = Vec::new();
        for g in self.gens() {
            gens.push(w.mul(&g.lift_front(&ext, 1)));
        }
        for g in other.gens() {
            gens.push(one_minus_w.mul(&g.lift_front(&ext, 1)));
        }
        let elim = groebner::eliminate(&gens, 1);
        let down: Vec<Poly> = elim
            .iter()
            .map(|g| g.contract_front(ring, 1).expect("free of w by filter"))
            .collect();
        Ideal::new(ring, down).expect("intersection of homogeneous ideals is homogeneous")
    }

    /// Colon by a single polynomial: (I : g) = (I ∩ (g)) / g.
    pub fn colon_poly(&self, g: &Poly) -> Ideal {
        if g.is_zero() {
            // (I : 0) = (1)
            return Ideal::new(self.ring(), vec![Poly::constant(self.ring(), 1)]).unwrap();
        }
        if g.degree() == Some(0) {
            return self.clone();
        }
        let principal = Ideal::new(self.ring(), vec![g.clone()]).expect("homogeneous");
        let meet = self.intersect(&principal);
        let divided: Vec<Poly> = meet
            .gens()
            .iter()
            .map(|h| {
                h.divide_exact(g)
                    .expect("element of I ∩ (g) is a multiple of g")
            })
            .collect();
        Ideal::new(self.ring(), divided).expect("quotients stay homogeneous")
    }

    /// Ideal quotient (I : J) = { f : f·J ⊆ I }, as the intersection of the
    /// single-generator colons. Generators of J already lying in I give the
    /// unit colon and are skipped.
    pub fn colon(&self, other: &Ideal) -> Ideal {
        let mut acc: Option<Ideal> = None;
        for g in other.gens() {
            if self.contains(g) {
                continue;
            }
            let part = self.colon_poly(g);
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part),
            });
        }
        match acc {
            None => Ideal::new(self.ring(), vec![Poly::constant(self.ring(), 1)]).unwrap(),
            Some(ideal) => ideal,
        }
    }

    /// Saturation (I : J^∞) by iterated colon with fixed-point detection.
    /// Returns the stable ideal and the number of colon steps taken to
    /// reach it (the saturation index).
    pub fn saturate(&self, other: &Ideal) -> (Ideal, usize) {
        let mut current = self.clone();
        let mut steps = 0usize;
        loop {
            let next = current.colon(other);
            if next.ideal_eq(&current) {
                return (current, steps);
            }
            current = next;
            steps += 1;
        }
    }

    /// One colon step suffices to decide saturation.
    pub fn is_saturated_wrt(&self, other: &Ideal) -> bool {
        self.colon(other).ideal_eq(self)
    }

    /// The irrelevant maximal ideal (x0, ..., x_{n-1}).
    pub fn irrelevant(ring: &RingRef) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    /// Hilbert data of S/I from the leading-term ideal (cached).
    pub fn hilbert(&self) -> &HilbertData {
        self.inner.hilbert.get_or_init(|| {
            let lts = self
                .groebner()
                .iter()
                .map(|g| *g.leading_monomial().expect("basis elements nonzero"))
                .collect();
            HilbertData::from_leading_terms(lts, self.ring().nvars())
        })
    }

    /// (degree, genus) for a curve; errors when the scheme is not a curve.
    pub fn curve_invariants(&self) -> Result<(i64, i64)> {
        let h = self.hilbert();
        Ok((h.degree, h.genus_checked()?))
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::ring::Ring;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r6() -> RingRef {
        Ring::p5(32003).unwrap()
    }

    fn x(ring: &RingRef, i: usize) -> Poly {
        Poly::var(ring, i)
    }

    fn ideal(ring: &RingRef, gens: Vec<Poly>) -> Ideal {
        Ideal::new(ring, gens).unwrap()
    }

    #[test]
    fn intersect_principal() {
        let r = r6();
        let a = ideal(&r, vec![x(&r, 0)]);
        let b = ideal(&r, vec![x(&r, 1)]);
        let meet = a.intersect(&b);
        assert_eq!(meet.groebner(), &[x(&r, 0).mul(&x(&r, 1))]);
    }

    #[test]
    fn intersect_self_is_identity() {
        let r = r6();
        let a = ideal(&r, vec![x(&r, 0).mul(&x(&r, 5)), x(&r, 2)]);
        assert!(a.intersect(&a).ideal_eq(&a));
    }

    #[test]
    fn intersect_two_planes() {
        // (x0,x1) ∩ (x2,x3) = (x0x2, x0x3, x1x2, x1x3)
        let r = r6();
        let a = ideal(&r, vec![x(&r, 0), x(&r, 1)]);
        let b = ideal(&r, vec![x(&r, 2), x(&r, 3)]);
        let meet = a.intersect(&b);
        let expected = ideal(
            &r,
            vec![
                x(&r, 0).mul(&x(&r, 2)),
                x(&r, 0).mul(&x(&r, 3)),
                x(&r, 1).mul(&x(&r, 2)),
                x(&r, 1).mul(&x(&r, 3)),
            ],
        );
        assert!(meet.ideal_eq(&expected));
    }

    #[test]
    fn colon_examples() {
        let r = r6();
        // ((x0x5, x1x5) : (x0, x1)) = (x5)
        let i = ideal(&r, vec![x(&r, 0).mul(&x(&r, 5)), x(&r, 1).mul(&x(&r, 5))]);
        let j = ideal(&r, vec![x(&r, 0), x(&r, 1)]);
        let q = i.colon(&j);
        assert!(q.ideal_eq(&ideal(&r, vec![x(&r, 5)])));

        // (I : (1)) = I
        let one = ideal(&r, vec![Poly::constant(&r, 1)]);
        assert!(i.colon(&one).ideal_eq(&i));
    }

    #[test]
    fn colon_double_inclusion_oracle() {
        // membership check both ways on random elements
        let r = r6();
        let i = ideal(&r, vec![x(&r, 0).mul(&x(&r, 5)), x(&r, 1).mul(&x(&r, 5))]);
        let j = ideal(&r, vec![x(&r, 0), x(&r, 1)]);
        let q = i.colon(&j);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let vars: Vec<usize> = (0..6).collect();
        // q * J ⊆ I on random combinations of q's generators
        for _ in 0..20 {
            let mut elem = Poly::zero(&r);
            for g in q.gens() {
                let c = crate::poly::random_form(&r, 1, &vars, None, &mut rng).unwrap();
                elem = elem.add(&c.mul(g));
            }
            for jg in j.gens() {
                assert!(i.contains(&elem.mul(jg)));
            }
        }
        // and random degree-2 elements NOT in q stay out: x3^2 should not be in q
        let probe = x(&r, 3).mul(&x(&r, 3));
        assert!(!q.contains(&probe));
    }

    #[test]
    fn saturation_fixed_points() {
        let r = r6();
        let m = Ideal::irrelevant(&r);
        // saturate(x0 * m, m) = (x0)
        let x0m = ideal(&r, vec![x(&r, 0)]).product(&m);
        let (sat, steps) = x0m.saturate(&m);
        assert!(sat.ideal_eq(&ideal(&r, vec![x(&r, 0)])));
        assert!(steps >= 1);

        // already-saturated input is a fixed point in one colon step
        let line = ideal(&r, vec![x(&r, 0), x(&r, 1), x(&r, 2), x(&r, 5)]);
        assert!(line.is_saturated_wrt(&m));
        let (sat2, steps2) = line.saturate(&m);
        assert!(sat2.ideal_eq(&line));
        assert_eq!(steps2, 0);
    }

    #[test]
    fn hilbert_line_and_quartic() {
        let r = r6();
        let line = ideal(&r, vec![x(&r, 0), x(&r, 1), x(&r, 2), x(&r, 5)]);
        let h = line.hilbert();
        assert_eq!(h.proj_dim(), 1);
        assert_eq!(h.degree, 1);
        assert_eq!(h.genus, Some(0));

        // smooth plane quartic x3^4 + x4^4 + x5^4 in the plane x0=x1=x2=0
        let quartic = x(&r, 3)
            .mul(&x(&r, 3))
            .mul(&x(&r, 3))
            .mul(&x(&r, 3))
            .add(&x(&r, 4).mul(&x(&r, 4)).mul(&x(&r, 4)).mul(&x(&r, 4)))
            .add(&x(&r, 5).mul(&x(&r, 5)).mul(&x(&r, 5)).mul(&x(&r, 5)));
        let c2 = ideal(&r, vec![x(&r, 0), x(&r, 1), x(&r, 2), quartic]);
        assert_eq!(c2.curve_invariants().unwrap(), (4, 3));
    }

    #[test]
    fn hilbert_function_matches_rank_counting() {
        // dimension of the degree-m piece of S/I by linear algebra over
        // monomials, m <= 6, against the series-derived Hilbert function
        let r = r6();
        let gens = vec![
            x(&r, 0).mul(&x(&r, 5)),
            x(&r, 1).mul(&x(&r, 5)),
            x(&r, 0).mul(&x(&r, 2)).sub(&x(&r, 1).mul(&x(&r, 1))),
        ];
        let i = ideal(&r, gens.clone());
        let field = r.field();
        for m in 0..=6u32 {
            // span of { u * g : deg(u g) = m } inside the degree-m monomials
            let all: Vec<crate::monomial::Monomial> =
                crate::monomial::monomials_of_degree(&(0..6).collect::<Vec<_>>(), m);
            let index: std::collections::HashMap<_, _> =
                all.iter().enumerate().map(|(k, mm)| (*mm, k)).collect();
            let mut rows: Vec<Vec<u64>> = Vec::new();
            for g in &gens {
                let d = g.homogeneous_degree().unwrap();
                if d > m {
                    continue;
                }
                for u in crate::monomial::monomials_of_degree(&(0..6).collect::<Vec<_>>(), m - d) {
                    let prod = g.mul_term(&u, 1);
                    let mut row = vec![0u64; all.len()];
                    for (mm, c) in prod.terms() {
                        row[index[mm]] = *c;
                    }
                    rows.push(row);
                }
            }
            // Gaussian elimination rank over GF(p)
            let mut rank = 0usize;
            let ncols = all.len();
            let mut mat = rows;
            let mut pivot_col = 0usize;
            while pivot_col < ncols && rank < mat.len() {
                if let Some(pr) = (rank..mat.len()).find(|&rr| mat[rr][pivot_col] != 0) {
                    mat.swap(rank, pr);
                    let inv = field.inv(mat[rank][pivot_col]).unwrap();
                    for rr in (rank + 1)..mat.len() {
                        let factor = field.mul(mat[rr][pivot_col], inv);
                        if factor != 0 {
                            for cc in pivot_col..ncols {
                                let sub = field.mul(factor, mat[rank][cc]);
                                mat[rr][cc] = field.sub(mat[rr][cc], sub);
                            }
                        }
                    }
                    rank += 1;
                }
                pivot_col += 1;
            }
            let expected = all.len() as i64 - rank as i64;
            assert_eq!(
                i.hilbert().hilbert_function(m as i64),
                expected,
                "degree {m} piece"
            );
        }
    }

    #[test]
    fn rejects_inhomogeneous_generators() {
        let r = r6();
        let bad = x(&r, 0).add(&Poly::constant(&r, 1));
        assert!(matches!(
            Ideal::new(&r, vec![bad]),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn degree_additivity_on_transverse_unions() {
        let r = r6();
        // two disjoint lines in P^5
        let l1 = ideal(&r, vec![x(&r, 0), x(&r, 1), x(&r, 2), x(&r, 3)]);
        let l2 = ideal(&r, vec![x(&r, 2), x(&r, 3), x(&r, 4), x(&r, 5)]);
        let union = l1.intersect(&l2);
        assert_eq!(union.hilbert().degree, 2);
        assert_eq!(union.hilbert().krull_dim, 2);
    }
}
