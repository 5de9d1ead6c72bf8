//! Elements of free modules over the polynomial ring, and module monomial
//! orders including the Schreyer orders induced by Groebner bases.
//!
//! A module term is (component, monomial, coefficient); vectors keep their
//! terms sorted strictly descending under the active order. The order is
//! passed explicitly since Schreyer orders are built level by level during a
//! resolution.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::RingRef;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModTerm {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: u64,
}

#[derive(Debug, Clone)]
pub enum ModOrder {
    /// Term over position: ring order on monomials, smaller component wins ties.
    Top,
    /// Components below `split` dominate the rest; TOP inside each part.
    /// An elimination order on components: Groebner elements supported
    /// entirely on components >= split generate the "kernel part".
    PotElim { split: u32 },
    /// Order induced by the leading terms of the previous level's basis:
    /// compare `m * lt(g_i)` vs `n * lt(g_j)` one level down, break ties by
    /// smaller index.
    Schreyer(Arc<SchreyerOrder>),
}

#[derive(Debug)]
pub struct SchreyerOrder {
    pub prev: ModOrder,
    /// Leading (monomial, component) of each previous-level basis element.
    pub leads: Vec<(Monomial, u32)>,
}

impl ModOrder {
    pub fn cmp(&self, ring: &RingRef, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        match self {
            ModOrder::Top => ring.cmp_mono(a.0, b.0).then_with(|| b.1.cmp(&a.1)),
            ModOrder::PotElim { split } => {
                let ga = a.1 >= *split;
                let gb = b.1 >= *split;
                // the leading group (false) is greater
                gb.cmp(&ga)
                    .then_with(|| ring.cmp_mono(a.0, b.0).then_with(|| b.1.cmp(&a.1)))
            }
            ModOrder::Schreyer(s) => {
                let (la, ca) = &s.leads[a.1 as usize];
                let (lb, cb) = &s.leads[b.1 as usize];
                let ma = a.0.mul(la);
                let mb = b.0.mul(lb);
                s.prev
                    .cmp(ring, (&ma, *ca), (&mb, *cb))
                    .then_with(|| b.1.cmp(&a.1))
            }
        }
    }
}

/// An element of a free module; terms strictly descending under the ambient order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModVec {
    terms: Vec<ModTerm>,
}

impl ModVec {
    pub fn zero() -> ModVec {
        ModVec { terms: Vec::new() }
    }

    pub fn from_terms(ring: &RingRef, order: &ModOrder, mut raw: Vec<ModTerm>) -> ModVec {
        let p = ring.field().modulus();
        for t in raw.iter_mut() {
            t.coeff %= p;
        }
        raw.sort_by(|a, b| order.cmp(ring, (&b.mono, b.comp), (&a.mono, a.comp)));
        let mut terms: Vec<ModTerm> = Vec::with_capacity(raw.len());
        for t in raw {
            if let Some(last) = terms.last_mut() {
                if last.comp == t.comp && last.mono == t.mono {
                    last.coeff = ring.field().add(last.coeff, t.coeff);
                    if last.coeff == 0 {
                        terms.pop();
                    }
                    continue;
                }
            }
            if t.coeff != 0 {
                terms.push(t);
            }
        }
        ModVec { terms }
    }

    /// The vector `p * e_comp`.
    pub fn from_poly(ring: &RingRef, order: &ModOrder, p: &Poly, comp: u32) -> ModVec {
        let raw = p
            .terms()
            .iter()
            .map(|(m, c)| ModTerm {
                comp,
                mono: *m,
                coeff: *c,
            })
            .collect();
        ModVec::from_terms(ring, order, raw)
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    /// The component-`c` coordinate as a polynomial.
    pub fn coordinate(&self, ring: &RingRef, c: u32) -> Poly {
        let raw = self
            .terms
            .iter()
            .filter(|t| t.comp == c)
            .map(|t| (t.mono, t.coeff))
            .collect();
        Poly::from_terms(ring, raw)
    }

    pub fn min_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).min()
    }

    pub fn add(&self, ring: &RingRef, order: &ModOrder, other: &ModVec) -> ModVec {
        let f = ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match order.cmp(ring, (&a.mono, a.comp), (&b.mono, b.comp)) {
                Ordering::Greater => {
                    terms.push(*a);
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(*b);
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a.coeff, b.coeff);
                    if c != 0 {
                        terms.push(ModTerm { coeff: c, ..*a });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        ModVec { terms }
    }

    pub fn mul_term(&self, ring: &RingRef, mono: &Monomial, c: u64) -> ModVec {
        let f = ring.field();
        if c == 0 {
            return ModVec::zero();
        }
        // multiplying by a single term preserves sortedness under any order
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    comp: t.comp,
                    mono: t.mono.mul(mono),
                    coeff: f.mul(t.coeff, c),
                })
                .collect(),
        }
    }

    /// `self - c * mono * g`.
    pub fn sub_scaled(
        &self,
        ring: &RingRef,
        order: &ModOrder,
        c: u64,
        mono: &Monomial,
        g: &ModVec,
    ) -> ModVec {
        let neg = ring.field().neg(c);
        self.add(ring, order, &g.mul_term(ring, mono, neg))
    }

    /// Degree of a homogeneous element given the target's generator shifts.
    pub fn degree_with_shifts(&self, shifts: &[u32]) -> Option<u32> {
        self.terms
            .iter()
            .map(|t| t.mono.degree() + shifts[t.comp as usize])
            .max()
    }
}

/// Full division of `f` by `basis`; returns the remainder and, when `track`
/// is set, the quotients of a standard representation f = sum q_k g_k + rem.
pub fn reduce_modvec(
    ring: &RingRef,
    order: &ModOrder,
    f: &ModVec,
    basis: &[ModVec],
    track: bool,
) -> (ModVec, Option<Vec<Poly>>) {
    let field = ring.field();
    let leads: Vec<ModTerm> = basis
        .iter()
        .map(|g| *g.leading().expect("basis elements nonzero"))
        .collect();
    let mut quotients: Vec<Vec<(Monomial, u64)>> = if track {
        vec![Vec::new(); basis.len()]
    } else {
        Vec::new()
    };
    let mut h = f.clone();
    let mut remainder: Vec<ModTerm> = Vec::new();
    'outer: while let Some(lt) = h.leading().copied() {
        for (k, lead) in leads.iter().enumerate() {
            if lead.comp == lt.comp && lead.mono.divides(&lt.mono) {
                let m = lt.mono.div(&lead.mono);
                let q = field
                    .div(lt.coeff, lead.coeff)
                    .expect("leading coefficients nonzero");
                if track {
                    quotients[k].push((m, q));
                }
                h = h.sub_scaled(ring, order, q, &m, &basis[k]);
                continue 'outer;
            }
        }
        remainder.push(lt);
        h = ModVec {
            terms: h.terms[1..].to_vec(),
        };
    }
    let rem = ModVec { terms: remainder };
    let quots = track.then(|| {
        quotients
            .into_iter()
            .map(|raw| Poly::from_terms(ring, raw))
            .collect()
    });
    (rem, quots)
}

/// Module Buchberger. Plain all-pairs version: only same-component pairs are
/// formed and no product criterion is applied (it is not valid for modules).
/// Used for kernel computations on small inputs; resolutions go through the
/// Schreyer construction instead.
pub fn buchberger_modvec(ring: &RingRef, order: &ModOrder, gens: &[ModVec]) -> Vec<ModVec> {
    let field = ring.field();
    let mut basis: Vec<ModVec> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if basis[i].leading().unwrap().comp == basis[j].leading().unwrap().comp {
                pairs.push((i, j));
            }
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (li, lj) = (*basis[i].leading().unwrap(), *basis[j].leading().unwrap());
        let lcm = li.mono.lcm(&lj.mono);
        let mi = lcm.div(&li.mono);
        let mj = lcm.div(&lj.mono);
        let inv_i = field.inv(li.coeff).unwrap();
        let inv_j = field.inv(lj.coeff).unwrap();
        let s = basis[i]
            .mul_term(ring, &mi, inv_i)
            .sub_scaled(ring, order, inv_j, &mj, &basis[j]);
        let (red, _) = reduce_modvec(ring, order, &s, &basis, false);
        if !red.is_zero() {
            let t = basis.len();
            let comp = red.leading().unwrap().comp;
            for k in 0..t {
                if basis[k].leading().unwrap().comp == comp {
                    pairs.push((k, t));
                }
            }
            basis.push(red);
        }
    }
    basis
}
