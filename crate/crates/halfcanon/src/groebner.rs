//! Buchberger's algorithm with Gebauer-Moeller pair elimination.
//!
//! Pair selection follows the normal strategy (smallest lcm in the ring
//! order) with sugar degree as tiebreak, so the engine stays deterministic
//! and behaves on the inhomogeneous inputs produced by the auxiliary-variable
//! intersection trick. Bases are returned reduced: pairwise auto-reduced,
//! monic, sorted ascending by leading monomial, hence unique per (ideal, order).

use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::RingRef;

#[derive(Clone)]
struct BasisElem {
    poly: Poly, // monic
    lt: Monomial,
    sugar: u32,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Full division remainder of `f` by `basis`; returns the remainder and the
/// sugar degree accumulated along the reduction.
fn reduce_full(ring: &RingRef, mut h: Poly, mut sugar: u32, basis: &[BasisElem]) -> (Poly, u32) {
    let mut remainder: Vec<(Monomial, u64)> = Vec::new();
    'outer: while let Some((lm, lc)) = h.leading_term() {
        let lm = *lm;
        for b in basis {
            if b.lt.divides(&lm) {
                let m = lm.div(&b.lt);
                h = h.sub_scaled(lc, &m, &b.poly);
                sugar = sugar.max(m.degree() + b.sugar);
                continue 'outer;
            }
        }
        remainder.push((lm, lc));
        h = Poly::from_sorted_unchecked(ring, h.terms()[1..].to_vec());
    }
    (Poly::from_sorted_unchecked(ring, remainder), sugar)
}

fn s_poly(_ring: &RingRef, a: &BasisElem, b: &BasisElem, lcm: &Monomial) -> Poly {
    // both monic, so no leading-coefficient scaling
    let ma = lcm.div(&a.lt);
    let mb = lcm.div(&b.lt);
    a.poly.mul_term(&ma, 1).sub(&b.poly.mul_term(&mb, 1))
    // caller computes sugar
}

/// Gebauer-Moeller update: prunes the pair set after appending basis element `t`.
fn update_pairs(ring: &RingRef, basis: &[BasisElem], pairs: &mut Vec<Pair>, t: usize) {
    let lt_t = basis[t].lt;
    let mut fresh: Vec<Pair> = (0..t)
        .map(|i| {
            let lcm = basis[i].lt.lcm(&lt_t);
            let sugar = (basis[i].sugar + lcm.div(&basis[i].lt).degree())
                .max(basis[t].sugar + lcm.div(&lt_t).degree());
            Pair { i, j: t, lcm, sugar }
        })
        .collect();

    // M criterion: drop (i,t) when another new pair's lcm strictly divides its lcm.
    let keep: Vec<bool> = (0..fresh.len())
        .map(|a| {
            !fresh.iter().enumerate().any(|(b, q)| {
                b != a && q.lcm.divides(&fresh[a].lcm) && q.lcm != fresh[a].lcm
            })
        })
        .collect();
    let mut fresh: Vec<Pair> = fresh
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();

    // F + B criteria: group equal lcms; a coprime member kills the whole
    // class, otherwise one representative survives.
    fresh.sort_by(|a, b| ring.cmp_mono(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)));
    let mut survivors: Vec<Pair> = Vec::new();
    let mut idx = 0;
    while idx < fresh.len() {
        let mut end = idx + 1;
        while end < fresh.len() && fresh[end].lcm == fresh[idx].lcm {
            end += 1;
        }
        let class = &fresh[idx..end];
        let coprime = class
            .iter()
            .any(|p| basis[p.i].lt.coprime(&lt_t));
        if !coprime {
            survivors.push(class[0].clone());
        }
        idx = end;
    }

    // Prune old pairs made redundant by the new leading term.
    pairs.retain(|p| {
        !(lt_t.divides(&p.lcm)
            && basis[p.i].lt.lcm(&lt_t) != p.lcm
            && basis[p.j].lt.lcm(&lt_t) != p.lcm)
    });
    pairs.extend(survivors);
}

fn select_pair(ring: &RingRef, pairs: &mut Vec<Pair>) -> Pair {
    let mut best = 0;
    for k in 1..pairs.len() {
        let a = &pairs[k];
        let b = &pairs[best];
        let ord = ring
            .cmp_mono(&a.lcm, &b.lcm)
            .then(a.sugar.cmp(&b.sugar))
            .then(a.i.cmp(&b.i))
            .then(a.j.cmp(&b.j));
        if ord == std::cmp::Ordering::Less {
            best = k;
        }
    }
    pairs.swap_remove(best)
}

/// Raw Buchberger loop; the result is a (not yet reduced) Groebner basis of
/// monic elements containing the nonzero input generators (made monic).
pub fn buchberger(gens: &[Poly]) -> Vec<Poly> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let mut basis: Vec<BasisElem> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = g.monic();
        let lt = *g.leading_monomial().unwrap();
        let sugar = g.degree().unwrap();
        basis.push(BasisElem { poly: g, lt, sugar });
        update_pairs(&ring, &basis, &mut pairs, basis.len() - 1);
    }

    while !pairs.is_empty() {
        let pair = select_pair(&ring, &mut pairs);
        let s = s_poly(&ring, &basis[pair.i], &basis[pair.j], &pair.lcm);
        let (red, sugar) = reduce_full(&ring, s, pair.sugar, &basis);
        if red.is_zero() {
            continue;
        }
        let red = red.monic();
        let lt = *red.leading_monomial().unwrap();
        basis.push(BasisElem { poly: red, lt, sugar });
        update_pairs(&ring, &basis, &mut pairs, basis.len() - 1);
    }

    basis.into_iter().map(|b| b.poly).collect()
}

/// Inter-reduces a Groebner basis into the reduced basis: minimal leading
/// terms, fully tail-reduced, monic, sorted ascending by leading monomial.
pub fn reduce_basis(basis: Vec<Poly>) -> Vec<Poly> {
    let Some(first) = basis.iter().find(|g| !g.is_zero()) else {
        return Vec::new();
    };
    let ring = first.ring().clone();

    // Keep only elements with minimal leading terms (first wins on ties).
    let mut kept: Vec<Poly> = Vec::new();
    for g in basis.into_iter().filter(|g| !g.is_zero()) {
        let lt = *g.leading_monomial().unwrap();
        if kept
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(&lt))
        {
            continue;
        }
        kept.retain(|h| !lt.divides(h.leading_monomial().unwrap()));
        kept.push(g);
    }

    let mut reduced: Vec<Poly> = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<Poly> = kept[..i]
            .iter()
            .chain(kept[i + 1..].iter())
            .cloned()
            .collect();
        reduced.push(normal_form(&kept[i], &others).monic());
    }
    // canonical listing: degree ascending, then leading monomial descending
    reduced.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        la.degree()
            .cmp(&lb.degree())
            .then_with(|| ring.cmp_mono(lb, la))
    });
    reduced
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn reduced_groebner(gens: &[Poly]) -> Vec<Poly> {
    reduce_basis(buchberger(gens))
}

/// Remainder of `f` on full division by `basis` (no term of the result is
/// divisible by any basis leading term). `f - normal_form(f)` lies in the
/// ideal; the remainder is zero iff `f` does.
pub fn normal_form(f: &Poly, basis: &[Poly]) -> Poly {
    let ring = f.ring().clone();
    let elems: Vec<BasisElem> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| BasisElem {
            poly: g.monic(),
            lt: *g.leading_monomial().unwrap(),
            sugar: 0,
        })
        .collect();
    reduce_full(&ring, f.clone(), 0, &elems).0
}

/// Elements of the reduced basis free of the leading `cut` variables. With a
/// block order eliminating those variables this is a Groebner basis of the
/// elimination ideal.
pub fn eliminate(gens: &[Poly], cut: usize) -> Vec<Poly> {
    let front: Vec<usize> = (0..cut).collect();
    reduced_groebner(gens)
        .into_iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.avoids(&front)))
        .collect()
}

/// Definitional Groebner test: every S-polynomial of the basis reduces to zero.
pub fn all_spolys_reduce_to_zero(basis: &[Poly]) -> bool {
    let elems: Vec<BasisElem> = basis
        .iter()
        .map(|g| BasisElem {
            poly: g.monic(),
            lt: *g.leading_monomial().unwrap(),
            sugar: 0,
        })
        .collect();
    let Some(first) = basis.first() else {
        return true;
    };
    let ring = first.ring().clone();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            let lcm = elems[i].lt.lcm(&elems[j].lt);
            let s = s_poly(&ring, &elems[i], &elems[j], &lcm);
            if !reduce_full(&ring, s, 0, &elems).0.is_zero() {
                return false;
            }
        }
    }
    true
}
