//! Sparse multivariate polynomials over GF(p).
//!
//! Terms are kept strictly sorted, descending in the ring's monomial order,
//! with no zero coefficients, so iteration order is canonical and every
//! output is reproducible bit for bit. Polynomials are immutable after
//! construction and cheap to clone at the sizes this crate works with.

use rand::Rng;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::ring::{shift_monomial_down, shift_monomial_up, RingRef};

#[derive(Clone)]
pub struct Poly {
    ring: RingRef,
    /// (monomial, coefficient) pairs, descending, coefficients in (0, p).
    terms: Vec<(Monomial, u64)>,
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: i64) -> Poly {
        let c = ring.field().from_i64(c);
        let mut terms = Vec::new();
        if c != 0 {
            terms.push((Monomial::one(), c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &RingRef, i: usize) -> Poly {
        assert!(i < ring.nvars());
        Poly {
            ring: ring.clone(),
            terms: vec![(Monomial::var(i), 1)],
        }
    }

    pub fn term(ring: &RingRef, m: Monomial, c: i64) -> Poly {
        let c = ring.field().from_i64(c);
        let mut terms = Vec::new();
        if c != 0 {
            terms.push((m, c));
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs:
    /// sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, mut raw: Vec<(Monomial, u64)>) -> Poly {
        let p = ring.field().modulus();
        for t in raw.iter_mut() {
            t.1 %= p;
        }
        raw.sort_by(|a, b| ring.cmp_mono(&b.0, &a.0));
        let mut terms: Vec<(Monomial, u64)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            if let Some(last) = terms.last_mut() {
                if last.0 == m {
                    last.1 = ring.field().add(last.1, c);
                    if last.1 == 0 {
                        terms.pop();
                    }
                    continue;
                }
            }
            if c != 0 {
                terms.push((m, c));
            }
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already strictly sorted descending with nonzero coefficients;
    /// the reduction loops use this to avoid re-sorting.
    pub(crate) fn from_sorted_unchecked(ring: &RingRef, terms: Vec<(Monomial, u64)>) -> Poly {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_mono(&w[0].0, &w[1].0) == std::cmp::Ordering::Greater));
        debug_assert!(terms.iter().all(|&(_, c)| c != 0 && c < ring.field().modulus()));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, u64)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Total degree (max over terms); None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The common degree of all terms, or an error if mixed.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        let Some(d) = it.next() else {
            return Ok(0); // zero is homogeneous of any degree
        };
        if it.all(|e| e == d) {
            Ok(d)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_ok()
    }

    fn check_ring(&self, other: &Poly) {
        assert!(
            self.ring == other.ring,
            "ring context mismatch: {:?} vs {:?}",
            self.ring.vars(),
            other.ring.vars()
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check_ring(other);
        let f = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = self.terms[i];
            let (mb, cb) = other.terms[j];
            match self.ring.cmp_mono(&ma, &mb) {
                std::cmp::Ordering::Greater => {
                    terms.push((ma, ca));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    terms.push((mb, cb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = f.add(ca, cb);
                    if c != 0 {
                        terms.push((ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Poly {
        let f = self.ring.field();
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> Poly {
        let f = self.ring.field();
        let c = f.from_i64(c);
        if c == 0 {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|&(m, k)| (m, f.mul(k, c))).collect(),
        }
    }

    /// Multiplies by the single term `c * mono`.
    pub fn mul_term(&self, mono: &Monomial, c: u64) -> Poly {
        let f = self.ring.field();
        if c == 0 {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), f.mul(*k, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check_ring(other);
        let f = self.ring.field();
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), f.mul(*ca, *cb)));
            }
        }
        Poly::from_terms(&self.ring, raw)
    }

    /// `self - c * mono * g`, the reduction step of the division algorithm.
    pub fn sub_scaled(&self, c: u64, mono: &Monomial, g: &Poly) -> Poly {
        self.sub(&g.mul_term(mono, c))
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field().inv(c).expect("nonzero leading coeff");
                self.scale(inv as i64)
            }
        }
    }

    /// Exact division by `g`; None if `self` is not a multiple of `g`.
    pub fn divide_exact(&self, g: &Poly) -> Option<Poly> {
        self.check_ring(g);
        let f = self.ring.field();
        let (gm, gc) = g.leading_term()?;
        let gc_inv = f.inv(gc).ok()?;
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, u64)> = Vec::new();
        while let Some((rm, rc)) = rem.leading_term() {
            if !gm.divides(rm) {
                return None;
            }
            let qm = rm.div(gm);
            let qc = f.mul(rc, gc_inv);
            quot.push((qm, qc));
            rem = rem.sub_scaled(qc, &qm, g);
        }
        Some(Poly::from_terms(&self.ring, quot))
    }

    /// Kills every term containing any of the listed variables
    /// (restriction to the coordinate subspace where they vanish).
    pub fn substitute_zero(&self, vars: &[usize]) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.avoids(vars))
                .cloned()
                .collect(),
        }
    }

    /// Full substitution `x_i -> images[i]`. Images must live in `target`.
    pub fn substitute(&self, target: &RingRef, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Poly::constant(target, *c as i64);
            for (i, img) in images.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    prod = prod.mul(img);
                }
            }
            acc = acc.add(&prod);
        }
        acc
    }

    /// Sets one variable to 1 (affine chart).
    pub fn dehomogenize(&self, var: usize) -> Poly {
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = *m;
                m.set_exp(var, 0);
                (m, *c)
            })
            .collect();
        Poly::from_terms(&self.ring, raw)
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let f = self.ring.field();
        let raw = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|(m, c)| {
                let e = m.exp(var);
                let mut m = *m;
                m.set_exp(var, e - 1);
                (m, f.mul(*c, (e as u64) % f.modulus()))
            })
            .collect();
        Poly::from_terms(&self.ring, raw)
    }

    /// Moves a polynomial into a ring extended by `k` leading variables.
    pub fn lift_front(&self, ext: &RingRef, k: usize) -> Poly {
        assert_eq!(ext.nvars(), self.ring.nvars() + k);
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| (shift_monomial_up(m, k, self.ring.nvars()), *c))
            .collect();
        Poly::from_terms(ext, raw)
    }

    /// Moves a polynomial from a front-extended ring back down; None if any
    /// term touches the leading block.
    pub fn contract_front(&self, base: &RingRef, k: usize) -> Option<Poly> {
        assert_eq!(base.nvars() + k, self.ring.nvars());
        let front: Vec<usize> = (0..k).collect();
        if !self.terms.iter().all(|(m, _)| m.avoids(&front)) {
            return None;
        }
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| (shift_monomial_down(m, k, base.nvars()), *c))
            .collect();
        Some(Poly::from_terms(base, raw))
    }

    /// Maps into another ring along a variable assignment: source variable
    /// `i` goes to `var_map[i]` in the target, or must be absent (None).
    pub fn map_vars(&self, target: &RingRef, var_map: &[Option<usize>]) -> Poly {
        assert_eq!(var_map.len(), self.ring.nvars());
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one();
                for (i, dst) in var_map.iter().enumerate() {
                    match dst {
                        Some(j) => out.set_exp(*j, m.exp(i)),
                        None => assert_eq!(m.exp(i), 0, "variable {i} must be absent"),
                    }
                }
                (out, *c)
            })
            .collect();
        Poly::from_terms(target, raw)
    }

    /// Rewrites into a ring with the same variable count but a different
    /// order (e.g. grevlex -> block) or permuted variables.
    pub fn reorder(&self, target: &RingRef, perm: Option<&[usize]>) -> Poly {
        assert_eq!(target.nvars(), self.ring.nvars());
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                let m = match perm {
                    None => *m,
                    Some(p) => {
                        // perm[i] = index in target of source variable i
                        let mut out = Monomial::one();
                        for i in 0..self.ring.nvars() {
                            out.set_exp(p[i], m.exp(i));
                        }
                        out
                    }
                };
                (m, *c)
            })
            .collect();
        Poly::from_terms(target, raw)
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}
impl Eq for Poly {}

impl std::fmt::Display for Poly {
    /// Canonical text form: terms in ring order, coefficients lifted to
    /// `(-p/2, p/2]`, explicit `*` between factors, `^` for powers.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let signed = field.lift_signed(*c);
            let (sign, mag) = if signed < 0 {
                ("-", (-signed) as u64)
            } else {
                ("+", signed as u64)
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.is_one() {
                factors.push(mag.to_string());
            }
            for i in 0..self.ring.nvars() {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(self.ring.var_name(i).to_string()),
                    e => factors.push(format!("{}^{}", self.ring.var_name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// Draws a random homogeneous form of the given degree.
///
/// Without a membership ideal the form has uniform random coefficients over
/// all degree-`degree` monomials in `allowed_vars`. With one, the result is a
/// sum of random-cofactor multiples of the generators, so membership holds by
/// construction rather than by rejection.
pub fn random_form<R: Rng>(
    ring: &RingRef,
    degree: u32,
    allowed_vars: &[usize],
    membership: Option<&[Poly]>,
    rng: &mut R,
) -> Result<Poly> {
    let p = ring.field().modulus();
    match membership {
        None => {
            let monos = monomials_of_degree(allowed_vars, degree);
            let raw = monos
                .into_iter()
                .map(|m| (m, rng.gen_range(0..p)))
                .collect();
            Ok(Poly::from_terms(ring, raw))
        }
        Some(gens) => {
            let mut acc = Poly::zero(ring);
            let mut feasible = false;
            for g in gens {
                if g.is_zero() {
                    continue;
                }
                let gd = g.homogeneous_degree()?;
                if gd > degree {
                    continue;
                }
                feasible = true;
                let cof = random_form(ring, degree - gd, allowed_vars, None, rng)?;
                acc = acc.add(&cof.mul(g));
            }
            if !feasible {
                return Err(Error::EmptyForm { degree });
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r6() -> RingRef {
        Ring::p5(32003).unwrap()
    }

    fn x(ring: &RingRef, i: usize) -> Poly {
        Poly::var(ring, i)
    }

    #[test]
    fn add_zero_is_identity() {
        let r = r6();
        let f = x(&r, 0).mul(&x(&r, 5));
        assert_eq!(f.add(&Poly::zero(&r)), f);
    }

    #[test]
    fn distribution() {
        let r = r6();
        // (x0*x2 - x1^2) * x5 = x0*x2*x5 - x1^2*x5
        let minor = x(&r, 0).mul(&x(&r, 2)).sub(&x(&r, 1).mul(&x(&r, 1)));
        let prod = minor.mul(&x(&r, 5));
        let expect = x(&r, 0)
            .mul(&x(&r, 2))
            .mul(&x(&r, 5))
            .sub(&x(&r, 1).mul(&x(&r, 1)).mul(&x(&r, 5)));
        assert_eq!(prod, expect);
        assert_eq!(prod.num_terms(), 2);
    }

    #[test]
    fn degrees_add_on_random_homogeneous_pairs() {
        let r = r6();
        let vars: Vec<usize> = (0..6).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let da = rng.gen_range(1..4u32);
            let db = rng.gen_range(1..4u32);
            let f = random_form(&r, da, &vars, None, &mut rng).unwrap();
            let g = random_form(&r, db, &vars, None, &mut rng).unwrap();
            if f.is_zero() || g.is_zero() {
                continue;
            }
            let fg = f.mul(&g);
            assert_eq!(fg.homogeneous_degree().unwrap(), da + db);
            // leading term of product = product of leading terms
            let (lm, lc) = fg.leading_term().unwrap();
            let (fm, fc) = f.leading_term().unwrap();
            let (gm, gc) = g.leading_term().unwrap();
            assert_eq!(*lm, fm.mul(gm));
            assert_eq!(lc, r.field().mul(fc, gc));
        }
    }

    #[test]
    fn mul_commutes_and_associates() {
        let r = r6();
        let vars: Vec<usize> = (0..6).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let f = random_form(&r, 2, &vars, None, &mut rng).unwrap();
            let g = random_form(&r, 1, &vars, None, &mut rng).unwrap();
            let h = random_form(&r, 1, &vars, None, &mut rng).unwrap();
            assert_eq!(f.mul(&g), g.mul(&f));
            assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        }
    }

    #[test]
    fn random_form_shapes() {
        let r = r6();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_form(&r, 1, &[0, 1, 2], None, &mut rng).unwrap();
        for (m, _) in f.terms() {
            assert!(m.avoids(&[3, 4, 5]));
            assert_eq!(m.degree(), 1);
        }

        // membership in (x0, x1): every monomial divisible by x0 or x1
        let gens = [Poly::var(&r, 0), Poly::var(&r, 1)];
        let g = random_form(&r, 2, &(0..6).collect::<Vec<_>>(), Some(&gens), &mut rng).unwrap();
        assert!(!g.is_zero());
        for (m, _) in g.terms() {
            assert!(m.exp(0) > 0 || m.exp(1) > 0);
        }
    }

    #[test]
    fn random_form_deterministic() {
        let r = r6();
        let vars: Vec<usize> = (0..6).collect();
        let f1 = random_form(&r, 3, &vars, None, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        let f2 = random_form(&r, 3, &vars, None, &mut ChaCha8Rng::seed_from_u64(42)).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn random_form_infeasible_membership() {
        let r = r6();
        let gens = [Poly::var(&r, 0).mul(&Poly::var(&r, 1))]; // degree 2
        let err = random_form(&r, 1, &[0, 1], Some(&gens), &mut ChaCha8Rng::seed_from_u64(3));
        assert!(matches!(err, Err(Error::EmptyForm { degree: 1 })));
    }

    #[test]
    fn substitute_zero_examples() {
        let r = r6();
        let x2 = x(&r, 2);
        let x3 = x(&r, 3);
        let p = random_form(&r, 1, &[0, 1, 2, 3, 4, 5], None, &mut ChaCha8Rng::seed_from_u64(7))
            .unwrap();
        let q = random_form(&r, 1, &[0, 1, 2, 3, 4, 5], None, &mut ChaCha8Rng::seed_from_u64(8))
            .unwrap();
        // (x2 P + x3 Q)|_{x2=x3=0} = 0
        let f = x2.mul(&p).add(&x3.mul(&q));
        assert!(f.substitute_zero(&[2, 3]).is_zero());

        // (x0x2 - x1^2)|_{x5=0} unchanged since x5 is absent
        let minor = x(&r, 0).mul(&x(&r, 2)).sub(&x(&r, 1).mul(&x(&r, 1)));
        assert_eq!(minor.substitute_zero(&[5]), minor);
    }

    #[test]
    fn exact_division() {
        let r = r6();
        let f = x(&r, 0).add(&x(&r, 1));
        let g = x(&r, 2).sub(&x(&r, 3).scale(2));
        let prod = f.mul(&g);
        assert_eq!(prod.divide_exact(&f).unwrap(), g);
        assert_eq!(prod.divide_exact(&g).unwrap(), f);
        assert!(prod.add(&Poly::constant(&r, 1)).divide_exact(&f).is_none());
    }

    #[test]
    #[should_panic(expected = "ring context mismatch")]
    fn ring_mismatch_panics() {
        let r1 = r6();
        let r2 = Ring::grevlex(4, 32003).unwrap();
        let _ = Poly::var(&r1, 0).add(&Poly::var(&r2, 0));
    }

    #[test]
    fn display_round_shape() {
        let r = r6();
        // grevlex: x1^2 beats x0*x5 (smaller exponent at the trailing variable)
        let f = x(&r, 0).mul(&x(&r, 5)).sub(&x(&r, 1).mul(&x(&r, 1)).scale(2));
        assert_eq!(format!("{f}"), "-2*x1^2 + x0*x5");
        assert_eq!(format!("{}", Poly::zero(&r)), "0");
    }
}
