//! Exponent vectors and monomial orders.
//!
//! Monomials are fixed-width exponent vectors (at most [`MAX_VARS`]
//! variables; the catalogue needs six ring variables plus an auxiliary
//! elimination variable). Two orders are supported: graded reverse
//! lexicographic, and a block order whose leading block is eliminated first —
//! grevlex inside each block, used for intersections, colon ideals and
//! variable elimination.

use std::cmp::Ordering;

pub const MAX_VARS: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial {
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            assert!(e < 256, "exponent overflow");
            m.exps[i] = e as u8;
        }
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        assert!(e < 256, "exponent overflow");
        self.exps[i] = e as u8;
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            let s = self.exps[i] as u16 + other.exps[i] as u16;
            assert!(s < 256, "exponent overflow");
            m.exps[i] = s as u8;
        }
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i] - other.exps[i];
        }
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
        }
        m
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// True if no variable in `vars` appears.
    pub fn avoids(&self, vars: &[usize]) -> bool {
        vars.iter().all(|&v| self.exps[v] == 0)
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, x0 > x1 > ... > x_{n-1}.
    Grevlex,
    /// Variables `[0, cut)` form an eliminated leading block; grevlex within
    /// each block. A Groebner basis under this order intersects with the
    /// subring in the trailing block.
    Block { cut: usize },
}

fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = (lo..hi).map(|i| a.exp(i)).sum();
    let db: u32 = (lo..hi).map(|i| b.exp(i)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the monomial with the smaller exponent at the last
    // differing position is the larger one.
    for i in (lo..hi).rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, nvars: usize, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex_range(a, b, 0, nvars),
            MonomialOrder::Block { cut } => grevlex_range(a, b, 0, cut)
                .then_with(|| grevlex_range(a, b, cut, nvars)),
        }
    }
}

/// Plain lexicographic comparison (x0 > x1 > ...). Not a ring order here;
/// used to sort Groebner bases before Schreyer syzygy steps.
pub fn lex_cmp(nvars: usize, a: &Monomial, b: &Monomial) -> Ordering {
    for i in 0..nvars {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// All monomials of total degree `d` in the given variables, in a fixed
/// enumeration order (lexicographic over `vars`).
pub fn monomials_of_degree(vars: &[usize], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = Monomial::one();
    fn rec(vars: &[usize], pos: usize, remaining: u32, current: &mut Monomial, out: &mut Vec<Monomial>) {
        if pos + 1 == vars.len() {
            let mut m = *current;
            m.set_exp(vars[pos], remaining);
            out.push(m);
            return;
        }
        for e in (0..=remaining).rev() {
            current.set_exp(vars[pos], e);
            rec(vars, pos + 1, remaining - e, current, out);
        }
        current.set_exp(vars[pos], 0);
    }
    if vars.is_empty() {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(vars, 0, d, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // Textbook definition: deg first, then the last nonzero entry of the
    // exponent difference decides (negative difference means larger).
    fn grevlex_oracle(nvars: usize, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..nvars).rev() {
            let d = a.exp(i) as i64 - b.exp(i) as i64;
            if d != 0 {
                return if d < 0 { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }

    #[test]
    fn grevlex_matches_bruteforce_up_to_degree_4() {
        let vars: Vec<usize> = (0..6).collect();
        let mut all = Vec::new();
        for d in 0..=4 {
            all.extend(monomials_of_degree(&vars, d));
        }
        assert_eq!(all.len(), 1 + 6 + 21 + 56 + 126);
        let order = MonomialOrder::Grevlex;
        for a in &all {
            for b in &all {
                assert_eq!(order.cmp(6, a, b), grevlex_oracle(6, a, b));
            }
        }
    }

    #[test]
    fn grevlex_classic_examples() {
        // x0*x2 vs x1^2 in 3 variables: x0x2 < x1^2? grevlex: both degree 2;
        // last differing exponent is x2: x0x2 has 1 > 0, so x0x2 is smaller.
        let o = MonomialOrder::Grevlex;
        let x0x2 = Monomial::from_exps(&[1, 0, 1]);
        let x1sq = Monomial::from_exps(&[0, 2, 0]);
        assert_eq!(o.cmp(3, &x0x2, &x1sq), Ordering::Less);
        let x0 = Monomial::var(0);
        let x1 = Monomial::var(1);
        assert_eq!(o.cmp(3, &x0, &x1), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        // any monomial containing w (var 0) beats any w-free monomial
        let o = MonomialOrder::Block { cut: 1 };
        let w = Monomial::var(0);
        let x_cubed = Monomial::from_exps(&[0, 3]);
        assert_eq!(o.cmp(2, &w, &x_cubed), Ordering::Greater);
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(&[0, 1, 2], 2).len(), 6);
        assert_eq!(monomials_of_degree(&[3, 4], 4).len(), 5);
        assert_eq!(monomials_of_degree(&[], 0).len(), 1);
        assert_eq!(monomials_of_degree(&[], 1).len(), 0);
    }
}
