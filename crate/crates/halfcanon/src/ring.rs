//! Polynomial ring contexts.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// A graded polynomial ring `GF(p)[vars]` with a fixed monomial order. Every
/// polynomial in one computation shares one `Ring` (by `Arc`); structural
/// equality is what the arithmetic checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
    field: Fp,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(vars: Vec<String>, field: Fp, order: MonomialOrder) -> Result<RingRef> {
        if vars.len() > MAX_VARS {
            return Err(Error::Other(format!(
                "at most {MAX_VARS} variables supported, got {}",
                vars.len()
            )));
        }
        if let MonomialOrder::Block { cut } = order {
            assert!(cut <= vars.len());
        }
        Ok(Arc::new(Ring { vars, field, order }))
    }

    /// Standard grevlex ring with variables `x0..x{n-1}`.
    pub fn grevlex(n: usize, p: u64) -> Result<RingRef> {
        let vars = (0..n).map(|i| format!("x{i}")).collect();
        Ring::new(vars, Fp::new(p)?, MonomialOrder::Grevlex)
    }

    /// The coordinate ring of P^5 used throughout the curve catalogue.
    pub fn p5(p: u64) -> Result<RingRef> {
        Ring::grevlex(6, p)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.order.cmp(self.nvars(), a, b)
    }

    /// A new ring with `k` fresh variables prepended as an eliminated block.
    /// The existing variables keep their relative order; a Groebner basis in
    /// the extension intersects with the original ring by dropping every
    /// element whose terms touch the new block.
    pub fn extend_front(self: &Arc<Self>, names: &[&str]) -> Result<RingRef> {
        assert!(
            matches!(self.order, MonomialOrder::Grevlex),
            "only grevlex rings are extended"
        );
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Ring::new(vars, self.field, MonomialOrder::Block { cut: names.len() })
    }

    /// Same variables, different order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Result<RingRef> {
        Ring::new(self.vars.clone(), self.field, order)
    }
}

/// Shifts a monomial's exponents up by `k` positions (into a front-extended ring).
pub fn shift_monomial_up(m: &Monomial, k: usize, old_nvars: usize) -> Monomial {
    let mut out = Monomial::one();
    for i in 0..old_nvars {
        out.set_exp(i + k, m.exp(i));
    }
    out
}

/// Shifts a monomial's exponents down by `k` positions (back to the base ring);
/// caller guarantees the leading block is unused.
pub fn shift_monomial_down(m: &Monomial, k: usize, new_nvars: usize) -> Monomial {
    debug_assert!((0..k).all(|i| m.exp(i) == 0));
    let mut out = Monomial::one();
    for i in 0..new_nvars {
        out.set_exp(i, m.exp(i + k));
    }
    out
}
