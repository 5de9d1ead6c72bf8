//! Arithmetic in the prime field GF(p).
//!
//! All polynomial computation in this crate runs over a single prime field,
//! carried around as a lightweight [`Fp`] context. Coefficients are stored as
//! raw residues in `[0, p)`; the wrapper type [`FieldElement`] bundles a
//! residue with its context for code that wants checked operator syntax.

use crate::error::Error;

/// Largest admissible characteristic: products of two residues must fit in u64.
pub const MAX_CHAR: u64 = 1 << 31;

/// Default characteristic. Large enough that random constructions behave
/// generically, small enough for single-word arithmetic.
pub const DEFAULT_CHAR: u64 = 32003;

/// A prime field context GF(p). Copyable; all operations are on raw `u64`
/// residues already reduced mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    /// Builds a field context, checking that `p` is prime and `5 < p <= 2^31`.
    /// The lower bound keeps the characteristic away from the small
    /// combinatorial constants that appear in degrees up to 5.
    pub fn new(p: u64) -> Result<Fp, Error> {
        if p <= 5 || p > MAX_CHAR || !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64, Error> {
        if a == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        // Invariants: r0 = t0*a (mod p), r1 = t1*a (mod p).
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "gcd(a, p) must be 1 for prime p");
        Ok(t0.rem_euclid(self.p as i64) as u64)
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64, Error> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Symmetric lift into `(-p/2, p/2]`, for display.
    pub fn lift_signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn element(&self, value: i64) -> FieldElement {
        FieldElement {
            value: self.from_i64(value),
            field: *self,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue paired with its field context. Mixing elements of different
/// characteristics is a contract violation and panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldElement {
    value: u64,
    field: Fp,
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Result<FieldElement, Error> {
        Ok(FieldElement {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }

    fn check_same(&self, rhs: &FieldElement) {
        assert_eq!(
            self.field.p, rhs.field.p,
            "field modulus mismatch: GF({}) vs GF({})",
            self.field.p, rhs.field.p
        );
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        FieldElement {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        FieldElement {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.check_same(&rhs);
        FieldElement {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

/// Determinant of a square matrix over GF(p) by Gaussian elimination.
/// Used for invertibility checks on random coordinate changes.
pub fn det_fp(field: Fp, n: usize, entries: &[u64]) -> u64 {
    assert_eq!(entries.len(), n * n);
    let mut m = entries.to_vec();
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r * n + col] != 0);
        let Some(pr) = pivot else { return 0 };
        if pr != col {
            for c in 0..n {
                m.swap(pr * n + c, col * n + c);
            }
            det = field.neg(det);
        }
        let pv = m[col * n + col];
        det = field.mul(det, pv);
        let pinv = field.inv(pv).expect("pivot is nonzero");
        for r in (col + 1)..n {
            let factor = field.mul(m[r * n + col], pinv);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let sub = field.mul(factor, m[col * n + c]);
                m[r * n + c] = field.sub(m[r * n + c], sub);
            }
        }
    }
    det
}
