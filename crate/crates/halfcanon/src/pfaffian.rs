//! Skew-symmetric polynomial matrices, Pfaffians, and the constrained
//! Tom/Jerry entry formats.
//!
//! Conventions: Pf of the empty matrix is 1, and the Pfaffian expands along
//! the first row as Pf(M) = sum_j (-1)^j a_{1j} Pf(M with rows/cols 1,j
//! deleted). Under this convention the generic 4x4 Pfaffian is
//! a12*a34 - a13*a24 + a14*a23 and the alternating-sign vector of sub-maximal
//! Pfaffians is a kernel vector of the matrix (the Buchsbaum-Eisenbud
//! presentation), with no per-case sign fudging.

use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{random_form, Poly};
use crate::ring::RingRef;

/// A skew-symmetric matrix stored by its strict upper triangle, together
/// with a degree pattern d_{ij}. The pattern must be realizable by row
/// weights (d_{ij} = w_i + w_j), which is exactly the condition for the
/// sub-maximal Pfaffians to be homogeneous.
#[derive(Debug, Clone)]
pub struct SkewMatrix {
    ring: RingRef,
    n: usize,
    /// entries (i,j) for i<j, row-major over the strict upper triangle
    upper: Vec<Poly>,
    pattern: Vec<u32>,
}

fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl SkewMatrix {
    /// Builds a skew matrix from its strict upper triangle (row-major) and a
    /// degree pattern given the same way. Entries must be homogeneous of the
    /// pattern degree (zero entries allowed); the pattern must admit row
    /// weights.
    pub fn new(
        ring: &RingRef,
        n: usize,
        upper: Vec<Poly>,
        pattern: Vec<u32>,
    ) -> Result<SkewMatrix> {
        let len = n * (n - 1) / 2;
        assert_eq!(upper.len(), len, "upper triangle size");
        assert_eq!(pattern.len(), len, "pattern size");
        check_pattern_consistent(n, &pattern)?;
        for i in 0..n {
            for j in (i + 1)..n {
                let e = &upper[tri_index(n, i, j)];
                if e.is_zero() {
                    continue;
                }
                let d = e.homogeneous_degree()?;
                let want = pattern[tri_index(n, i, j)];
                if d != want {
                    return Err(Error::DegreePatternViolation {
                        row: i,
                        col: j,
                        got: d,
                        want,
                    });
                }
            }
        }
        Ok(SkewMatrix {
            ring: ring.clone(),
            n,
            upper,
            pattern,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Signed entry: a_{ij} above the diagonal, -a_{ji} below, 0 on it.
    pub fn entry(&self, i: usize, j: usize) -> Poly {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Poly::zero(&self.ring),
            Less => self.upper[tri_index(self.n, i, j)].clone(),
            Greater => self.upper[tri_index(self.n, j, i)].neg(),
        }
    }

    pub fn degree_pattern(&self, i: usize, j: usize) -> u32 {
        assert!(i < j);
        self.pattern[tri_index(self.n, i, j)]
    }

    /// Submatrix with the listed rows/columns removed (order preserved).
    fn delete(&self, removed: &[usize]) -> SkewMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|k| !removed.contains(k)).collect();
        let m = keep.len();
        let cap = m * m.saturating_sub(1) / 2;
        let mut upper = Vec::with_capacity(cap);
        let mut pattern = Vec::with_capacity(cap);
        for a in 0..m {
            for b in (a + 1)..m {
                upper.push(self.upper[tri_index(self.n, keep[a], keep[b])].clone());
                pattern.push(self.pattern[tri_index(self.n, keep[a], keep[b])]);
            }
        }
        SkewMatrix {
            ring: self.ring.clone(),
            n: m,
            upper,
            pattern,
        }
    }

    fn pfaffian_rec(&self) -> Poly {
        if self.n == 0 {
            return Poly::constant(&self.ring, 1);
        }
        let mut acc = Poly::zero(&self.ring);
        for j in 1..self.n {
            let a = &self.upper[tri_index(self.n, 0, j)];
            if a.is_zero() {
                continue;
            }
            let minor = self.delete(&[0, j]).pfaffian_rec();
            let term = a.mul(&minor);
            if j % 2 == 1 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }

    /// The Pfaffian; requires even size.
    pub fn pfaffian(&self) -> Result<Poly> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::BadMatrixSize {
                expected: "even",
                got: self.n,
            });
        }
        Ok(self.pfaffian_rec())
    }

    /// The n sub-maximal Pfaffians of an odd-size matrix, the i-th obtained
    /// by deleting row and column i. Unsigned (each is the Pfaffian of the
    /// deleted matrix); see [`SkewMatrix::kernel_vector`] for the signed
    /// version annihilated by the matrix.
    pub fn submaximal_pfaffians(&self) -> Result<Vec<Poly>> {
        if self.n % 2 != 1 {
            return Err(Error::BadMatrixSize {
                expected: "odd",
                got: self.n,
            });
        }
        Ok((0..self.n)
            .map(|i| self.delete(&[i]).pfaffian_rec())
            .collect())
    }

    /// The alternating-sign Pfaffian vector v_i = (-1)^i Pf_i (0-based),
    /// which satisfies M . v = 0.
    pub fn kernel_vector(&self) -> Result<Vec<Poly>> {
        let pfs = self.submaximal_pfaffians()?;
        Ok(pfs
            .into_iter()
            .enumerate()
            .map(|(i, p)| if i % 2 == 0 { p } else { p.neg() })
            .collect())
    }

    /// Checks M . v = 0 for the signed Pfaffian vector.
    pub fn presentation_identity_holds(&self) -> Result<bool> {
        let v = self.kernel_vector()?;
        for i in 0..self.n {
            let mut acc = Poly::zero(&self.ring);
            for j in 0..self.n {
                if i != j {
                    acc = acc.add(&self.entry(i, j).mul(&v[j]));
                }
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_pattern_consistent(n: usize, pattern: &[u32]) -> Result<()> {
    if n < 3 {
        return Ok(());
    }
    let d = |i: usize, j: usize| pattern[tri_index(n, i, j)] as i64;
    // doubled weights: 2*w_0 from the first triangle, the rest follow
    let w0 = d(0, 1) + d(0, 2) - d(1, 2);
    let mut w = vec![0i64; n];
    w[0] = w0;
    for i in 1..n {
        w[i] = 2 * d(0, i) - w0;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if 2 * d(i, j) != w[i] + w[j] {
                return Err(Error::InconsistentDegreePattern);
            }
        }
    }
    Ok(())
}

/// Uniform degree pattern (all entries degree d).
pub fn uniform_pattern(n: usize, d: u32) -> Vec<u32> {
    vec![d; n * (n - 1) / 2]
}

/// Pattern from doubled row weights: d_{ij} = (w2_i + w2_j) / 2.
pub fn pattern_from_doubled_weights(w2: &[u32]) -> Vec<u32> {
    let n = w2.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let s = w2[i] + w2[j];
            assert!(s.is_multiple_of(2), "weights must give integer degrees");
            out.push(s / 2);
        }
    }
    out
}

#[derive(Debug, Clone)]
pub enum EntryConstraint {
    General,
    InIdeal(Vec<Poly>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TomJerryKind {
    /// a_{kl} in J for k,l outside the index set; others general.
    Tom(Vec<usize>),
    /// a_{kl} in J when k or l lies in the index set; others general.
    Jer(Vec<usize>),
}

/// A constrained random skew matrix recipe: base Tom/Jerry membership over
/// the ideal J, an ambient variable set for the general entries, and
/// optional per-column refinements (the 7x7 format of one catalogue type
/// puts two columns in their own membership ideals, with listed exemptions).
#[derive(Debug, Clone)]
pub struct TomJerryFormat {
    pub kind: TomJerryKind,
    pub size: usize,
    pub membership: Vec<Poly>,
    pub pattern: Vec<u32>,
    pub ambient_vars: Vec<usize>,
    pub column_overrides: Vec<ColumnOverride>,
}

#[derive(Debug, Clone)]
pub struct ColumnOverride {
    pub col: usize,
    pub membership: Vec<Poly>,
    pub exempt_rows: Vec<usize>,
}

impl TomJerryFormat {
    pub fn new(
        kind: TomJerryKind,
        size: usize,
        membership: Vec<Poly>,
        pattern: Vec<u32>,
        ambient_vars: Vec<usize>,
    ) -> TomJerryFormat {
        TomJerryFormat {
            kind,
            size,
            membership,
            pattern,
            ambient_vars,
            column_overrides: Vec::new(),
        }
    }

    fn constraint(&self, i: usize, j: usize) -> EntryConstraint {
        for ov in &self.column_overrides {
            if ov.col == j && !ov.exempt_rows.contains(&i) {
                return EntryConstraint::InIdeal(ov.membership.clone());
            }
        }
        let constrained = match &self.kind {
            TomJerryKind::Tom(set) => !set.contains(&i) && !set.contains(&j),
            TomJerryKind::Jer(set) => set.contains(&i) || set.contains(&j),
        };
        if constrained {
            EntryConstraint::InIdeal(self.membership.clone())
        } else {
            EntryConstraint::General
        }
    }
}

/// Draws a random skew matrix in the given format. Constrained entries are
/// random combinations over the membership generators, so membership holds
/// by construction.
pub fn make_tom_jerry<R: Rng>(
    ring: &RingRef,
    format: &TomJerryFormat,
    rng: &mut R,
) -> Result<SkewMatrix> {
    let n = format.size;
    let mut upper = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = format.pattern[tri_index(n, i, j)];
            let entry = match format.constraint(i, j) {
                EntryConstraint::General => random_form(ring, d, &format.ambient_vars, None, rng)?,
                EntryConstraint::InIdeal(gens) => {
                    random_form(ring, d, &format.ambient_vars, Some(&gens), rng)?
                }
            };
            upper.push(entry);
        }
    }
    SkewMatrix::new(ring, n, upper, format.pattern.clone())
}
