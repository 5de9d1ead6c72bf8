//! Graded free resolutions, Betti tables, regularity.
//!
//! The resolution is built as a Schreyer resolution: starting from the
//! reduced Groebner basis of the ideal, each level's syzygies come from the
//! S-pair standard representations of the previous level's basis, which form
//! a Groebner basis of the syzygy module under the induced Schreyer order.
//! Before each syzygy step the basis is sorted (component, then leading
//! monomial lexicographically descending) so the construction terminates
//! within the Hilbert bound. The raw chain is then minimalized by unit-pivot
//! elimination, leaving the minimal graded free resolution.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::modvec::{buchberger_modvec, reduce_modvec, ModOrder, ModTerm, ModVec, SchreyerOrder};
use crate::monomial::{lex_cmp, Monomial};
use crate::poly::Poly;
use crate::ring::RingRef;

/// A matrix of polynomials: `rows x cols`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(ring: &RingRef, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Poly::zero(ring); rows * cols],
        }
    }

    pub fn from_columns(ring: &RingRef, rows: usize, cols: Vec<Vec<Poly>>) -> PolyMatrix {
        let mut m = PolyMatrix::new(ring, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, p) in col.iter().enumerate() {
                m.set(i, j, p.clone());
            }
        }
        m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn compose(&self, rhs: &PolyMatrix, ring: &RingRef) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = PolyMatrix::new(ring, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Poly::zero(ring);
                for k in 0..self.cols {
                    if !self.entry(i, k).is_zero() && !rhs.entry(k, j).is_zero() {
                        acc = acc.add(&self.entry(i, k).mul(rhs.entry(k, j)));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn delete_row(&mut self, row: usize) {
        let cols = self.cols;
        let start = row * cols;
        self.entries.drain(start..start + cols);
        self.rows -= 1;
    }

    fn delete_col(&mut self, col: usize) {
        let mut out = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j != col {
                    out.push(self.entries[i * self.cols + j].clone());
                }
            }
        }
        self.entries = out;
        self.cols -= 1;
    }
}

/// A chain of graded free modules and maps resolving S/I:
/// `F_0 <- F_1 <- ... <- F_len`, with `maps[k]: F_{k+1} -> F_k`.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub ring: RingRef,
    /// Generator degrees of each free module; `degrees[0] = [0]` for S/I.
    pub degrees: Vec<Vec<u32>>,
    pub maps: Vec<PolyMatrix>,
    pub minimal: bool,
    /// Whether the input was verified saturated (None = not checked). Betti
    /// numbers of a projective scheme are only meaningful on saturated input.
    pub saturation_checked: Option<bool>,
}

impl FreeResolution {
    /// Homological length (index of the last nonzero module).
    pub fn length(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn rank(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, |d| d.len())
    }

    /// Consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        (0..self.maps.len().saturating_sub(1)).all(|k| {
            self.maps[k]
                .compose(&self.maps[k + 1], &self.ring)
                .is_zero()
        })
    }

    /// Graded Euler characteristic: for each degree d, the alternating sum
    /// sum_k (-1)^k #{generators of F_k in degree d}. Invariant under
    /// minimalization and equal to the Hilbert numerator of the resolved
    /// module.
    pub fn graded_euler(&self) -> Vec<i64> {
        let top = self
            .degrees
            .iter()
            .flat_map(|v| v.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        let mut acc = vec![0i64; top + 1];
        for (k, degs) in self.degrees.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for &d in degs {
                acc[d as usize] += sign;
            }
        }
        while acc.last() == Some(&0) {
            acc.pop();
        }
        acc
    }
}

struct Level {
    basis: Vec<ModVec>,
    order: ModOrder,
    /// degree of each basis element (as module elements one level down)
    degrees: Vec<u32>,
}

/// Sorts a level's basis: component ascending, leading monomial descending
/// lexicographically. This is the arrangement under which Schreyer levels
/// drop variables, keeping the chain within the Hilbert bound.
fn sort_level(ring: &RingRef, basis: &mut Vec<ModVec>, degrees: &mut Vec<u32>) {
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| {
        let la = basis[a].leading().unwrap();
        let lb = basis[b].leading().unwrap();
        la.comp
            .cmp(&lb.comp)
            .then_with(|| lex_cmp(ring.nvars(), &lb.mono, &la.mono))
    });
    *basis = idx.iter().map(|&i| basis[i].clone()).collect();
    *degrees = idx.iter().map(|&i| degrees[i]).collect();
}

/// One Schreyer step: the S-pair syzygies of a Groebner basis, pruned to a
/// Groebner basis of the syzygy module under the induced order.
fn schreyer_step(ring: &RingRef, level: &Level) -> Level {
    let basis = &level.basis;
    let order = &level.order;
    let field = ring.field();
    let leads: Vec<ModTerm> = basis.iter().map(|g| *g.leading().unwrap()).collect();

    let next_order = ModOrder::Schreyer(Arc::new(SchreyerOrder {
        prev: order.clone(),
        leads: leads.iter().map(|t| (t.mono, t.comp)).collect(),
    }));

    let mut syzygies: Vec<ModVec> = Vec::new();
    let mut degrees: Vec<u32> = Vec::new();
    for i in 0..basis.len() {
        // candidate pairs (i, j), j > i, same leading component
        let mut cands: Vec<(Monomial, usize)> = Vec::new();
        for j in (i + 1)..basis.len() {
            if leads[j].comp == leads[i].comp {
                let lcm = leads[i].mono.lcm(&leads[j].mono);
                cands.push((lcm.div(&leads[i].mono), j));
            }
        }
        // keep only minimal multipliers; on equal multipliers the smallest j
        let mut kept: Vec<(Monomial, usize)> = Vec::new();
        'cand: for (m, j) in &cands {
            for (m2, j2) in &cands {
                if (m2.divides(m) && m2 != m) || (m2 == m && j2 < j) {
                    continue 'cand;
                }
            }
            kept.push((*m, *j));
        }

        for (mi, j) in kept {
            let lcm = mi.mul(&leads[i].mono);
            let mj = lcm.div(&leads[j].mono);
            let inv_i = field.inv(leads[i].coeff).unwrap();
            let inv_j = field.inv(leads[j].coeff).unwrap();
            let s = basis[i]
                .mul_term(ring, &mi, inv_i)
                .sub_scaled(ring, order, inv_j, &mj, &basis[j]);
            let (rem, quots) = reduce_modvec(ring, order, &s, basis, true);
            assert!(rem.is_zero(), "S-pair of a Groebner basis must reduce to zero");
            let quots = quots.unwrap();

            let mut terms: Vec<ModTerm> = Vec::new();
            push_poly_terms(&mut terms, &Poly::term(ring, mi, 1).scale(inv_i as i64), i);
            push_poly_terms(
                &mut terms,
                &Poly::term(ring, mj, 1).scale(field.neg(inv_j) as i64),
                j,
            );
            for (k, q) in quots.iter().enumerate() {
                push_poly_terms(&mut terms, &q.neg(), k);
            }
            let syz = ModVec::from_terms(ring, &next_order, terms);
            debug_assert_eq!(
                syz.leading().map(|t| (t.mono, t.comp)),
                Some((mi, i as u32)),
                "Schreyer leading term"
            );
            degrees.push(mi.degree() + level.degrees[i]);
            syzygies.push(syz);
        }
    }

    let mut level = Level {
        basis: syzygies,
        order: next_order,
        degrees,
    };
    sort_level(ring, &mut level.basis, &mut level.degrees);
    level
}

fn push_poly_terms(out: &mut Vec<ModTerm>, p: &Poly, comp: usize) {
    for (m, c) in p.terms() {
        out.push(ModTerm {
            comp: comp as u32,
            mono: *m,
            coeff: *c,
        });
    }
}

/// The raw (non-minimal) Schreyer resolution of S/I.
pub fn schreyer_resolution(ideal: &Ideal) -> Result<FreeResolution> {
    let ring = ideal.ring().clone();
    let cap = ring.nvars();
    let gb = ideal.groebner();

    let mut degrees: Vec<Vec<u32>> = vec![vec![0]];
    let mut maps: Vec<PolyMatrix> = Vec::new();
    if gb.is_empty() {
        return Ok(FreeResolution {
            ring,
            degrees,
            maps,
            minimal: true,
            saturation_checked: None,
        });
    }

    let order0 = ModOrder::Top;
    let mut level = Level {
        basis: gb
            .iter()
            .map(|g| ModVec::from_poly(&ring, &order0, g, 0))
            .collect(),
        order: order0,
        degrees: gb
            .iter()
            .map(|g| g.homogeneous_degree().expect("ideal is homogeneous"))
            .collect(),
    };
    sort_level(&ring, &mut level.basis, &mut level.degrees);

    // D_1: columns are the basis polynomials
    maps.push(PolyMatrix::from_columns(
        &ring,
        1,
        level.basis.iter().map(|v| vec![v.coordinate(&ring, 0)]).collect(),
    ));
    degrees.push(level.degrees.clone());

    loop {
        let next = schreyer_step(&ring, &level);
        if next.basis.is_empty() {
            break;
        }
        if degrees.len() > cap {
            return Err(Error::ResolutionTooLong(cap));
        }
        let rows = level.basis.len();
        let cols = next
            .basis
            .iter()
            .map(|v| {
                (0..rows as u32)
                    .map(|c| v.coordinate(&ring, c))
                    .collect::<Vec<_>>()
            })
            .collect();
        maps.push(PolyMatrix::from_columns(&ring, rows, cols));
        degrees.push(next.degrees.clone());
        level = next;
    }

    Ok(FreeResolution {
        ring,
        degrees,
        maps,
        minimal: false,
        saturation_checked: None,
    })
}

/// Minimalizes a resolution in place by eliminating unit (degree-zero)
/// entries of the differentials with row/column operations. Deterministic:
/// first unit in scan order (level, then row-major).
pub fn minimalize(res: &mut FreeResolution) {
    let ring = res.ring.clone();
    let field = ring.field();
    'outer: loop {
        for k in 0..res.maps.len() {
            let (rows, cols) = (res.maps[k].rows, res.maps[k].cols);
            for i in 0..rows {
                for j in 0..cols {
                    let e = res.maps[k].entry(i, j);
                    if !e.is_zero() && e.degree() == Some(0) {
                        let u = e.leading_term().unwrap().1;
                        let u_inv = field.inv(u).expect("unit entry");
                        eliminate_unit(res, k, i, j, u_inv, &ring);
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    // drop trailing zero modules
    while res.degrees.len() > 1 && res.degrees.last().unwrap().is_empty() {
        res.degrees.pop();
        res.maps.pop();
    }
    res.minimal = true;
}

fn eliminate_unit(
    res: &mut FreeResolution,
    k: usize,
    i: usize,
    j: usize,
    u_inv: u64,
    ring: &RingRef,
) {
    // row factors t_l = A[l][j]/u, column factors s_m = A[i][m]/u
    let a = &res.maps[k];
    let t: Vec<Poly> = (0..a.rows).map(|l| a.entry(l, j).scale(u_inv as i64)).collect();
    let s: Vec<Poly> = (0..a.cols).map(|m| a.entry(i, m).scale(u_inv as i64)).collect();

    // A[l][m] -= t_l * A[i][m]  (l != i), then delete row i, col j
    {
        let a = &mut res.maps[k];
        for l in 0..a.rows {
            if l == i || t[l].is_zero() {
                continue;
            }
            for m in 0..a.cols {
                if m == j {
                    continue;
                }
                let upd = a.entry(l, m).sub(&t[l].mul(a.entry(i, m)));
                a.set(l, m, upd);
            }
        }
        a.delete_row(i);
        a.delete_col(j);
    }

    // previous map: col_i += sum_l t_l * col_l, then col i vanishes
    if k > 0 {
        let prev = &mut res.maps[k - 1];
        for r in 0..prev.rows {
            let mut acc = prev.entry(r, i).clone();
            for (l, tl) in t.iter().enumerate() {
                if l != i && !tl.is_zero() {
                    acc = acc.add(&tl.mul(prev.entry(r, l)));
                }
            }
            debug_assert!(acc.is_zero(), "cleared column must vanish");
            prev.set(r, i, acc);
        }
        prev.delete_col(i);
    }

    // next map: row_j += sum_m s_m * row_m, then row j vanishes
    if k + 1 < res.maps.len() {
        let next = &mut res.maps[k + 1];
        for c in 0..next.cols {
            let mut acc = next.entry(j, c).clone();
            for (m, sm) in s.iter().enumerate() {
                if m != j && !sm.is_zero() {
                    acc = acc.add(&sm.mul(next.entry(m, c)));
                }
            }
            debug_assert!(acc.is_zero(), "cleared row must vanish");
            next.set(j, c, acc);
        }
        next.delete_row(j);
    }

    let _ = ring;
    res.degrees[k].remove(i);
    res.degrees[k + 1].remove(j);
}

/// The minimal graded free resolution of S/I. The ideal should be saturated
/// for the Betti numbers to describe the projective scheme; this function
/// does not check (see [`minimal_resolution_checked`]).
pub fn minimal_resolution(ideal: &Ideal) -> Result<FreeResolution> {
    let mut res = schreyer_resolution(ideal)?;
    minimalize(&mut res);
    Ok(res)
}

/// As [`minimal_resolution`], but records whether the input is saturated
/// with respect to the irrelevant ideal (a warning flag, not an error).
pub fn minimal_resolution_checked(ideal: &Ideal) -> Result<FreeResolution> {
    let m = Ideal::irrelevant(ideal.ring());
    let saturated = ideal.is_saturated_wrt(&m);
    let mut res = minimal_resolution(ideal)?;
    res.saturation_checked = Some(saturated);
    Ok(res)
}

/// Graded Betti numbers in the display convention of the tables this crate
/// checks against: `grid[row][col]` with row = degree - homological index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    grid: Vec<Vec<u64>>,
}

impl BettiTable {
    pub fn from_resolution(res: &FreeResolution) -> BettiTable {
        assert!(res.minimal, "Betti numbers need a minimal resolution");
        let cols = res.degrees.len();
        let mut max_row = 0usize;
        for (k, degs) in res.degrees.iter().enumerate() {
            for &d in degs {
                assert!(d as usize >= k, "minimal resolution has rows >= 0");
                max_row = max_row.max(d as usize - k);
            }
        }
        let mut grid = vec![vec![0u64; cols]; max_row + 1];
        for (k, degs) in res.degrees.iter().enumerate() {
            for &d in degs {
                grid[d as usize - k][k] += 1;
            }
        }
        BettiTable { grid }
    }

    pub fn from_grid(grid: Vec<Vec<u64>>) -> BettiTable {
        BettiTable { grid }
    }

    pub fn rows(&self) -> usize {
        self.grid.len()
    }

    pub fn cols(&self) -> usize {
        self.grid.first().map_or(0, |r| r.len())
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.grid
            .get(row)
            .and_then(|r| r.get(col))
            .copied()
            .unwrap_or(0)
    }

    pub fn grid(&self) -> &[Vec<u64>] {
        &self.grid
    }

    /// Castelnuovo-Mumford regularity: the largest nonempty row index.
    pub fn regularity(&self) -> usize {
        (0..self.rows())
            .filter(|&r| self.grid[r].iter().any(|&b| b > 0))
            .max()
            .unwrap_or(0)
    }

    /// Numerical Gorenstein symmetry: invariance under 180-degree rotation.
    pub fn is_rotation_symmetric(&self) -> bool {
        let (rr, cc) = (self.rows(), self.cols());
        if rr == 0 || cc == 0 {
            return true;
        }
        (0..rr).all(|r| (0..cc).all(|c| self.grid[r][c] == self.grid[rr - 1 - r][cc - 1 - c]))
    }

    /// Total Betti numbers per homological index.
    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.cols())
            .map(|c| (0..self.rows()).map(|r| self.grid[r][c]).sum())
            .collect()
    }
}

/// Betti table of S/I (input should be saturated; not checked here).
pub fn betti_table(ideal: &Ideal) -> Result<BettiTable> {
    Ok(BettiTable::from_resolution(&minimal_resolution(ideal)?))
}

/// A generating set of the syzygy module of the columns of `m` (degree data
/// implicit: columns must be homogeneous). Computed by a module Groebner
/// basis of the graph {(col_i, e_i)} under a component-elimination order:
/// basis elements supported on the tag components are exactly the syzygies.
pub fn syzygies(ring: &RingRef, m: &PolyMatrix) -> PolyMatrix {
    let split = m.rows as u32;
    let order = ModOrder::PotElim { split };
    let mut gens: Vec<ModVec> = Vec::new();
    for j in 0..m.cols {
        let mut terms: Vec<ModTerm> = Vec::new();
        for i in 0..m.rows {
            push_poly_terms(&mut terms, m.entry(i, j), i);
        }
        terms.push(ModTerm {
            comp: split + j as u32,
            mono: Monomial::one(),
            coeff: 1,
        });
        gens.push(ModVec::from_terms(ring, &order, terms));
    }
    let basis = buchberger_modvec(ring, &order, &gens);
    let cols: Vec<Vec<Poly>> = basis
        .iter()
        .filter(|v| v.min_component().is_some_and(|c| c >= split))
        .map(|v| {
            (0..m.cols)
                .map(|j| v.coordinate(ring, split + j as u32))
                .collect()
        })
        .collect();
    PolyMatrix::from_columns(ring, m.cols, cols)
}

/// Linear-syzygy profile of a set of quadrics: the graded Betti numbers
/// (b_{2,3}, b_{3,4}) of the minimal resolution of the quadric ideal, i.e.
/// the counts of linear first and linear second syzygies.
pub fn linear_syzygy_counts(quadrics: &[Poly]) -> Result<(u64, u64)> {
    let Some(first) = quadrics.first() else {
        return Ok((0, 0));
    };
    let ring = first.ring().clone();
    for q in quadrics {
        let d = q.homogeneous_degree()?;
        if d != 2 {
            return Err(Error::NotQuadric(d));
        }
    }
    let ideal = Ideal::new(&ring, quadrics.to_vec())?;
    let table = betti_table(&ideal)?;
    Ok((table.entry(1, 2), table.entry(1, 3)))
}
