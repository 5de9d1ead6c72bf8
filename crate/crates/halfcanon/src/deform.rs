//! The flat deformation family from the reducible degree-15 curve to the
//! del Pezzo-times-cubic model.
//!
//! The family is parametrized by a field scalar t. At t = 0 its ideal is the
//! defining ideal of the reducible curve; at invertible t the quartic falls
//! into the ideal of the first six generators and the Betti table jumps to
//! the del Pezzo shape. The whole structure is determined by the linear
//! forms a_i, b_i, the quadrics c_i and the cubic g:
//!
//! * Q4 = a1 x0 + a2 x1 + a3 x2, Q5 = b1 x0 + b2 x1 + b3 x2,
//! * F = c1 x0 + c2 x1 + c3 x2, F_t = F + t g,
//! * Q_i(t) = x_{i-1} x5 - t (a x b)_i for i = 1..3,
//! * q = det N + g x5 with N the 3x3 matrix of rows a, b, c.
//!
//! With the cyclic sign convention for a x b, the syzygy identity
//! t q + c1 Q1 + c2 Q2 + c3 Q3 - x5 F_t = 0 holds for every t; the
//! expression is affine-linear in t, so checking it at t = 0 and t = 1
//! proves it identically.

use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::ring::RingRef;

#[derive(Debug, Clone)]
pub struct DeformationFamily {
    pub ring: RingRef,
    pub a: [Poly; 3],
    pub b: [Poly; 3],
    pub c: [Poly; 3],
    pub g: Poly,
    /// F = c1 x0 + c2 x1 + c3 x2
    pub f_cubic: Poly,
    /// det N, N = rows (a, b, c)
    pub det_n: Poly,
    /// q = det N + g x5
    pub quartic: Poly,
}

/// Cross product with cyclic signs: (a x b)_i = a_{i+1} b_{i+2} - a_{i+2} b_{i+1}.
pub fn cross3(a: &[Poly; 3], b: &[Poly; 3]) -> [Poly; 3] {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

/// det of the 3x3 matrix with rows a, b, c: the dot product c . (a x b).
pub fn det3(a: &[Poly; 3], b: &[Poly; 3], c: &[Poly; 3]) -> Poly {
    let x = cross3(a, b);
    c[0].mul(&x[0]).add(&c[1].mul(&x[1])).add(&c[2].mul(&x[2]))
}

impl DeformationFamily {
    /// The five quadrics at parameter t.
    pub fn quadrics_at(&self, t: i64) -> [Poly; 5] {
        let r = &self.ring;
        let x = |i| Poly::var(r, i);
        let x5 = x(5);
        let cross = cross3(&self.a, &self.b);
        let q1 = x(0).mul(&x5).sub(&cross[0].scale(t));
        let q2 = x(1).mul(&x5).sub(&cross[1].scale(t));
        let q3 = x(2).mul(&x5).sub(&cross[2].scale(t));
        let q4 = self.a[0]
            .mul(&x(0))
            .add(&self.a[1].mul(&x(1)))
            .add(&self.a[2].mul(&x(2)));
        let q5 = self.b[0]
            .mul(&x(0))
            .add(&self.b[1].mul(&x(1)))
            .add(&self.b[2].mul(&x(2)));
        [q1, q2, q3, q4, q5]
    }

    /// F_t = F + t g.
    pub fn cubic_at(&self, t: i64) -> Poly {
        self.f_cubic.add(&self.g.scale(t))
    }

    /// The first six generators (Q1..Q5, F_t) as an ideal.
    pub fn first_six_at(&self, t: i64) -> Result<Ideal> {
        let q = self.quadrics_at(t);
        let mut gens = q.to_vec();
        gens.push(self.cubic_at(t));
        Ideal::new(&self.ring, gens)
    }

    /// I_t = (Q1..Q5, F_t, q).
    pub fn ideal_at(&self, t: i64) -> Result<Ideal> {
        let q = self.quadrics_at(t);
        let mut gens = q.to_vec();
        gens.push(self.cubic_at(t));
        gens.push(self.quartic.clone());
        Ideal::new(&self.ring, gens)
    }

    /// The syzygy-identity residual t q + c1 Q1 + c2 Q2 + c3 Q3 - x5 F_t,
    /// which must vanish identically.
    pub fn syzygy_residual_at(&self, t: i64) -> Poly {
        let x5 = Poly::var(&self.ring, 5);
        let q = self.quadrics_at(t);
        self.quartic
            .scale(t)
            .add(&self.c[0].mul(&q[0]))
            .add(&self.c[1].mul(&q[1]))
            .add(&self.c[2].mul(&q[2]))
            .sub(&x5.mul(&self.cubic_at(t)))
    }
}

/// The deformation family attached to a seeded degree-15 reducible curve
/// (same sampling as the catalogue construction of that curve).
pub fn family_from_seed(seed: u64, p: u64) -> Result<DeformationFamily> {
    let bundle = crate::catalogue::construct(crate::catalogue::CurveType::T27, seed, p)?;
    Ok(bundle
        .deformation
        .expect("the degree-15 reducible construction always carries its family"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::random_form;
    use crate::ring::Ring;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sample_family(seed: u64) -> DeformationFamily {
        let ring = Ring::p5(32003).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v4: Vec<usize> = (0..5).collect();
        let all: Vec<usize> = (0..6).collect();
        let mut lin = || random_form(&ring, 1, &v4, None, &mut rng).unwrap();
        let a = [lin(), lin(), lin()];
        let b = [lin(), lin(), lin()];
        let mut quad = || random_form(&ring, 2, &v4, None, &mut rng).unwrap();
        let c = [quad(), quad(), quad()];
        let g = random_form(&ring, 3, &all, None, &mut rng).unwrap();
        let x = |i| Poly::var(&ring, i);
        let f_cubic = c[0].mul(&x(0)).add(&c[1].mul(&x(1))).add(&c[2].mul(&x(2)));
        let det_n = det3(&a, &b, &c);
        let quartic = det_n.add(&g.mul(&x(5)));
        DeformationFamily {
            ring,
            a,
            b,
            c,
            g,
            f_cubic,
            det_n,
            quartic,
        }
    }

    #[test]
    fn syzygy_identity_vanishes_at_zero_and_one() {
        // affine-linear in t, so these two evaluations prove the identity
        for seed in [1u64, 2, 3] {
            let fam = sample_family(seed);
            assert!(fam.syzygy_residual_at(0).is_zero());
            assert!(fam.syzygy_residual_at(1).is_zero());
            assert!(fam.syzygy_residual_at(12345).is_zero());
        }
    }

    #[test]
    fn det3_matches_laplace() {
        let ring = Ring::p5(32003).unwrap();
        let x = |i| Poly::var(&ring, i);
        // rows (x0, x1, x2), (x3, x4, x5), (x0, x3, x5)
        let a = [x(0), x(1), x(2)];
        let b = [x(3), x(4), x(5)];
        let c = [x(0), x(3), x(5)];
        let det = det3(&a, &b, &c);
        // expand along the first row
        let m00 = x(4).mul(&x(5)).sub(&x(5).mul(&x(3)));
        let m01 = x(3).mul(&x(5)).sub(&x(5).mul(&x(0)));
        let m02 = x(3).mul(&x(3)).sub(&x(4).mul(&x(0)));
        let expect = x(0)
            .mul(&m00)
            .sub(&x(1).mul(&m01))
            .add(&x(2).mul(&m02));
        assert_eq!(det, expect);
    }
}
