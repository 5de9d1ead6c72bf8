//! The per-type construction recipes. Each builder samples its random data,
//! assembles component ideals in the P^5 ring (subspace linear forms plus
//! equations), and returns a bundle; the genericity gate in `construct`
//! rejects degenerate draws.

use rand::Rng;

use crate::deform::{det3, DeformationFamily};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::pfaffian::{
    make_tom_jerry, pattern_from_doubled_weights, uniform_pattern, ColumnOverride, SkewMatrix,
    TomJerryFormat, TomJerryKind,
};
use crate::poly::{random_form, Poly};
use crate::ring::RingRef;

use super::{
    embed_adding_terms, intersection_scheme, subspace_ideal, Component, CurveBundle, CurveType,
    extract_form, IncidentPair, LiaisonData,
};

const P4_VARS: [usize; 5] = [0, 1, 2, 3, 4];

pub(super) fn build<R: Rng>(ct: CurveType, ring: &RingRef, rng: &mut R) -> Result<CurveBundle> {
    match ct {
        CurveType::T21 => build_21(ring, rng),
        CurveType::T22 => build_22(ring, rng),
        CurveType::T23 => build_23(ring, rng),
        CurveType::T25 => build_25(ring, rng),
        CurveType::T26a => build_26a(ring, rng, default_26a_kind()),
        CurveType::T26b => build_26b(ring, rng),
        CurveType::T27 => build_27(ring, rng),
        CurveType::T28 => build_28(ring, rng),
    }
}

/// The Tom/Jerry variant used for the mixed-pattern 5x5 construction; the
/// index set defaults to the last rows, and is exposed for experiments via
/// [`build_26a_with_kind`].
pub fn default_26a_kind() -> TomJerryKind {
    TomJerryKind::Jer(vec![3, 4])
}

fn x(ring: &RingRef, i: usize) -> Poly {
    Poly::var(ring, i)
}

fn skeleton(
    ring: &RingRef,
    components: Vec<Component>,
    union_ideal: Ideal,
    pairs: Vec<IncidentPair>,
    liaison: Option<LiaisonData>,
    deformation: Option<DeformationFamily>,
) -> CurveBundle {
    CurveBundle {
        curve_type: CurveType::T27, // overwritten by `construct`
        seed: 0,
        characteristic: ring.field().modulus(),
        ring: ring.clone(),
        components,
        union_ideal,
        pairs,
        liaison,
        deformation,
        attempts_used: 0,
    }
}

fn component(
    ring: &RingRef,
    name: &str,
    span_zero_vars: &[usize],
    equations: Vec<Poly>,
    expected: (i64, i64),
) -> Result<Component> {
    let mut gens = subspace_ideal(ring, span_zero_vars);
    gens.extend(equations);
    Ok(Component {
        name: name.to_string(),
        span_zero_vars: span_zero_vars.to_vec(),
        ideal: Ideal::new(ring, gens)?,
        expected_degree: expected.0,
        expected_genus: expected.1,
    })
}

fn residual_component(
    name: &str,
    gamma: &Ideal,
    linker: &Ideal,
    span_zero_vars: &[usize],
    expected: (i64, i64),
) -> Component {
    Component {
        name: name.to_string(),
        span_zero_vars: span_zero_vars.to_vec(),
        ideal: gamma.colon(linker),
        expected_degree: expected.0,
        expected_genus: expected.1,
    }
}

fn union_of(components: &[Component]) -> Ideal {
    let mut it = components.iter();
    let first = it.next().expect("at least one component").ideal.clone();
    it.fold(first, |acc, c| acc.intersect(&c.ideal))
    // intersections of saturated ideals are saturated; the verifier checks
    // the invariant on every bundle
}

/// Gamma = curve in P^4 cut by the sub-maximal Pfaffians, as a P^5 ideal.
fn pfaffian_gamma(ring: &RingRef, skew: &SkewMatrix) -> Result<Ideal> {
    let mut gens = vec![x(ring, 5)];
    gens.extend(skew.submaximal_pfaffians()?);
    Ideal::new(ring, gens)
}

/// Type 2.7: Gamma is a (2,2,3) complete intersection in (x0,x1,x2); the
/// residual to the line is degree 11; the attached plane quartic is
/// det N + g x5. The seven-generator ideal is checked against the component
/// intersection, and the deformation data rides along in the bundle.
fn build_27<R: Rng>(ring: &RingRef, rng: &mut R) -> Result<CurveBundle> {
    let all: Vec<usize> = (0..6).collect();
    let lin = |rng: &mut R| random_form(ring, 1, &P4_VARS, None, rng);
    let a = [lin(rng)?, lin(rng)?, lin(rng)?];
    let b = [lin(rng)?, lin(rng)?, lin(rng)?];
    let quad = |rng: &mut R| random_form(ring, 2, &P4_VARS, None, rng);
    let c = [quad(rng)?, quad(rng)?, quad(rng)?];
    let g = random_form(ring, 3, &all, None, rng)?;

    let q4 = a[0].mul(&x(ring, 0)).add(&a[1].mul(&x(ring, 1))).add(&a[2].mul(&x(ring, 2)));
    let q5 = b[0].mul(&x(ring, 0)).add(&b[1].mul(&x(ring, 1))).add(&b[2].mul(&x(ring, 2)));
    let f_cubic = c[0].mul(&x(ring, 0)).add(&c[1].mul(&x(ring, 1))).add(&c[2].mul(&x(ring, 2)));
    let det_n = det3(&a, &b, &c);
    let quartic = det_n.add(&g.mul(&x(ring, 5)));

    let gamma = Ideal::new(
        ring,
        vec![x(ring, 5), q4.clone(), q5.clone(), f_cubic.clone()],
    )?;
    let linker = Ideal::new(ring, subspace_ideal(ring, &[0, 1, 2, 5]))?;

    let c1 = residual_component("C1", &gamma, &linker, &[5], (11, 10));
    let c2 = component(ring, "C2", &[0, 1, 2], vec![quartic.clone()], (4, 3))?;

    // the seven-generator presentation; must agree with the component intersection
    let direct = Ideal::new(
        ring,
        vec![
            x(ring, 0).mul(&x(ring, 5)),
            x(ring, 1).mul(&x(ring, 5)),
            x(ring, 2).mul(&x(ring, 5)),
            q4,
            q5,
            f_cubic.clone(),
            quartic.clone(),
        ],
    )?;
    let components = vec![c1, c2];
    let meet = union_of(&components);
    if !meet.ideal_eq(&direct) {
        return Err(Error::Other(
            "seven-generator ideal does not match the component intersection".into(),
        ));
    }

    let family = DeformationFamily {
        ring: ring.clone(),
        a,
        b,
        c,
        g,
        f_cubic,
        det_n,
        quartic,
    };
    Ok(skeleton(
        ring,
        components,
        direct,
        vec![IncidentPair { a: 0, b: 1, expected_points: 4 }],
        Some(LiaisonData { gamma, linker, residual: 0 }),
        Some(family),
    ))
}

/// Type 2.5: Gamma is cut by the 6x6 Pfaffians of a 7x7 linear matrix in
/// Tom_{67} format over (x0,x1,x2); the four residual intersection points on
/// the line define the binary quartic of the plane-quartic ear.
fn build_25<R: Rng>(ring: &RingRef, rng: &mut R) -> Result<CurveBundle> {
    let j_gens: Vec<Poly> = (0..3).map(|i| x(ring, i)).collect();
    let fmt = TomJerryFormat::new(
        TomJerryKind::Tom(vec![5, 6]),
        7,
        j_gens,
        uniform_pattern(7, 1),
        P4_VARS.to_vec(),
    );
    let skew = make_tom_jerry(ring, &fmt, rng)?;
    let gamma = pfaffian_gamma(ring, &skew)?;
    let linker = Ideal::new(ring, subspace_ideal(ring, &[0, 1, 2, 5]))?;

    let c1 = residual_component("C1", &gamma, &linker, &[5], (13, 12));
    let z = intersection_scheme(&c1.ideal, &linker);
    let q4 = extract_form(&z, &[0, 1, 2, 5], 4, None)?;
    let ear_quartic = embed_adding_terms(&q4, &[5], &[3, 4, 5], rng)?;
    let c2 = component(ring, "C2", &[0, 1, 2], vec![ear_quartic], (4, 3))?;

    let components = vec![c1, c2];
    let union_ideal = union_of(&components);
    Ok(skeleton(
        ring,
        components,
        union_ideal,
        vec![IncidentPair { a: 0, b: 1, expected_points: 4 }],
        Some(LiaisonData { gamma, linker, residual: 0 }),
        None,
    ))
}

/// The mixed-pattern 5x5 variant (type 2.6, first construction): linear
/// block with a quadric last column, Tom/Jerry over (x0,x1,x2). The quadric
/// Pfaffian joins x0x5, x1x5, x2x5 as the fourth quadric of the union.
pub fn build_26a_with_kind<R: Rng>(
    ring: &RingRef,
    rng: &mut R,
    kind: TomJerryKind,
) -> Result<CurveBundle> {
    let j_gens: Vec<Poly> = (0..3).map(|i| x(ring, i)).collect();
    let fmt = TomJerryFormat::new(
        kind,
        5,
        j_gens,
        pattern_from_doubled_weights(&[1, 1, 1, 1, 3]),
        P4_VARS.to_vec(),
    );
    let skew = make_tom_jerry(ring, &fmt, rng)?;
    let gamma = pfaffian_gamma(ring, &skew)?;
    let linker = Ideal::new(ring, subspace_ideal(ring, &[0, 1, 2, 5]))?;

    let c1 = residual_component("C1", &gamma, &linker, &[5], (12, 11));
    let z = intersection_scheme(&c1.ideal, &linker);
    let q4 = extract_form(&z, &[0, 1, 2, 5], 4, None)?;
    let ear_quartic = embed_adding_terms(&q4, &[5], &[3, 4, 5], rng)?;
    let c2 = component(ring, "C2", &[0, 1, 2], vec![ear_quartic], (4, 3))?;

    let components = vec![c1, c2];
    let union_ideal = union_of(&components);
    Ok(skeleton(
        ring,
        components,
        union_ideal,
        vec![IncidentPair { a: 0, b: 1, expected_points: 4 }],
        Some(LiaisonData { gamma, linker, residual: 0 }),
        None,
    ))
}

fn build_26a<R: Rng>(ring: &RingRef, rng: &mut R, kind: TomJerryKind) -> Result<CurveBundle> {
    build_26a_with_kind(ring, rng, kind)
}

/// Type 2.6, second construction: matched (3,3) complete intersections in
/// two P^3's, glued along four points of P^1_{x4:x5} cut by the common
/// restricted quartic.
fn build_26b<R: Rng>(ring: &RingRef, rng: &mut R) -> Result<CurveBundle> {
    // a matched pair: equal restrictions to the common line x4, x5
    let pair = |rng: &mut R| -> Result<(Poly, Poly)> {
        let shared = random_form(ring, 2, &[4, 5], None, rng)?;
        let m23: Vec<Poly> = vec![x(ring, 2), x(ring, 3)];
        let m01: Vec<Poly> = vec![x(ring, 0), x(ring, 1)];
        let in_p3_a = random_form(ring, 2, &[2, 3, 4, 5], Some(&m23), rng)?;
        let in_p3_b = random_form(ring, 2, &[0, 1, 4, 5], Some(&m01), rng)?;
        Ok((shared.add(&in_p3_a), shared.add(&in_p3_b)))
    };
    let (p3, p1) = pair(rng)?;
    let (p4, p2) = pair(rng)?;
    let (q3, q1) = pair(rng)?;
    let (q4, q2) = pair(rng)?;

    let f1 = x(ring, 2).mul(&p3).add(&x(ring, 3).mul(&p4));
    let f2 = x(ring, 2).mul(&q3).add(&x(ring, 3).mul(&q4));
    let f3 = x(ring, 0).mul(&p1).add(&x(ring, 1).mul(&p2));
    let f4 = x(ring, 0).mul(&q1).add(&x(ring, 1).mul(&q2));
    let d1 = p3.mul(&q4).sub(&p4.mul(&q3));
    let d2 = p1.mul(&q2).sub(&p2.mul(&q1));

    // both residual quartics restrict to one binary quartic on the line
    let r1 = d1.substitute_zero(&[2, 3]);
    let r2 = d2.substitute_zero(&[0, 1]);
    if r1 != r2 {
        return Err(Error::Other(
            "matched restrictions failed to agree on the common line".into(),
        ));
    }

    let c1 = component(ring, "C1", &[0, 1], vec![f1, f2, d1], (8, 7))?;
    let c2 = component(ring, "C2", &[2, 3], vec![f3, f4, d2], (8, 7))?;
    let components = vec![c1, c2];
    let union_ideal = union_of(&components);
    Ok(skeleton(
        ring,
        components,
        union_ideal,
        vec![IncidentPair { a: 0, b: 1, expected_points: 4 }],
        None,
        None,
    ))
}

/// Type 2.3: the cubic-scroll construction. One component is residual to
/// the conic (x0x2 - x1^2, x5) in a (3,3) complete intersection in
/// P^3_{x0,x1,x2,x5}; the other is the scroll section by the residual cubic
/// pushed into P^4.
fn build_23<R: Rng>(ring: &RingRef, rng: &mut R) -> Result<CurveBundle> {
    let span: [usize; 4] = [0, 1, 2, 5];
    let p1 = random_form(ring, 1, &span, None, rng)?;
    let p2 = random_form(ring, 1, &span, None, rng)?;
    let q1 = random_form(ring, 2, &span, None, rng)?;
    let q2 = random_form(ring, 2, &span, None, rng)?;
    let minor = x(ring, 0).mul(&x(ring, 2)).sub(&x(ring, 1).mul(&x(ring, 1)));
    let x5 = x(ring, 5);

    let g1 = p1.mul(&minor).add(&q1.mul(&x5));
    let g2 = p2.mul(&minor).add(&q2.mul(&x5));
    let h = p1.mul(&q2).sub(&p2.mul(&q1));

    let gamma = Ideal::new(ring, vec![x(ring, 3), x(ring, 4), g1, g2])?;
    let linker = Ideal::new(ring, vec![x(ring, 3), x(ring, 4), minor.clone(), x5.clone()])?;
    let c1 = residual_component("C1", &gamma, &linker, &[3, 4], (7, 5));

    // the residual cubic, pushed into P^4 by terms in (x3, x4)
    let x_cubic = embed_adding_terms(&h, &[3, 4], &P4_VARS, rng)?;
    let scroll = vec![
        minor,
        x(ring, 0).mul(&x(ring, 4)).sub(&x(ring, 1).mul(&x(ring, 3))),
        x(ring, 1).mul(&x(ring, 4)).sub(&x(ring, 2).mul(&x(ring, 3))),
    ];
    let mut c2_eqs = scroll;
    c2_eqs.push(x_cubic);
    let c2 = component(ring, "C2", &[5], c2_eqs, (9, 7))?;

    let components = vec![c1, c2];
    let union_ideal = union_of(&components);
    Ok(skeleton(
        ring,
        components,
        union_ideal,
        vec![IncidentPair { a: 0, b: 1, expected_points: 6 }],
        Some(LiaisonData { gamma, linker, residual: 0 }),
        None,
    ))
}

/// Type 2.1: 7x7 linear Tom_{567} over (x0,x1) with refined columns, linked
/// through the degenerate conic (x0, x1, x2x3). The residual curve meets the
/// conic in six points cut by a cubic; quadric and cubic are pushed into
/// P^3_{x2..x5} to form the (2,3) complete intersection ear.
fn build_21<R: Rng>(ring: &RingRef, rng: &mut R) -> Result<CurveBundle> {
    let ell = random_form(ring, 1, &[2, 3, 4, 5], None, rng)?;
    let conic_plane = x(ring, 2).mul(&x(ring, 3));
    let q3 = conic_plane.add(&x(ring, 5).mul(&ell));

    let mut fmt = TomJerryFormat::new(
        TomJerryKind::Tom(vec![4, 5, 6]),
        7,
        vec![x(ring, 0), x(ring, 1)],
        uniform_pattern(7, 1),
        P4_VARS.to_vec(),
    );
    fmt.column_overrides = vec![
        ColumnOverride {
            col: 4,
            membership: vec![x(ring, 0), x(ring, 1), x(ring, 2)],
            exempt_rows: vec![],
        },
        ColumnOverride {
            col: 5,
            membership: vec![x(ring, 0), x(ring, 1), x(ring, 3)],
            exempt_rows: vec![4], // the (5,6) entry stays general
        },
    ];
    let skew = make_tom_jerry(ring, &fmt, rng)?;
    let gamma = pfaffian_gamma(ring, &skew)?;
    let linker = Ideal::new(
        ring,
        vec![x(ring, 0), x(ring, 1), conic_plane.clone(), x(ring, 5)],
    )?;

    let c1 = residual_component("C1", &gamma, &linker, &[5], (12, 10));
    let z = intersection_scheme(&c1.ideal, &linker);
    let conic_ideal = Ideal::new(ring, vec![conic_plane])?;
    let h = extract_form(&z, &[0, 1, 5], 3, Some(&conic_ideal))?;
    let h_ear = embed_adding_terms(&h, &[5], &[2, 3, 4, 5], rng)?;
    let c2 = component(ring, "C2", &[0, 1], vec![q3, h_ear], (6, 4))?;

    let components = vec![c1, c2];
    let union_ideal = union_of(&components);
    Ok(skeleton(
        ring,
        components,
        union_ideal,
        vec![IncidentPair { a: 0, b: 1, expected_points: 6 }],
        Some(LiaisonData { gamma, linker, residual: 0 }),
        None,
    ))
}

/// Type 2.2: 5x5 matrix with a quadric first row in (x0,x1) and a general
/// linear block. The quadric Pfaffian cuts the linking conic; the residual
/// meets it in six points on a cubic, and both are pushed into P^3_{x2..x5}.
fn build_22<R: Rng>(ring: &RingRef, rng: &mut R) -> Result<CurveBundle> {
    let fmt = TomJerryFormat::new(
        TomJerryKind::Jer(vec![0]),
        5,
        vec![x(ring, 0), x(ring, 1)],
        pattern_from_doubled_weights(&[3, 1, 1, 1, 1]),
        P4_VARS.to_vec(),
    );
    let skew = make_tom_jerry(ring, &fmt, rng)?;
    let pfs = skew.submaximal_pfaffians()?;
    let q3 = pfs[0].clone(); // the quadric Pfaffian (general, not in (x0,x1))
    let gamma = pfaffian_gamma(ring, &skew)?;
    let linker = Ideal::new(ring, vec![x(ring, 0), x(ring, 1), q3.clone(), x(ring, 5)])?;

    let c1 = residual_component("C1", &gamma, &linker, &[5], (11, 9));
    let z = intersection_scheme(&c1.ideal, &linker);
    let conic_restricted = q3.substitute_zero(&[0, 1, 5]);
    let conic_ideal = Ideal::new(ring, vec![conic_restricted.clone()])?;
    let f1 = extract_form(&z, &[0, 1, 5], 3, Some(&conic_ideal))?;

    let ear_quadric = embed_adding_terms(&conic_restricted, &[5], &[2, 3, 4, 5], rng)?;
    let ear_cubic = embed_adding_terms(&f1, &[5], &[2, 3, 4, 5], rng)?;
    let c2 = component(ring, "C2", &[0, 1], vec![ear_quadric, ear_cubic], (6, 4))?;

    let components = vec![c1, c2];
    let union_ideal = union_of(&components);
    Ok(skeleton(
        ring,
        components,
        union_ideal,
        vec![IncidentPair { a: 0, b: 1, expected_points: 6 }],
        Some(LiaisonData { gamma, linker, residual: 0 }),
        None,
    ))
}

/// Type 2.8, the "big ears" construction: a degree-7 genus-4 curve in
/// P^3_{x0..x3} residual to both coordinate lines in a (3,3) complete
/// intersection, with a plane quartic glued along each line. The gluing
/// quartics are the 2x2-minor combinations double on the opposite line.
fn build_28<R: Rng>(ring: &RingRef, rng: &mut R) -> Result<CurveBundle> {
    let v3: [usize; 4] = [0, 1, 2, 3];
    let lin = |rng: &mut R| random_form(ring, 1, &v3, None, rng);
    let (l13, l23, l14, l24) = (lin(rng)?, lin(rng)?, lin(rng)?, lin(rng)?);
    let (m13, m23, m14, m24) = (lin(rng)?, lin(rng)?, lin(rng)?, lin(rng)?);

    // F_i = x2 A_i + x3 B_i = x0 C_i + x1 D_i
    let a1 = l13.mul(&x(ring, 0)).add(&l23.mul(&x(ring, 1)));
    let b1 = l14.mul(&x(ring, 0)).add(&l24.mul(&x(ring, 1)));
    let a2 = m13.mul(&x(ring, 0)).add(&m23.mul(&x(ring, 1)));
    let b2 = m14.mul(&x(ring, 0)).add(&m24.mul(&x(ring, 1)));
    let f1 = x(ring, 2).mul(&a1).add(&x(ring, 3).mul(&b1));
    let f2 = x(ring, 2).mul(&a2).add(&x(ring, 3).mul(&b2));

    let c1c = l13.mul(&x(ring, 2)).add(&l14.mul(&x(ring, 3)));
    let d1c = l23.mul(&x(ring, 2)).add(&l24.mul(&x(ring, 3)));
    let c2c = m13.mul(&x(ring, 2)).add(&m14.mul(&x(ring, 3)));
    let d2c = m23.mul(&x(ring, 2)).add(&m24.mul(&x(ring, 3)));

    // quartic double on x0=x1=0 resp. x2=x3=0
    let h1 = a1.mul(&b2).sub(&b1.mul(&a2));
    let h2 = c1c.mul(&d2c).sub(&d1c.mul(&c2c));

    let c0 = component(
        ring,
        "C0",
        &[4, 5],
        vec![f1.clone(), f2.clone(), h1.clone(), h2.clone()],
        (7, 4),
    )?;

    let ear1_plane = h1.substitute_zero(&[2, 3]);
    let ear1_quartic = embed_adding_terms(&ear1_plane, &[5], &[0, 1, 5], rng)?;
    let ear1 = component(ring, "C1", &[2, 3, 4], vec![ear1_quartic], (4, 3))?;

    let ear2_plane = h2.substitute_zero(&[0, 1]);
    let ear2_quartic = embed_adding_terms(&ear2_plane, &[4], &[2, 3, 4], rng)?;
    let ear2 = component(ring, "C2", &[0, 1, 5], vec![ear2_quartic], (4, 3))?;

    let gamma = Ideal::new(ring, vec![x(ring, 4), x(ring, 5), f1, f2])?;
    let linker = Ideal::new(
        ring,
        vec![
            x(ring, 4),
            x(ring, 5),
            x(ring, 0).mul(&x(ring, 2)),
            x(ring, 0).mul(&x(ring, 3)),
            x(ring, 1).mul(&x(ring, 2)),
            x(ring, 1).mul(&x(ring, 3)),
        ],
    )?;

    let components = vec![c0, ear1, ear2];
    let union_ideal = union_of(&components);
    Ok(skeleton(
        ring,
        components,
        union_ideal,
        vec![
            IncidentPair { a: 0, b: 1, expected_points: 4 },
            IncidentPair { a: 0, b: 2, expected_points: 4 },
            IncidentPair { a: 1, b: 2, expected_points: 0 },
        ],
        Some(LiaisonData { gamma, linker, residual: 0 }),
        None,
    ))
}
