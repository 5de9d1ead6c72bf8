//! Seeded construction of the curve catalogue: one nodal half-canonical
//! curve in P^5 per Betti type, assembled from Pfaffian formats, complete
//! intersections, and liaison, with bookkeeping checks at every joint.
//!
//! Every construction is deterministic in (type, seed, characteristic).
//! Genericity failures (a random choice landing on a degenerate locus) are
//! handled by bounded retry with derived sub-seeds; with the default
//! characteristic they are essentially never hit.

mod builders;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::deform::DeformationFamily;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{random_form, Poly};
use crate::ring::{Ring, RingRef};

pub const MAX_ATTEMPTS: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveType {
    T21,
    T22,
    T23,
    T25,
    T26a,
    T26b,
    T27,
    T28,
}

impl CurveType {
    pub fn parse(tag: &str) -> Result<CurveType> {
        match tag {
            "2.1" => Ok(CurveType::T21),
            "2.2" => Ok(CurveType::T22),
            "2.3" => Ok(CurveType::T23),
            "2.5" => Ok(CurveType::T25),
            "2.6a" => Ok(CurveType::T26a),
            "2.6b" => Ok(CurveType::T26b),
            "2.7" => Ok(CurveType::T27),
            "2.8" => Ok(CurveType::T28),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CurveType::T21 => "2.1",
            CurveType::T22 => "2.2",
            CurveType::T23 => "2.3",
            CurveType::T25 => "2.5",
            CurveType::T26a => "2.6a",
            CurveType::T26b => "2.6b",
            CurveType::T27 => "2.7",
            CurveType::T28 => "2.8",
        }
    }

    pub fn all() -> [CurveType; 8] {
        [
            CurveType::T21,
            CurveType::T22,
            CurveType::T23,
            CurveType::T25,
            CurveType::T26a,
            CurveType::T26b,
            CurveType::T27,
            CurveType::T28,
        ]
    }

    /// Expected (degree, genus) of the union curve.
    pub fn union_invariants(&self) -> (i64, i64) {
        match self {
            CurveType::T21 => (18, 19),
            CurveType::T22 => (17, 18),
            CurveType::T23 | CurveType::T26a | CurveType::T26b => (16, 17),
            CurveType::T25 => (17, 18),
            CurveType::T27 | CurveType::T28 => (15, 16),
        }
    }

    /// Expected component (degree, genus) pairs, in construction order.
    pub fn component_invariants(&self) -> Vec<(i64, i64)> {
        match self {
            CurveType::T21 => vec![(12, 10), (6, 4)],
            CurveType::T22 => vec![(11, 9), (6, 4)],
            CurveType::T23 => vec![(7, 5), (9, 7)],
            CurveType::T25 => vec![(13, 12), (4, 3)],
            CurveType::T26a => vec![(12, 11), (4, 3)],
            CurveType::T26b => vec![(8, 7), (8, 7)],
            CurveType::T27 => vec![(11, 10), (4, 3)],
            CurveType::T28 => vec![(7, 4), (4, 3), (4, 3)],
        }
    }

    /// Total number of double points.
    pub fn double_points(&self) -> i64 {
        match self {
            CurveType::T21 | CurveType::T22 | CurveType::T23 => 6,
            CurveType::T25 | CurveType::T26a | CurveType::T26b | CurveType::T27 => 4,
            CurveType::T28 => 8,
        }
    }
}

impl std::fmt::Display for CurveType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// One irreducible piece of the nodal curve: its linear span (as the set of
/// vanishing coordinates), the equations inside the span, and the full
/// saturated ideal in P^5.
#[derive(Debug, Clone)]
pub struct Component {
    pub name: String,
    pub span_zero_vars: Vec<usize>,
    pub ideal: Ideal,
    pub expected_degree: i64,
    pub expected_genus: i64,
}

impl Component {
    /// Generators of the ideal inside the span: reduced-basis elements whose
    /// terms avoid the vanishing coordinates (the rest are the span forms).
    pub fn span_equations(&self) -> Vec<Poly> {
        self.ideal
            .groebner()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.avoids(&self.span_zero_vars)))
            .cloned()
            .collect()
    }
}

/// A pair of components expected to meet in `expected_points` reduced points
/// (0 = expected disjoint).
#[derive(Debug, Clone, Copy)]
pub struct IncidentPair {
    pub a: usize,
    pub b: usize,
    pub expected_points: i64,
}

/// The Gorenstein linkage that produced the residual component: the ambient
/// curve Gamma, the linking piece, and which component is the residual.
#[derive(Debug, Clone)]
pub struct LiaisonData {
    pub gamma: Ideal,
    pub linker: Ideal,
    pub residual: usize,
}

#[derive(Debug, Clone)]
pub struct CurveBundle {
    pub curve_type: CurveType,
    pub seed: u64,
    pub characteristic: u64,
    pub ring: RingRef,
    pub components: Vec<Component>,
    pub union_ideal: Ideal,
    pub pairs: Vec<IncidentPair>,
    pub liaison: Option<LiaisonData>,
    pub deformation: Option<DeformationFamily>,
    pub attempts_used: u32,
}

/// d = 2 (d_c - g_c + 1): the number of double points forced on a component
/// of the given degree and genus by the half-canonical condition.
pub fn expected_double_points(d_component: i64, g_component: i64) -> Result<i64> {
    let d = 2 * (d_component - g_component + 1);
    if d <= 0 {
        return Err(Error::BadDoublePoints(d));
    }
    Ok(d)
}

/// Arithmetic genus of a connected nodal union: sum of the component genera
/// plus the double points, minus (number of components - 1).
pub fn total_genus(components: &[(i64, i64)], double_points: i64, n_components: i64) -> i64 {
    components.iter().map(|&(_, g)| g).sum::<i64>() + double_points - (n_components - 1)
}

/// `f` plus a random form of the same degree inside the ideal of
/// `extra_vars`, drawn over `plane_vars`: the hypersurface equation in the
/// larger subspace, restricting back to `f`.
pub fn embed_adding_terms<R: rand::Rng>(
    f: &Poly,
    extra_vars: &[usize],
    plane_vars: &[usize],
    rng: &mut R,
) -> Result<Poly> {
    let ring = f.ring().clone();
    let degree = f.homogeneous_degree()?;
    let membership: Vec<Poly> = extra_vars.iter().map(|&v| Poly::var(&ring, v)).collect();
    let extra = random_form(&ring, degree, plane_vars, Some(&membership), rng)?;
    Ok(f.add(&extra))
}

/// Linear forms cutting a coordinate subspace.
pub fn subspace_ideal(ring: &RingRef, zero_vars: &[usize]) -> Vec<Poly> {
    zero_vars.iter().map(|&v| Poly::var(ring, v)).collect()
}

/// The scheme-theoretic intersection, saturated.
pub fn intersection_scheme(a: &Ideal, b: &Ideal) -> Ideal {
    let m = Ideal::irrelevant(a.ring());
    a.sum(b).saturate(&m).0
}

/// Restriction of the reduced basis to a coordinate subspace: substitute the
/// listed variables to zero in every basis element, keep nonzero results.
pub fn restricted_basis(ideal: &Ideal, zero_vars: &[usize]) -> Vec<Poly> {
    ideal
        .groebner()
        .iter()
        .map(|g| g.substitute_zero(zero_vars))
        .filter(|g| !g.is_zero())
        .collect()
}

/// Picks, from the restriction of `scheme` to a coordinate subspace, the
/// first degree-`degree` element not contained in `avoid` (when given).
/// This is how the binary quartic on a line, or the cubic through six
/// points on a conic, is read off an intersection scheme.
pub fn extract_form(
    scheme: &Ideal,
    zero_vars: &[usize],
    degree: u32,
    avoid: Option<&Ideal>,
) -> Result<Poly> {
    for g in restricted_basis(scheme, zero_vars) {
        if g.homogeneous_degree()? != degree {
            continue;
        }
        match avoid {
            None => return Ok(g),
            Some(ideal) => {
                if !ideal.contains(&g) {
                    return Ok(g);
                }
            }
        }
    }
    Err(Error::Other(format!(
        "no degree-{degree} form found in restricted intersection scheme"
    )))
}

/// Splitmix-style derivation of per-attempt sub-seeds.
pub fn derive_seed(seed: u64, attempt: u32) -> u64 {
    let mut z = seed
        .wrapping_add(0x9E3779B97F4A7C15u64.wrapping_mul(attempt as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Builds one catalogue example. Retries with derived sub-seeds (at most
/// [`MAX_ATTEMPTS`]) when a genericity check fails; the error carries the
/// diagnostics of every failed attempt.
pub fn construct(curve_type: CurveType, seed: u64, p: u64) -> Result<CurveBundle> {
    let ring = Ring::p5(p)?;
    let mut diagnostics = Vec::new();
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, attempt));
        let outcome = builders::build(curve_type, &ring, &mut rng).and_then(|mut bundle| {
            bundle.curve_type = curve_type;
            bundle.seed = seed;
            bundle.characteristic = p;
            bundle.attempts_used = attempt + 1;
            genericity_check(&bundle)?;
            Ok(bundle)
        });
        match outcome {
            Ok(bundle) => return Ok(bundle),
            Err(e) => diagnostics.push(format!("attempt {attempt}: {e}")),
        }
    }
    Err(Error::GenericityFailure {
        type_tag: curve_type.tag().to_string(),
        attempts: MAX_ATTEMPTS,
        diagnostics: diagnostics.join("; "),
    })
}

/// The per-construction genericity gate: component degrees and genera,
/// intersection-scheme dimensions and degrees, component smoothness, and the
/// union's Hilbert invariants. Betti tables are left to the verifier.
fn genericity_check(bundle: &CurveBundle) -> Result<()> {
    for comp in &bundle.components {
        let (d, g) = comp.ideal.curve_invariants().map_err(|e| {
            Error::Other(format!("component {} is not a curve: {e}", comp.name))
        })?;
        if (d, g) != (comp.expected_degree, comp.expected_genus) {
            return Err(Error::Other(format!(
                "component {}: got (degree, genus) = ({d}, {g}), expected ({}, {})",
                comp.name, comp.expected_degree, comp.expected_genus
            )));
        }
        if !crate::verifier::component_is_smooth(comp)? {
            return Err(Error::Other(format!(
                "component {} is singular",
                comp.name
            )));
        }
    }
    for pair in &bundle.pairs {
        let z = intersection_scheme(
            &bundle.components[pair.a].ideal,
            &bundle.components[pair.b].ideal,
        );
        if pair.expected_points == 0 {
            if !z.is_unit() {
                return Err(Error::Other(format!(
                    "components {} and {} unexpectedly meet",
                    pair.a, pair.b
                )));
            }
            continue;
        }
        let h = z.hilbert();
        if h.krull_dim != 1 || h.degree != pair.expected_points {
            return Err(Error::Other(format!(
                "intersection of components {} and {}: dim {} degree {}, expected {} points",
                pair.a,
                pair.b,
                h.proj_dim(),
                h.degree,
                pair.expected_points
            )));
        }
    }
    let (d, g) = bundle.union_ideal.curve_invariants()?;
    let (ed, eg) = bundle.curve_type.union_invariants();
    if (d, g) != (ed, eg) {
        return Err(Error::Other(format!(
            "union: got (degree, genus) = ({d}, {g}), expected ({ed}, {eg})"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_point_bookkeeping() {
        assert_eq!(expected_double_points(4, 3).unwrap(), 4);
        assert_eq!(expected_double_points(6, 4).unwrap(), 6);
        // a line meets its residual in 4 points
        assert_eq!(expected_double_points(1, 0).unwrap(), 4);
        assert!(matches!(
            expected_double_points(1, 3),
            Err(Error::BadDoublePoints(-2))
        ));
    }

    #[test]
    fn total_genus_bookkeeping() {
        assert_eq!(total_genus(&[(11, 10), (4, 3)], 4, 2), 16);
        assert_eq!(total_genus(&[(7, 4), (4, 3), (4, 3)], 8, 3), 16);
        assert_eq!(total_genus(&[(5, 2)], 0, 1), 2);
    }

    #[test]
    fn type_tags_round_trip() {
        for t in CurveType::all() {
            assert_eq!(CurveType::parse(t.tag()).unwrap(), t);
        }
        assert!(CurveType::parse("2.4").is_err());
    }

    #[test]
    fn table_consistency() {
        // component data, double points and union data agree with the
        // half-canonical bookkeeping identities
        for t in CurveType::all() {
            let comps = t.component_invariants();
            let (ud, ug) = t.union_invariants();
            assert_eq!(comps.iter().map(|c| c.0).sum::<i64>(), ud, "{t}");
            assert_eq!(
                total_genus(&comps, t.double_points(), comps.len() as i64),
                ug,
                "{t}"
            );
            assert_eq!(ug, ud + 1, "half-canonical proxy for {t}");
        }
    }

    #[test]
    fn derive_seed_is_stable_and_spread() {
        assert_eq!(derive_seed(1, 0), derive_seed(1, 0));
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
        assert_ne!(derive_seed(1, 0), derive_seed(2, 0));
    }
}
