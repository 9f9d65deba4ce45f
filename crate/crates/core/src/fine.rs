//! Fine interiors, the dilation polyhedron and the multipliers derived from it.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{denominator, rat_from_int, rat_is_positive, solve_square_raw, Int, IntVector, RatVector, Rational};
use crate::error::{Error, Result};
use crate::polyhedra::{resolve_hpolyhedron, HPolyhedron, HalfSpace, Polytope};
use crate::refinement::{canonical_rays, CanonicalRaySet};

/// A Fine interior together with the dual vectors that cut it out.
#[derive(Clone, Debug)]
pub struct FineResult {
    /// Possibly empty (intrinsic dimension −1).
    pub polytope: Polytope,
    pub defining_rays: CanonicalRaySet,
}

/// Intersection of `{x : ⟨x, n⟩ ≥ offset(n) + shift}` as a polytope (empty
/// when infeasible).
fn shifted_intersection<'a>(
    d: usize,
    constraints: impl Iterator<Item = (&'a IntVector, Rational)>,
) -> Result<Polytope> {
    let hs: Vec<HalfSpace> = constraints.map(|(n, b)| HalfSpace::new(n.clone(), b)).collect::<Result<_>>()?;
    match resolve_hpolyhedron(&hs)? {
        None => Ok(Polytope::empty(d)),
        Some(res) => {
            if !res.rays.is_empty() {
                return Err(Error::Invariant("Fine interior system is unbounded".into()));
            }
            Polytope::convex_hull(&res.vertices)
        }
    }
}

/// `F(P)`: points at integral distance at least one from every supporting
/// lattice hyperplane, computed over the canonical refinement.
pub fn fine_interior(p: &Polytope) -> Result<FineResult> {
    let rays = canonical_rays(p)?;
    let polytope = fine_interior_from_rays(p.ambient_dim(), &rays)?;
    Ok(FineResult { polytope, defining_rays: rays })
}

/// The Fine interior cut out by an explicit ray set with the given offsets.
///
/// With the output of [`canonical_rays`] this equals [`fine_interior`]; it is
/// exposed so that checks can be run against perturbed ray sets.
pub fn fine_interior_from_rays(d: usize, rays: &CanonicalRaySet) -> Result<Polytope> {
    shifted_intersection(d, rays.iter().map(|(n, m)| (n, m + Rational::ONE)))
}

/// All primitive integer vectors with max-norm at most `bound`.
pub fn primitive_directions(d: usize, bound: u32) -> Vec<IntVector> {
    let b = bound as i64;
    let mut out = Vec::new();
    let mut cur = vec![-b; d];
    loop {
        if cur.iter().any(|&v| v != 0) {
            let n = IntVector::from_i64s(&cur);
            if crate::arith::content(&n).is_one() {
                out.push(n);
            }
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < b {
                cur[i] += 1;
                break;
            }
            cur[i] = -b;
        }
    }
}

/// Points `rows[i] / den` with small integer entries, for the oracle's
/// inner loop. `None` when an entry does not fit.
struct Scaled {
    den: i128,
    rows: Vec<Vec<i128>>,
}

impl Scaled {
    fn new(points: &[RatVector]) -> Option<Self> {
        let den = points.iter().fold(Int::ONE, |acc, v| crate::arith::lcm(&acc, &v.common_denominator()));
        let den_r = rat_from_int(&den);
        let rows = points
            .iter()
            .map(|v| v.iter().map(|x| i128::try_from((x * &den_r).numerator()).ok()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        // Keeps every product below in range for directions of norm < 2^20.
        let limit = 1i128 << 40;
        let den = i128::try_from(&den).ok()?;
        if den > limit || rows.iter().flatten().any(|v| v.abs() > limit) {
            return None;
        }
        Some(Self { den, rows })
    }

    fn min_dot(&self, n: &[i64]) -> i128 {
        self.rows
            .iter()
            .map(|r| r.iter().zip(n).map(|(a, &b)| a * b as i128).sum::<i128>())
            .min()
            .expect("nonempty point set")
    }
}

/// Reference Fine interior using every dual vector of max-norm at most
/// `bound`. Always contains `F(P)`; equal once `bound` reaches the largest
/// canonical ray.
///
/// The intersection is taken in a single pass over the directions, by
/// increasing norm, starting from the coordinate box: a half-space is added
/// only when the current polytope violates it. The polytope only shrinks, so
/// every direction seen earlier stays satisfied and the result is the full
/// intersection.
pub fn fine_interior_bruteforce(p: &Polytope, bound: u32) -> Result<Polytope> {
    let d = p.ambient_dim();
    if p.is_empty() {
        return Ok(Polytope::empty(d));
    }
    if bound == 0 || bound >= 1 << 20 {
        return Err(Error::Invariant("oracle bound must lie in 1..2^20".into()));
    }
    let mut active: Vec<(IntVector, Rational)> = Vec::new();
    for i in 0..d {
        for n in [IntVector::unit(d, i), IntVector::unit(d, i).neg()] {
            let b = p.min_support(&n)? + Rational::ONE;
            active.push((n, b));
        }
    }
    let mut current = shifted_intersection(d, active.iter().map(|(n, b)| (n, b.clone())))?;
    let poly = Scaled::new(p.vertices());
    let mut fine = Scaled::new(current.vertices());
    let b = bound as i64;
    for shell in 1..=b {
        let mut cur = vec![-shell; d];
        loop {
            if current.is_empty() {
                return Ok(current);
            }
            let on_shell = cur.iter().any(|v| v.abs() == shell);
            if on_shell && cur.iter().fold(0i64, |g, &v| gcd_i64(g, v)) == 1 {
                let violated = match (&poly, &fine) {
                    // min_F(n) < min_P(n) + 1 with both sides over a common denominator.
                    (Some(ps), Some(fs)) => fs.min_dot(&cur) * ps.den < (ps.min_dot(&cur) + ps.den) * fs.den,
                    _ => {
                        let n = IntVector::from_i64s(&cur);
                        let b = p.min_support(&n)? + Rational::ONE;
                        current.vertices().iter().any(|v| n.dot_rat(v) < b)
                    }
                };
                if violated {
                    let n = IntVector::from_i64s(&cur);
                    let b = p.min_support(&n)? + Rational::ONE;
                    active.push((n, b));
                    current = shifted_intersection(d, active.iter().map(|(n, b)| (n, b.clone())))?;
                    fine = Scaled::new(current.vertices());
                }
            }
            let mut i = d;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if cur[i] < shell {
                    cur[i] += 1;
                    break;
                }
                cur[i] = -shell;
            }
            if i == 0 && cur.iter().all(|&v| v == -shell) {
                break;
            }
        }
    }
    Ok(current)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Whether `n` belongs to the support of `F(P)`: `Min_F(n) = Min_P(n) + 1`.
pub fn is_support_vector(p: &Polytope, n: &IntVector) -> Result<bool> {
    let f = fine_interior(p)?;
    support_test(p, &f.polytope, n)
}

fn support_test(p: &Polytope, f: &Polytope, n: &IntVector) -> Result<bool> {
    if f.is_empty() {
        return Err(Error::SupportUndefined);
    }
    Ok(f.min_support(n)? == p.min_support(n)? + Rational::ONE)
}

/// Support vectors among the candidate set `Σ^can[1] ∪ Σ_P[1]`.
fn candidate_support(p: &Polytope, f: &FineResult) -> Result<Vec<IntVector>> {
    let mut candidates: Vec<IntVector> = f.defining_rays.rays.clone();
    candidates.extend(p.facets()?.iter().map(|h| h.normal().clone()));
    candidates.sort();
    candidates.dedup();
    let mut out = Vec::new();
    for n in candidates {
        if support_test(p, &f.polytope, &n)? {
            out.push(n);
        }
    }
    Ok(out)
}

/// The canonical hull: the unshifted half-spaces of the support vectors
/// among the candidate set.
pub fn canonical_hull(p: &Polytope) -> Result<Polytope> {
    let f = fine_interior(p)?;
    let support = candidate_support(p, &f)?;
    let offsets: Vec<Rational> = support.iter().map(|n| p.min_support(n)).collect::<Result<_>>()?;
    shifted_intersection(p.ambient_dim(), support.iter().zip(offsets))
}

/// Every facet normal is a support vector of the Fine interior.
pub fn is_canonically_closed(p: &Polytope) -> Result<bool> {
    let f = fine_interior(p)?;
    for h in p.facets()? {
        if !support_test(p, &f.polytope, h.normal())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The dilation polyhedron `{(x₀, x) : −Min_P(ν)·x₀ + ⟨x, ν⟩ ≥ 1}` over the
/// canonical rays, with its vertices and the multipliers read off them.
#[derive(Clone, Debug)]
pub struct MultiplierProfile {
    pub polytope: Polytope,
    pub rays: CanonicalRaySet,
    pub fan_polyhedron: HPolyhedron,
    /// Vertices `(μᵢ, pᵢ)` of the dilation polyhedron, sorted.
    pub vertices: Vec<(Rational, RatVector)>,
    pub mu: Rational,
    pub mu_max: Rational,
    pub mu_cc: Rational,
    /// Distinct first coordinates of vertices, ascending.
    pub special_multipliers: Vec<Rational>,
}

/// Half-space `⟨(x₀, x), (−m, ν)⟩ ≥ 1` with integer normal.
fn lifted_halfspace(n: &IntVector, m: &Rational) -> Result<HalfSpace> {
    let den = denominator(m);
    let mut normal = Vec::with_capacity(n.dim() + 1);
    normal.push(-m.numerator().clone());
    normal.extend(n.iter().map(|v| v * &den));
    HalfSpace::new(IntVector::new(normal)?, rat_from_int(&den))
}

impl MultiplierProfile {
    pub fn new(p: &Polytope) -> Result<Self> {
        if !p.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let rays = canonical_rays(p)?;
        let hs: Vec<HalfSpace> = rays.iter().map(|(n, m)| lifted_halfspace(n, m)).collect::<Result<_>>()?;
        let fan = HPolyhedron::new(hs)?;
        let res = fan.resolved().ok_or_else(|| Error::Invariant("dilation polyhedron is empty".into()))?;

        let cone = p.cone_over()?;
        if res.rays != cone.rays() {
            return Err(Error::Invariant(format!(
                "recession cone {:?} differs from cone over P {:?}",
                res.rays,
                cone.rays()
            )));
        }
        let facet_count = fan.facet_indices().len();
        if facet_count != rays.len() {
            return Err(Error::Invariant(format!(
                "dilation polyhedron has {} facets but {} canonical rays",
                facet_count,
                rays.len()
            )));
        }

        let mut vertices: Vec<(Rational, RatVector)> = res
            .vertices
            .iter()
            .map(|v| Ok((v[0].clone(), RatVector::new(v.entries()[1..].to_vec())?)))
            .collect::<Result<_>>()?;
        vertices.sort();
        let mut special: Vec<Rational> = vertices.iter().map(|(m, _)| m.clone()).collect();
        special.sort();
        special.dedup();
        let mu = special[0].clone();
        let mu_max = special[special.len() - 1].clone();
        let mut profile = Self {
            polytope: p.clone(),
            rays,
            fan_polyhedron: fan,
            vertices,
            mu: mu.clone(),
            mu_max,
            mu_cc: mu,
            special_multipliers: special,
        };
        let mut mu_cc: Option<Rational> = None;
        for h in p.facets()? {
            let m = profile.mu_of_support_vector(h.normal())?;
            mu_cc = Some(mu_cc.map_or(m.clone(), |a| a.max(m)));
        }
        profile.mu_cc = mu_cc.expect("a full-dimensional polytope has facets");
        Ok(profile)
    }

    pub fn dim(&self) -> usize {
        self.polytope.ambient_dim()
    }

    /// Smallest `λ` with `n ∈ S_F(λP)`: the least first coordinate on the
    /// face of the dilation polyhedron where `−Min_P(n)·x₀ + ⟨x, n⟩` attains
    /// the value one.
    pub fn mu_of_support_vector(&self, n: &IntVector) -> Result<Rational> {
        let m = self.polytope.min_support(n)?;
        let values: Vec<Rational> = self.vertices.iter().map(|(x0, x)| n.dot_rat(x) - &m * x0).collect();
        let min = values.iter().min().expect("nonempty vertex set");
        if *min != Rational::ONE {
            return Err(Error::NotSupportVector);
        }
        Ok(self
            .vertices
            .iter()
            .zip(values.iter())
            .filter(|(_, v)| **v == Rational::ONE)
            .map(|((x0, _), _)| x0.clone())
            .min()
            .expect("contact vertex exists"))
    }

    /// `F(λP)`, the slice of the dilation polyhedron at `x₀ = λ`.
    pub fn fine_of_dilation(&self, lambda: &Rational) -> Result<Polytope> {
        if crate::arith::rat_is_negative(lambda) {
            return Err(Error::NegativeDilation);
        }
        shifted_intersection(self.dim(), self.rays.iter().map(|(n, m)| (n, m * lambda + Rational::ONE)))
    }

    /// `F(μP)`.
    pub fn fine_at_mu(&self) -> Result<Polytope> {
        self.fine_of_dilation(&self.mu)
    }

    pub fn is_f_hollow(&self) -> bool {
        self.mu > Rational::ONE
    }

    pub fn is_weakly_sporadic(&self) -> Result<bool> {
        Ok(self.is_f_hollow() && self.fine_at_mu()?.intrinsic_dim() == 0)
    }

    /// Recomputes each vertex from the constraints tight at it by solving a
    /// square subsystem, and its first coordinate as a ratio of determinants.
    pub fn cramer_check(&self) -> Result<()> {
        let d = self.dim() + 1;
        let hs = self.fan_polyhedron.halfspaces();
        for (mu, x) in &self.vertices {
            let mut full = vec![mu.clone()];
            full.extend(x.iter().cloned());
            let point = RatVector::new(full)?;
            let tight: Vec<&HalfSpace> = hs.iter().filter(|h| h.slack(&point).is_zero()).collect();
            let rows = independent_rows(&tight, d);
            if rows.len() < d {
                return Err(Error::Invariant(format!("vertex {:?} is not determined by tight constraints", point)));
            }
            let a: Vec<Vec<Rational>> = rows.iter().map(|h| h.normal().iter().map(rat_from_int).collect()).collect();
            let b: Vec<Rational> = rows.iter().map(|h| h.offset().clone()).collect();
            let solved =
                solve_square_raw(a, b.clone()).ok_or_else(|| Error::Invariant("singular tight system".into()))?;
            if solved.as_slice() != point.entries() {
                return Err(Error::Invariant(format!("vertex {:?} differs from solved {:?}", point, solved)));
            }
            // First coordinate by Cramer's rule: det(A with column 0 replaced by b) / det(A).
            let ints: Vec<Vec<Int>> = rows.iter().map(|h| h.normal().to_vec()).collect();
            let det = crate::arith::determinant_rows(&ints);
            let lcm_b = b.iter().fold(Int::ONE, |acc, v| crate::arith::lcm(&acc, &denominator(v)));
            let replaced: Vec<Vec<Int>> = ints
                .iter()
                .zip(b.iter())
                .map(|(r, bi)| {
                    let mut row: Vec<Int> = r.iter().map(|v| v * &lcm_b).collect();
                    row[0] = (bi * rat_from_int(&lcm_b)).numerator().clone();
                    row
                })
                .collect();
            let num = crate::arith::determinant_rows(&replaced);
            // Scaling every row by lcm_b multiplies both determinants by lcm_b^d.
            let den = det * pow(&lcm_b, d);
            if Rational::from_parts_signed(num, den) != *mu {
                return Err(Error::Invariant(format!("Cramer ratio disagrees for vertex {:?}", point)));
            }
        }
        Ok(())
    }
}

fn pow(base: &Int, e: usize) -> Int {
    let mut acc = Int::ONE;
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Greedily chooses `d` constraints with linearly independent normals.
fn independent_rows<'a>(hs: &[&'a HalfSpace], d: usize) -> Vec<&'a HalfSpace> {
    let mut chosen: Vec<&HalfSpace> = Vec::new();
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for h in hs {
        rows.push(h.normal().to_vec());
        if crate::arith::rank_int(&rows, d) == rows.len() {
            chosen.push(h);
            if chosen.len() == d {
                break;
            }
        } else {
            rows.pop();
        }
    }
    chosen
}

pub fn multiplier_profile(p: &Polytope) -> Result<MultiplierProfile> {
    MultiplierProfile::new(p)
}

/// `μ_n` for a single dual vector; see [`MultiplierProfile::mu_of_support_vector`].
pub fn mu_of_support_vector(p: &Polytope, n: &IntVector) -> Result<Rational> {
    MultiplierProfile::new(p)?.mu_of_support_vector(n)
}

/// `F(λP)` through the dilation polyhedron.
pub fn fine_of_dilation(p: &Polytope, lambda: &Rational) -> Result<Polytope> {
    MultiplierProfile::new(p)?.fine_of_dilation(lambda)
}

pub fn is_f_hollow(p: &Polytope) -> Result<bool> {
    Ok(MultiplierProfile::new(p)?.is_f_hollow())
}

pub fn is_weakly_sporadic(p: &Polytope) -> Result<bool> {
    MultiplierProfile::new(p)?.is_weakly_sporadic()
}

/// A lattice polytope is reflexive (up to translation by its interior point)
/// when it has a unique interior lattice point `x` and every facet lies at
/// lattice distance one from `x`.
pub fn reflexive_check(p: &Polytope) -> Result<bool> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    let facets = p.facets()?;
    let interior = p.lattice_points(true);
    if interior.len() != 1 {
        return Ok(false);
    }
    let x = interior[0].to_rat();
    Ok(facets.iter().all(|h| h.slack(&x) == Rational::ONE))
}

/// Index and center of a Gorenstein polytope: `kP − x` is reflexive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinData {
    pub index: u32,
    pub center: IntVector,
}

/// Reads Gorenstein data off the dilation polyhedron: it must be a single
/// lattice vertex `(k, x)` plus the cone over `P`.
pub fn gorenstein_data(profile: &MultiplierProfile) -> Result<Option<GorensteinData>> {
    let p = &profile.polytope;
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    if profile.vertices.len() != 1 {
        return Ok(None);
    }
    let (k, x) = &profile.vertices[0];
    if !k.is_int() || !rat_is_positive(k) {
        return Ok(None);
    }
    let Some(center) = x.to_int() else { return Ok(None) };
    let index: u32 = k.numerator().try_into().map_err(|_| Error::Invariant("Gorenstein index out of range".into()))?;
    let reflexive = p.dilate(k)?.translate(&center.neg().to_rat())?;
    if !reflexive_check(&reflexive)? {
        return Err(Error::Invariant(format!("{}P - {} is not reflexive", index, center)));
    }
    Ok(Some(GorensteinData { index, center }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64s(v)
    }

    fn tri(k: i64) -> Polytope {
        Polytope::from_rows(&[&[0, 0], &[k, 0], &[0, k]])
    }

    fn point(v: &[Rational]) -> Polytope {
        Polytope::convex_hull(&[RatVector::new(v.to_vec()).unwrap()]).unwrap()
    }

    #[test]
    fn fine_interiors_of_triangles() {
        assert_eq!(fine_interior(&tri(3)).unwrap().polytope, Polytope::from_rows(&[&[1, 1]]));
        assert!(fine_interior(&tri(2)).unwrap().polytope.is_empty());
        assert_eq!(fine_interior_bruteforce(&tri(3), 1).unwrap(), Polytope::from_rows(&[&[1, 1]]));
        assert!(fine_interior_bruteforce(&tri(2), 1).unwrap().is_empty());
    }

    #[test]
    fn cutting_plane_oracle_matches_full_intersection() {
        let shapes = [
            tri(3),
            Polytope::from_rows(&[&[0, 0], &[2, 0], &[1, 3]]),
            Polytope::from_rows(&[&[0, 0], &[5, 1], &[1, 4], &[-2, 3]]),
            Polytope::from_rows(&[&[0, 0, 0], &[3, 0, 0], &[0, 3, 0], &[1, 1, 4]]),
        ];
        for p in &shapes {
            for bound in 1..=3 {
                let dirs = primitive_directions(p.ambient_dim(), bound);
                let offsets: Vec<Rational> = dirs.iter().map(|n| p.min_support(n).unwrap() + Rational::ONE).collect();
                let full = shifted_intersection(p.ambient_dim(), dirs.iter().zip(offsets)).unwrap();
                assert_eq!(fine_interior_bruteforce(p, bound).unwrap(), full);
            }
        }
    }

    #[test]
    fn fine_interior_of_three_simplex_example() {
        let p = Polytope::from_rows(&[&[-1, -1, -1], &[1, 0, -1], &[0, 1, -1], &[0, 0, 1]]);
        assert_eq!(fine_interior(&p).unwrap().polytope, Polytope::from_rows(&[&[0, 0, 0]]));
    }

    #[test]
    fn fine_interior_of_dilated_empty_simplex() {
        let p = Polytope::from_rows(&[&[0, 0, 0], &[2, 0, 0], &[0, 0, 2], &[2, 6, 2]]);
        assert_eq!(fine_interior(&p).unwrap().polytope, Polytope::from_rows(&[&[1, 1, 1], &[1, 2, 1]]));
    }

    #[test]
    fn support_vectors() {
        let t3 = tri(3);
        assert!(is_support_vector(&t3, &iv(&[1, 0])).unwrap());
        assert!(!is_support_vector(&t3, &iv(&[1, 1])).unwrap());
        assert!(is_support_vector(&t3, &iv(&[-1, -1])).unwrap());
        assert_eq!(is_support_vector(&tri(2), &iv(&[1, 0])), Err(Error::SupportUndefined));
        assert_eq!(canonical_hull(&t3).unwrap(), t3);
        assert!(is_canonically_closed(&t3).unwrap());
    }

    #[test]
    fn profile_of_standard_triangle() {
        let prof = MultiplierProfile::new(&tri(1)).unwrap();
        assert_eq!(prof.vertices, vec![(Rational::from(3), RatVector::from_i64s(&[1, 1]))]);
        assert_eq!(prof.mu, Rational::from(3));
        assert_eq!(prof.mu_max, Rational::from(3));
        assert_eq!(prof.mu_of_support_vector(&iv(&[-1, -1])).unwrap(), Rational::from(3));
        prof.cramer_check().unwrap();
    }

    #[test]
    fn dilations_of_twice_triangle() {
        let prof = MultiplierProfile::new(&tri(2)).unwrap();
        assert_eq!(prof.mu, rat(3, 2));
        assert_eq!(prof.fine_of_dilation(&rat(3, 2)).unwrap(), Polytope::from_rows(&[&[1, 1]]));
        assert!(prof.fine_of_dilation(&Rational::ONE).unwrap().is_empty());
        assert_eq!(prof.mu_of_support_vector(&iv(&[1, 0])).unwrap(), rat(3, 2));
        assert!(prof.is_f_hollow());
        assert!(prof.is_weakly_sporadic().unwrap());
        assert_eq!(gorenstein_data(&prof).unwrap(), None);
        let d2 = MultiplierProfile::new(&tri(1)).unwrap();
        assert_eq!(d2.fine_of_dilation(&Rational::from(3)).unwrap(), point(&[Rational::ONE, Rational::ONE]));
    }

    #[test]
    fn reflexive_examples() {
        assert!(reflexive_check(&tri(3)).unwrap());
        assert!(!reflexive_check(&tri(2)).unwrap());
        let s4 = Polytope::from_rows(&[&[0, 0, 0], &[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
        assert!(reflexive_check(&s4).unwrap());
    }

    #[test]
    fn gorenstein_examples() {
        let s = Polytope::from_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let g = gorenstein_data(&MultiplierProfile::new(&s).unwrap()).unwrap().unwrap();
        assert_eq!(g, GorensteinData { index: 4, center: iv(&[1, 1, 1]) });
        let p200 = Polytope::from_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let g = gorenstein_data(&MultiplierProfile::new(&p200).unwrap()).unwrap().unwrap();
        assert_eq!(g, GorensteinData { index: 3, center: iv(&[1, 1, 1]) });
    }
}
