//! Cross-checks of the Fine interior machinery against independent routes:
//! a brute-force dual-vector oracle, Cramer recomputation of dilation
//! polyhedron vertices, direct recomputation of dilated interiors, and the
//! pyramid, Minkowski, dimension and width identities.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use fine_core::arith::{rat, Int, RatVector, Rational};
use fine_core::ehrhart::hstar;
use fine_core::fine::{fine_interior, fine_interior_bruteforce, fine_interior_from_rays, MultiplierProfile};
use fine_core::polyhedra::Polytope;
use fine_core::refinement::{canonical_rays, CanonicalRaySet};
use fine_core::shapes;
use fine_core::width::lattice_width;
use fine_core::Result;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed of the random part of the built-in corpus.
pub const CORPUS_SEED: u64 = 0x5eed_f1e5;

/// Number of random dilation factors sampled for the slice identity.
pub const SLICE_SAMPLES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The oracle ran below the largest canonical ray and only contains the
    /// Fine interior, as it must.
    SupersetOnly,
    Fail(String),
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub property: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug)]
pub struct PolytopeReport {
    pub name: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub polytopes: Vec<PolytopeReport>,
}

/// Properties in report order.
pub const PROPERTIES: &[&str] = &[
    "profile",
    "oracle",
    "cramer",
    "structure",
    "minkowski",
    "pyramid",
    "dimension",
    "bounds",
    "width-one",
    "simplex-table",
    "counterexample",
];

impl Report {
    pub fn failures(&self) -> Vec<(&str, &str, &str)> {
        let mut out = Vec::new();
        for p in &self.polytopes {
            for c in &p.checks {
                if let Outcome::Fail(msg) = &c.outcome {
                    out.push((p.name.as_str(), c.property, msg.as_str()));
                }
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    /// One line per property (`PASS`, `FAIL` or `SUPERSET`) followed by the
    /// individual failures.
    pub fn render(&self) -> String {
        let mut tally: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
        for p in &self.polytopes {
            for c in &p.checks {
                let t = tally.entry(c.property).or_default();
                match c.outcome {
                    Outcome::Pass => t.0 += 1,
                    Outcome::SupersetOnly => t.1 += 1,
                    Outcome::Fail(_) => t.2 += 1,
                    Outcome::NotApplicable => {}
                }
            }
        }
        let mut s = String::new();
        for prop in PROPERTIES {
            let Some(&(pass, sup, fail)) = tally.get(prop) else { continue };
            let checked = pass + sup + fail;
            if checked == 0 {
                continue;
            }
            let status = if fail > 0 {
                "FAIL"
            } else if sup > 0 {
                "SUPERSET"
            } else {
                "PASS"
            };
            write!(s, "{status} {prop}: {checked} checked").expect("string write");
            if fail > 0 {
                write!(s, ", {fail} failed").expect("string write");
            }
            if sup > 0 {
                write!(s, ", oracle superset only on {sup}").expect("string write");
            }
            s.push('\n');
        }
        for (name, prop, msg) in self.failures() {
            writeln!(s, "  {prop} failed on {name}: {msg}").expect("string write");
        }
        s
    }
}

/// Options shared by every polytope check.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Oracle bound; by default the largest canonical ray norm and one more.
    pub bound: Option<u32>,
}

fn outcome(r: Result<Outcome>) -> Outcome {
    r.unwrap_or_else(|e| Outcome::Fail(e.to_string()))
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(msg())
    }
}

fn lift(one: &Rational, p: &Polytope) -> Result<Polytope> {
    if p.is_empty() {
        return Ok(Polytope::empty(p.ambient_dim() + 1));
    }
    let pts: Vec<RatVector> = p
        .vertices()
        .iter()
        .map(|v| {
            let mut e = vec![one.clone()];
            e.extend(v.iter().cloned());
            RatVector::new(e)
        })
        .collect::<Result<_>>()?;
    Polytope::convex_hull(&pts)
}

fn is_superset(big: &Polytope, small: &Polytope) -> bool {
    small.vertices().iter().all(|v| big.contains(v))
}

fn check_oracle(p: &Polytope, rays: &CanonicalRaySet, bound: Option<u32>) -> Result<Outcome> {
    let f = fine_interior_from_rays(p.ambient_dim(), rays)?;
    let b_star = u32::try_from(&canonical_rays(p)?.max_norm()).map_err(|_| fine_core::Error::RootTooLarge(0))?;
    let bounds: Vec<u32> = match bound {
        Some(b) => vec![b],
        None => vec![b_star, b_star + 1],
    };
    for b in bounds {
        let brute = fine_interior_bruteforce(p, b)?;
        if b < b_star {
            return Ok(expect(is_superset(&brute, &f), || format!("oracle at bound {b} misses part of F(P)"))
                .replace_pass(Outcome::SupersetOnly));
        }
        if brute != f {
            return Ok(Outcome::Fail(format!(
                "oracle at bound {b} gives {:?}, rays give {:?}",
                brute.vertices(),
                f.vertices()
            )));
        }
    }
    Ok(Outcome::Pass)
}

impl Outcome {
    fn replace_pass(self, with: Outcome) -> Outcome {
        if self == Outcome::Pass {
            with
        } else {
            self
        }
    }
}

fn sample_dilations(rng: &mut impl Rng) -> Vec<Rational> {
    (0..SLICE_SAMPLES)
        .map(|_| {
            let q = rng.gen_range(1..=6i64);
            let p = rng.gen_range(1..=3 * q);
            rat(p, q)
        })
        .collect()
}

fn check_structure(profile: &MultiplierProfile, rng: &mut impl Rng) -> Result<Outcome> {
    let p = &profile.polytope;
    let Some(res) = profile.fan_polyhedron.resolved() else {
        return Ok(Outcome::Fail("dilation polyhedron is empty".into()));
    };
    if res.rays != p.cone_over()?.rays() {
        return Ok(Outcome::Fail("recession cone differs from the cone over P".into()));
    }
    let facets = profile.fan_polyhedron.facet_indices();
    if facets.len() != profile.rays.len() {
        return Ok(Outcome::Fail(format!("{} facets for {} canonical rays", facets.len(), profile.rays.len())));
    }
    let hs = profile.fan_polyhedron.halfspaces();
    if facets.iter().any(|&i| hs[i].normal().entries()[1..].iter().all(|v| *v == Int::ZERO)) {
        return Ok(Outcome::Fail("a facet is parallel to a dilation level".into()));
    }
    for lambda in sample_dilations(rng) {
        let slice = profile.fine_of_dilation(&lambda)?;
        let direct = fine_interior(&p.dilate(&lambda)?)?.polytope;
        if slice != direct {
            return Ok(Outcome::Fail(format!("slice at {lambda} differs from the directly computed interior")));
        }
    }
    Ok(Outcome::Pass)
}

fn check_minkowski(profile: &MultiplierProfile) -> Result<Outcome> {
    let m = &profile.mu_max;
    let base = profile.fine_of_dilation(m)?;
    for k in [2i64, 3] {
        let lhs = profile.fine_of_dilation(&(m * rat(k, 1)))?;
        let rhs = base.minkowski_sum(&profile.polytope.dilate(&(m * rat(k - 1, 1)))?)?;
        if lhs != rhs {
            return Ok(Outcome::Fail(format!("decomposition fails at factor {k}")));
        }
    }
    Ok(Outcome::Pass)
}

fn check_pyramid(profile: &MultiplierProfile) -> Result<Outcome> {
    let p = &profile.polytope;
    // The dilation polyhedron of the pyramid lives two dimensions up.
    if !p.is_lattice() || p.ambient_dim() + 2 > fine_core::arith::MAX_DIM {
        return Ok(Outcome::NotApplicable);
    }
    let pyr = p.pyramid()?;
    let lhs = fine_interior(&pyr.dilate_int(2))?.polytope;
    let rhs = lift(&Rational::ONE, &fine_interior(p)?.polytope)?;
    if lhs != rhs {
        return Ok(Outcome::Fail("F(2 Pyr P) differs from {1} x F(P)".into()));
    }
    if profile.mu >= Rational::ONE {
        let mu_pyr = MultiplierProfile::new(&pyr)?.mu;
        if mu_pyr != &profile.mu + Rational::ONE {
            return Ok(Outcome::Fail(format!("mu(Pyr P) = {mu_pyr}, mu(P) = {}", profile.mu)));
        }
    }
    Ok(Outcome::Pass)
}

fn check_dimension(profile: &MultiplierProfile) -> Result<Outcome> {
    let d = profile.dim() as i32;
    let mu = &profile.mu;
    let below = profile.fine_of_dilation(&(mu * rat(9, 10)))?.intrinsic_dim();
    let at = profile.fine_of_dilation(mu)?.intrinsic_dim();
    let above = [mu * rat(11, 10), &profile.mu_max + Rational::ONE];
    for l in &above {
        let dim = profile.fine_of_dilation(l)?.intrinsic_dim();
        if dim != d {
            return Ok(Outcome::Fail(format!("dimension {dim} at {l} above mu")));
        }
    }
    Ok(expect(below == -1 && (0..d).contains(&at), || format!("dimension {below} below mu, {at} at mu")))
}

fn check_bounds(profile: &MultiplierProfile) -> Result<Outcome> {
    let p = &profile.polytope;
    if !p.is_lattice() || !profile.is_f_hollow() {
        return Ok(Outcome::NotApplicable);
    }
    let lw = lattice_width(p)?.width;
    let codeg = rat(hstar(p)?.codegree as i64, 1);
    let d1 = rat(p.ambient_dim() as i64 + 1, 1);
    let mu = &profile.mu;
    Ok(expect(rat(2, 1) / &lw <= *mu && *mu <= codeg && codeg <= d1, || {
        format!("2/lw = {}, mu = {mu}, codegree = {codeg}", rat(2, 1) / &lw)
    }))
}

fn check_width_one(p: &Polytope) -> Result<Outcome> {
    if !p.is_lattice() || p.ambient_dim() != 3 || lattice_width(p)?.width != Rational::ONE {
        return Ok(Outcome::NotApplicable);
    }
    let double = p.dilate_int(2);
    let interior: Vec<RatVector> = double.lattice_points(true).iter().map(|v| v.to_rat()).collect();
    let hull = if interior.is_empty() { Polytope::empty(3) } else { Polytope::convex_hull(&interior)? };
    Ok(expect(fine_interior(&double)?.polytope == hull, || {
        "F(2P) differs from the hull of interior points of 2P".into()
    }))
}

/// Runs every per-polytope check, taking the ray set used for `F(P)` in the
/// oracle comparison from the caller.
pub fn verify_with_rays(
    name: &str,
    p: &Polytope,
    rays: &CanonicalRaySet,
    opts: &VerifyOptions,
    rng: &mut impl Rng,
) -> PolytopeReport {
    let mut checks = Vec::new();
    let mut push = |property, o| checks.push(Check { property, outcome: o });
    push("oracle", outcome(check_oracle(p, rays, opts.bound)));
    match MultiplierProfile::new(p) {
        Err(e) => push("profile", Outcome::Fail(e.to_string())),
        Ok(profile) => {
            push("profile", Outcome::Pass);
            push("cramer", outcome(profile.cramer_check().map(|()| Outcome::Pass)));
            push("structure", outcome(check_structure(&profile, rng)));
            push("minkowski", outcome(check_minkowski(&profile)));
            push("pyramid", outcome(check_pyramid(&profile)));
            push("dimension", outcome(check_dimension(&profile)));
            push("bounds", outcome(check_bounds(&profile)));
        }
    }
    push("width-one", outcome(check_width_one(p)));
    PolytopeReport { name: name.to_string(), checks }
}

pub fn verify_polytope(name: &str, p: &Polytope, opts: &VerifyOptions, rng: &mut impl Rng) -> PolytopeReport {
    match canonical_rays(p) {
        Ok(rays) => verify_with_rays(name, p, &rays, opts, rng),
        Err(e) => PolytopeReport {
            name: name.to_string(),
            checks: vec![Check { property: "profile", outcome: Outcome::Fail(e.to_string()) }],
        },
    }
}

/// Expected dimension of `F(2Δ(p,q))` for the empty tetrahedron `Δ(p,q)`.
pub fn expected_empty_tetrahedron_dim(p: i64, q: i64) -> i32 {
    if q == 2 {
        0
    } else if (p - 1).rem_euclid(q) == 0 || (p + 1).rem_euclid(q) == 0 {
        1
    } else {
        2
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// `dim F(2Δ(p,q))` against [`expected_empty_tetrahedron_dim`] for all
/// coprime `0 < p < q ≤ max_q`.
pub fn check_simplex_table(max_q: i64) -> PolytopeReport {
    let mut checks = Vec::new();
    for q in 2..=max_q {
        for p in 1..q {
            if gcd(p, q) != 1 {
                continue;
            }
            let o = outcome((|| {
                let t = shapes::empty_tetrahedron(p, q)?;
                let dim = fine_interior(&t.dilate_int(2))?.polytope.intrinsic_dim();
                let want = expected_empty_tetrahedron_dim(p, q);
                Ok(expect(dim == want, || format!("Δ({p},{q}): dim {dim}, expected {want}")))
            })());
            checks.push(Check { property: "simplex-table", outcome: o });
        }
    }
    PolytopeReport { name: format!("empty tetrahedra q <= {max_q}"), checks }
}

/// The slice of the counterexample polytope at height zero has empty Fine
/// interior while the polytope itself has the single point `0`.
pub fn check_counterexample() -> PolytopeReport {
    let o = outcome((|| {
        let p = shapes::slice_counterexample()?;
        let slice = p.slice_intrinsic(&fine_core::arith::IntVector::unit(3, 2), &Rational::ZERO)?;
        let slice_f = fine_interior(&slice)?.polytope;
        let f = fine_interior(&p)?.polytope;
        let origin = Polytope::convex_hull(&[RatVector::zero(3)])?;
        Ok(expect(slice_f.is_empty() && f == origin, || {
            format!("slice interior {:?}, interior {:?}", slice_f.vertices(), f.vertices())
        }))
    })());
    PolytopeReport {
        name: "slice counterexample".into(),
        checks: vec![Check { property: "counterexample", outcome: o }],
    }
}

/// Named polytopes exercising every code path: simplices, prisms, empty
/// tetrahedra, the classification roots and a few rational shapes.
pub fn named_corpus() -> Result<Vec<(String, Polytope)>> {
    let mut c: Vec<(String, Polytope)> = Vec::new();
    let mut add = |name: &str, p: Polytope| c.push((name.to_string(), p));
    for d in 2..=3 {
        add(&format!("simplex{d}"), shapes::standard_simplex(d)?);
        add(&format!("cube{d}"), shapes::unit_cube(d)?);
        for k in 2..=3 {
            add(&format!("{k}simplex{d}"), shapes::dilated_simplex(d, k)?);
        }
    }
    add("P11", Polytope::from_rows(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
    add("P20", Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 1]]));
    add("hexagon", Polytope::from_rows(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]));
    add("tall-triangle", Polytope::from_rows(&[&[0, 0], &[2, 0], &[1, 3]]));
    add("4simplex2", shapes::dilated_simplex(2, 4)?);
    add("2simplex2x[0,4]", shapes::width_two_container()?);
    for (id, p) in shapes::sporadic_roots()? {
        add(id, p);
    }
    add("axis(2,3,6)", shapes::axis_simplex(&[2, 3, 6])?);
    for h in [[1, 1, 0], [2, 0, 0], [1, 1, 1], [2, 1, 0], [3, 0, 0]] {
        add(&format!("lawrence{h:?}"), shapes::lawrence_prism(&h)?);
    }
    for (p, q) in [(1, 2), (1, 3), (2, 5), (3, 7)] {
        add(&format!("empty-tetrahedron({p},{q})"), shapes::empty_tetrahedron(p, q)?);
    }
    add("prism(2simplex2,1)", shapes::prism(&shapes::dilated_simplex(2, 2)?, 1)?);
    add("pyramid(2simplex2)", shapes::dilated_simplex(2, 2)?.pyramid()?);
    add(
        "octahedron",
        Polytope::from_rows(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]),
    );
    add("slice-counterexample", shapes::slice_counterexample()?);
    add("hollow-4-simplex", shapes::hollow_four_simplex()?);
    let half = |v: &[i64]| RatVector::new(v.iter().map(|&x| rat(x, 2)).collect());
    add("rational-triangle", Polytope::convex_hull(&[half(&[0, 0])?, half(&[7, 0])?, half(&[1, 5])?])?);
    add(
        "rational-tetrahedron",
        Polytope::convex_hull(&[half(&[0, 0, 0])?, half(&[5, 0, 0])?, half(&[0, 5, 0])?, half(&[1, 1, 5])?])?,
    );
    Ok(c)
}

/// Random full-dimensional subpolytopes of the classification roots.
pub fn random_corpus(seed: u64, count: usize) -> Result<Vec<(String, Polytope)>> {
    let mut roots = shapes::sporadic_roots()?.into_iter().map(|(id, p)| (id.to_string(), p)).collect::<Vec<_>>();
    roots.push(("2simplex2x[0,4]".into(), shapes::width_two_container()?));
    roots.push(("2simplex2".into(), shapes::dilated_simplex(2, 2)?));
    let points: Vec<Vec<RatVector>> =
        roots.iter().map(|(_, p)| p.lattice_points(false).iter().map(|v| v.to_rat()).collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = rng.gen_range(0..roots.len());
        let keep = rng.gen_range(0.2..0.6);
        let chosen: Vec<RatVector> = points[r].iter().filter(|_| rng.gen_bool(keep)).cloned().collect();
        if chosen.len() <= roots[r].1.ambient_dim() {
            continue;
        }
        let p = Polytope::convex_hull(&chosen)?;
        if p.is_full_dimensional() {
            out.push((format!("{}#{}", roots[r].0, out.len()), p));
        }
    }
    Ok(out)
}

/// The named corpus plus `random` subpolytopes of the roots.
pub fn corpus(random: usize) -> Result<Vec<(String, Polytope)>> {
    let mut c = named_corpus()?;
    c.extend(random_corpus(CORPUS_SEED, random)?);
    Ok(c)
}

/// Verifies each polytope and appends the table and counterexample checks.
pub fn verify_corpus(polytopes: &[(String, Polytope)], opts: &VerifyOptions, with_fixed: bool) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut report = Report::default();
    for (name, p) in polytopes {
        log::debug!("verifying {name}");
        report.polytopes.push(verify_polytope(name, p, opts, &mut rng));
    }
    if with_fixed {
        report.polytopes.push(check_simplex_table(7));
        report.polytopes.push(check_counterexample());
    }
    report
}
