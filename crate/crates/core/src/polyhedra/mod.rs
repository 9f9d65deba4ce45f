//! Exact convex polytopes and polyhedra in dimension at most five.

pub(crate) mod dd;
mod hpoly;
mod hull;

use alloc::vec;
use alloc::vec::Vec;

pub use hpoly::{resolve_by_subsets, resolve_hpolyhedron, HPolyhedron, HalfSpace, Resolved};
pub(crate) use hull::full_dim_hull;
use hull::{affine_frame, project};

use crate::arith::{
    hermite_normal_form, make_primitive, rat_from_int, rat_is_negative, rat_is_positive, unimodular_inverse, Int,
    IntMatrix, IntVector, RatVector, Rational, MAX_DIM,
};
use crate::error::{Error, Result};

/// A rational polytope stored by its vertices, lexicographically sorted.
///
/// Full-dimensional polytopes also carry their irredundant facet
/// description. The empty polytope has intrinsic dimension −1.
#[derive(Clone, Debug)]
pub struct Polytope {
    ambient_dim: usize,
    vertices: Vec<RatVector>,
    facets: Option<Vec<HalfSpace>>,
    intrinsic_dim: i32,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for Polytope {}

/// A rational polyhedral cone given by primitive generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCone {
    rays: Vec<IntVector>,
}

impl LatticeCone {
    /// Primitive, deduplicated and sorted generators.
    pub fn new(rays: Vec<IntVector>) -> Result<Self> {
        let mut out = Vec::with_capacity(rays.len());
        for r in rays {
            out.push(crate::arith::primitive_vector(&r)?);
        }
        out.sort();
        out.dedup();
        Ok(Self { rays: out })
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }
}

fn check_dim(d: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&d) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(d))
    }
}

impl Polytope {
    pub fn empty(ambient_dim: usize) -> Self {
        Self { ambient_dim, vertices: Vec::new(), facets: None, intrinsic_dim: -1 }
    }

    /// Convex hull of a nonempty point set.
    pub fn convex_hull(points: &[RatVector]) -> Result<Self> {
        let Some(first) = points.first() else { return Err(Error::EmptyInput) };
        let d = first.dim();
        check_dim(d)?;
        for p in points {
            if p.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
            }
        }
        let mut pts: Vec<RatVector> = points.to_vec();
        pts.sort();
        pts.dedup();
        if pts.len() == 1 {
            return Ok(Self { ambient_dim: d, vertices: pts, facets: None, intrinsic_dim: 0 });
        }
        let (k, cols) = affine_frame(&pts);
        if k == d {
            let hull = full_dim_hull(&pts, &[])?;
            let vertices = hull.vertex_indices.iter().map(|&i| pts[i].clone()).collect();
            return Ok(Self { ambient_dim: d, vertices, facets: Some(hull.facets), intrinsic_dim: d as i32 });
        }
        let projected: Vec<RatVector> = pts.iter().map(|p| project(p, &cols)).collect();
        let hull = full_dim_hull(&projected, &[])?;
        let vertices = hull.vertex_indices.iter().map(|&i| pts[i].clone()).collect();
        Ok(Self { ambient_dim: d, vertices, facets: None, intrinsic_dim: k as i32 })
    }

    /// Convex hull of integer points.
    pub fn from_lattice_points(points: &[IntVector]) -> Result<Self> {
        let pts: Vec<RatVector> = points.iter().map(IntVector::to_rat).collect();
        Self::convex_hull(&pts)
    }

    /// Convex hull of integer points given as rows; panics on invalid input.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let pts: Vec<RatVector> = rows.iter().map(|r| RatVector::from_i64s(r)).collect();
        Self::convex_hull(&pts).expect("valid point rows")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn intrinsic_dim(&self) -> i32 {
        self.intrinsic_dim
    }

    pub fn is_empty(&self) -> bool {
        self.intrinsic_dim < 0
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.intrinsic_dim == self.ambient_dim as i32
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(RatVector::is_integral)
    }

    /// Vertices as integer vectors; errors for non-lattice polytopes.
    pub fn lattice_vertices(&self) -> Result<Vec<IntVector>> {
        self.vertices.iter().map(|v| v.to_int().ok_or(Error::NotLattice)).collect()
    }

    /// Irredundant facet half-spaces, sorted by normal.
    pub fn facets(&self) -> Result<&[HalfSpace]> {
        self.facets.as_deref().ok_or(Error::NotFullDimensional)
    }

    /// `Min_P(y) = min ⟨x, y⟩` over the polytope.
    pub fn min_support(&self, y: &IntVector) -> Result<Rational> {
        if y.is_zero() {
            return Err(Error::ZeroVector);
        }
        if y.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: y.dim() });
        }
        self.vertices.iter().map(|v| y.dot_rat(v)).min().ok_or(Error::EmptyPolytope)
    }

    /// Lattice width of the polytope in direction `y`.
    pub fn width_along(&self, y: &IntVector) -> Result<Rational> {
        Ok(-self.min_support(&y.neg())? - self.min_support(y)?)
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        if self.is_empty() {
            return false;
        }
        if let Some(f) = &self.facets {
            return f.iter().all(|h| h.contains(x));
        }
        let mut pts = self.vertices.clone();
        pts.push(x.clone());
        Polytope::convex_hull(&pts).map(|q| q.vertices == self.vertices).unwrap_or(false)
    }

    /// `λP` for `λ ≥ 0`.
    pub fn dilate(&self, lambda: &Rational) -> Result<Self> {
        if rat_is_negative(lambda) {
            return Err(Error::NegativeDilation);
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        if lambda.is_zero() {
            return Ok(Self {
                ambient_dim: self.ambient_dim,
                vertices: vec![RatVector::zero(self.ambient_dim)],
                facets: None,
                intrinsic_dim: 0,
            });
        }
        let vertices = self.vertices.iter().map(|v| v.scale(lambda)).collect();
        let facets = self.facets.as_ref().map(|fs| {
            fs.iter()
                .map(|h| HalfSpace::new(h.normal().clone(), h.offset() * lambda).expect("nonzero normal"))
                .collect()
        });
        Ok(Self { ambient_dim: self.ambient_dim, vertices, facets, intrinsic_dim: self.intrinsic_dim })
    }

    /// Integer dilation `kP`.
    pub fn dilate_int(&self, k: u64) -> Self {
        self.dilate(&Rational::from(k)).expect("non-negative factor")
    }

    pub fn translate(&self, t: &RatVector) -> Result<Self> {
        if t.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: t.dim() });
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        let vertices = self.vertices.iter().map(|v| v.add(t)).collect();
        let facets = self.facets.as_ref().map(|fs| {
            fs.iter()
                .map(|h| {
                    HalfSpace::new(h.normal().clone(), h.offset() + h.normal().dot_rat(t)).expect("nonzero normal")
                })
                .collect()
        });
        Ok(Self { ambient_dim: self.ambient_dim, vertices, facets, intrinsic_dim: self.intrinsic_dim })
    }

    /// Image under `x ↦ A·x + t`.
    pub fn map_affine(&self, a: &IntMatrix, t: &RatVector) -> Result<Self> {
        if a.cols() != self.ambient_dim || a.rows() != t.dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: a.cols() });
        }
        if self.is_empty() {
            return Ok(Self::empty(t.dim()));
        }
        let image: Vec<RatVector> = self
            .vertices
            .iter()
            .map(|v| {
                let entries = (0..a.rows())
                    .map(|r| {
                        let mut acc = t[r].clone();
                        for c in 0..a.cols() {
                            let coef = a.get(r, c);
                            if !coef.is_zero() {
                                acc += rat_from_int(coef) * &v[c];
                            }
                        }
                        acc
                    })
                    .collect();
                RatVector::new(entries)
            })
            .collect::<Result<_>>()?;
        Self::convex_hull(&image)
    }

    /// Lattice points in the polytope, or in its relative interior when
    /// `interior_only` is set, in lexicographic order.
    pub fn lattice_points(&self, interior_only: bool) -> Vec<IntVector> {
        if self.is_empty() {
            return Vec::new();
        }
        if self.intrinsic_dim == 0 {
            return self.vertices[0].to_int().into_iter().collect();
        }
        let d = self.ambient_dim;
        let (lo, hi) = self.bounding_box();
        let test: Membership = if let Some(f) = &self.facets {
            Membership { equations: Vec::new(), cols: (0..d).collect(), facets: f.clone() }
        } else {
            self.relative_membership()
        };
        let mut out = Vec::new();
        if lo.iter().zip(hi.iter()).any(|(a, b)| a > b) {
            return out;
        }
        let mut cur = lo.clone();
        loop {
            let x = IntVector::new(cur.clone()).expect("dimension in range");
            if test.accepts(&x, interior_only) {
                out.push(x);
            }
            let mut i = d;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += Int::ONE;
                    break;
                }
                cur[i] = lo[i].clone();
            }
        }
    }

    /// Integer bounding box `[⌈min⌉, ⌊max⌋]` per coordinate.
    fn bounding_box(&self) -> (Vec<Int>, Vec<Int>) {
        let d = self.ambient_dim;
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for c in 0..d {
            let min = self.vertices.iter().map(|v| &v[c]).min().expect("nonempty");
            let max = self.vertices.iter().map(|v| &v[c]).max().expect("nonempty");
            lo.push(min.ceil());
            hi.push(max.floor());
        }
        (lo, hi)
    }

    /// Affine-hull equations plus relative facets in projected coordinates.
    fn relative_membership(&self) -> Membership {
        let (_, cols) = affine_frame(&self.vertices);
        let projected: Vec<RatVector> = self.vertices.iter().map(|p| project(p, &cols)).collect();
        let facets = full_dim_hull(&projected, &[]).expect("projection is full dimensional").facets;
        Membership { equations: self.affine_equations(), cols, facets }
    }

    /// Integer equations `⟨x, u⟩ = c` cutting out the affine hull; empty for
    /// full-dimensional polytopes.
    pub fn affine_equations(&self) -> Vec<(IntVector, Rational)> {
        let d = self.ambient_dim;
        if self.is_empty() || self.is_full_dimensional() {
            return Vec::new();
        }
        let base = &self.vertices[0];
        let mut t = IntMatrix::zeros(d, self.vertices.len().max(2) - 1);
        for (j, p) in self.vertices[1..].iter().enumerate() {
            let diff = p.sub(base).clear_denominators().1;
            for (i, v) in diff.into_iter().enumerate() {
                t.set(i, j, v);
            }
        }
        let (h, u) = hermite_normal_form(&t);
        let mut out = Vec::new();
        for r in 0..d {
            if h.row(r).iter().all(|v| v.is_zero()) {
                let mut normal = u.row(r).to_vec();
                make_primitive(&mut normal);
                let normal = IntVector::new(normal).expect("dimension in range");
                let c = normal.dot_rat(base);
                out.push((normal, c));
            }
        }
        out
    }

    /// Convex hull of all pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Self::empty(self.ambient_dim));
        }
        let mut sums = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(a.add(b));
            }
        }
        Self::convex_hull(&sums)
    }

    /// `conv({0} ∪ {1} × P)` one dimension up.
    pub fn pyramid(&self) -> Result<Self> {
        if !self.is_lattice() {
            return Err(Error::NotLattice);
        }
        if self.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let d = self.ambient_dim + 1;
        check_dim(d)?;
        let mut pts = vec![RatVector::zero(d)];
        for v in &self.vertices {
            let mut e = vec![Rational::ONE];
            e.extend(v.iter().cloned());
            pts.push(RatVector::new(e)?);
        }
        Self::convex_hull(&pts)
    }

    /// Primitive generators of `ℝ≥0 ({1} × P)`.
    pub fn cone_over(&self) -> Result<LatticeCone> {
        check_dim(self.ambient_dim + 1)?;
        let mut rays = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let mut e = vec![Rational::ONE];
            e.extend(v.iter().cloned());
            let lifted = RatVector::new(e)?;
            let (_, ints) = lifted.clear_denominators();
            rays.push(IntVector::new(ints)?);
        }
        LatticeCone::new(rays)
    }

    /// `P ∩ {x : ⟨x, n⟩ = c}` in ambient coordinates.
    pub fn slice(&self, n: &IntVector, c: &Rational) -> Result<Self> {
        if n.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: n.dim() });
        }
        if n.is_zero() {
            return Err(Error::ZeroVector);
        }
        let values: Vec<Rational> = self.vertices.iter().map(|v| n.dot_rat(v) - c).collect();
        let mut pts = Vec::new();
        for (i, vi) in values.iter().enumerate() {
            if vi.is_zero() {
                pts.push(self.vertices[i].clone());
                continue;
            }
            if !rat_is_negative(vi) {
                continue;
            }
            for (j, vj) in values.iter().enumerate() {
                if rat_is_positive(vj) {
                    let t = vi / (vi - vj);
                    let u = &self.vertices[i];
                    pts.push(u.add(&self.vertices[j].sub(u).scale(&t)));
                }
            }
        }
        if pts.is_empty() {
            return Ok(Self::empty(self.ambient_dim));
        }
        Self::convex_hull(&pts)
    }

    /// The slice expressed in lattice coordinates of the hyperplane.
    ///
    /// With `U` the unimodular matrix putting `n` (as a column) into Hermite
    /// normal form, `T = U⁻ᵀ` has first row `n`; the slice coordinates are
    /// the remaining entries of `T·x`.
    pub fn slice_intrinsic(&self, n: &IntVector, c: &Rational) -> Result<Self> {
        let d = self.ambient_dim;
        check_dim(d - 1)?;
        let t = hyperplane_coordinates(n)?;
        let embedded = self.slice(n, c)?;
        if embedded.is_empty() {
            return Ok(Self::empty(d - 1));
        }
        let mut pts = Vec::with_capacity(embedded.vertices.len());
        for v in &embedded.vertices {
            let coords: Vec<Rational> = (1..d)
                .map(|r| {
                    let mut acc = Rational::ZERO;
                    for (k, x) in v.iter().enumerate() {
                        let a = t.get(r, k);
                        if !a.is_zero() {
                            acc += rat_from_int(a) * x;
                        }
                    }
                    acc
                })
                .collect();
            pts.push(RatVector::new(coords)?);
        }
        Self::convex_hull(&pts)
    }
}

/// Unimodular matrix whose first row is the primitive vector `n`.
pub fn hyperplane_coordinates(n: &IntVector) -> Result<IntMatrix> {
    let p = crate::arith::primitive_vector(n)?;
    if p != *n {
        return Err(Error::Invariant(alloc::format!("slice normal {} is not primitive", n)));
    }
    let d = n.dim();
    let mut col = IntMatrix::zeros(d, 1);
    for (i, v) in n.iter().enumerate() {
        col.set(i, 0, v.clone());
    }
    let (_, u) = hermite_normal_form(&col);
    let inv = unimodular_inverse(&u).ok_or_else(|| Error::Invariant("HNF transform not unimodular".into()))?;
    Ok(inv.transpose())
}

struct Membership {
    equations: Vec<(IntVector, Rational)>,
    cols: Vec<usize>,
    facets: Vec<HalfSpace>,
}

impl Membership {
    fn accepts(&self, x: &IntVector, strict: bool) -> bool {
        for (u, c) in &self.equations {
            if rat_from_int(&u.dot(x)) != *c {
                return false;
            }
        }
        let y = RatVector::new(self.cols.iter().map(|&c| rat_from_int(&x[c])).collect()).expect("dimension in range");
        self.facets.iter().all(|h| {
            let s = h.slack(&y);
            if strict {
                rat_is_positive(&s)
            } else {
                !rat_is_negative(&s)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn rv(v: &[Rational]) -> RatVector {
        RatVector::new(v.to_vec()).unwrap()
    }

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64s(v)
    }

    #[test]
    fn hull_drops_interior_point() {
        let p = Polytope::convex_hull(&[
            RatVector::from_i64s(&[0, 0]),
            RatVector::from_i64s(&[1, 0]),
            RatVector::from_i64s(&[0, 1]),
            rv(&[rat(1, 2), rat(1, 4)]),
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.intrinsic_dim(), 2);
    }

    #[test]
    fn hull_of_triangle_lattice_points() {
        let p = Polytope::from_rows(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[0, 2]]);
        assert_eq!(
            p.vertices(),
            &[RatVector::from_i64s(&[0, 0]), RatVector::from_i64s(&[0, 2]), RatVector::from_i64s(&[2, 0])]
        );
        let f = p.facets().unwrap();
        let expected = vec![
            HalfSpace::new(iv(&[-1, -1]), Rational::from(-2)).unwrap(),
            HalfSpace::new(iv(&[0, 1]), Rational::ZERO).unwrap(),
            HalfSpace::new(iv(&[1, 0]), Rational::ZERO).unwrap(),
        ];
        assert_eq!(f, expected.as_slice());
    }

    #[test]
    fn collinear_points() {
        let p = Polytope::from_rows(&[&[0, 0], &[1, 1], &[2, 2]]);
        assert_eq!(p.intrinsic_dim(), 1);
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.facets(), Err(Error::NotFullDimensional));
        assert_eq!(p.lattice_points(false).len(), 3);
        assert_eq!(p.lattice_points(true), vec![iv(&[1, 1])]);
    }

    #[test]
    fn cube_and_long_simplex_facets() {
        let cube = Polytope::from_rows(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]);
        assert_eq!(cube.facets().unwrap().len(), 6);
        let s = Polytope::from_rows(&[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[0, 0, 6]]);
        let h = HalfSpace::new(iv(&[-3, -2, -1]), Rational::from(-6)).unwrap();
        assert!(s.facets().unwrap().contains(&h));
    }

    #[test]
    fn supports() {
        let t = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(t.min_support(&iv(&[1, 1])).unwrap(), Rational::ZERO);
        assert_eq!(t.min_support(&iv(&[-1, -1])).unwrap(), Rational::from(-2));
        let t3 = Polytope::from_rows(&[&[0, 0], &[3, 0], &[0, 3]]);
        assert_eq!(t3.min_support(&iv(&[2, -1])).unwrap(), Rational::from(-3));
        assert_eq!(t.min_support(&iv(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn dilations() {
        let d2 = Polytope::from_rows(&[&[0, 0], &[1, 0], &[0, 1]]);
        let t3 = Polytope::from_rows(&[&[0, 0], &[3, 0], &[0, 3]]);
        assert_eq!(d2.dilate(&Rational::from(3)).unwrap(), t3);
        let t2 = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]);
        let d = t2.dilate(&rat(3, 2)).unwrap();
        assert_eq!(d, t3);
        assert_eq!(d.facets().unwrap(), t3.facets().unwrap());
        let z = t2.dilate(&Rational::ZERO).unwrap();
        assert_eq!(z.vertices(), &[RatVector::zero(2)]);
        assert_eq!(t2.dilate(&rat(-1, 2)), Err(Error::NegativeDilation));
    }

    #[test]
    fn lattice_point_counts() {
        let t2 = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(t2.lattice_points(false).len(), 6);
        let t4 = Polytope::from_rows(&[&[0, 0], &[4, 0], &[0, 4]]);
        assert_eq!(t4.lattice_points(true), vec![iv(&[1, 1]), iv(&[1, 2]), iv(&[2, 1])]);
        let empty_simplex = Polytope::from_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 1], &[1, 2, 1]]);
        assert_eq!(empty_simplex.lattice_points(false).len(), 4);
    }

    #[test]
    fn sums_and_pyramids() {
        let h = Polytope::from_rows(&[&[0, 0], &[1, 0]]);
        let v = Polytope::from_rows(&[&[0, 0], &[0, 1]]);
        assert_eq!(h.minkowski_sum(&v).unwrap(), Polytope::from_rows(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        let d2 = Polytope::from_rows(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(d2.minkowski_sum(&d2).unwrap(), Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]));
        let pt = Polytope::from_rows(&[&[3, 4]]);
        assert_eq!(d2.minkowski_sum(&pt).unwrap(), Polytope::from_rows(&[&[3, 4], &[4, 4], &[3, 5]]));

        let pyr = d2.pyramid().unwrap();
        assert_eq!(pyr.vertices().len(), 4);
        assert_eq!(pyr.intrinsic_dim(), 3);
        let seg = Polytope::from_rows(&[&[0], &[1]]);
        let pp = seg.pyramid().unwrap().pyramid().unwrap();
        assert_eq!(pp.intrinsic_dim(), 3);
        assert_eq!(pp.lattice_points(false).len(), 4);
    }

    #[test]
    fn cones_over_polytopes() {
        let d2 = Polytope::from_rows(&[&[0, 0], &[1, 0], &[0, 1]]);
        let mut expect = vec![iv(&[1, 0, 0]), iv(&[1, 1, 0]), iv(&[1, 0, 1])];
        expect.sort();
        assert_eq!(d2.cone_over().unwrap().rays(), expect.as_slice());
        let half = Polytope::convex_hull(&[rv(&[rat(1, 2)])]).unwrap();
        assert_eq!(half.cone_over().unwrap().rays(), &[iv(&[2, 1])]);
    }

    #[test]
    fn slices() {
        let prism = Polytope::from_rows(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 4], &[2, 0, 4], &[0, 2, 4]]);
        let e3 = iv(&[0, 0, 1]);
        let s = prism.slice_intrinsic(&e3, &Rational::from(2)).unwrap();
        assert_eq!(s, Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]));
        let outside = prism.slice(&e3, &Rational::from(5)).unwrap();
        assert!(outside.is_empty());

        let p = Polytope::from_rows(&[&[-1, -1, -1], &[1, 0, -1], &[0, 1, -1], &[0, 0, 1]]);
        let s = p.slice_intrinsic(&e3, &Rational::ZERO).unwrap();
        let expected = Polytope::convex_hull(&[
            rv(&[rat(-1, 2), rat(-1, 2)]),
            rv(&[rat(1, 2), Rational::ZERO]),
            rv(&[Rational::ZERO, rat(1, 2)]),
        ])
        .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn affine_equations_of_a_facet() {
        let tri = Polytope::from_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let eq = tri.affine_equations();
        assert_eq!(eq.len(), 1);
        let (u, c) = &eq[0];
        assert_eq!(u.dot(&iv(&[1, 0, 0])), c.numerator().clone());
        assert_eq!(tri.lattice_points(false).len(), 3);
        assert!(tri.lattice_points(true).is_empty());
    }
}
