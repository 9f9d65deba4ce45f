//! Half-spaces and possibly unbounded polyhedra given by inequalities.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::dd::extreme_rays;
use crate::arith::{
    content, denominator, rank_int, rat_from_int, solve_square_raw, Int, IntVector, RatVector, Rational,
};
use crate::error::{Error, Result};

/// The closed half-space `{x : ⟨x, normal⟩ ≥ offset}` with a primitive normal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    normal: IntVector,
    offset: Rational,
}

impl HalfSpace {
    /// Builds the half-space, dividing normal and offset by the normal's
    /// content so that the stored normal is primitive.
    pub fn new(normal: IntVector, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = content(&normal);
        if g.is_one() {
            return Ok(Self { normal, offset });
        }
        let entries = normal.entries().iter().map(|v| v / &g).collect();
        Ok(Self { normal: IntVector::new(entries)?, offset: offset / rat_from_int(&g) })
    }

    pub fn normal(&self) -> &IntVector {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `⟨x, normal⟩ − offset`; non-negative exactly on the half-space.
    pub fn slack(&self, x: &RatVector) -> Rational {
        self.normal.dot_rat(x) - &self.offset
    }

    pub fn contains(&self, x: &RatVector) -> bool {
        !crate::arith::rat_is_negative(&self.slack(x))
    }

    /// Homogenized integer row `(−num, den·normal)` for the cone over the
    /// half-space in `(t, x)` coordinates.
    pub(crate) fn homogeneous_row(&self) -> Vec<Int> {
        let den = denominator(&self.offset);
        let mut row = Vec::with_capacity(self.dim() + 1);
        row.push(-self.offset.numerator().clone());
        row.extend(self.normal.iter().map(|v| v * &den));
        row
    }
}

impl fmt::Debug for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} >= {}", self.normal, self.offset)
    }
}

/// Vertex and recession-ray description of a nonempty pointed polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolved {
    /// Vertices, sorted lexicographically.
    pub vertices: Vec<RatVector>,
    /// Primitive extreme rays of the recession cone, sorted lexicographically.
    pub rays: Vec<IntVector>,
}

/// Intersection of finitely many half-spaces together with its vertex/ray
/// resolution (`None` when infeasible).
#[derive(Clone, Debug)]
pub struct HPolyhedron {
    halfspaces: Vec<HalfSpace>,
    resolved: Option<Resolved>,
}

impl HPolyhedron {
    pub fn new(halfspaces: Vec<HalfSpace>) -> Result<Self> {
        let resolved = resolve_hpolyhedron(&halfspaces)?;
        Ok(Self { halfspaces, resolved })
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn resolved(&self) -> Option<&Resolved> {
        self.resolved.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.resolved.is_none()
    }

    pub fn vertices(&self) -> &[RatVector] {
        self.resolved.as_ref().map_or(&[], |r| &r.vertices)
    }

    pub fn rays(&self) -> &[IntVector] {
        self.resolved.as_ref().map_or(&[], |r| &r.rays)
    }

    /// Indices of the half-spaces defining facets: those whose boundary
    /// contains vertices and rays spanning a hyperplane. Of several identical
    /// half-spaces only the first is reported.
    pub fn facet_indices(&self) -> Vec<usize> {
        let Some(res) = &self.resolved else { return Vec::new() };
        let Some(first) = self.halfspaces.first() else { return Vec::new() };
        let d = first.dim();
        let mut out: Vec<usize> = Vec::new();
        for (i, h) in self.halfspaces.iter().enumerate() {
            if out.iter().any(|&j| self.halfspaces[j] == *h) {
                continue;
            }
            let mut tight: Vec<Vec<Int>> = Vec::new();
            for v in &res.vertices {
                if h.slack(v).is_zero() {
                    let (l, scaled) = v.clear_denominators();
                    let mut row = vec![l];
                    row.extend(scaled);
                    tight.push(row);
                }
            }
            for r in &res.rays {
                if h.normal.dot(r).is_zero() {
                    let mut row = vec![Int::ZERO];
                    row.extend(r.iter().cloned());
                    tight.push(row);
                }
            }
            if !tight.is_empty() && rank_int(&tight, d + 1) == d {
                out.push(i);
            }
        }
        out
    }
}

/// Vertices and recession rays of `{x : ⟨x, nᵢ⟩ ≥ bᵢ}`.
///
/// Returns `Ok(None)` for an infeasible system. The system must be pointed
/// (normals spanning the ambient space) unless it is infeasible.
pub fn resolve_hpolyhedron(halfspaces: &[HalfSpace]) -> Result<Option<Resolved>> {
    let Some(first) = halfspaces.first() else { return Err(Error::EmptyInput) };
    let d = first.dim();
    for h in halfspaces {
        if h.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: h.dim() });
        }
    }
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(halfspaces.len() + 1);
    let mut t_row = vec![Int::ZERO; d + 1];
    t_row[0] = Int::ONE;
    rows.push(t_row);
    rows.extend(halfspaces.iter().map(HalfSpace::homogeneous_row));
    let Some(cone_rays) = extreme_rays(&rows, d + 1) else {
        return Err(Error::NotPointed);
    };
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for r in cone_rays {
        if r[0].is_zero() {
            rays.push(IntVector::new(r[1..].to_vec())?);
        } else {
            let t = rat_from_int(&r[0]);
            vertices.push(RatVector::new(r[1..].iter().map(|x| rat_from_int(x) / &t).collect())?);
        }
    }
    if vertices.is_empty() {
        return Ok(None);
    }
    vertices.sort();
    rays.sort();
    Ok(Some(Resolved { vertices, rays }))
}

/// Reference resolution by brute force: every `d`-subset of constraints with
/// a unique solution feasible for all constraints gives a vertex; every
/// `(d−1)`-subset of homogeneous constraints with a one-dimensional kernel
/// gives a candidate ray direction. Exponential, intended for validation.
pub fn resolve_by_subsets(halfspaces: &[HalfSpace]) -> Result<Option<Resolved>> {
    let Some(first) = halfspaces.first() else { return Err(Error::EmptyInput) };
    let d = first.dim();
    let m = halfspaces.len();
    let mut vertices: Vec<RatVector> = Vec::new();
    for subset in Subsets::new(m, d) {
        let a: Vec<Vec<Rational>> =
            subset.iter().map(|&i| halfspaces[i].normal.iter().map(rat_from_int).collect()).collect();
        let b: Vec<Rational> = subset.iter().map(|&i| halfspaces[i].offset.clone()).collect();
        let Some(x) = solve_square_raw(a, b) else { continue };
        let x = RatVector::new(x)?;
        if halfspaces.iter().all(|h| h.contains(&x)) {
            vertices.push(x);
        }
    }
    vertices.sort();
    vertices.dedup();
    if vertices.is_empty() {
        return Ok(None);
    }
    let mut rays: Vec<IntVector> = Vec::new();
    let feasible_dir =
        |r: &[Int]| halfspaces.iter().all(|h| !crate::arith::is_negative(&crate::arith::dot_int(&h.normal, r)));
    if d == 1 {
        for r in [[Int::ONE], [-Int::ONE]] {
            if feasible_dir(&r) {
                rays.push(IntVector::new(r.to_vec())?);
            }
        }
    } else {
        for subset in Subsets::new(m, d - 1) {
            let a: Vec<Vec<Int>> = subset.iter().map(|&i| halfspaces[i].normal.to_vec()).collect();
            if rank_int(&a, d) != d - 1 {
                continue;
            }
            let k = crate::arith::kernel_vector(&a, d);
            for r in [k.clone(), k.iter().map(|v| -v.clone()).collect::<Vec<_>>()] {
                if feasible_dir(&r) {
                    rays.push(IntVector::new(r)?);
                }
            }
        }
    }
    rays.sort();
    rays.dedup();
    Ok(Some(Resolved { vertices, rays }))
}

/// Lexicographic enumeration of `k`-subsets of `0..n`.
pub(crate) struct Subsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Self { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in (i + 1)..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn hs(n: &[i64], b: i64) -> HalfSpace {
        HalfSpace::new(IntVector::from_i64s(n), Rational::from(b)).unwrap()
    }

    #[test]
    fn halfspace_is_primitivized() {
        let h = HalfSpace::new(IntVector::from_i64s(&[2, 4]), Rational::from(3)).unwrap();
        assert_eq!(h.normal(), &IntVector::from_i64s(&[1, 2]));
        assert_eq!(h.offset(), &rat(3, 2));
    }

    #[test]
    fn dilation_polyhedron_of_triangle() {
        // (x0, x, y): x >= 1, y >= 1, x0 - x - y >= 1
        let h = vec![hs(&[0, 1, 0], 1), hs(&[0, 0, 1], 1), hs(&[1, -1, -1], 1)];
        let r = resolve_hpolyhedron(&h).unwrap().unwrap();
        assert_eq!(r.vertices, vec![RatVector::from_i64s(&[3, 1, 1])]);
        let mut rays =
            vec![IntVector::from_i64s(&[1, 0, 0]), IntVector::from_i64s(&[1, 1, 0]), IntVector::from_i64s(&[1, 0, 1])];
        rays.sort();
        assert_eq!(r.rays, rays);
        assert_eq!(resolve_by_subsets(&h).unwrap().unwrap(), r);
    }

    #[test]
    fn unit_square() {
        let h = vec![hs(&[1, 0], 0), hs(&[0, 1], 0), hs(&[-1, 0], -1), hs(&[0, -1], -1)];
        let r = resolve_hpolyhedron(&h).unwrap().unwrap();
        assert_eq!(r.vertices.len(), 4);
        assert!(r.rays.is_empty());
        assert_eq!(HPolyhedron::new(h).unwrap().facet_indices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn infeasible() {
        let h = vec![hs(&[1], 1), hs(&[-1], 0)];
        assert_eq!(resolve_hpolyhedron(&h).unwrap(), None);
        assert_eq!(resolve_by_subsets(&h).unwrap(), None);
    }

    #[test]
    fn redundant_constraint_is_not_a_facet() {
        let h = vec![hs(&[1, 0], 0), hs(&[0, 1], 0), hs(&[1, 1], -5), hs(&[-1, -1], -2)];
        let p = HPolyhedron::new(h).unwrap();
        assert_eq!(p.facet_indices(), vec![0, 1, 3]);
    }

    #[test]
    fn strip_is_not_pointed() {
        let h = vec![hs(&[1, 0], 0), hs(&[-1, 0], -1)];
        assert_eq!(resolve_hpolyhedron(&h), Err(Error::NotPointed));
    }

    #[test]
    fn subsets_enumeration() {
        let all: Vec<_> = Subsets::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Subsets::new(2, 3).count(), 0);
        assert_eq!(Subsets::new(3, 0).count(), 1);
    }
}
