//! Canonical refinement of the normal fan: the finite set of dual vectors
//! that determines the Fine interior of every dilation.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{
    abs, determinant_rows, hermite_normal_form, is_negative, kernel_vector, rank_int, rat_from_int, solve_square_raw,
    Int, IntMatrix, IntVector, Rational,
};
use crate::error::{Error, Result};
use crate::polyhedra::{full_dim_hull, Polytope};

/// Primitive dual vectors of the canonical refinement, sorted, with their
/// minima over the polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalRaySet {
    pub rays: Vec<IntVector>,
    /// `offsets[i] = Min_P(rays[i])`.
    pub offsets: Vec<Rational>,
}

impl CanonicalRaySet {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntVector, &Rational)> {
        self.rays.iter().zip(self.offsets.iter())
    }

    /// Largest max-norm among the rays.
    pub fn max_norm(&self) -> Int {
        self.rays.iter().map(IntVector::max_norm).max().unwrap_or(Int::ZERO)
    }
}

/// Hilbert basis of the full-dimensional simplicial cone spanned by the given
/// linearly independent primitive rays.
///
/// Candidates are the lattice points of the half-open parallelepiped
/// `{Σ λᵢ rᵢ : 0 ≤ λᵢ < 1}` (one per coset of the sublattice spanned by the
/// rays) together with the rays; reducible candidates are discarded.
pub fn hilbert_basis_simplicial(rays: &[IntVector]) -> Result<Vec<IntVector>> {
    let Some(first) = rays.first() else { return Err(Error::EmptyInput) };
    let d = first.dim();
    if rays.len() != d {
        return Err(Error::DependentRays);
    }
    let rows: Vec<Vec<Int>> = rays.iter().map(|r| r.to_vec()).collect();
    if determinant_rows(&rows).is_zero() {
        return Err(Error::DependentRays);
    }
    let mut candidates: Vec<IntVector> = rays.to_vec();
    candidates.extend(parallelepiped_points(&rows)?);
    candidates.sort();
    candidates.dedup();
    let coords: Vec<Vec<Rational>> = candidates.iter().map(|x| cone_coordinates(&rows, x)).collect();
    let mut basis = Vec::new();
    'outer: for (i, x) in candidates.iter().enumerate() {
        for (j, _) in candidates.iter().enumerate() {
            if i != j && coords[i].iter().zip(coords[j].iter()).all(|(a, b)| a >= b) {
                continue 'outer;
            }
        }
        basis.push(x.clone());
    }
    Ok(basis)
}

/// Coordinates of `x` in the basis given by the rows.
fn cone_coordinates(rows: &[Vec<Int>], x: &IntVector) -> Vec<Rational> {
    let d = rows.len();
    // Solve Σ λᵢ rᵢ = x, i.e. Rᵀ λ = x.
    let m: Vec<Vec<Rational>> = (0..d).map(|c| (0..d).map(|r| rat_from_int(&rows[r][c])).collect()).collect();
    solve_square_raw(m, x.iter().map(rat_from_int).collect()).expect("rays are independent")
}

/// Nonzero lattice points `Σ λᵢ rᵢ` with all `λᵢ ∈ [0, 1)`.
fn parallelepiped_points(rows: &[Vec<Int>]) -> Result<Vec<IntVector>> {
    let d = rows.len();
    let det = abs(&determinant_rows(rows));
    if det.is_one() {
        return Ok(Vec::new());
    }
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(rows.to_vec())?);
    let diag: Vec<i64> = (0..d)
        .map(|i| h.get(i, i).try_into().map_err(|_| Error::Invariant("cone index too large".into())))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut rep = vec![0i64; d];
    loop {
        if rep.iter().any(|&v| v != 0) {
            let a = IntVector::from_i64s(&rep);
            let lambda = cone_coordinates(rows, &a);
            let mut point = vec![Rational::ZERO; d];
            for (i, l) in lambda.iter().enumerate() {
                let f = l - Rational::from(l.floor());
                if f.is_zero() {
                    continue;
                }
                for (c, p) in point.iter_mut().enumerate() {
                    *p += &f * rat_from_int(&rows[i][c]);
                }
            }
            let ints: Vec<Int> = point.iter().map(|v| v.numerator().clone()).collect();
            out.push(IntVector::new(ints)?);
        }
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if rep[i] + 1 < diag[i] {
                rep[i] += 1;
                break;
            }
            rep[i] = 0;
        }
    }
}

/// Placing triangulation of the pointed full-dimensional cone spanned by
/// `rays` (taken in the given order); returns index sets of maximal cones.
pub(crate) fn placing_triangulation(rays: &[IntVector]) -> Result<Vec<Vec<usize>>> {
    let d = rays[0].dim();
    let mut start: Vec<usize> = Vec::with_capacity(d);
    let mut start_rows: Vec<Vec<Int>> = Vec::with_capacity(d);
    for (i, r) in rays.iter().enumerate() {
        start_rows.push(r.to_vec());
        if rank_int(&start_rows, d) == start_rows.len() {
            start.push(i);
            if start.len() == d {
                break;
            }
        } else {
            start_rows.pop();
        }
    }
    if start.len() < d {
        return Err(Error::NotFullDimensional);
    }
    let mut simplices = vec![start.clone()];
    for (i, r) in rays.iter().enumerate() {
        if start.contains(&i) {
            continue;
        }
        let mut added = Vec::new();
        for (facet, opposite) in boundary_facets(&simplices) {
            let normal = facet_normal(rays, &facet, opposite);
            if is_negative(&r.dot(&normal)) {
                let mut s = facet.clone();
                s.push(i);
                s.sort();
                added.push(s);
            }
        }
        simplices.extend(added);
    }
    Ok(simplices)
}

/// Facets lying in exactly one simplex, paired with that simplex's opposite ray.
fn boundary_facets(simplices: &[Vec<usize>]) -> Vec<(Vec<usize>, usize)> {
    let mut all: Vec<(Vec<usize>, usize)> = Vec::new();
    for s in simplices {
        for (j, &omit) in s.iter().enumerate() {
            let mut f = s.clone();
            f.remove(j);
            all.push((f, omit));
        }
    }
    let mut out = Vec::new();
    for (k, (f, omit)) in all.iter().enumerate() {
        if all.iter().enumerate().all(|(l, (g, _))| l == k || g != f) {
            out.push((f.clone(), *omit));
        }
    }
    out
}

/// Normal of the hyperplane through the facet rays, pointing towards `opposite`.
fn facet_normal(rays: &[IntVector], facet: &[usize], opposite: usize) -> IntVector {
    let d = rays[0].dim();
    let rows: Vec<Vec<Int>> = facet.iter().map(|&i| rays[i].to_vec()).collect();
    let n = IntVector::new(kernel_vector(&rows, d)).expect("dimension in range");
    if is_negative(&n.dot(&rays[opposite])) {
        n.neg()
    } else {
        n
    }
}

/// Vertices of `conv(σ ∩ N∖{0})` for the full-dimensional pointed cone `σ`
/// spanned by the given primitive rays.
pub fn cone_hull_vertices(rays: &[IntVector]) -> Result<Vec<IntVector>> {
    let mut sorted = rays.to_vec();
    sorted.sort();
    sorted.dedup();
    let d = sorted[0].dim();
    if sorted.len() == d {
        let rows: Vec<Vec<Int>> = sorted.iter().map(|r| r.to_vec()).collect();
        if abs(&determinant_rows(&rows)).is_one() {
            return Ok(sorted);
        }
    }
    let mut generators: Vec<IntVector> = Vec::new();
    for s in placing_triangulation(&sorted)? {
        let piece: Vec<IntVector> = s.iter().map(|&i| sorted[i].clone()).collect();
        generators.extend(hilbert_basis_simplicial(&piece)?);
    }
    generators.sort();
    generators.dedup();
    let points: Vec<_> = generators.iter().map(IntVector::to_rat).collect();
    let hull = full_dim_hull(&points, &sorted)?;
    Ok(hull.vertex_indices.iter().map(|&i| generators[i].clone()).collect())
}

/// The canonical refinement ray set of a full-dimensional rational polytope:
/// the union over vertices `v` of the vertices of `conv(σ_v ∩ N∖{0})`, where
/// `σ_v` is spanned by the normals of the facets through `v`.
pub fn canonical_rays(p: &Polytope) -> Result<CanonicalRaySet> {
    let facets = p.facets()?;
    let mut rays: Vec<IntVector> = Vec::new();
    for v in p.vertices() {
        let normals: Vec<IntVector> =
            facets.iter().filter(|h| h.slack(v).is_zero()).map(|h| h.normal().clone()).collect();
        rays.extend(cone_hull_vertices(&normals)?);
    }
    rays.sort();
    rays.dedup();
    let offsets = rays.iter().map(|r| p.min_support(r)).collect::<Result<_>>()?;
    Ok(CanonicalRaySet { rays, offsets })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64s(v)
    }

    fn sorted(mut v: Vec<IntVector>) -> Vec<IntVector> {
        v.sort();
        v
    }

    #[test]
    fn hilbert_bases() {
        assert_eq!(
            hilbert_basis_simplicial(&[iv(&[1, 0]), iv(&[0, 1])]).unwrap(),
            sorted(vec![iv(&[1, 0]), iv(&[0, 1])])
        );
        assert_eq!(
            hilbert_basis_simplicial(&[iv(&[1, 0]), iv(&[1, 2])]).unwrap(),
            sorted(vec![iv(&[1, 0]), iv(&[1, 1]), iv(&[1, 2])])
        );
        assert_eq!(
            hilbert_basis_simplicial(&[iv(&[0, 1]), iv(&[3, -1])]).unwrap(),
            sorted(vec![iv(&[0, 1]), iv(&[1, 0]), iv(&[3, -1])])
        );
        assert_eq!(hilbert_basis_simplicial(&[iv(&[1, 1]), iv(&[2, 2])]), Err(Error::DependentRays));
    }

    #[test]
    fn parallelepiped_count_matches_index() {
        let rows = vec![
            vec![Int::from(1), Int::from(0), Int::from(0)],
            vec![Int::from(0), Int::from(1), Int::from(0)],
            vec![Int::from(1), Int::from(1), Int::from(5)],
        ];
        assert_eq!(parallelepiped_points(&rows).unwrap().len(), 4);
    }

    #[test]
    fn canonical_rays_of_triangles() {
        let d2 = Polytope::from_rows(&[&[0, 0], &[1, 0], &[0, 1]]);
        let expect = sorted(vec![iv(&[1, 0]), iv(&[0, 1]), iv(&[-1, -1])]);
        assert_eq!(canonical_rays(&d2).unwrap().rays, expect);
        let t2 = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(canonical_rays(&t2).unwrap().rays, expect);

        let tall = Polytope::from_rows(&[&[0, 0], &[2, 0], &[1, 3]]);
        let expect = sorted(vec![iv(&[0, 1]), iv(&[3, -1]), iv(&[-3, -1]), iv(&[1, 0]), iv(&[-1, 0])]);
        assert_eq!(canonical_rays(&tall).unwrap().rays, expect);
    }

    #[test]
    fn triangulation_of_square_cone() {
        let rays = vec![iv(&[1, 0, 0]), iv(&[1, 1, 0]), iv(&[1, 0, 1]), iv(&[1, 1, 1])];
        let t = placing_triangulation(&rays).unwrap();
        assert_eq!(t.len(), 2);
    }
}
