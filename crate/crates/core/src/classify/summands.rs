//! Decompositions of lattice polygons into Minkowski sums of lattice polytopes.

use alloc::vec::Vec;

use crate::arith::{IntVector, RatVector};
use crate::error::{Error, Result};
use crate::polyhedra::{resolve_hpolyhedron, HalfSpace, Polytope};

/// `{x : x + A ⊆ R}` for polytopes with `R` full-dimensional, or `None`
/// when empty.
pub fn minkowski_difference(r: &Polytope, a: &Polytope) -> Result<Option<Polytope>> {
    let hs: Vec<HalfSpace> = r
        .facets()?
        .iter()
        .map(|h| HalfSpace::new(h.normal().clone(), h.offset() - a.min_support(h.normal())?))
        .collect::<Result<_>>()?;
    match resolve_hpolyhedron(&hs)? {
        None => Ok(None),
        Some(res) => Ok(Some(Polytope::convex_hull(&res.vertices)?)),
    }
}

/// Translate so the coordinate-wise minimum over the vertices is the origin.
fn anchor(points: &[IntVector]) -> Vec<IntVector> {
    let d = points[0].dim();
    let min: Vec<_> = (0..d).map(|c| points.iter().map(|p| p[c].clone()).min().expect("nonempty")).collect();
    let min = IntVector::new(min).expect("dimension in range");
    points.iter().map(|p| p.sub(&min)).collect()
}

/// All ordered pairs `(A, B)` of lattice polytopes with `A + B = R`, with `A`
/// anchored at the origin by its coordinate-wise minimum.
///
/// Every summand of `R` has a translate inside `R`, so `A` ranges over hulls
/// of subsets of the lattice points of `R`, up to translation, and `B` is the
/// Minkowski difference `R ⊖ A`.
pub fn minkowski_summand_pairs(r: &Polytope) -> Result<Vec<(Polytope, Polytope)>> {
    if !r.is_lattice() {
        return Err(Error::NotLattice);
    }
    if !r.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let pts = r.lattice_points(false);
    if pts.len() > 20 {
        return Err(Error::RootTooLarge(pts.len()));
    }
    let mut seen: Vec<Vec<IntVector>> = Vec::new();
    let mut out = Vec::new();
    for m in 1u32..(1u32 << pts.len()) {
        let sub: Vec<IntVector> =
            pts.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, p)| p.clone()).collect();
        let hull = Polytope::from_lattice_points(&sub)?;
        // Only vertex sets matter; skip subsets that are not their own hull's vertex set.
        if hull.vertices().len() != sub.len() {
            continue;
        }
        let key = anchor(&hull.lattice_vertices()?);
        if seen.contains(&key) {
            continue;
        }
        seen.push(key.clone());
        let a = Polytope::from_lattice_points(&key)?;
        let Some(b) = minkowski_difference(r, &a)? else { continue };
        if !b.is_lattice() {
            continue;
        }
        if a.minkowski_sum(&b)? == *r {
            out.push((a, b));
        }
    }
    Ok(out)
}

/// `conv({0} × A, {1} × B)` in one dimension higher.
pub fn cayley_polytope(a: &Polytope, b: &Polytope) -> Result<Polytope> {
    let lift = |p: &Polytope, h: i64| -> Vec<RatVector> {
        p.vertices()
            .iter()
            .map(|v| {
                let mut e = Vec::with_capacity(v.dim() + 1);
                e.push(h.into());
                e.extend(v.iter().cloned());
                RatVector::new(e).expect("dimension in range")
            })
            .collect()
    };
    let mut pts = lift(a, 0);
    pts.extend(lift(b, 1));
    Polytope::convex_hull(&pts)
}
