//! Convex hulls: facets and extreme points from generators.

use alloc::vec;
use alloc::vec::Vec;

use super::dd::extreme_rays;
use super::hpoly::HalfSpace;
use crate::arith::{rank_int, Int, IntVector, RatVector, Rational};
use crate::error::Result;

pub(crate) struct Hull {
    /// Irredundant facets sorted by normal.
    pub facets: Vec<HalfSpace>,
    /// Indices into the input points of those that are vertices.
    pub vertex_indices: Vec<usize>,
}

/// Facets and vertices of `conv(points) + cone(rays)`, assumed full
/// dimensional. Points must be pairwise distinct.
pub(crate) fn full_dim_hull(points: &[RatVector], rays: &[IntVector]) -> Result<Hull> {
    let d = points[0].dim();
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(points.len() + rays.len());
    let scaled: Vec<(Int, Vec<Int>)> = points.iter().map(|p| p.clear_denominators()).collect();
    for (l, lp) in &scaled {
        let mut row = Vec::with_capacity(d + 1);
        row.push(-l.clone());
        row.extend(lp.iter().cloned());
        rows.push(row);
    }
    for r in rays {
        let mut row = vec![Int::ZERO];
        row.extend(r.iter().cloned());
        rows.push(row);
    }
    let cone = extreme_rays(&rows, d + 1).ok_or(crate::error::Error::NotFullDimensional)?;
    let mut facets = Vec::with_capacity(cone.len());
    for y in cone {
        if y[1..].iter().all(|v| v.is_zero()) {
            continue;
        }
        let normal = IntVector::new(y[1..].to_vec())?;
        let offset = points.iter().map(|p| normal.dot_rat(p)).min().expect("nonempty point set");
        facets.push(HalfSpace::new(normal, offset)?);
    }
    facets.sort();
    facets.dedup();

    let mut vertex_indices = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let tight: Vec<Vec<Int>> =
            facets.iter().filter(|h| h.slack(p).is_zero()).map(|h| h.normal().to_vec()).collect();
        if tight.len() >= d && rank_int(&tight, d) == d {
            vertex_indices.push(i);
        }
    }
    Ok(Hull { facets, vertex_indices })
}

/// Affine rank of a nonempty point set, and for it a lexicographically first
/// set of coordinates on which projection is injective over the affine hull.
pub(crate) fn affine_frame(points: &[RatVector]) -> (usize, Vec<usize>) {
    let d = points[0].dim();
    let base = &points[0];
    let diffs: Vec<Vec<Int>> = points[1..].iter().map(|p| p.sub(base).clear_denominators().1).collect();
    let k = rank_int(&diffs, d);
    let mut cols: Vec<usize> = Vec::with_capacity(k);
    for c in 0..d {
        if cols.len() == k {
            break;
        }
        cols.push(c);
        let sub: Vec<Vec<Int>> = diffs.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect();
        if rank_int(&sub, cols.len()) < cols.len() {
            cols.pop();
        }
    }
    (k, cols)
}

pub(crate) fn project(p: &RatVector, cols: &[usize]) -> RatVector {
    RatVector::new(cols.iter().map(|&c| p[c].clone()).collect::<Vec<Rational>>())
        .expect("projection dimension in range")
}
