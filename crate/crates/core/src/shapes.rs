//! Named lattice polytopes used as classification roots and test corpus.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::IntVector;
use crate::error::{Error, Result};
use crate::polyhedra::Polytope;

fn hull(points: Vec<Vec<i64>>) -> Result<Polytope> {
    let pts: Vec<IntVector> = points.iter().map(|p| IntVector::from_i64s(p)).collect();
    Polytope::from_lattice_points(&pts)
}

/// `conv(0, k₁e₁, …, k_d e_d)`.
pub fn axis_simplex(ks: &[i64]) -> Result<Polytope> {
    let d = ks.len();
    if d == 0 || d > crate::arith::MAX_DIM {
        return Err(Error::UnsupportedDimension(d));
    }
    if ks.iter().any(|&k| k <= 0) {
        return Err(Error::NotFullDimensional);
    }
    let mut pts = vec![vec![0; d]];
    for (i, &k) in ks.iter().enumerate() {
        let mut v = vec![0; d];
        v[i] = k;
        pts.push(v);
    }
    hull(pts)
}

/// `k·Δ_d`, the `k`-th dilate of the standard simplex.
pub fn dilated_simplex(d: usize, k: i64) -> Result<Polytope> {
    axis_simplex(&vec![k; d])
}

/// Standard simplex `Δ_d`.
pub fn standard_simplex(d: usize) -> Result<Polytope> {
    dilated_simplex(d, 1)
}

/// Simplex `Δ_(k₁,…,k_d)` for a unit fraction partition `Σ 1/kᵢ = 1`.
pub fn unit_fraction_simplex(ks: &[i64]) -> Result<Polytope> {
    let l = ks.iter().fold(1i64, |acc, &k| acc / gcd_i64(acc, k) * k);
    if ks.iter().any(|&k| k < 2) || ks.iter().map(|&k| l / k).sum::<i64>() != l {
        return Err(Error::Invariant("not a unit fraction partition of 1".into()));
    }
    axis_simplex(ks)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

/// Lawrence prism `P_{h₁,…,h_d}`: over each vertex `vᵢ` of `Δ_{d−1}` (with
/// `v₁ = 0`) the vertical segment from `(vᵢ, 0)` to `(vᵢ, hᵢ)`.
pub fn lawrence_prism(heights: &[i64]) -> Result<Polytope> {
    let d = heights.len();
    if !(2..=crate::arith::MAX_DIM).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    let mut pts = Vec::new();
    for (i, &h) in heights.iter().enumerate() {
        let mut base = vec![0; d];
        if i > 0 {
            base[i - 1] = 1;
        }
        pts.push(base.clone());
        base[d - 1] = h;
        pts.push(base);
    }
    hull(pts)
}

/// Empty tetrahedron `Δ(p,q) = conv(0, e₁, e₃, (p,q,1))`.
pub fn empty_tetrahedron(p: i64, q: i64) -> Result<Polytope> {
    hull(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 1], vec![p, q, 1]])
}

/// `P × [0, h]`.
pub fn prism(p: &Polytope, h: i64) -> Result<Polytope> {
    let base = p.lattice_vertices()?;
    let mut pts = Vec::with_capacity(2 * base.len());
    for v in &base {
        for t in [0, h] {
            let mut e = v.to_vec();
            e.push(t.into());
            pts.push(IntVector::new(e)?);
        }
    }
    Polytope::from_lattice_points(&pts)
}

/// `[0,1]^d`.
pub fn unit_cube(d: usize) -> Result<Polytope> {
    if d == 0 || d > crate::arith::MAX_DIM {
        return Err(Error::UnsupportedDimension(d));
    }
    let pts = (0..1u32 << d).map(|m| (0..d).map(|i| i64::from((m >> i) & 1)).collect()).collect();
    hull(pts)
}

/// `2Δ₂ × [0,4]`, the container of all width-2 weakly sporadic 3-polytopes
/// that project to `2Δ₂`.
pub fn width_two_container() -> Result<Polytope> {
    prism(&dilated_simplex(2, 2)?, 4)
}

/// Lattice width 2 tetrahedron whose Fine interior is the origin while the
/// Fine interior of its slice at `x₃ = 0` is empty.
pub fn slice_counterexample() -> Result<Polytope> {
    hull(vec![vec![-1, -1, -1], vec![1, 0, -1], vec![0, 1, -1], vec![0, 0, 1]])
}

/// Maximal hollow 4-simplex with `μ = 1` and `μ_max = 4/3`.
pub fn hollow_four_simplex() -> Result<Polytope> {
    hull(vec![vec![-4, -7, -9, -5], vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![2, 5, 9, 5], vec![0, 1, 0, 3]])
}

/// The three maximal hollow simplices containing every sporadic F-hollow
/// 3-polytope, keyed by their partitions.
pub fn sporadic_roots() -> Result<Vec<(&'static str, Polytope)>> {
    Ok(vec![
        ("simplex(3,3,3)", unit_fraction_simplex(&[3, 3, 3])?),
        ("simplex(2,4,4)", unit_fraction_simplex(&[2, 4, 4])?),
        ("simplex(2,3,6)", unit_fraction_simplex(&[2, 3, 6])?),
    ])
}
