//! Lattice point counts of dilates and the h*-polynomial.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{abs, determinant_rows, Int};
use crate::error::{Error, Result};
use crate::polyhedra::Polytope;

/// h*-vector with trailing zeros trimmed, plus degree and codegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HStar {
    pub coefficients: Vec<i64>,
    pub degree: usize,
    pub codegree: usize,
}

impl HStar {
    /// Sum of the coefficients, the normalized volume.
    pub fn volume(&self) -> i64 {
        self.coefficients.iter().sum()
    }
}

/// `|kP ∩ ℤᵈ|` for a lattice polytope.
pub fn ehrhart_count(p: &Polytope, k: u64) -> Result<u64> {
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    if p.is_empty() {
        return Ok(0);
    }
    if k == 0 {
        return Ok(1);
    }
    Ok(p.dilate_int(k).lattice_points(false).len() as u64)
}

fn binomial(n: u64, k: u64) -> i64 {
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// h*-polynomial of a full-dimensional lattice polytope, from the counts
/// `L(0), …, L(d)` via `h*_j = Σᵢ (−1)ⁱ C(d+1, i) L(j−i)`.
pub fn hstar(p: &Polytope) -> Result<HStar> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let d = p.ambient_dim() as u64;
    let counts: Vec<i64> = (0..=d).map(|k| ehrhart_count(p, k).map(|c| c as i64)).collect::<Result<_>>()?;
    let mut coefficients: Vec<i64> = (0..=d as usize)
        .map(|j| (0..=j).map(|i| if i % 2 == 0 { 1 } else { -1 } * binomial(d + 1, i as u64) * counts[j - i]).sum())
        .collect();
    while coefficients.len() > 1 && *coefficients.last().expect("nonempty") == 0 {
        coefficients.pop();
    }
    if coefficients[0] != 1 || coefficients.iter().any(|&c| c < 0) {
        return Err(Error::Invariant(format!("invalid h* vector {:?}", coefficients)));
    }
    let degree = coefficients.len() - 1;
    let codegree = d as usize + 1 - degree;
    let first_interior = (1..=d + 1)
        .find(|&k| !p.dilate_int(k).lattice_points(true).is_empty())
        .ok_or_else(|| Error::Invariant("no interior lattice point up to (d+1)P".into()))?;
    if first_interior as usize != codegree {
        return Err(Error::Invariant(format!("codegree {} but first interior dilate {}", codegree, first_interior)));
    }
    Ok(HStar { coefficients, degree, codegree })
}

/// `|det(v₁ − v₀, …, v_d − v₀)|` for a full-dimensional lattice simplex.
pub fn simplex_normalized_volume(p: &Polytope) -> Result<Int> {
    let v = p.lattice_vertices()?;
    let d = p.ambient_dim();
    if !p.is_full_dimensional() || v.len() != d + 1 {
        return Err(Error::Invariant("not a full-dimensional simplex".into()));
    }
    let rows: Vec<Vec<Int>> = v[1..].iter().map(|x| x.sub(&v[0]).to_vec()).collect();
    Ok(abs(&determinant_rows(&rows)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let t2 = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(ehrhart_count(&t2, 1).unwrap(), 6);
        assert_eq!(ehrhart_count(&t2, 2).unwrap(), 15);
        assert_eq!(ehrhart_count(&t2, 0).unwrap(), 1);
    }

    #[test]
    fn hstar_examples() {
        let s = Polytope::from_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(hstar(&s).unwrap(), HStar { coefficients: vec![1], degree: 0, codegree: 4 });
        let t2 = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(hstar(&t2).unwrap(), HStar { coefficients: vec![1, 3], degree: 1, codegree: 2 });
        let prism = Polytope::from_rows(&[&[0, 0, 0], &[0, 0, 1], &[1, 0, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(hstar(&prism).unwrap().coefficients, vec![1, 1]);
        assert_eq!(simplex_normalized_volume(&t2).unwrap(), Int::from(4));
    }
}
