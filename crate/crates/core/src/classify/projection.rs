//! Projections onto F-hollow lattice polytopes of lower dimension.

use alloc::vec::Vec;

use crate::arith::{content, determinant_rows, Int, IntVector, Rational};
use crate::error::{Error, Result};
use crate::fine::MultiplierProfile;
use crate::polyhedra::{HPolyhedron, HalfSpace, Polytope};
use crate::width::{lattice_width, WidthCertificate};

/// Whether a lattice 3-polytope of width greater than one admits a lattice
/// projection onto `2Δ₂`.
///
/// Decided through width directions: it has width 2 and three width
/// directions spanning a plane, with the origin interior to their triangle,
/// normalized area 3, and whose six supporting half-spaces cut out a
/// polyhedron with exactly three facets.
pub fn projects_to_2d2(p: &Polytope) -> Result<bool> {
    projects_to_2d2_with(p, &lattice_width(p)?)
}

/// [`projects_to_2d2`] with a precomputed width certificate.
pub fn projects_to_2d2_with(p: &Polytope, cert: &WidthCertificate) -> Result<bool> {
    if p.ambient_dim() != 3 || !p.is_full_dimensional() {
        return Err(Error::UnsupportedDimension(p.ambient_dim()));
    }
    if cert.width == Rational::ONE {
        return Err(Error::WidthOne);
    }
    if cert.width != Rational::from(2) {
        return Ok(false);
    }
    let dirs = &cert.directions;
    for i in 0..dirs.len() {
        for j in i + 1..dirs.len() {
            for k in j + 1..dirs.len() {
                if triple_projects(p, [&dirs[i], &dirs[j], &dirs[k]])? {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn triple_projects(p: &Polytope, w: [&IntVector; 3]) -> Result<bool> {
    let rows: Vec<Vec<Int>> = w.iter().map(|v| v.to_vec()).collect();
    if !determinant_rows(&rows).is_zero() {
        return Ok(false);
    }
    // Plane normal; a coordinate where it is nonzero can be dropped while
    // keeping the directions' restriction injective on their span.
    let normal = cross(w[0], w[1]).or_else(|| cross(w[0], w[2]));
    let Some(normal) = normal else { return Ok(false) };
    let drop = (0..3).find(|&c| !normal[c].is_zero()).expect("nonzero normal");
    let keep: Vec<usize> = (0..3).filter(|&c| c != drop).collect();
    let u: Vec<[Int; 2]> = w.iter().map(|v| [v[keep[0]].clone(), v[keep[1]].clone()]).collect();
    let det2 = |a: &[Int; 2], b: &[Int; 2]| &a[0] * &b[1] - &a[1] * &b[0];
    // Σ cᵢ wᵢ = 0 with these cᵢ; the origin is interior iff they share a strict sign.
    let c = [det2(&u[1], &u[2]), det2(&u[2], &u[0]), det2(&u[0], &u[1])];
    let positive = c.iter().all(|x| x > &Int::ZERO);
    let negative = c.iter().all(|x| x < &Int::ZERO);
    if !positive && !negative {
        return Ok(false);
    }
    let e1 = w[1].sub(w[0]);
    let e2 = w[2].sub(w[0]);
    let area = cross(&e1, &e2).map(|n| content(&n)).unwrap_or(Int::ZERO);
    if area != Int::from(3) {
        return Ok(false);
    }
    let mut hs = Vec::with_capacity(6);
    for (v, uv) in w.iter().zip(u.iter()) {
        for sign in [1i64, -1] {
            let s = Int::from(sign);
            let n = IntVector::new(vec2(&uv[0] * &s, &uv[1] * &s))?;
            hs.push(HalfSpace::new(n, p.min_support(&v.scale(&s))?)?);
        }
    }
    let section = HPolyhedron::new(hs)?;
    Ok(section.facet_indices().len() == 3)
}

fn vec2(a: Int, b: Int) -> Vec<Int> {
    let mut v = Vec::with_capacity(2);
    v.push(a);
    v.push(b);
    v
}

fn cross(a: &IntVector, b: &IntVector) -> Option<Vec<Int>> {
    let n = alloc::vec![&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0],];
    if n.iter().all(Int::is_zero) {
        None
    } else {
        Some(n)
    }
}

/// Sporadic F-hollow: weakly sporadic with no lattice projection onto an
/// F-hollow lattice polytope of lower dimension. For polygons and 3-polytopes
/// the only candidates are the unit segment (width one) and `2Δ₂`.
pub fn is_sporadic(p: &Polytope) -> Result<bool> {
    let profile = MultiplierProfile::new(p)?;
    is_sporadic_with(&profile, &lattice_width(p)?)
}

/// [`is_sporadic`] from precomputed data.
pub fn is_sporadic_with(profile: &MultiplierProfile, cert: &WidthCertificate) -> Result<bool> {
    let p = &profile.polytope;
    match p.ambient_dim() {
        2 | 3 => {}
        d => return Err(Error::UnsupportedDimension(d)),
    }
    if !profile.is_weakly_sporadic()? || cert.width <= Rational::ONE {
        return Ok(false);
    }
    Ok(p.ambient_dim() == 2 || !projects_to_2d2_with(p, cert)?)
}

/// A 3-polytope with five vertices, two of which lie strictly on opposite
/// sides of the plane through the other three with the segment between them
/// crossing the relative interior of that triangle.
pub fn is_bipyramid(p: &Polytope) -> Result<bool> {
    let v = p.lattice_vertices()?;
    if p.ambient_dim() != 3 || v.len() != 5 {
        return Ok(false);
    }
    for a in 0..5 {
        for b in a + 1..5 {
            let tri: Vec<&IntVector> = (0..5).filter(|&i| i != a && i != b).map(|i| &v[i]).collect();
            if crosses_triangle(&v[a], &v[b], &tri)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn crosses_triangle(a: &IntVector, b: &IntVector, tri: &[&IntVector]) -> Result<bool> {
    let Some(n) = cross(&tri[1].sub(tri[0]), &tri[2].sub(tri[0])) else { return Ok(false) };
    let n = IntVector::new(n)?;
    let sa = n.dot(&a.sub(tri[0]));
    let sb = n.dot(&b.sub(tri[0]));
    if !((sa > Int::ZERO && sb < Int::ZERO) || (sa < Int::ZERO && sb > Int::ZERO)) {
        return Ok(false);
    }
    // x = (sa·b − sb·a)/(sa − sb) lies on the plane; compare signed areas of
    // the sub-triangles against the full one, all scaled by (sa − sb).
    let den = &sa - &sb;
    let x: Vec<Int> = (0..3).map(|c| &sa * &b[c] - &sb * &a[c]).collect();
    let scaled = |p: &IntVector| -> Vec<Int> { p.iter().map(|v| v * &den).collect() };
    let t: Vec<Vec<Int>> = tri.iter().map(|p| scaled(p)).collect();
    for i in 0..3 {
        let p = &t[(i + 1) % 3];
        let q = &t[(i + 2) % 3];
        let e1: Vec<Int> = (0..3).map(|c| &p[c] - &x[c]).collect();
        let e2: Vec<Int> = (0..3).map(|c| &q[c] - &x[c]).collect();
        let m =
            [&e1[1] * &e2[2] - &e1[2] * &e2[1], &e1[2] * &e2[0] - &e1[0] * &e2[2], &e1[0] * &e2[1] - &e1[1] * &e2[0]];
        let s: Int = m.iter().zip(n.iter()).map(|(a, b)| a * b).sum();
        if s <= Int::ZERO {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{dilated_simplex, unit_cube, unit_fraction_simplex, width_two_container};

    #[test]
    fn projection_examples() {
        assert!(projects_to_2d2(&width_two_container().unwrap()).unwrap());
        assert!(projects_to_2d2(&dilated_simplex(3, 2).unwrap()).unwrap());
        assert!(!projects_to_2d2(&unit_fraction_simplex(&[3, 3, 3]).unwrap()).unwrap());
        assert_eq!(projects_to_2d2(&unit_cube(3).unwrap()), Err(Error::WidthOne));
        // Width 2 but only onto [0,2]: a prism over the 2×2 square.
        let boxed = Polytope::from_rows(&[
            &[0, 0, 0],
            &[2, 0, 0],
            &[0, 2, 0],
            &[2, 2, 0],
            &[0, 0, 2],
            &[2, 0, 2],
            &[0, 2, 2],
            &[2, 2, 2],
        ]);
        assert!(!projects_to_2d2(&boxed).unwrap());
    }

    #[test]
    fn sporadic_examples() {
        assert!(is_sporadic(&unit_fraction_simplex(&[2, 3, 6]).unwrap()).unwrap());
        assert!(!is_sporadic(&unit_cube(3).unwrap()).unwrap());
        assert!(!is_sporadic(&dilated_simplex(3, 2).unwrap()).unwrap());
    }

    #[test]
    fn bipyramids() {
        let bi = Polytope::from_rows(&[&[0, 0, 0], &[3, 0, 0], &[0, 3, 0], &[1, 1, 1], &[1, 1, -1]]);
        assert!(is_bipyramid(&bi).unwrap());
        assert!(!is_bipyramid(&unit_fraction_simplex(&[3, 3, 3]).unwrap()).unwrap());
        // Square pyramid: five vertices, but no pair straddles a triangle.
        let pyr = Polytope::from_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(!is_bipyramid(&pyr).unwrap());
    }
}
