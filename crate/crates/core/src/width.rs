//! Lattice width and the complete set of width directions.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{floor_div, rat_from_int, Int, IntVector, RatVector, Rational};
use crate::error::{Error, Result};
use crate::polyhedra::{resolve_hpolyhedron, HalfSpace, Polytope};

/// Minimal lattice width together with every primitive direction attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthCertificate {
    pub width: Rational,
    /// All width directions, both signs, sorted.
    pub directions: Vec<IntVector>,
}

/// Largest `t` such that the cube `center + [−t, t]^d` fits inside `P`.
///
/// Solved exactly as a linear program by resolving the lifted system
/// `⟨a, c⟩ − t·‖a‖₁ ≥ b` over the facets `⟨x, a⟩ ≥ b`, `t ≥ 0`. Among
/// optimal vertices the lexicographically least center is returned.
pub fn inscribed_box_radius(p: &Polytope) -> Result<(RatVector, Rational)> {
    let facets = p.facets()?;
    let d = p.ambient_dim();
    if d + 1 > crate::arith::MAX_DIM {
        return Err(Error::UnsupportedDimension(d + 1));
    }
    let mut lifted = Vec::with_capacity(facets.len() + 1);
    for h in facets {
        let mut n: Vec<Int> = h.normal().to_vec();
        n.push(-h.normal().l1_norm());
        lifted.push(HalfSpace::new(IntVector::new(n)?, h.offset().clone())?);
    }
    lifted.push(HalfSpace::new(IntVector::unit(d + 1, d), Rational::ZERO)?);
    let res = resolve_hpolyhedron(&lifted)?.ok_or_else(|| Error::Invariant("inscribed box LP infeasible".into()))?;
    let best_t = res.vertices.iter().map(|v| v[d].clone()).max().expect("bounded feasible LP has a vertex");
    let center = res
        .vertices
        .iter()
        .filter(|v| v[d] == best_t)
        .map(|v| v.entries()[..d].to_vec())
        .min()
        .expect("optimal vertex exists");
    let center = RatVector::new(center)?;
    Ok((center, best_t))
}

/// Exact lattice width of a full-dimensional polytope and all directions
/// attaining it.
///
/// Any direction `n` satisfies `width(P, n) ≥ 2t·‖n‖₁` for the inscribed cube
/// radius `t`, so directions beating the initial bound `w₀` (taken over
/// coordinate directions and facet normals) lie in a finite box.
pub fn lattice_width(p: &Polytope) -> Result<WidthCertificate> {
    let facets = p.facets()?;
    let d = p.ambient_dim();
    let mut w0: Option<Rational> = None;
    for i in 0..d {
        let w = p.width_along(&IntVector::unit(d, i))?;
        w0 = Some(w0.map_or(w.clone(), |a| a.min(w)));
    }
    for h in facets {
        let w = p.width_along(h.normal())?;
        w0 = Some(w0.map_or(w.clone(), |a| a.min(w)));
    }
    let w0 = w0.expect("dimension at least one");
    let (_, t) = inscribed_box_radius(p)?;
    let bound_rat = &w0 / (Rational::from(2) * &t);
    let bound = floor_div(bound_rat.numerator(), &Int::from(bound_rat.denominator().clone()));

    let widths = WidthEvaluator::new(p);
    let mut best: Option<Rational> = None;
    let mut dirs: Vec<IntVector> = Vec::new();
    let b: i64 = bound.try_into().map_err(|_| Error::Invariant("width search bound overflow".into()))?;
    let mut cur = vec![-b; d];
    loop {
        if is_positive_half(&cur) && cur.iter().map(|v| v.unsigned_abs()).sum::<u64>() <= b as u64 {
            let n = IntVector::from_i64s(&cur);
            if crate::arith::content(&n).is_one() {
                let w = widths.width(&n);
                match &best {
                    Some(bw) if w > *bw => {}
                    Some(bw) if w == *bw => dirs.push(n),
                    _ => {
                        best = Some(w);
                        dirs.clear();
                        dirs.push(n);
                    }
                }
            }
        }
        let mut i = d;
        loop {
            if i == 0 {
                let width = best.ok_or_else(|| Error::Invariant("no width direction found".into()))?;
                let mut all: Vec<IntVector> = dirs.iter().flat_map(|n| [n.clone(), n.neg()]).collect();
                all.sort();
                return Ok(WidthCertificate { width, directions: all });
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

/// Nonzero with first nonzero entry positive.
fn is_positive_half(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Width evaluation with an integer fast path for lattice polytopes.
struct WidthEvaluator<'a> {
    p: &'a Polytope,
    ints: Option<Vec<IntVector>>,
}

impl<'a> WidthEvaluator<'a> {
    fn new(p: &'a Polytope) -> Self {
        Self { p, ints: p.lattice_vertices().ok() }
    }

    fn width(&self, n: &IntVector) -> Rational {
        if let Some(vs) = &self.ints {
            let mut lo: Option<Int> = None;
            let mut hi: Option<Int> = None;
            for v in vs {
                let s = n.dot(v);
                if lo.as_ref().is_none_or(|l| s < *l) {
                    lo = Some(s.clone());
                }
                if hi.as_ref().is_none_or(|h| s > *h) {
                    hi = Some(s);
                }
            }
            rat_from_int(&(hi.expect("nonempty") - lo.expect("nonempty")))
        } else {
            self.p.width_along(n).expect("valid direction")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64s(v)
    }

    #[test]
    fn box_radius_examples() {
        let t2 = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]);
        let (c, t) = inscribed_box_radius(&t2).unwrap();
        assert_eq!(t, rat(1, 2));
        assert_eq!(c, RatVector::new(vec![rat(1, 2), rat(1, 2)]).unwrap());

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
        let (c, t) = inscribed_box_radius(&cube).unwrap();
        assert_eq!(t, rat(1, 2));
        assert_eq!(c, RatVector::new(vec![rat(1, 2); 3]).unwrap());

        let rect = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 4], &[2, 4]]);
        let (c, t) = inscribed_box_radius(&rect).unwrap();
        assert_eq!(t, Rational::ONE);
        assert_eq!(c, RatVector::from_i64s(&[1, 1]));

        let seg = Polytope::from_rows(&[&[0, 0], &[1, 1]]);
        assert_eq!(inscribed_box_radius(&seg), Err(Error::NotFullDimensional));
    }

    #[test]
    fn widths() {
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
        let w = lattice_width(&cube).unwrap();
        assert_eq!(w.width, Rational::ONE);
        let mut e =
            vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1]), iv(&[-1, 0, 0]), iv(&[0, -1, 0]), iv(&[0, 0, -1])];
        e.sort();
        assert_eq!(w.directions, e);

        let t2 = Polytope::from_rows(&[&[0, 0], &[2, 0], &[0, 2]]);
        let w = lattice_width(&t2).unwrap();
        assert_eq!(w.width, Rational::from(2));
        let mut e = vec![iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1]), iv(&[-1, 0]), iv(&[0, -1]), iv(&[-1, -1])];
        e.sort();
        assert_eq!(w.directions, e);

        let delta = Polytope::from_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 1], &[2, 5, 1]]);
        assert_eq!(lattice_width(&delta).unwrap().width, Rational::ONE);
    }
}
