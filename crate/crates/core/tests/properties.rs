//! Property tests for the exact arithmetic, polyhedral and invariant layers.

use fine_core::arith::{
    hermite_normal_form, primitive_vector, rat, solve_square, Int, IntMatrix, IntVector, RatMatrix, RatVector, Rational,
};
use fine_core::fine::{fine_interior, fine_interior_bruteforce, is_support_vector, MultiplierProfile};
use fine_core::normal_form::affine_normal_form;
use fine_core::polyhedra::{resolve_by_subsets, resolve_hpolyhedron, Polytope};
use fine_core::width::lattice_width;
use fine_core::Error;
use proptest::prelude::*;

fn to_i64(v: &Int) -> i64 {
    i64::try_from(v).expect("small entry")
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Product of elementary row operations and sign flips: unimodular by
/// construction.
fn unimodular(d: usize, ops: &[(usize, usize, i64)], flips: &[bool]) -> IntMatrix {
    let mut m = IntMatrix::identity(d);
    for &(i, j, k) in ops {
        let (i, j) = (i % d, j % d);
        if i == j {
            continue;
        }
        for c in 0..d {
            let v = m.get(i, c) + Int::from(k) * m.get(j, c);
            m.set(i, c, v);
        }
    }
    for (r, &f) in flips.iter().enumerate().take(d) {
        if f {
            for c in 0..d {
                let v = -m.get(r, c).clone();
                m.set(r, c, v);
            }
        }
    }
    m
}

fn lattice_polytope(points: &[Vec<i64>]) -> Option<Polytope> {
    let pts: Vec<IntVector> = points.iter().map(|p| IntVector::from_i64s(p)).collect();
    let p = Polytope::from_lattice_points(&pts).ok()?;
    p.is_full_dimensional().then_some(p)
}

fn points(d: usize, max: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0..=max, d), d + 1..d + 6)
}

fn ops() -> impl Strategy<Value = (Vec<(usize, usize, i64)>, Vec<bool>, Vec<i64>)> {
    (
        prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..6),
        prop::collection::vec(any::<bool>(), 3),
        prop::collection::vec(-5i64..=5, 3),
    )
}

fn transform(p: &Polytope, d: usize, (o, f, t): &(Vec<(usize, usize, i64)>, Vec<bool>, Vec<i64>)) -> Polytope {
    let u = unimodular(d, o, f);
    p.map_affine(&u, &RatVector::from_i64s(&t[..d])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn primitive_vector_is_idempotent(v in prop::collection::vec(-30i64..=30, 1..=5)) {
        let iv = IntVector::from_i64s(&v);
        match primitive_vector(&iv) {
            Err(e) => prop_assert!(v.iter().all(|&x| x == 0) && e == Error::ZeroVector),
            Ok(p) => {
                prop_assert_eq!(primitive_vector(&p).unwrap(), p.clone());
                let g = v.iter().fold(0, |g, &x| gcd(g, x));
                let expected: Vec<i64> = v.iter().map(|x| x / g).collect();
                prop_assert_eq!(p, IntVector::from_i64s(&expected));
            }
        }
    }

    #[test]
    fn hermite_form_factorizes(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 3)) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let a = IntMatrix::from_i64_rows(&refs).unwrap();
        let (h, u) = hermite_normal_form(&a);
        prop_assert_eq!(u.mul(&a).unwrap(), h.clone());
        let det = u.determinant().unwrap();
        prop_assert!(det == Int::from(1) || det == Int::from(-1));
        // Leading entries positive with reduced entries above them.
        let mut last_col = None;
        for r in 0..3 {
            let Some(c) = (0..3).find(|&c| *h.get(r, c) != Int::ZERO) else { continue };
            prop_assert!(last_col.map_or(true, |l| c > l));
            last_col = Some(c);
            let lead = to_i64(h.get(r, c));
            prop_assert!(lead > 0);
            for above in 0..r {
                let x = to_i64(h.get(above, c));
                prop_assert!((0..lead).contains(&x));
            }
        }
    }

    #[test]
    fn solve_square_solves(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 3), b in prop::collection::vec(-9i64..=9, 3)) {
        let m = RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()).unwrap();
        let rhs = RatVector::from_i64s(&b);
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let singular = IntMatrix::from_i64_rows(&refs).unwrap().determinant().unwrap() == Int::ZERO;
        match solve_square(&m, &rhs).unwrap() {
            None => prop_assert!(singular),
            Some(x) => {
                prop_assert!(!singular);
                for (r, row) in rows.iter().enumerate() {
                    let lhs = row.iter().zip(x.iter()).fold(Rational::ZERO, |acc, (&a, xi)| acc + rat(a, 1) * xi);
                    prop_assert_eq!(lhs, rhs[r].clone());
                }
            }
        }
    }

    #[test]
    fn normal_form_and_width_are_affine_invariants(pts in points(3, 3), t in ops()) {
        let Some(p) = lattice_polytope(&pts) else { return Ok(()) };
        let q = transform(&p, 3, &t);
        prop_assert_eq!(affine_normal_form(&p).unwrap(), affine_normal_form(&q).unwrap());
        prop_assert_eq!(lattice_width(&p).unwrap().width, lattice_width(&q).unwrap().width);
        prop_assert_eq!(MultiplierProfile::new(&p).unwrap().mu, MultiplierProfile::new(&q).unwrap().mu);
    }

    #[test]
    fn oracle_shrinks_to_fine_interior(pts in points(2, 5), bound in 1u32..=3) {
        let Some(p) = lattice_polytope(&pts) else { return Ok(()) };
        let wide = fine_interior_bruteforce(&p, bound).unwrap();
        let narrow = fine_interior_bruteforce(&p, bound + 1).unwrap();
        let exact = fine_interior(&p).unwrap().polytope;
        prop_assert!(narrow.vertices().iter().all(|v| wide.contains(v)));
        prop_assert!(exact.vertices().iter().all(|v| narrow.contains(v)));
    }

    #[test]
    fn support_vectors_persist_under_dilation(pts in points(2, 5), num in 2i64..=8, den in 1i64..=3) {
        let Some(p) = lattice_polytope(&pts) else { return Ok(()) };
        if fine_interior(&p).unwrap().polytope.is_empty() {
            return Ok(());
        }
        let lambda = rat(num, den);
        if lambda < Rational::ONE {
            return Ok(());
        }
        let q = p.dilate(&lambda).unwrap();
        for h in p.facets().unwrap() {
            if is_support_vector(&p, h.normal()).unwrap() {
                prop_assert!(is_support_vector(&q, h.normal()).unwrap());
            }
        }
    }

    #[test]
    fn vertex_enumeration_routes_agree(pts in points(3, 4)) {
        let Some(p) = lattice_polytope(&pts) else { return Ok(()) };
        let facets = p.facets().unwrap().to_vec();
        let dd = resolve_hpolyhedron(&facets).unwrap().unwrap();
        let subsets = resolve_by_subsets(&facets).unwrap().unwrap();
        prop_assert_eq!(&dd, &subsets);
        prop_assert_eq!(dd.vertices.as_slice(), p.vertices());
        prop_assert!(dd.rays.is_empty());
    }
}
