//! Double description method for pointed polyhedral cones `{y : A·y ≥ 0}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{dot_int, is_negative, make_primitive, rank_int, rat_from_int, solve_square_raw, Int, Rational};

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(other.0.iter()).map(|(a, b)| a & b).collect())
    }

    fn contains_all(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<Int>,
    zeros: Bits,
}

/// Extreme rays of the cone `{y ∈ ℝⁿ : ⟨row, y⟩ ≥ 0 for every row}`, each as a
/// primitive integer vector. Returns `None` when the rows do not have rank
/// `n`, i.e. the cone has a nontrivial lineality space. The zero cone yields
/// an empty list.
pub(crate) fn extreme_rays(rows: &[Vec<Int>], n: usize) -> Option<Vec<Vec<Int>>> {
    // Greedy basis in row order.
    let mut basis: Vec<usize> = Vec::with_capacity(n);
    let mut basis_rows: Vec<Vec<Int>> = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        if basis.len() == n {
            break;
        }
        basis_rows.push(r.clone());
        if rank_int(&basis_rows, n) == basis_rows.len() {
            basis.push(i);
        } else {
            basis_rows.pop();
        }
    }
    if basis.len() < n {
        return None;
    }

    let m = rows.len();
    let rat_basis: Vec<Vec<Rational>> = basis_rows.iter().map(|r| r.iter().map(rat_from_int).collect()).collect();
    let mut rays: Vec<Ray> = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rational::ZERO; n];
        e[j] = Rational::ONE;
        let sol = solve_square_raw(rat_basis.clone(), e).expect("basis rows are independent");
        let v = clear_and_reduce(&sol);
        let mut zeros = Bits::new(m);
        for (k, &bi) in basis.iter().enumerate() {
            if k != j {
                zeros.set(bi);
            }
        }
        rays.push(Ray { v, zeros });
    }

    let mut in_basis = vec![false; m];
    for &b in &basis {
        in_basis[b] = true;
    }

    for (i, row) in rows.iter().enumerate() {
        if in_basis[i] {
            continue;
        }
        let values: Vec<Int> = rays.iter().map(|r| dot_int(row, &r.v)).collect();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (k, s) in values.iter().enumerate() {
            if s.is_zero() {
                rays[k].zeros.set(i);
            } else if is_negative(s) {
                neg.push(k);
            } else {
                pos.push(k);
            }
        }
        if neg.is_empty() {
            continue;
        }
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                // Row i is not yet recorded in any zero set of p or q.
                if common.count() + 2 < n as u32 {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(k, r)| k == p || k == q || !r.zeros.contains_all(&common));
                if !adjacent {
                    continue;
                }
                let sp = &values[p];
                let sq = &values[q];
                let mut v: Vec<Int> = rays[q].v.iter().zip(rays[p].v.iter()).map(|(a, b)| sp * a - sq * b).collect();
                make_primitive(&mut v);
                let mut zeros = common;
                zeros.set(i);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut keep = vec![true; rays.len()];
        for &q in &neg {
            keep[q] = false;
        }
        let mut k = 0;
        rays.retain(|_| {
            let r = keep[k];
            k += 1;
            r
        });
        rays.extend(fresh);
    }

    let mut out: Vec<Vec<Int>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Some(out)
}

/// Scales a rational vector to a primitive integer vector pointing the same way.
pub(crate) fn clear_and_reduce(v: &[Rational]) -> Vec<Int> {
    let mut l = Int::ONE;
    for x in v {
        l = crate::arith::lcm(&l, &crate::arith::denominator(x));
    }
    let lr = rat_from_int(&l);
    let mut out: Vec<Int> = v.iter().map(|x| (x * &lr).numerator().clone()).collect();
    make_primitive(&mut out);
    out
}
