//! Exact integer and rational linear algebra.
//!
//! Everything in this crate is computed over arbitrary-precision integers
//! ([`Int`]) and canonical fractions ([`Rational`]); there is no floating point
//! anywhere. Vectors carry an ambient dimension of at most [`MAX_DIM`].

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Deref, Index};

use dashu_int::ops::Gcd;
pub use dashu_int::IBig as Int;
use dashu_int::UBig;
pub use dashu_ratio::RBig as Rational;

use crate::error::{Error, Result};

/// Largest ambient dimension supported by the vector types. Polytopes of
/// dimension up to four are handled, and the dilation polyhedron of a
/// 4-polytope lives in dimension five.
pub const MAX_DIM: usize = 5;

/// `num/den` as a canonical fraction. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::from_parts_signed(Int::from(num), Int::from(den))
}

pub(crate) fn rat_from_int(v: &Int) -> Rational {
    Rational::from(v.clone())
}

pub(crate) fn is_negative(v: &Int) -> bool {
    v.sign() == dashu_int::Sign::Negative && !v.is_zero()
}

pub(crate) fn is_positive(v: &Int) -> bool {
    !v.is_zero() && v.sign() == dashu_int::Sign::Positive
}

pub(crate) fn rat_is_negative(v: &Rational) -> bool {
    is_negative(v.numerator())
}

pub(crate) fn rat_is_positive(v: &Rational) -> bool {
    is_positive(v.numerator())
}

pub(crate) fn abs(v: &Int) -> Int {
    if is_negative(v) {
        -v.clone()
    } else {
        v.clone()
    }
}

pub(crate) fn gcd(a: &Int, b: &Int) -> Int {
    Int::from(a.gcd(b))
}

pub(crate) fn lcm(a: &Int, b: &Int) -> Int {
    if a.is_zero() || b.is_zero() {
        return Int::ZERO;
    }
    abs(&(a * b)) / gcd(a, b)
}

/// Floor division rounding towards negative infinity.
pub(crate) fn floor_div(a: &Int, b: &Int) -> Int {
    let q = a / b;
    let r = a - &q * b;
    if !r.is_zero() && is_negative(&r) != is_negative(b) {
        q - Int::ONE
    } else {
        q
    }
}

pub(crate) fn denominator(v: &Rational) -> Int {
    Int::from(v.denominator().clone())
}

/// Integer vector of ambient dimension `1..=MAX_DIM`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector(Vec<Int>);

/// Rational vector of ambient dimension `1..=MAX_DIM`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVector(Vec<Rational>);

fn check_len(len: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&len) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(len))
    }
}

impl IntVector {
    pub fn new(entries: Vec<Int>) -> Result<Self> {
        check_len(entries.len())?;
        Ok(Self(entries))
    }

    /// Convenience constructor; panics on an unsupported length.
    pub fn from_i64s(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&v| Int::from(v)).collect()).expect("vector length in 1..=5")
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![Int::ZERO; dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = vec![Int::ZERO; dim];
        v[axis] = Int::ONE;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|v| v.is_zero())
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Int> {
        self.0
    }

    pub fn dot(&self, other: &IntVector) -> Int {
        dot_int(&self.0, &other.0)
    }

    pub fn dot_rat(&self, point: &RatVector) -> Rational {
        let mut acc = Rational::ZERO;
        for (a, b) in self.0.iter().zip(point.0.iter()) {
            if !a.is_zero() {
                acc += b * rat_from_int(a);
            }
        }
        acc
    }

    pub fn neg(&self) -> IntVector {
        Self(self.0.iter().map(|v| -v.clone()).collect())
    }

    pub fn to_rat(&self) -> RatVector {
        RatVector(self.0.iter().map(rat_from_int).collect())
    }

    /// Maximum absolute entry.
    pub fn max_norm(&self) -> Int {
        self.0.iter().map(abs).max().unwrap_or(Int::ZERO)
    }

    /// Sum of absolute entries.
    pub fn l1_norm(&self) -> Int {
        self.0.iter().map(abs).fold(Int::ZERO, |a, b| a + b)
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Int) -> IntVector {
        Self(self.0.iter().map(|a| a * k).collect())
    }
}

impl Deref for IntVector {
    type Target = [Int];
    fn deref(&self) -> &[Int] {
        &self.0
    }
}

impl Index<usize> for IntVector {
    type Output = Int;
    fn index(&self, i: usize) -> &Int {
        &self.0[i]
    }
}

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        check_len(entries.len())?;
        Ok(Self(entries))
    }

    /// Integer entries; panics on an unsupported length.
    pub fn from_i64s(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&v| Rational::from(v)).collect()).expect("vector length in 1..=5")
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![Rational::ZERO; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|v| v.is_int())
    }

    /// The integer vector, when every entry is integral.
    pub fn to_int(&self) -> Option<IntVector> {
        if self.is_integral() {
            Some(IntVector(self.0.iter().map(|v| v.numerator().clone()).collect()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        Self(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> RatVector {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, other: &RatVector) -> Rational {
        let mut acc = Rational::ZERO;
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            acc += a * b;
        }
        acc
    }

    /// Least common multiple of the entry denominators.
    pub fn common_denominator(&self) -> Int {
        self.0.iter().fold(Int::ONE, |acc, v| lcm(&acc, &denominator(v)))
    }

    /// `(L, L·self)` as integers, with `L` the common denominator.
    pub(crate) fn clear_denominators(&self) -> (Int, Vec<Int>) {
        let l = self.common_denominator();
        let lr = rat_from_int(&l);
        let scaled = self.0.iter().map(|v| (v * &lr).numerator().clone()).collect();
        (l, scaled)
    }
}

impl Deref for RatVector {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<&IntVector> for RatVector {
    fn from(v: &IntVector) -> Self {
        v.to_rat()
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, entries: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", e)?;
    }
    f.write_str(")")
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn dot_int(a: &[Int], b: &[Int]) -> Int {
    let mut acc = Int::ZERO;
    for (x, y) in a.iter().zip(b.iter()) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub(crate) fn content(v: &[Int]) -> Int {
    let mut g = UBig::ZERO;
    for x in v {
        if !x.is_zero() {
            g = g.gcd(x);
            if g == UBig::ONE {
                break;
            }
        }
    }
    Int::from(g)
}

/// Divides a nonzero integer vector by the gcd of its entries in place.
pub(crate) fn make_primitive(v: &mut [Int]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `v / gcd(|v_i|)`: the primitive lattice vector in the direction of `v`.
pub fn primitive_vector(v: &IntVector) -> Result<IntVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut out = v.0.clone();
    make_primitive(&mut out);
    Ok(IntVector(out))
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

macro_rules! matrix_common {
    ($ty:ident, $scalar:ty) => {
        impl $ty {
            pub fn zeros(rows: usize, cols: usize) -> Self {
                Self { rows, cols, data: vec![<$scalar>::ZERO; rows * cols] }
            }

            pub fn identity(n: usize) -> Self {
                let mut m = Self::zeros(n, n);
                for i in 0..n {
                    m.data[i * n + i] = <$scalar>::ONE;
                }
                m
            }

            /// Builds a matrix from rows; every row must have the same length.
            pub fn from_rows(rows: Vec<Vec<$scalar>>) -> Result<Self> {
                let cols = rows.first().map_or(0, |r| r.len());
                let mut data = Vec::with_capacity(rows.len() * cols);
                let n = rows.len();
                for r in rows {
                    if r.len() != cols {
                        return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
                    }
                    data.extend(r);
                }
                Ok(Self { rows: n, cols, data })
            }

            pub fn rows(&self) -> usize {
                self.rows
            }

            pub fn cols(&self) -> usize {
                self.cols
            }

            pub fn get(&self, r: usize, c: usize) -> &$scalar {
                &self.data[r * self.cols + c]
            }

            pub fn set(&mut self, r: usize, c: usize, v: $scalar) {
                self.data[r * self.cols + c] = v;
            }

            pub fn row(&self, r: usize) -> &[$scalar] {
                &self.data[r * self.cols..(r + 1) * self.cols]
            }

            pub fn row_vecs(&self) -> Vec<Vec<$scalar>> {
                (0..self.rows).map(|r| self.row(r).to_vec()).collect()
            }

            /// Row-major entries.
            pub fn entries(&self) -> &[$scalar] {
                &self.data
            }

            pub fn transpose(&self) -> Self {
                let mut t = Self::zeros(self.cols, self.rows);
                for r in 0..self.rows {
                    for c in 0..self.cols {
                        t.data[c * self.rows + r] = self.get(r, c).clone();
                    }
                }
                t
            }

            pub fn mul(&self, other: &Self) -> Result<Self> {
                if self.cols != other.rows {
                    return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
                }
                let mut out = Self::zeros(self.rows, other.cols);
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let a = self.get(i, k);
                        if a.is_zero() {
                            continue;
                        }
                        for j in 0..other.cols {
                            let b = other.get(k, j);
                            if !b.is_zero() {
                                out.data[i * other.cols + j] += a * b;
                            }
                        }
                    }
                }
                Ok(out)
            }
        }

        impl PartialOrd for $ty {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl Ord for $ty {
            /// Shape first, then row-major lexicographic comparison.
            fn cmp(&self, other: &Self) -> Ordering {
                (self.rows, self.cols).cmp(&(other.rows, other.cols)).then_with(|| self.data.cmp(&other.data))
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("[")?;
                for r in 0..self.rows {
                    if r > 0 {
                        f.write_str(", ")?;
                    }
                    f.write_str("[")?;
                    for c in 0..self.cols {
                        if c > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{}", self.get(r, c))?;
                    }
                    f.write_str("]")?;
                }
                f.write_str("]")
            }
        }
    };
}

matrix_common!(IntMatrix, Int);
matrix_common!(RatMatrix, Rational);

impl IntMatrix {
    /// Moves row `from` to position `to < from`, shifting the rows in
    /// between down by one.
    fn rotate_row_up(&mut self, from: usize, to: usize) {
        let cols = self.cols;
        self.data[to * cols..(from + 1) * cols].rotate_right(cols);
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(rat_from_int).collect() }
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        Ok(determinant_rows(&self.row_vecs()))
    }

    pub fn rank(&self) -> usize {
        rank_int(&self.row_vecs(), self.cols)
    }
}

impl RatMatrix {
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Int>> = (0..self.rows)
            .map(|r| {
                let v = RatVector(self.row(r).to_vec());
                v.clear_denominators().1
            })
            .collect();
        rank_int(&rows, self.cols)
    }
}

/// Bareiss determinant of a square integer matrix given by rows.
pub(crate) fn determinant_rows(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    if n == 0 {
        return Int::ONE;
    }
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let mut negate = false;
    let mut prev = Int::ONE;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Int::ZERO;
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = Int::ZERO;
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Rank of an integer matrix given by rows of length `cols`.
pub(crate) fn rank_int(rows: &[Vec<Int>], cols: usize) -> usize {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        for i in (rank + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let a = m[rank][c].clone();
            let b = m[i][c].clone();
            for j in c..cols {
                let v = &a * &m[i][j] - &b * &m[rank][j];
                m[i][j] = v;
            }
            make_primitive(&mut m[i]);
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U` unimodular and `U·A = H`. The nonzero rows of `H`
/// come first, their leading entries are positive and sit in strictly
/// increasing columns, and every entry above a leading entry lies in
/// `[0, leading)`. When a row carrying the smallest nonzero entry of the
/// current column is promoted, the rows it passes keep their relative order.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.rows;
    let n = a.cols;
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        loop {
            let pivot = (row..m)
                .filter(|&r| !h.get(r, col).is_zero())
                .min_by(|&x, &y| abs(h.get(x, col)).cmp(&abs(h.get(y, col))).then(x.cmp(&y)));
            let Some(p) = pivot else { break };
            if p != row {
                h.rotate_row_up(p, row);
                u.rotate_row_up(p, row);
            }
            let mut clean = true;
            for r in (row + 1)..m {
                if h.get(r, col).is_zero() {
                    continue;
                }
                let q = floor_div(h.get(r, col), h.get(row, col));
                row_axpy(&mut h, r, row, &q);
                row_axpy(&mut u, r, row, &q);
                if !h.get(r, col).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(row, col).is_zero() {
            continue;
        }
        if is_negative(h.get(row, col)) {
            row_negate(&mut h, row);
            row_negate(&mut u, row);
        }
        for r in 0..row {
            let q = floor_div(h.get(r, col), h.get(row, col));
            if !q.is_zero() {
                row_axpy(&mut h, r, row, &q);
                row_axpy(&mut u, r, row, &q);
            }
        }
        row += 1;
    }
    (h, u)
}

/// `row[target] -= q * row[source]`
fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, q: &Int) {
    for c in 0..m.cols {
        let s = m.get(source, c).clone();
        if !s.is_zero() {
            let v = m.get(target, c) - q * &s;
            m.set(target, c, v);
        }
    }
}

fn row_negate(m: &mut IntMatrix, r: usize) {
    for c in 0..m.cols {
        let v = -m.get(r, c).clone();
        m.set(r, c, v);
    }
}

/// Exact solution of the square system `A·x = b`, or `None` when `A` is
/// singular.
pub fn solve_square(a: &RatMatrix, b: &RatVector) -> Result<Option<RatVector>> {
    if a.rows != a.cols {
        return Err(Error::DimensionMismatch { expected: a.rows, found: a.cols });
    }
    if b.dim() != a.rows {
        return Err(Error::DimensionMismatch { expected: a.rows, found: b.dim() });
    }
    Ok(solve_square_raw(a.row_vecs(), b.0.clone()).map(RatVector))
}

/// Gauss–Jordan elimination over the rationals on an owned system.
pub(crate) fn solve_square_raw(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = m.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(p, c);
        b.swap(p, c);
        let inv = Rational::ONE / &m[c][c];
        for j in c..n {
            m[c][j] = &m[c][j] * &inv;
        }
        b[c] = &b[c] * &inv;
        for r in 0..n {
            if r == c || m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone();
            for j in c..n {
                let v = &m[r][j] - &f * &m[c][j];
                m[r][j] = v;
            }
            let v = &b[r] - &f * &b[c];
            b[r] = v;
        }
    }
    Some(b)
}

/// Inverse of a unimodular integer matrix.
pub(crate) fn unimodular_inverse(u: &IntMatrix) -> Option<IntMatrix> {
    let n = u.rows;
    let rows = u.to_rat().row_vecs();
    let mut out = IntMatrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![Rational::ZERO; n];
        e[j] = Rational::ONE;
        let col = solve_square_raw(rows.clone(), e)?;
        for (i, v) in col.into_iter().enumerate() {
            if !v.is_int() {
                return None;
            }
            out.set(i, j, v.numerator().clone());
        }
    }
    Some(out)
}

/// Primitive generator of the kernel of a `(d−1) × d` integer matrix of
/// rank `d−1`, by signed maximal minors.
pub(crate) fn kernel_vector(a: &[Vec<Int>], d: usize) -> Vec<Int> {
    let mut out = Vec::with_capacity(d);
    for skip in 0..d {
        let minor: Vec<Vec<Int>> = a
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, v)| v.clone()).collect())
            .collect();
        let det = determinant_rows(&minor);
        out.push(if skip % 2 == 0 { det } else { -det });
    }
    make_primitive(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64s(v)
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_vector(&iv(&[4, -6])).unwrap(), iv(&[2, -3]));
        assert_eq!(primitive_vector(&iv(&[0, 0, 5])).unwrap(), iv(&[0, 0, 1]));
        assert_eq!(primitive_vector(&iv(&[3, 5])).unwrap(), iv(&[3, 5]));
        assert_eq!(primitive_vector(&iv(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn vector_length_is_capped() {
        assert!(IntVector::new(vec![Int::ZERO; 6]).is_err());
        assert!(IntVector::new(Vec::new()).is_err());
        assert!(RatVector::new(vec![Rational::ZERO; 5]).is_ok());
    }

    #[test]
    fn hnf_identity_and_swap() {
        let id = IntMatrix::identity(2);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);

        let a = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u.mul(&a).unwrap(), h);
    }

    #[test]
    fn hnf_column_completion_keeps_order() {
        let col = IntMatrix::from_i64_rows(&[&[0], &[0], &[1]]).unwrap();
        let (h, u) = hermite_normal_form(&col);
        assert_eq!(h, IntMatrix::from_i64_rows(&[&[1], &[0], &[0]]).unwrap());
        assert_eq!(u, IntMatrix::from_i64_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]).unwrap());
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let a = IntMatrix::from_i64_rows(&[&[2, 3, 5], &[4, 1, 7], &[6, 0, 2]]).unwrap();
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(abs(&u.determinant().unwrap()), Int::ONE);
        for r in 0..3 {
            let lead = (0..3).find(|&c| !h.get(r, c).is_zero()).unwrap();
            assert!(is_positive(h.get(r, lead)));
            for above in 0..r {
                let v = h.get(above, lead);
                assert!(!is_negative(v) && v < h.get(r, lead));
            }
        }
    }

    #[test]
    fn solve_square_examples() {
        let id = IntMatrix::identity(3).to_rat();
        let b = RatVector::new(vec![rat(1, 2), rat(-3, 1), rat(5, 7)]).unwrap();
        assert_eq!(solve_square(&id, &b).unwrap().unwrap(), b);

        let a = IntMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, -1, -1]]).unwrap().to_rat();
        let ones = RatVector::from_i64s(&[1, 1, 1]);
        assert_eq!(solve_square(&a, &ones).unwrap().unwrap(), RatVector::from_i64s(&[3, 1, 1]));

        let singular = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap().to_rat();
        assert_eq!(solve_square(&singular, &RatVector::from_i64s(&[1, 1])).unwrap(), None);

        let wrong = RatVector::from_i64s(&[1, 1]);
        assert!(solve_square(&a, &wrong).is_err());
    }

    #[test]
    fn determinant_and_rank() {
        let a = IntMatrix::from_i64_rows(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).unwrap();
        assert_eq!(a.determinant().unwrap(), int(6));
        let b = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).unwrap();
        assert_eq!(b.determinant().unwrap(), int(0));
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn floor_div_signs() {
        assert_eq!(floor_div(&int(7), &int(2)), int(3));
        assert_eq!(floor_div(&int(-7), &int(2)), int(-4));
        assert_eq!(floor_div(&int(7), &int(-2)), int(-4));
        assert_eq!(floor_div(&int(-7), &int(-2)), int(3));
        assert_eq!(floor_div(&int(6), &int(-2)), int(-3));
    }
}
