//! Dense linear algebra over prime fields.
//!
//! Field elements are stored as canonical `u64` representatives in `[0, p)`.
//! With `p <= 2^31` every product of two representatives fits in a `u64`, so
//! all arithmetic is a single multiply followed by one reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Number of field elements.
    pub fn order(self) -> u64 {
        self.p
    }

    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    pub fn elements(self) -> impl Iterator<Item = u64> {
        0..self.p
    }

    pub fn units(self) -> impl Iterator<Item = u64> {
        1..self.p
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Mat {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// The basis matrix `e_ij` of size `n`, with 1-based indices.
    pub fn unit(field: Fp, n: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= n && j <= n, "e_{i}{j} outside {n}x{n}");
        let mut m = Mat::zeros(field, n, n);
        m.data[(i - 1) * n + (j - 1)] = 1;
        m
    }

    /// `sum c * e_ij` over 1-based `(i, j, c)` triples.
    pub fn from_units(field: Fp, n: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for &(i, j, c) in terms {
            assert!(i >= 1 && j >= 1 && i <= n && j <= n, "e_{i}{j} outside {n}x{n}");
            let idx = (i - 1) * n + (j - 1);
            m.data[idx] = field.add(m.data[idx], field.reduce(c));
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry modulo `p`.
    pub fn from_rows(field: Fp, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| field.reduce(v)))
            .collect();
        Ok(Mat {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a matrix from canonical entries. Panics on a length mismatch.
    pub fn from_vec(field: Fp, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        let p = field.modulus();
        Mat {
            field,
            rows,
            cols,
            data: data.into_iter().map(|v| v % p).collect(),
        }
    }

    pub fn from_fn(field: Fp, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let p = field.modulus();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % p);
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Fp, rows: usize, columns: &[Vec<u64>]) -> Self {
        Mat::from_fn(field, rows, columns.len(), |i, j| columns[j][i])
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.field.modulus();
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.field.modulus();
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d = (*d + a * b) % p;
                }
            }
        }
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(u64, u64) -> u64) -> Result<Mat> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        let f = self.field;
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        let f = self.field;
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, c: u64) -> Mat {
        let f = self.field;
        let c = c % f.modulus();
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `self += c * other`, in place.
    pub fn add_scaled(&mut self, other: &Mat, c: u64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        if c % f.modulus() == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, c));
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn pow(&self, mut exp: u64) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Mat::identity(self.field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn block_diag(field: Fp, blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            assert_eq!(b.field, field);
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = block.get(i, j);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn vstack(field: Fp, parts: &[&Mat]) -> Result<Mat> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if parts.iter().any(|m| m.cols != cols) {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut data = Vec::new();
        for m in parts {
            data.extend_from_slice(&m.data);
        }
        let rows = parts.iter().map(|m| m.rows).sum();
        Ok(Mat {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                self.data[r * cols + j] = f.mul(self.data[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.mul(factor, self.data[r * cols + j]);
                    self.data[i * cols + j] = f.sub(self.data[i * cols + j], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{ v : self * v = 0 }`.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let (r, pivots) = self.rref();
        let f = self.field;
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| is_pivot[c].is_none()) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Whether the matrix is invertible, together with its rank.
    pub fn is_invertible(&self) -> Result<(bool, usize)> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let rank = self.rank();
        Ok((rank == self.rows, rank))
    }

    /// Inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Mat>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Some(self.clone()));
        }
        let mut aug = Mat::zeros(self.field, n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Mat::identity(self.field, n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        Ok(Some(aug.block(0, n, n, n)))
    }

    /// Basis of the column space, as vectors.
    pub fn column_space(&self) -> Vec<Vec<u64>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{}]{:?}", self.field, self.to_rows())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(u64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Mul for &Mat {
    type Output = Mat;

    fn mul(self, rhs: &Mat) -> Mat {
        self.mat_mul(rhs).expect("conformable matrices")
    }
}

impl Add for &Mat {
    type Output = Mat;

    fn add(self, rhs: &Mat) -> Mat {
        self.try_add(rhs).expect("conformable matrices")
    }
}

impl Sub for &Mat {
    type Output = Mat;

    fn sub(self, rhs: &Mat) -> Mat {
        self.try_sub(rhs).expect("conformable matrices")
    }
}

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        self.scale(self.field.modulus() - 1)
    }
}

/// Mixed-radix enumeration of all coefficient vectors in `F_p^len`, in
/// lexicographic order with the last coordinate varying fastest.
pub(crate) struct CoefficientVectors {
    p: u64,
    current: Vec<u64>,
    done: bool,
}

impl CoefficientVectors {
    pub(crate) fn new(field: Fp, len: usize) -> Self {
        CoefficientVectors {
            p: field.modulus(),
            current: vec![0; len],
            done: false,
        }
    }
}

impl Iterator for CoefficientVectors {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut i = self.current.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.current[i] += 1;
            if self.current[i] < self.p {
                break;
            }
            self.current[i] = 0;
        }
        Some(out)
    }
}

/// `q^exp` as a saturating count.
pub(crate) fn space_size(field: Fp, exp: usize) -> u128 {
    let q = field.modulus() as u128;
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(q);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn rejects_composite_and_out_of_range_moduli() {
        assert_eq!(Fp::new(4), Err(Error::InvalidModulus(4)));
        assert_eq!(Fp::new(1), Err(Error::InvalidModulus(1)));
        assert!(Fp::new(2_147_483_647).is_ok());
        assert!(Fp::new((1 << 31) + 11).is_err());
    }

    #[test]
    fn unit_matrix_products_follow_delta_rule() {
        let k = f(2);
        let e22 = Mat::unit(k, 2, 2, 2);
        let e21 = Mat::unit(k, 2, 2, 1);
        assert_eq!(&e22 * &e21, e21);
        assert!((&e21 * &e22).is_zero());
    }

    #[test]
    fn jordan_square_over_f3() {
        let k = f(3);
        let j = Mat::from_rows(k, &[vec![1, 1], vec![0, 1]]).unwrap();
        let sq = &j * &j;
        assert_eq!(sq, Mat::from_rows(k, &[vec![1, 2], vec![0, 1]]).unwrap());
    }

    #[test]
    fn kernel_examples() {
        assert!(Mat::identity(f(2), 3).kernel_basis().is_empty());
        let ones = Mat::from_rows(f(2), &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(ones.kernel_basis(), vec![vec![1, 1]]);
        assert_eq!(Mat::zeros(f(5), 2, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn invertibility_examples() {
        for p in [2, 3, 5] {
            assert_eq!(Mat::identity(f(p), 4).is_invertible().unwrap(), (true, 4));
        }
        assert_eq!(Mat::unit(f(2), 2, 2, 1).is_invertible().unwrap(), (false, 1));
        let u = Mat::from_rows(f(2), &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(u.is_invertible().unwrap().0);
        assert!(matches!(
            Mat::zeros(f(2), 2, 3).is_invertible(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn mismatches_are_errors() {
        let a = Mat::zeros(f(2), 2, 3);
        assert!(matches!(a.mat_mul(&a), Err(Error::DimensionMismatch(_))));
        let b = Mat::zeros(f(3), 3, 2);
        assert!(matches!(
            a.mat_mul(&b),
            Err(Error::ModulusMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn inverse_of_upper_unitriangular() {
        let k = f(5);
        let a = Mat::from_rows(k, &[vec![1, 2, 3], vec![0, 1, 4], vec![0, 0, 1]]).unwrap();
        let inv = a.inverse().unwrap().unwrap();
        assert!((&a * &inv).is_identity());
        assert!(Mat::unit(k, 3, 1, 1).inverse().unwrap().is_none());
    }

    #[test]
    fn coefficient_vectors_enumerate_lexicographically() {
        let all: Vec<_> = CoefficientVectors::new(f(2), 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(CoefficientVectors::new(f(3), 0).count(), 1);
    }
}
