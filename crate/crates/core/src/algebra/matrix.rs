//! Dense matrices over an arbitrary exact scalar type.

use num::{BigInt, BigRational, One, Zero};
use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Mat {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
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

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Submatrix with one row and one column removed.
    pub fn minor_matrix(&self, del_row: usize, del_col: usize) -> Mat<T> {
        assert!(del_row < self.rows && del_col < self.cols);
        Mat::from_fn(self.rows - 1, self.cols - 1, |r, c| {
            let rr = if r < del_row { r } else { r + 1 };
            let cc = if c < del_col { c } else { c + 1 };
            self[(rr, cc)].clone()
        })
    }

    /// Submatrix on the given row and column index sets (in the given order).
    pub fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> Mat<T> {
        Mat::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self[(row_idx[r], col_idx[c])].clone()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn zeroes(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| T::zero())
    }
}

/// Plain cubic matrix product; fine at the sizes used here.
pub fn mat_mul<T>(a: &Mat<T>, b: &Mat<T>) -> Mat<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
{
    assert_eq!(a.cols, b.rows, "dimension mismatch in mat_mul");
    Mat::from_fn(a.rows, b.cols, |r, c| {
        let mut acc = T::zero();
        for k in 0..a.cols {
            acc = acc + a[(r, k)].clone() * b[(k, c)].clone();
        }
        acc
    })
}

pub fn mat_add<T>(a: &Mat<T>, b: &Mat<T>) -> Mat<T>
where
    T: Clone + std::ops::Add<Output = T>,
{
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Mat::from_fn(a.rows, a.cols, |r, c| a[(r, c)].clone() + b[(r, c)].clone())
}

pub fn mat_sub<T>(a: &Mat<T>, b: &Mat<T>) -> Mat<T>
where
    T: Clone + std::ops::Sub<Output = T>,
{
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Mat::from_fn(a.rows, a.cols, |r, c| a[(r, c)].clone() - b[(r, c)].clone())
}

pub fn mat_scale<T>(a: &Mat<T>, s: &T) -> Mat<T>
where
    T: Clone + std::ops::Mul<Output = T>,
{
    a.map(|v| v.clone() * s.clone())
}

pub type IntMat = Mat<BigInt>;
pub type RatMat = Mat<BigRational>;

#[cfg(test)]
mod tests {
    use super::*;

    fn imat(rows: usize, cols: usize, vals: &[i64]) -> IntMat {
        Mat::from_fn(rows, cols, |r, c| BigInt::from(vals[r * cols + c]))
    }

    #[test]
    fn product_against_hand_computation() {
        let a = imat(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = imat(3, 2, &[7, 8, 9, 10, 11, 12]);
        let p = mat_mul(&a, &b);
        assert_eq!(p, imat(2, 2, &[58, 64, 139, 154]));
    }

    #[test]
    fn minor_and_select_agree() {
        let a = imat(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let m = a.minor_matrix(1, 0);
        assert_eq!(m, a.select(&[0, 2], &[1, 2]));
        assert_eq!(m, imat(2, 2, &[2, 3, 8, 9]));
    }

    #[test]
    fn transpose_involution() {
        let a = imat(2, 3, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(a.transpose().transpose(), a);
    }
}
