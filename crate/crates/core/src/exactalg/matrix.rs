//! Dense matrices and exact elimination over a [`Field`].

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::ExactError;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::Shape {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from nested rows; all rows must share one length.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(ExactError::Shape {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

pub fn identity<F: Field>(field: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
}

pub fn mat_mul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "inner dimensions differ");
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).fold(field.zero(), |acc, k| {
            field.add(&acc, &field.mul(a.get(i, k), b.get(k, j)))
        })
    })
}

pub fn mat_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len(), "dimension mismatch");
    (0..a.rows)
        .map(|i| {
            a.row(i).iter().zip(v).fold(field.zero(), |acc, (x, y)| {
                field.add(&acc, &field.mul(x, y))
            })
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !field.is_zero(m.get(i, c))) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols {
                m.data.swap(pr * m.cols + j, r * m.cols + j);
            }
        }
        let inv = field.inv(m.get(r, c)).expect("pivot is nonzero");
        for j in c..m.cols {
            let v = field.mul(m.get(r, j), &inv);
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || field.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in c..m.cols {
                let v = field.sub(m.get(i, j), &field.mul(&factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(field, &mut work).len()
}

/// Basis of the right kernel `{v : m v = 0}`.
///
/// One vector per free column, in ascending order; each vector is 1 at its
/// own free column and 0 at every other free column.
pub fn nullspace<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = rref(field, &mut work);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); m.cols];
            v[free] = field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(work.get(r, free));
            }
            v
        })
        .collect()
}

pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut work = m.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !field.is_zero(work.get(i, c))) else {
            return field.zero();
        };
        if pr != c {
            for j in 0..n {
                work.data.swap(pr * n + j, c * n + j);
            }
            det = field.neg(&det);
        }
        let pivot = work.get(c, c).clone();
        det = field.mul(&det, &pivot);
        let inv = field.inv(&pivot).expect("pivot is nonzero");
        for i in c + 1..n {
            if field.is_zero(work.get(i, c)) {
                continue;
            }
            let factor = field.mul(work.get(i, c), &inv);
            for j in c..n {
                let v = field.sub(work.get(i, j), &field.mul(&factor, work.get(c, j)));
                work.set(i, j, v);
            }
        }
    }
    det
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            field.one()
        } else {
            field.zero()
        }
    });
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn nullspace_single_equation_mod_7() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::new(1, 2, vec![1u64, 1]).unwrap();
        assert_eq!(nullspace(&f, &m), vec![vec![6, 1]]);
    }

    #[test]
    fn nullspace_zero_matrix_is_standard_basis() {
        let m = Matrix::filled(2, 2, q(0));
        assert_eq!(
            nullspace(&Rationals, &m),
            vec![vec![q(1), q(0)], vec![q(0), q(1)]]
        );
    }

    #[test]
    fn nullspace_rank_one_rational() {
        let m = Matrix::new(2, 2, vec![q(1), q(2), q(2), q(4)]).unwrap();
        assert_eq!(nullspace(&Rationals, &m), vec![vec![q(-2), q(1)]]);
    }

    #[test]
    fn empty_matrix_kernel() {
        let m: Matrix<u64> = Matrix::new(0, 3, vec![]).unwrap();
        let f = PrimeField::new(5).unwrap();
        assert_eq!(nullspace(&f, &m).len(), 3);
    }

    #[test]
    fn inverse_and_determinant() {
        let f = PrimeField::new(7).unwrap();
        let a = Matrix::new(2, 2, vec![1u64, 1, 0, 1]).unwrap();
        let ai = inverse(&f, &a).unwrap();
        assert_eq!(ai, Matrix::new(2, 2, vec![1u64, 6, 0, 1]).unwrap());
        assert_eq!(determinant(&f, &a), 1);
        let singular = Matrix::new(2, 2, vec![1u64, 2, 2, 4]).unwrap();
        assert!(inverse(&f, &singular).is_none());
        assert_eq!(determinant(&f, &singular), 0);
    }

    #[test]
    fn shape_is_checked() {
        assert!(Matrix::new(2, 2, vec![1u64]).is_err());
        assert!(Matrix::from_rows(&[vec![1u64, 2], vec![3]]).is_err());
    }
}
