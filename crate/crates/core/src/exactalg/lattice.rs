//! Integer lattices: kernels of integer matrices and the triangular
//! (Hermite-style) basis used to parametrize invariant monomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::ExactError;

/// Lower-triangular lattice basis `f_1, ..., f_n`.
///
/// Row `i` is supported on columns `0..=i`, its diagonal entry `m_i` is
/// positive and every entry below a diagonal satisfies `0 <= v_ij < m_i`
/// (column `i` of row `j > i`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularBasis {
    rows: Vec<Vec<i64>>,
}

impl TriangularBasis {
    /// Wraps rows that already satisfy the shape conditions.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, ExactError> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(ExactError::Shape {
                    expected: n,
                    got: r.len(),
                });
            }
            if r[i] <= 0 || r[i + 1..].iter().any(|&v| v != 0) {
                return Err(ExactError::NotTriangular);
            }
            for (k, &v) in r[..i].iter().enumerate() {
                if v < 0 || v >= rows[k][k] {
                    return Err(ExactError::NotTriangular);
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `m_i`.
    pub fn diagonal(&self, i: usize) -> i64 {
        self.rows[i][i]
    }

    /// `v_ij` for `i < j`: the exponent of variable `i` in `f_j`.
    pub fn off_diagonal(&self, i: usize, j: usize) -> i64 {
        assert!(i < j);
        self.rows[j][i]
    }

    /// Total degree `d_i = m_i + sum_{j<i} v_ji` of the monomial `f_i`.
    pub fn degree(&self, i: usize) -> i64 {
        self.rows[i].iter().sum()
    }

    /// Product of the diagonal, i.e. the index of the lattice in `Z^n`.
    pub fn index(&self) -> BigInt {
        (0..self.dim())
            .map(|i| BigInt::from(self.diagonal(i)))
            .product()
    }

    /// Integer coordinates of `x` in this basis, or `None` if `x` is not in
    /// the lattice.
    pub fn coordinates(&self, x: &[i64]) -> Option<Vec<i64>> {
        let n = self.dim();
        if x.len() != n {
            return None;
        }
        let mut rest: Vec<i128> = x.iter().map(|&v| v as i128).collect();
        let mut l = vec![0i64; n];
        for i in (0..n).rev() {
            let m = self.rows[i][i] as i128;
            if rest[i] % m != 0 {
                return None;
            }
            let c = rest[i] / m;
            l[i] = c.try_into().ok()?;
            for (k, v) in rest.iter_mut().enumerate().take(i + 1) {
                *v -= c * self.rows[i][k] as i128;
            }
        }
        Some(l)
    }
}

fn to_big(m: &Matrix<i64>) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

/// Reduces `rows[start..]` at column `col` with Euclid-style unimodular row
/// operations until at most one row has a nonzero entry there; that row is
/// swapped to position `start`. Returns whether a nonzero entry remained.
fn euclid_column(rows: &mut [Vec<BigInt>], start: usize, col: usize) -> bool {
    loop {
        let Some(best) = (start..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()))
        else {
            return false;
        };
        rows.swap(start, best);
        let mut done = true;
        for i in start + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let q = rows[i][col].div_floor(&rows[start][col]);
            let pivot = rows[start].clone();
            for (x, p) in rows[i].iter_mut().zip(&pivot) {
                *x -= &q * p;
            }
            if !rows[i][col].is_zero() {
                done = false;
            }
        }
        if done {
            return true;
        }
    }
}

/// Basis of the integer kernel lattice `{x in Z^c : m x = 0}`.
pub fn integer_kernel(m: &Matrix<i64>) -> Vec<Vec<i64>> {
    let (r, c) = (m.rows(), m.cols());
    // Row-reduce [m^T | I]; rows whose left block vanishes span the kernel.
    let mt = to_big(&m.transpose());
    let mut rows: Vec<Vec<BigInt>> = (0..c)
        .map(|i| {
            let mut row = if r == 0 { Vec::new() } else { mt[i].clone() };
            row.extend((0..c).map(|j| BigInt::from((i == j) as i64)));
            row
        })
        .collect();
    let mut next = 0;
    for col in 0..r {
        if next == rows.len() {
            break;
        }
        if euclid_column(&mut rows, next, col) {
            next += 1;
        }
    }
    rows[next..]
        .iter()
        .map(|row| {
            row[r..]
                .iter()
                .map(|v| v.to_i64().expect("kernel entry fits in i64"))
                .collect()
        })
        .collect()
}

/// Triangular basis of the lattice spanned by the rows of `gens`.
pub fn hnf_triangular(gens: &Matrix<i64>) -> Result<TriangularBasis, ExactError> {
    let n = gens.cols();
    let mut work = to_big(gens);
    let mut basis: Vec<Option<Vec<BigInt>>> = vec![None; n];
    for col in (0..n).rev() {
        if !euclid_column(&mut work, 0, col) {
            return Err(ExactError::RankDeficient);
        }
        let mut row = work.remove(0);
        if row[col].is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
        basis[col] = Some(row);
        work.retain(|r| r.iter().any(|v| !v.is_zero()));
    }
    let mut rows: Vec<Vec<BigInt>> = basis.into_iter().map(|r| r.expect("filled")).collect();
    for j in 0..n {
        for i in (0..j).rev() {
            let q = rows[j][i].div_floor(&rows[i][i]);
            if q.is_zero() {
                continue;
            }
            let fi = rows[i].clone();
            for (x, p) in rows[j].iter_mut().zip(&fi) {
                *x -= &q * p;
            }
        }
    }
    let rows = rows
        .into_iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_i64().ok_or(ExactError::Overflow))
                .collect()
        })
        .collect::<Result<Vec<Vec<i64>>, _>>()?;
    TriangularBasis::from_rows(rows)
}
