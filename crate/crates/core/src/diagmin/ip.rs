//! The lattice route to the minimal degree of a finite diagonal action.
//!
//! The invariant exponents of a finite action form a full-rank lattice
//! `L = {a : w_j . a = 0 mod k_j}`. In a triangular basis `f_1..f_n` of `L`,
//! an invariant monomial is `prod f_i^{l_i}` with `l` integral and every
//! exponent `a_k = m_k l_k + sum_{j>k} v_kj l_j` nonnegative; its degree is
//! `sum d_i l_i`. The minimal degree is the smallest positive value of that
//! objective, found here by branch and bound.

use crate::exactalg::{hnf_triangular, integer_kernel, Matrix, TriangularBasis};

use super::{DiagError, DiagonalAction};

/// Triangular basis of the invariant exponent lattice of a finite action.
pub fn triangular_invariant_basis(act: &DiagonalAction) -> Result<TriangularBasis, DiagError> {
    if !act.is_finite() {
        return Err(DiagError::NotFinite);
    }
    let n = act.n();
    let r = act.rows().len();
    // w_j . a + k_j b_j = 0 over the integers, projected to a.
    let system = Matrix::from_fn(r, n + r, |j, c| {
        let row = &act.rows()[j];
        if c < n {
            row.weights[c]
        } else if c - n == j {
            row.modulus as i64
        } else {
            0
        }
    });
    let gens: Vec<Vec<i64>> = integer_kernel(&system)
        .into_iter()
        .map(|v| v[..n].to_vec())
        .collect();
    let gens = Matrix::from_rows(&gens)?;
    Ok(hnf_triangular(&gens)?)
}

/// Minimal positive degree `sum d_i l_i` over admissible `l != 0`.
pub fn minimal_degree_ip(tb: &TriangularBasis) -> u64 {
    let n = tb.dim();
    let mut best: i128 = (0..n).map(|i| tb.degree(i) as i128).min().unwrap_or(0);
    if n == 0 {
        return 0;
    }
    let mut l = vec![0i128; n];
    search(tb, n - 1, 0, &mut l, &mut best);
    best as u64
}

fn search(tb: &TriangularBasis, k: usize, partial: i128, l: &mut [i128], best: &mut i128) {
    let n = tb.dim();
    let m = tb.diagonal(k) as i128;
    let carry: i128 = (k + 1..n)
        .map(|j| tb.off_diagonal(k, j) as i128 * l[j])
        .sum();
    // smallest l_k with a_k = m l_k + carry >= 0
    let mut lk = (-carry).div_euclid(m) + i128::from((-carry).rem_euclid(m) != 0);
    loop {
        let ak = m * lk + carry;
        let total = partial + ak;
        if total >= *best {
            break;
        }
        l[k] = lk;
        if k == 0 {
            if total > 0 {
                *best = total;
            }
        } else {
            search(tb, k - 1, total, l, best);
        }
        lk += 1;
    }
    l[k] = 0;
}
