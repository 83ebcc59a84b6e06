//! Degree-two invariant of a finite real (here: rational) matrix group by
//! averaging the standard quadratic form over the group.

use std::collections::{BTreeSet, VecDeque};

use num_rational::BigRational;

use crate::exactalg::{determinant, identity, mat_mul, Field, Matrix, Rationals};

use super::DiagError;

/// All elements of the group generated by `gens`, identity first.
pub fn group_closure<F: Field>(
    field: &F,
    gens: &[Matrix<F::Elem>],
    cap: usize,
) -> Result<Vec<Matrix<F::Elem>>, DiagError> {
    let n = gens.first().map_or(0, Matrix::rows);
    for (i, g) in gens.iter().enumerate() {
        if g.rows() != n || g.cols() != n || field.is_zero(&determinant(field, g)) {
            return Err(DiagError::NotInvertible(i));
        }
    }
    let id = identity(field, n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut elems = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mat_mul(field, g, &x);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(DiagError::GroupTooLarge(cap));
                }
                elems.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(elems)
}

/// `Q = sum_{g in G} g^T g`, the Gram matrix of the averaged form
/// `sum_g |g t|^2`. It is symmetric positive definite and `h^T Q h = Q`
/// for every `h` in the group.
pub fn reynolds_quadratic(
    gens: &[Matrix<BigRational>],
    cap: usize,
) -> Result<Matrix<BigRational>, DiagError> {
    let q = Rationals;
    let elems = group_closure(&q, gens, cap)?;
    let n = gens.first().map_or(0, Matrix::rows);
    let mut acc = Matrix::filled(n, n, q.zero());
    for g in &elems {
        let gtg = mat_mul(&q, &g.transpose(), g);
        acc = Matrix::from_fn(n, n, |i, j| q.add(acc.get(i, j), gtg.get(i, j)));
    }
    Ok(acc)
}
