//! Rational feasibility of `{a >= 0, a != 0, w a = 0}` by Fourier-Motzkin
//! elimination.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Rationals};
use super::matrix::{rref, Matrix};
use super::ExactError;

/// Column limit for the elimination; the inequality count can grow doubly
/// exponentially in the number of eliminated variables.
pub const MAX_FM_COLUMNS: usize = 12;

/// `sum coeffs[i] * y_i <= rhs`
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Ineq {
    coeffs: Vec<BigRational>,
    rhs: BigRational,
}

impl Ineq {
    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// True iff some nonzero rational `a >= 0` satisfies `w a = 0`.
pub fn has_positive_kernel_vector(w: &Matrix<i64>) -> Result<bool, ExactError> {
    let n = w.cols();
    if n == 0 {
        return Ok(false);
    }
    if n > MAX_FM_COLUMNS {
        return Err(ExactError::DimensionTooLarge {
            cols: n,
            max: MAX_FM_COLUMNS,
        });
    }
    let q = Rationals;
    // Equalities w a = 0 and sum a = 1 (the cone is pointed at 0, so
    // normalizing loses nothing), augmented with the right-hand side.
    let mut eq = Matrix::from_fn(w.rows() + 1, n + 1, |i, j| {
        if i < w.rows() {
            if j < n {
                q.from_i64(*w.get(i, j))
            } else {
                q.zero()
            }
        } else {
            q.one()
        }
    });
    let pivots = rref(&q, &mut eq);
    if pivots.last() == Some(&n) {
        return Ok(false);
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut ineqs = Vec::new();
    // Free variables are nonnegative: -y <= 0.
    for k in 0..free.len() {
        let mut coeffs = vec![BigRational::zero(); free.len()];
        coeffs[k] = -BigRational::one();
        ineqs.push(Ineq {
            coeffs,
            rhs: BigRational::zero(),
        });
    }
    // Pivot variables a_p = rhs_p - sum_f c_pf y_f are nonnegative:
    // sum_f c_pf y_f <= rhs_p.
    for (r, _) in pivots.iter().enumerate() {
        let coeffs = free.iter().map(|&f| eq.get(r, f).clone()).collect();
        ineqs.push(Ineq {
            coeffs,
            rhs: eq.get(r, n).clone(),
        });
    }
    for k in 0..free.len() {
        ineqs = eliminate(ineqs, k);
    }
    Ok(ineqs.iter().all(|i| !i.rhs.is_negative()))
}

fn eliminate(ineqs: Vec<Ineq>, k: usize) -> Vec<Ineq> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for i in ineqs {
        if i.coeffs[k].is_positive() {
            pos.push(i);
        } else if i.coeffs[k].is_negative() {
            neg.push(i);
        } else {
            out.push(i);
        }
    }
    for p in &pos {
        for m in &neg {
            let (a, b) = (p.coeffs[k].clone(), -m.coeffs[k].clone());
            let coeffs = p
                .coeffs
                .iter()
                .zip(&m.coeffs)
                .map(|(x, y)| x * &b + y * &a)
                .collect();
            out.push(Ineq {
                coeffs,
                rhs: &p.rhs * &b + &m.rhs * &a,
            });
        }
    }
    let mut out: Vec<Ineq> = out.into_iter().map(Ineq::normalized).collect();
    out.sort();
    out.dedup();
    out
}
