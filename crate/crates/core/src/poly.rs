//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;

use crate::exactalg::{Field, Matrix};

/// Polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F, nvars: usize) -> Self {
        Self {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        Self::monomial(field, vec![0; nvars], c)
    }

    pub fn monomial(field: &F, exps: Vec<u32>, c: F::Elem) -> Self {
        let mut p = Self::zero(field, exps.len());
        if !field.is_zero(&c) {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn variable(field: &F, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e, field.one())
    }

    /// `sum_j coeffs[j] x_j`
    pub fn linear_form(field: &F, coeffs: &[F::Elem]) -> Self {
        let mut p = Self::zero(field, coeffs.len());
        for (j, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[j] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> F::Elem {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| crate::monomial::total_degree(e))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| crate::monomial::total_degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: F::Elem) {
        assert_eq!(exps.len(), self.nvars);
        let sum = match self.terms.get(&exps) {
            Some(old) => self.field.add(old, &c),
            None => c,
        };
        if self.field.is_zero(&sum) {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(&self.field, self.nvars);
        if self.field.is_zero(c) {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), self.field.mul(v, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(&self.field, self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, self.field.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(&self.field, self.nvars, self.field.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars);
        self.terms.iter().fold(self.field.zero(), |acc, (e, c)| {
            let term = e.iter().zip(point).fold(c.clone(), |t, (&k, x)| {
                self.field.mul(&t, &self.field.pow(x, k as u64))
            });
            self.field.add(&acc, &term)
        })
    }

    /// `x -> f(h x)`: substitutes the linear forms `(h x)_i` for `x_i` and
    /// multiplies out exactly.
    pub fn substitute_linear(&self, h: &Matrix<F::Elem>) -> Self {
        assert_eq!(h.rows(), self.nvars);
        assert_eq!(h.cols(), self.nvars);
        let forms: Vec<Self> = (0..self.nvars)
            .map(|i| Self::linear_form(&self.field, h.row(i)))
            .collect();
        let mut out = Self::zero(&self.field, self.nvars);
        for (e, c) in &self.terms {
            let mut term = Self::constant(&self.field, self.nvars, c.clone());
            for (form, &k) in forms.iter().zip(e) {
                if k > 0 {
                    term = term.mul(&form.pow(k));
                }
            }
            out = out.add(&term);
        }
        out
    }
}

/// Evaluates the monomial `x^a` at `point`.
pub fn eval_monomial<F: Field>(field: &F, a: &[u32], point: &[F::Elem]) -> F::Elem {
    a.iter().zip(point).fold(field.one(), |acc, (&k, x)| {
        field.mul(&acc, &field.pow(x, k as u64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;

    #[test]
    fn substitution_of_diagonal_scales_monomial() {
        let f = PrimeField::new(7).unwrap();
        let x2_cubed = Polynomial::monomial(&f, vec![0, 3], 1);
        let h = Matrix::new(2, 2, vec![3u64, 0, 0, 2]).unwrap();
        // (2 x2)^3 = 8 x2^3 = x2^3 mod 7
        assert_eq!(x2_cubed.substitute_linear(&h), x2_cubed);
    }

    #[test]
    fn substitution_expands_binomials() {
        let f = PrimeField::new(7).unwrap();
        let x1_sq = Polynomial::monomial(&f, vec![2, 0], 1);
        let h = Matrix::new(2, 2, vec![1u64, 1, 0, 1]).unwrap();
        let got = x1_sq.substitute_linear(&h);
        let mut want = Polynomial::zero(&f, 2);
        want.add_term(vec![2, 0], 1);
        want.add_term(vec![1, 1], 2);
        want.add_term(vec![0, 2], 1);
        assert_eq!(got, want);
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let f = PrimeField::new(5).unwrap();
        let x = Polynomial::variable(&f, 2, 0);
        let y = Polynomial::variable(&f, 2, 1);
        let s = x.add(&y);
        let d = s
            .mul(&s)
            .sub(&x.pow(2))
            .sub(&y.pow(2))
            .sub(&x.mul(&y).scale(&2));
        assert!(d.is_zero());
        assert_eq!(s.eval(&[2, 4]), 1);
        assert_eq!(eval_monomial(&f, &[1, 2], &[2, 3]), 3);
    }
}
