//! Linear-algebra attack: solve for a homogeneous invariant of the public
//! group one degree at a time, then use it to tell the messages apart.

use std::collections::HashMap;

use serde::Serialize;

use crate::exactalg::{nullspace, Field, Matrix};
use crate::monomial::DegreeLex;
use crate::poly::Polynomial;

/// Shape of the linear system solved at one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SystemSize {
    pub degree: u32,
    pub rows: usize,
    pub cols: usize,
}

/// Result of [`find_min_invariant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantSearch<F: Field> {
    Found {
        degree: u32,
        basis: Vec<Polynomial<F>>,
        sizes: Vec<SystemSize>,
    },
    NotFoundUpTo {
        dmax: u32,
        sizes: Vec<SystemSize>,
    },
}

impl<F: Field> InvariantSearch<F> {
    pub fn sizes(&self) -> &[SystemSize] {
        match self {
            InvariantSearch::Found { sizes, .. } | InvariantSearch::NotFoundUpTo { sizes, .. } => {
                sizes
            }
        }
    }

    pub fn degree(&self) -> Option<u32> {
        match self {
            InvariantSearch::Found { degree, .. } => Some(*degree),
            InvariantSearch::NotFoundUpTo { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recovery {
    Index(usize),
    /// Several messages agree with the ciphertext on every basis polynomial.
    Ambiguous(Vec<usize>),
    NoMatch,
}

/// Linear conditions on the coefficients `c_mu` of a degree-`d` form `f`
/// (unknowns in descending lex order of `mu`) expressing `f(h x) = f(x)` for
/// every generator `h`: one row per generator and degree-`d` monomial.
pub fn invariant_system<F: Field>(field: &F, gens: &[Matrix<F::Elem>], d: u32) -> Matrix<F::Elem> {
    let n = gens.first().map_or(0, Matrix::rows);
    let monos: Vec<Vec<u32>> = DegreeLex::new(n, d).collect();
    let index: HashMap<&[u32], usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let cols = monos.len();
    let mut sys = Matrix::filled(gens.len() * cols, cols, field.zero());
    for (gi, h) in gens.iter().enumerate() {
        let base = gi * cols;
        for (ci, mu) in monos.iter().enumerate() {
            let image = Polynomial::monomial(field, mu.clone(), field.one()).substitute_linear(h);
            for (e, c) in image.terms() {
                let r = base + index[e.as_slice()];
                sys.set(r, ci, field.add(sys.get(r, ci), c));
            }
            let r = base + ci;
            sys.set(r, ci, field.sub(sys.get(r, ci), &field.one()));
        }
    }
    sys
}

fn kernel_polynomials<F: Field>(
    field: &F,
    n: usize,
    d: u32,
    sys: &Matrix<F::Elem>,
) -> Vec<Polynomial<F>> {
    let monos: Vec<Vec<u32>> = DegreeLex::new(n, d).collect();
    nullspace(field, sys)
        .into_iter()
        .map(|v| {
            let mut p = Polynomial::zero(field, n);
            for (m, c) in monos.iter().zip(v) {
                p.add_term(m.clone(), c);
            }
            p
        })
        .collect()
}

/// Smallest `d <= dmax` with a nonzero homogeneous invariant, and an
/// echelon-normalized basis of the invariants of that degree.
pub fn find_min_invariant<F: Field>(
    field: &F,
    gens: &[Matrix<F::Elem>],
    dmax: u32,
) -> InvariantSearch<F> {
    let n = gens.first().map_or(0, Matrix::rows);
    let mut sizes = Vec::new();
    for d in 1..=dmax {
        let sys = invariant_system(field, gens, d);
        sizes.push(SystemSize {
            degree: d,
            rows: sys.rows(),
            cols: sys.cols(),
        });
        let basis = kernel_polynomials(field, n, d, &sys);
        if !basis.is_empty() {
            return InvariantSearch::Found {
                degree: d,
                basis,
                sizes,
            };
        }
    }
    InvariantSearch::NotFoundUpTo { dmax, sizes }
}

/// The index `i` whose message agrees with `u` on every basis polynomial.
pub fn recover_plaintext<F: Field>(
    messages: &[Vec<F::Elem>],
    basis: &[Polynomial<F>],
    u: &[F::Elem],
) -> Recovery {
    let target: Vec<F::Elem> = basis.iter().map(|f| f.eval(u)).collect();
    let hits: Vec<usize> = messages
        .iter()
        .enumerate()
        .filter(|(_, v)| basis.iter().zip(&target).all(|(f, t)| f.eval(v) == *t))
        .map(|(i, _)| i)
        .collect();
    match hits.as_slice() {
        [] => Recovery::NoMatch,
        [i] => Recovery::Index(*i),
        _ => Recovery::Ambiguous(hits),
    }
}

/// The attack report document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AttackReport {
    pub found_degree: Option<u32>,
    pub basis: Vec<Vec<BasisTerm>>,
    pub recovered_index: Option<usize>,
    /// `[d, rows, cols]` per solved degree.
    pub system_sizes: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisTerm {
    pub monomial_exponents: Vec<u32>,
    pub coeff: u64,
}

impl AttackReport {
    pub fn new(
        search: &InvariantSearch<crate::exactalg::PrimeField>,
        recovered_index: Option<usize>,
    ) -> Self {
        let basis = match search {
            InvariantSearch::Found { basis, .. } => basis
                .iter()
                .map(|p| {
                    p.terms()
                        .rev()
                        .map(|(e, c)| BasisTerm {
                            monomial_exponents: e.clone(),
                            coeff: *c,
                        })
                        .collect()
                })
                .collect(),
            InvariantSearch::NotFoundUpTo { .. } => Vec::new(),
        };
        AttackReport {
            found_degree: search.degree(),
            basis,
            recovered_index,
            system_sizes: search
                .sizes()
                .iter()
                .map(|s| [s.degree as usize, s.rows, s.cols])
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{identity, PrimeField};

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn h1() -> Matrix<u64> {
        Matrix::new(2, 2, vec![3u64, 1, 0, 2]).unwrap()
    }

    #[test]
    fn degree_one_system_has_trivial_kernel() {
        let sys = invariant_system(&f7(), &[h1()], 1);
        assert_eq!((sys.rows(), sys.cols()), (2, 2));
        assert!(nullspace(&f7(), &sys).is_empty());
    }

    #[test]
    fn identity_generator_gives_zero_system() {
        let f = f7();
        let sys = invariant_system(&f, &[identity(&f, 3)], 2);
        assert_eq!((sys.rows(), sys.cols()), (6, 6));
        assert!(sys.to_rows().iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn diagonal_generator_fixes_x2_cubed() {
        let f = f7();
        let sys = invariant_system(&f, &[Matrix::new(2, 2, vec![3u64, 0, 0, 2]).unwrap()], 3);
        let kernel = nullspace(&f, &sys);
        assert_eq!(kernel, vec![vec![0, 0, 0, 1]]);
    }

    #[test]
    fn worked_attack() {
        let f = f7();
        let search = find_min_invariant(&f, &[h1()], 4);
        let InvariantSearch::Found {
            degree,
            basis,
            sizes,
        } = &search
        else {
            panic!("expected an invariant")
        };
        assert_eq!(*degree, 3);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], Polynomial::monomial(&f, vec![0, 3], 1));
        assert_eq!(
            sizes.iter().map(|s| (s.rows, s.cols)).collect::<Vec<_>>(),
            vec![(2, 2), (3, 3), (4, 4)]
        );
        let msgs = vec![vec![1, 1], vec![1, 3]];
        assert_eq!(recover_plaintext(&msgs, basis, &[4, 2]), Recovery::Index(0));
        assert_eq!(recover_plaintext(&msgs, basis, &[1, 3]), Recovery::Index(1));
        assert!(basis.iter().all(|p| p.total_degree() >= Some(1)));
    }

    #[test]
    fn identity_attack_finds_linear_forms() {
        let f = f7();
        let search = find_min_invariant(&f, &[identity(&f, 3)], 1);
        let InvariantSearch::Found { degree, basis, .. } = search else {
            panic!()
        };
        assert_eq!(degree, 1);
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn scalar_primitive_root_has_no_small_invariant() {
        let f = f7();
        let g = Matrix::new(2, 2, vec![3u64, 0, 0, 3]).unwrap();
        let search = find_min_invariant(&f, &[g], 5);
        assert!(matches!(
            search,
            InvariantSearch::NotFoundUpTo { dmax: 5, .. }
        ));
        assert_eq!(search.sizes().len(), 5);
    }

    #[test]
    fn ambiguous_recovery() {
        let f = f7();
        let basis = vec![Polynomial::monomial(&f, vec![0, 1], 1)];
        let msgs = vec![vec![1, 2], vec![3, 2]];
        assert_eq!(
            recover_plaintext(&msgs, &basis, &[0, 2]),
            Recovery::Ambiguous(vec![0, 1])
        );
        assert_eq!(recover_plaintext(&msgs, &basis, &[0, 5]), Recovery::NoMatch);
    }
}
