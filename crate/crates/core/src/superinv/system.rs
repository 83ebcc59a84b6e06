//! Linear system for superinvariants of a fixed degree.

use std::collections::BTreeMap;

use super::{apply_phi, pairs_of_degree, SuperAction, SuperPair, SuperPolynomial};
use crate::exactalg::{nullspace, Field, Matrix};

/// Weight `sum_j l_j h_j + sum_{j in J} h_j + |J| g` of `f_0^l f_1^J`.
pub fn pair_weight<F: Field>(act: &SuperAction<F>, pair: &SuperPair) -> Vec<i64> {
    let grp = act.group();
    let mut w = grp.scale(act.g(), pair.odd.len() as i64);
    for (j, h) in act.weights().iter().enumerate() {
        let mult = i64::from(pair.l[j]) + i64::from(pair.contains(j));
        if mult > 0 {
            w = grp.add(&w, &grp.scale(h, mult));
        }
    }
    w
}

/// Unknowns are the weight-zero pairs of the degree; each row is the
/// coefficient of one pair in `phi` of the candidate.
#[derive(Clone, Debug)]
pub struct SuperSystem<F: Field> {
    pub unknowns: Vec<SuperPair>,
    pub equations: Vec<SuperPair>,
    pub matrix: Matrix<F::Elem>,
}

pub fn super_system<F: Field>(act: &SuperAction<F>, d: u32) -> SuperSystem<F> {
    let f = act.field();
    let unknowns: Vec<SuperPair> = pairs_of_degree(act.s(), d)
        .into_iter()
        .filter(|p| act.group().is_zero(&pair_weight(act, p)))
        .collect();
    let xs: Vec<F::Elem> = act.weights().iter().map(|h| act.x_of(h)).collect();
    let sign = |k: usize, c: F::Elem| if k % 2 == 1 { f.neg(&c) } else { c };

    let mut entries: BTreeMap<SuperPair, Vec<(usize, F::Elem)>> = BTreeMap::new();
    for (col, u) in unknowns.iter().enumerate() {
        for j in 0..act.s() {
            if u.contains(j) {
                let mut l = u.l.clone();
                l[j] += 1;
                let odd = u.odd.iter().copied().filter(|&i| i != j).collect();
                let c = sign(u.greater_than(j), f.one());
                entries
                    .entry(SuperPair { l, odd })
                    .or_default()
                    .push((col, c));
            } else if u.l[j] > 0 && !f.is_zero(&xs[j]) {
                let mut l = u.l.clone();
                l[j] -= 1;
                let target = SuperPair::new(l, u.odd.iter().copied().chain([j]).collect());
                let c = f.mul(&f.from_i64(i64::from(u.l[j])), &xs[j]);
                let c = sign(target.greater_than(j), c);
                entries.entry(target).or_default().push((col, c));
            }
        }
    }
    let equations: Vec<SuperPair> = entries.keys().cloned().collect();
    let mut matrix = Matrix::filled(equations.len(), unknowns.len(), f.zero());
    for (row, list) in entries.values().enumerate() {
        for (col, c) in list {
            let sum = f.add(matrix.get(row, *col), c);
            matrix.set(row, *col, sum);
        }
    }
    SuperSystem {
        unknowns,
        equations,
        matrix,
    }
}

/// Basis of the degree-`d` superinvariants.
pub fn superinvariant_basis<F: Field>(act: &SuperAction<F>, d: u32) -> Vec<SuperPolynomial<F>> {
    let f = act.field();
    let sys = super_system(act, d);
    if sys.unknowns.is_empty() {
        return Vec::new();
    }
    nullspace(f, &sys.matrix)
        .into_iter()
        .map(|v| {
            let mut p = SuperPolynomial::zero(f, act.s());
            for (pair, c) in sys.unknowns.iter().zip(v) {
                p.add_term(pair.clone(), c);
            }
            p
        })
        .collect()
}

/// Checks weight-zero support and `phi(p) = 0` directly.
pub fn satisfies_defining_equations<F: Field>(
    act: &SuperAction<F>,
    p: &SuperPolynomial<F>,
) -> bool {
    p.terms()
        .all(|(pair, _)| act.group().is_zero(&pair_weight(act, pair)))
        && apply_phi(act, p).is_zero()
}

#[derive(Clone, Debug)]
pub enum SuperSearch<F: Field> {
    Found {
        degree: u32,
        basis: Vec<SuperPolynomial<F>>,
    },
    NotFoundUpTo {
        dmax: u32,
    },
}

impl<F: Field> SuperSearch<F> {
    pub fn degree(&self) -> Option<u32> {
        match self {
            SuperSearch::Found { degree, .. } => Some(*degree),
            SuperSearch::NotFoundUpTo { .. } => None,
        }
    }
}

/// Smallest positive degree carrying a nonzero superinvariant.
pub fn minimal_superdegree<F: Field>(act: &SuperAction<F>, dmax: u32) -> SuperSearch<F> {
    for d in 1..=dmax {
        let basis = superinvariant_basis(act, d);
        if !basis.is_empty() {
            return SuperSearch::Found { degree: d, basis };
        }
    }
    SuperSearch::NotFoundUpTo { dmax }
}
