//! Brute-force coaction expansion for `D_{g,x}`-supermodules.
//!
//! Works in `F[V] (x) F[D_{g,x}]` directly: the right factor is `h` or `h z`
//! with `h` in `X`, products follow
//! `(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd`, and a polynomial is
//! invariant iff its coaction equals `f (x) 1`. Nothing here uses the
//! defining equations or the superderivation.

use std::collections::BTreeMap;

use crate::exactalg::{nullspace, Field, Matrix};
use crate::superinv::{SuperAction, SuperPair, SuperPolynomial};

/// `(l, sorted odd indices, character, z)`.
type Key = (Vec<u32>, Vec<usize>, Vec<i64>, bool);

struct Tensor<F: Field> {
    terms: BTreeMap<Key, F::Elem>,
}

/// Sorts an odd word by adjacent swaps; `None` on a repeated letter.
fn sort_odd(word: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut w = word.to_vec();
    let mut flips = false;
    for i in 0..w.len() {
        for k in (i + 1..w.len()).rev() {
            if w[k - 1] > w[k] {
                w.swap(k - 1, k);
                flips = !flips;
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((w, flips))
}

impl<F: Field> Tensor<F> {
    fn new() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    fn push(&mut self, field: &F, key: Key, c: F::Elem) {
        let sum = match self.terms.get(&key) {
            Some(old) => field.add(old, &c),
            None => c,
        };
        if field.is_zero(&sum) {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    fn mul(&self, other: &Self, act: &SuperAction<F>) -> Self {
        let field = act.field();
        let grp = act.group();
        let mut out = Self::new();
        for ((l1, o1, h1, z1), c1) in &self.terms {
            for ((l2, o2, h2, z2), c2) in &other.terms {
                if *z1 && *z2 {
                    continue;
                }
                let mut word = o1.clone();
                word.extend(o2);
                let Some((odd, mut neg)) = sort_odd(&word) else {
                    continue;
                };
                if *z1 && o2.len() % 2 == 1 {
                    neg = !neg;
                }
                let l = l1.iter().zip(l2).map(|(a, b)| a + b).collect();
                let mut c = field.mul(c1, c2);
                if neg {
                    c = field.neg(&c);
                }
                out.push(field, (l, odd, grp.add(h1, h2), *z1 || *z2), c);
            }
        }
        out
    }
}

fn generator_coaction<F: Field>(act: &SuperAction<F>, j: usize, odd: bool) -> Tensor<F> {
    let field = act.field();
    let grp = act.group();
    let s = act.s();
    let h = act.weights()[j].clone();
    let hg = grp.add(&h, act.g());
    let mut e = vec![0u32; s];
    e[j] = 1;
    let even = (e, vec![]);
    let oddg = (vec![0u32; s], vec![j]);
    let mut t = Tensor::new();
    if odd {
        t.push(field, (even.0, even.1, h, true), field.one());
        t.push(field, (oddg.0, oddg.1, hg, false), field.one());
    } else {
        t.push(field, (even.0, even.1, h.clone(), false), field.one());
        t.push(field, (oddg.0, oddg.1, hg, true), act.x_of(&h));
    }
    t
}

fn monomial_coaction<F: Field>(act: &SuperAction<F>, pair: &SuperPair) -> Tensor<F> {
    let field = act.field();
    let mut acc = Tensor::new();
    acc.push(
        field,
        (vec![0; act.s()], vec![], act.group().zero(), false),
        field.one(),
    );
    for (j, &e) in pair.l.iter().enumerate() {
        for _ in 0..e {
            acc = acc.mul(&generator_coaction(act, j, false), act);
        }
    }
    for &j in &pair.odd {
        acc = acc.mul(&generator_coaction(act, j, true), act);
    }
    acc
}

/// `tau(f) - f (x) 1`.
fn defect<F: Field>(act: &SuperAction<F>, p: &SuperPolynomial<F>) -> Tensor<F> {
    let field = act.field();
    let mut out = Tensor::new();
    for (pair, c) in p.terms() {
        for (k, v) in monomial_coaction(act, pair).terms {
            out.push(field, k, field.mul(&v, c));
        }
        let unit = (pair.l.clone(), pair.odd.clone(), act.group().zero(), false);
        out.push(field, unit, field.neg(c));
    }
    out
}

pub fn is_invariant<F: Field>(act: &SuperAction<F>, p: &SuperPolynomial<F>) -> bool {
    defect(act, p).terms.is_empty()
}

/// Every pair of degree `d`, enumerated independently of the solver.
fn all_pairs(s: usize, d: u32) -> Vec<SuperPair> {
    fn rec(
        j: usize,
        left: u32,
        s: usize,
        l: &mut Vec<u32>,
        odd: &mut Vec<usize>,
        out: &mut Vec<SuperPair>,
    ) {
        if j == s {
            if left == 0 {
                out.push(SuperPair::new(l.clone(), odd.clone()));
            }
            return;
        }
        for e in 0..=left {
            l.push(e);
            rec(j + 1, left - e, s, l, odd, out);
            if e < left {
                odd.push(j);
                rec(j + 1, left - e - 1, s, l, odd, out);
                odd.pop();
            }
            l.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, s, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Dimension of the degree-`d` superinvariants, over every pair of the degree.
pub fn invariant_dimension<F: Field>(act: &SuperAction<F>, d: u32) -> usize {
    let field = act.field();
    let pairs = all_pairs(act.s(), d);
    let columns: Vec<Tensor<F>> = pairs
        .iter()
        .map(|p| defect(act, &SuperPolynomial::term(field, p.clone(), field.one())))
        .collect();
    let mut rows: BTreeMap<&Key, usize> = BTreeMap::new();
    for col in &columns {
        for k in col.terms.keys() {
            let next = rows.len();
            rows.entry(k).or_insert(next);
        }
    }
    let mut m = Matrix::filled(rows.len().max(1), pairs.len(), field.zero());
    for (c, col) in columns.iter().enumerate() {
        for (k, v) in &col.terms {
            m.set(rows[k], c, v.clone());
        }
    }
    nullspace(field, &m).len()
}
