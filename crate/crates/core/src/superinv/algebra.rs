//! The free supercommutative algebra on `f_{j,0}` (even) and `f_{j,1}` (odd).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::SuperAction;
use crate::exactalg::Field;

/// Monomial `f_0^l f_1^J`: even exponents `l` and a sorted set `J` of odd
/// indices, both 0-based. Ordered by total degree, then `l`, then `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperPair {
    pub l: Vec<u32>,
    pub odd: Vec<usize>,
}

impl SuperPair {
    pub fn new(l: Vec<u32>, mut odd: Vec<usize>) -> Self {
        odd.sort_unstable();
        odd.dedup();
        Self { l, odd }
    }

    pub fn s(&self) -> usize {
        self.l.len()
    }

    pub fn degree(&self) -> u64 {
        self.l.iter().map(|&v| u64::from(v)).sum::<u64>() + self.odd.len() as u64
    }

    pub fn contains(&self, j: usize) -> bool {
        self.odd.binary_search(&j).is_ok()
    }

    pub fn is_odd(&self) -> bool {
        self.odd.len() % 2 == 1
    }

    /// Number of elements of `J` greater than `j`.
    pub fn greater_than(&self, j: usize) -> usize {
        self.odd.iter().filter(|&&i| i > j).count()
    }
}

impl Ord for SuperPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.l.cmp(&other.l))
            .then_with(|| self.odd.cmp(&other.odd))
    }
}

impl PartialOrd for SuperPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sign of `f_1^A f_1^B` relative to `f_1^{A u B}`; `None` if they overlap.
fn odd_product_sign(a: &[usize], b: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut k) = (0, 0);
    let mut swaps = 0usize;
    while i < a.len() || k < b.len() {
        if k == b.len() || (i < a.len() && a[i] < b[k]) {
            merged.push(a[i]);
            i += 1;
        } else if i == a.len() || b[k] < a[i] {
            // b[k] moves past the remaining a[i..].
            swaps += a.len() - i;
            merged.push(b[k]);
            k += 1;
        } else {
            return None;
        }
    }
    Some((merged, swaps % 2 == 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPolynomial<F: Field> {
    field: F,
    s: usize,
    terms: BTreeMap<SuperPair, F::Elem>,
}

impl<F: Field> SuperPolynomial<F> {
    pub fn zero(field: &F, s: usize) -> Self {
        Self {
            field: field.clone(),
            s,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(field: &F, pair: SuperPair, c: F::Elem) -> Self {
        let mut p = Self::zero(field, pair.s());
        p.add_term(pair, c);
        p
    }

    pub fn one(field: &F, s: usize) -> Self {
        Self::term(field, SuperPair::new(vec![0; s], vec![]), field.one())
    }

    pub fn even_generator(field: &F, s: usize, j: usize) -> Self {
        let mut l = vec![0; s];
        l[j] = 1;
        Self::term(field, SuperPair::new(l, vec![]), field.one())
    }

    pub fn odd_generator(field: &F, s: usize, j: usize) -> Self {
        Self::term(field, SuperPair::new(vec![0; s], vec![j]), field.one())
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn s(&self) -> usize {
        self.s
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SuperPair, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, pair: &SuperPair) -> F::Elem {
        self.terms
            .get(pair)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, pair: SuperPair, c: F::Elem) {
        assert_eq!(pair.s(), self.s, "pair has the wrong number of summands");
        let f = &self.field;
        let sum = match self.terms.get(&pair) {
            Some(old) => f.add(old, &c),
            None => c,
        };
        if f.is_zero(&sum) {
            self.terms.remove(&pair);
        } else {
            self.terms.insert(pair, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(&self.field, self.s);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), self.field.mul(v, c));
        }
        out
    }

    /// Product in the supercommutative algebra.
    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f, self.s);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let Some((odd, negative)) = odd_product_sign(&a.odd, &b.odd) else {
                    continue;
                };
                let l = a.l.iter().zip(&b.l).map(|(x, y)| x + y).collect();
                let mut c = f.mul(ca, cb);
                if negative {
                    c = f.neg(&c);
                }
                out.add_term(SuperPair { l, odd }, c);
            }
        }
        out
    }

    /// Total degree when homogeneous, `None` otherwise or when zero.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degs = self.terms.keys().map(SuperPair::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }
}

/// The right superderivation `phi` with `phi(f_{j,1}) = f_{j,0}` and
/// `phi(f_{j,0}) = x(h_j) f_{j,1}`. A polynomial is invariant iff it has
/// weight-zero support and `phi` kills it.
pub fn apply_phi<F: Field>(act: &SuperAction<F>, p: &SuperPolynomial<F>) -> SuperPolynomial<F> {
    let f = act.field();
    let s = act.s();
    let images: Vec<(SuperPolynomial<F>, SuperPolynomial<F>)> = (0..s)
        .map(|j| {
            let even = SuperPolynomial::odd_generator(f, s, j).scale(&act.x_of(&act.weights()[j]));
            (even, SuperPolynomial::even_generator(f, s, j))
        })
        .collect();
    let mut out = SuperPolynomial::zero(f, s);
    for (pair, c) in p.terms() {
        // Word: even letters in index order, then the odd ones.
        let mut word: Vec<(usize, bool)> = Vec::new();
        for (j, &e) in pair.l.iter().enumerate() {
            word.extend(std::iter::repeat_n((j, false), e as usize));
        }
        word.extend(pair.odd.iter().map(|&j| (j, true)));
        let letter = |&(j, odd): &(usize, bool)| {
            if odd {
                SuperPolynomial::odd_generator(f, s, j)
            } else {
                SuperPolynomial::even_generator(f, s, j)
            }
        };
        for i in 0..word.len() {
            let suffix_odd = word[i + 1..].iter().filter(|w| w.1).count();
            let mut prod = SuperPolynomial::term(f, SuperPair::new(vec![0; s], vec![]), c.clone());
            for w in &word[..i] {
                prod = prod.mul(&letter(w));
            }
            let (j, odd) = word[i];
            prod = prod.mul(if odd { &images[j].1 } else { &images[j].0 });
            for w in &word[i + 1..] {
                prod = prod.mul(&letter(w));
            }
            if suffix_odd % 2 == 1 {
                prod = prod.scale(&f.neg(&f.one()));
            }
            out = out.add(&prod);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{PrimeField, Rationals};
    use crate::superinv::CharacterGroup;

    fn pair(l: &[u32], odd: &[usize]) -> SuperPair {
        SuperPair::new(l.to_vec(), odd.to_vec())
    }

    #[test]
    fn odd_generators_anticommute() {
        let f = PrimeField::new(7).unwrap();
        let a = SuperPolynomial::odd_generator(&f, 2, 0);
        let b = SuperPolynomial::odd_generator(&f, 2, 1);
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        assert_eq!(ab.add(&ba), SuperPolynomial::zero(&f, 2));
        assert!(a.mul(&a).is_zero());
        assert_eq!(ab.coeff(&pair(&[0, 0], &[0, 1])), 1);
        assert_eq!(ba.coeff(&pair(&[0, 0], &[0, 1])), 6);
    }

    #[test]
    fn sign_counts_inversions() {
        assert_eq!(
            odd_product_sign(&[1, 3], &[0, 2]),
            Some((vec![0, 1, 2, 3], true))
        );
        assert_eq!(
            odd_product_sign(&[0, 2], &[1, 3]),
            Some((vec![0, 1, 2, 3], true))
        );
        assert_eq!(
            odd_product_sign(&[2, 3], &[0, 1]),
            Some((vec![0, 1, 2, 3], false))
        );
        assert_eq!(
            odd_product_sign(&[2], &[0, 1]),
            Some((vec![0, 1, 2], false))
        );
        assert_eq!(odd_product_sign(&[1], &[1]), None);
    }

    #[test]
    fn pair_order() {
        let mut v = vec![
            pair(&[0, 1], &[0]),
            pair(&[1, 0], &[]),
            pair(&[0, 0], &[0, 1]),
            pair(&[0, 2], &[]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                pair(&[1, 0], &[]),
                pair(&[0, 0], &[0, 1]),
                pair(&[0, 1], &[0]),
                pair(&[0, 2], &[])
            ]
        );
    }

    #[test]
    fn phi_on_small_products() {
        let q = Rationals;
        let act = SuperAction::new(
            q,
            CharacterGroup::new(1, vec![]).unwrap(),
            vec![0],
            vec![q.from_i64(1)],
            vec![vec![1], vec![-1]],
        )
        .unwrap();
        // phi(f_{1,0} f_{2,1}) = f_{1,0} f_{2,0} - x(h_1) f_{1,1} f_{2,1}
        let p = SuperPolynomial::term(&q, pair(&[1, 0], &[1]), q.one());
        let got = apply_phi(&act, &p);
        let mut want = SuperPolynomial::term(&q, pair(&[1, 1], &[]), q.one());
        want.add_term(pair(&[0, 0], &[0, 1]), q.from_i64(-1));
        assert_eq!(got, want);
        let mut minus = p.clone();
        minus.add_term(pair(&[0, 1], &[0]), q.from_i64(-1));
        assert!(apply_phi(&act, &minus).is_zero());
        let mut plus = p.clone();
        plus.add_term(pair(&[0, 1], &[0]), q.one());
        assert!(!apply_phi(&act, &plus).is_zero());
    }
}
