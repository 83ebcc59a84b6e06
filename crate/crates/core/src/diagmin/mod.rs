//! Minimal degrees of invariants of diagonalizable group actions.
//!
//! An action is given by weight rows. A row with modulus `k > 0` is a
//! diagonal generator `diag(z^w_1, ..., z^w_n)` for a primitive `k`-th root
//! of unity `z`; modulus 0 is a torus generator. The monomial `x^a` is
//! invariant iff `w . a = 0 (mod k)` for every row, so the minimal degree
//! is a purely arithmetic quantity.

mod ip;
mod reynolds;

use std::collections::VecDeque;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{has_positive_kernel_vector, ExactError, Matrix, MAX_FM_COLUMNS};
use crate::monomial::DegreeLex;

pub use crate::exactalg::TriangularBasis;
pub use ip::{minimal_degree_ip, triangular_invariant_basis};
pub use reynolds::{group_closure, reynolds_quadratic};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagError {
    #[error("expected {expected} exponents, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid residues: {0}")]
    InvalidResidues(String),
    #[error("action has a torus generator; a finite action is required")]
    NotFinite,
    #[error("group closure exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// One generator: modulus `k >= 0` and its weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRow {
    pub modulus: u64,
    pub weights: Vec<i64>,
}

/// Weight data of a finitely generated diagonalizable group acting on `F^n`.
///
/// Finite-modulus weights are stored reduced to `[0, k)`. Faithfulness of
/// the presentation is not checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ActionFile", into = "ActionFile")]
pub struct DiagonalAction {
    n: usize,
    rows: Vec<GeneratorRow>,
}

#[derive(Serialize, Deserialize)]
struct ActionFile {
    n: usize,
    generators: Vec<GeneratorRow>,
}

impl TryFrom<ActionFile> for DiagonalAction {
    type Error = DiagError;

    fn try_from(f: ActionFile) -> Result<Self, DiagError> {
        DiagonalAction::new(f.n, f.generators)
    }
}

impl From<DiagonalAction> for ActionFile {
    fn from(a: DiagonalAction) -> Self {
        ActionFile {
            n: a.n,
            generators: a.rows,
        }
    }
}

impl DiagonalAction {
    pub fn new(n: usize, rows: Vec<GeneratorRow>) -> Result<Self, DiagError> {
        let rows = rows
            .into_iter()
            .map(|r| {
                if r.weights.len() != n {
                    return Err(DiagError::DimensionMismatch {
                        expected: n,
                        got: r.weights.len(),
                    });
                }
                let weights = match r.modulus {
                    0 => r.weights,
                    k => r.weights.iter().map(|w| w.rem_euclid(k as i64)).collect(),
                };
                Ok(GeneratorRow {
                    modulus: r.modulus,
                    weights,
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { n, rows })
    }

    /// Single finite generator.
    pub fn cyclic(modulus: u64, weights: Vec<i64>) -> Result<Self, DiagError> {
        let n = weights.len();
        Self::new(n, vec![GeneratorRow { modulus, weights }])
    }

    pub fn trivial(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[GeneratorRow] {
        &self.rows
    }

    pub fn is_finite(&self) -> bool {
        self.rows.iter().all(|r| r.modulus > 0)
    }

    /// lcm of the finite moduli (1 for the trivial group).
    pub fn moduli_lcm(&self) -> u64 {
        self.rows
            .iter()
            .filter(|r| r.modulus > 0)
            .fold(1, |acc, r| acc.lcm(&r.modulus))
    }

    pub fn is_invariant_monomial(&self, a: &[u32]) -> Result<bool, DiagError> {
        if a.len() != self.n {
            return Err(DiagError::DimensionMismatch {
                expected: self.n,
                got: a.len(),
            });
        }
        Ok(self.rows.iter().all(|r| {
            let s: i128 = r
                .weights
                .iter()
                .zip(a)
                .map(|(&w, &e)| w as i128 * e as i128)
                .sum();
            match r.modulus {
                0 => s == 0,
                k => s.rem_euclid(k as i128) == 0,
            }
        }))
    }

    fn torus_matrix(&self) -> Option<Matrix<i64>> {
        let torus: Vec<Vec<i64>> = self
            .rows
            .iter()
            .filter(|r| r.modulus == 0)
            .map(|r| r.weights.clone())
            .collect();
        if torus.is_empty() {
            return None;
        }
        Some(Matrix::from_rows(&torus).expect("rows share length n"))
    }

    /// Every finite row rescaled to the common modulus `K = lcm`, so that a
    /// group element is a vector of exponents of one `K`-th root of unity.
    fn common_modulus_rows(&self) -> Result<(u64, Vec<Vec<u64>>), DiagError> {
        if !self.is_finite() {
            return Err(DiagError::NotFinite);
        }
        let k = self.moduli_lcm();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.weights
                    .iter()
                    .map(|&w| (w as u64) * (k / r.modulus) % k)
                    .collect()
            })
            .collect();
        Ok((k, rows))
    }

    /// All group elements as exponent vectors modulo `K = lcm` of the
    /// moduli, by closure; `GroupTooLarge` beyond `cap` elements.
    pub fn group_elements(&self, cap: usize) -> Result<(u64, Vec<Vec<u64>>), DiagError> {
        let (k, gens) = self.common_modulus_rows()?;
        let identity = vec![0u64; self.n];
        let mut seen = std::collections::BTreeSet::from([identity.clone()]);
        let mut order = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y: Vec<u64> = x.iter().zip(g).map(|(a, b)| (a + b) % k).collect();
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(DiagError::GroupTooLarge(cap));
                    }
                    order.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok((k, order))
    }
}

/// Order of the element `diag(z^e_1, ..., z^e_n)` with `z` a primitive
/// `K`-th root of unity, together with its reduced residues `k_i` relative
/// to a primitive root of that order.
pub fn element_order_and_residues(k: u64, exps: &[u64]) -> (u64, Vec<u64>) {
    let g = exps.iter().fold(k, |acc, &e| acc.gcd(&e));
    let order = k / g;
    (order, exps.iter().map(|&e| e / g).collect())
}

/// Outcome of a minimal-degree search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MinDegreeResult {
    Found { degree: u64, witness: Vec<u32> },
    NotFoundUpTo { dmax: u64 },
    Infinite { certificate: String },
}

impl MinDegreeResult {
    pub fn degree(&self) -> Option<u64> {
        match self {
            MinDegreeResult::Found { degree, .. } => Some(*degree),
            _ => None,
        }
    }
}

/// `k_g = min { sum a_i > 0 : sum a_i k_i = 0 (mod k), a_i >= 0 }`.
///
/// Computed as the shortest nonempty closed walk at 0 in the Cayley graph
/// of `Z/k` with steps `k_i`.
pub fn compute_k_g(k: u64, kexp: &[u64]) -> Result<u64, DiagError> {
    if k < 2 {
        return Err(DiagError::InvalidResidues(format!(
            "order {k} must be at least 2"
        )));
    }
    if let Some(bad) = kexp.iter().find(|&&x| x >= k) {
        return Err(DiagError::InvalidResidues(format!(
            "{bad} is not in [0, {k})"
        )));
    }
    if kexp.iter().fold(k, |acc, &x| acc.gcd(&x)) != 1 {
        return Err(DiagError::InvalidResidues(
            "gcd(k_1, ..., k_n, k) != 1".into(),
        ));
    }
    if kexp.contains(&0) {
        return Ok(1);
    }
    let k = k as usize;
    let mut dist = vec![usize::MAX; k];
    dist[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(r) = queue.pop_front() {
        for &step in kexp {
            let next = (r + step as usize) % k;
            if dist[next] == usize::MAX {
                dist[next] = dist[r] + 1;
                queue.push_back(next);
            }
        }
    }
    let best = kexp
        .iter()
        .map(|&step| dist[(k - step as usize) % k])
        .filter(|&d| d != usize::MAX)
        .min()
        .expect("gcd condition makes every residue reachable");
    Ok(best as u64 + 1)
}

/// Degree-by-degree search for the first invariant monomial.
pub fn minimal_degree_bruteforce(act: &DiagonalAction, dmax: u64) -> MinDegreeResult {
    if let Some(torus) = act.torus_matrix() {
        if act.n() <= MAX_FM_COLUMNS {
            let feasible = has_positive_kernel_vector(&torus).expect("column guard checked");
            if !feasible {
                return MinDegreeResult::Infinite {
                    certificate: "torus weights admit no nonzero nonnegative relation".into(),
                };
            }
        }
    }
    for d in 1..=dmax {
        if let Some(witness) = first_invariant_of_degree(act, d as u32) {
            return MinDegreeResult::Found { degree: d, witness };
        }
    }
    MinDegreeResult::NotFoundUpTo { dmax }
}

pub(crate) fn first_invariant_of_degree(act: &DiagonalAction, d: u32) -> Option<Vec<u32>> {
    DegreeLex::new(act.n(), d).find(|a| act.is_invariant_monomial(a).expect("lengths agree"))
}

/// Every invariant exponent vector of total degree `1..=d`, degree first,
/// then descending lex.
pub fn invariant_monomials_up_to_degree(act: &DiagonalAction, d: u32) -> Vec<Vec<u32>> {
    (1..=d)
        .flat_map(|deg| DegreeLex::new(act.n(), deg))
        .filter(|a| act.is_invariant_monomial(a).expect("lengths agree"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(k: u64, w: &[i64]) -> DiagonalAction {
        DiagonalAction::cyclic(k, w.to_vec()).unwrap()
    }

    #[test]
    fn k_g_examples() {
        assert_eq!(compute_k_g(2, &[1]).unwrap(), 2);
        assert_eq!(compute_k_g(3, &[1, 2]).unwrap(), 2);
        assert_eq!(compute_k_g(6, &[1, 2, 3]).unwrap(), 2);
    }

    #[test]
    fn k_g_rejects_bad_residues() {
        assert!(compute_k_g(6, &[2, 4]).is_err());
        assert!(compute_k_g(6, &[7]).is_err());
        assert!(compute_k_g(1, &[0]).is_err());
    }

    #[test]
    fn invariance_examples() {
        let act = cyc(6, &[1, 2]);
        assert!(act.is_invariant_monomial(&[0, 3]).unwrap());
        assert!(!act.is_invariant_monomial(&[1, 1]).unwrap());
        assert!(act.is_invariant_monomial(&[0, 0]).unwrap());
        assert_eq!(
            act.is_invariant_monomial(&[1]),
            Err(DiagError::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn weights_reduce_on_load() {
        let act = cyc(6, &[-1, 8]);
        assert_eq!(act.rows()[0].weights, vec![5, 2]);
        let json = r#"{"n":2,"generators":[{"modulus":3,"weights":[4,-1]}]}"#;
        let parsed: DiagonalAction = serde_json::from_str(json).unwrap();
        assert_eq!(parsed.rows()[0].weights, vec![1, 2]);
        let bad = r#"{"n":3,"generators":[{"modulus":3,"weights":[4,-1]}]}"#;
        assert!(serde_json::from_str::<DiagonalAction>(bad).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            minimal_degree_bruteforce(&cyc(3, &[1, 2]), 10),
            MinDegreeResult::Found {
                degree: 2,
                witness: vec![1, 1]
            }
        );
        assert_eq!(
            minimal_degree_bruteforce(&cyc(6, &[3, 2]), 10),
            MinDegreeResult::Found {
                degree: 2,
                witness: vec![2, 0]
            }
        );
        assert!(matches!(
            minimal_degree_bruteforce(&cyc(0, &[1, 2]), 10),
            MinDegreeResult::Infinite { .. }
        ));
        assert_eq!(
            minimal_degree_bruteforce(&cyc(7, &[1, 1]), 3),
            MinDegreeResult::NotFoundUpTo { dmax: 3 }
        );
    }

    #[test]
    fn torus_with_cancellation_is_finite() {
        let act = DiagonalAction::new(
            3,
            vec![
                GeneratorRow {
                    modulus: 0,
                    weights: vec![1, -1, 0],
                },
                GeneratorRow {
                    modulus: 4,
                    weights: vec![1, 1, 2],
                },
            ],
        )
        .unwrap();
        // x1 x2 has torus weight 0 and finite weight 2; x3^2 works at degree 2.
        assert_eq!(
            minimal_degree_bruteforce(&act, 10),
            MinDegreeResult::Found {
                degree: 2,
                witness: vec![0, 0, 2]
            }
        );
    }

    #[test]
    fn monomial_listing() {
        assert_eq!(
            invariant_monomials_up_to_degree(&cyc(6, &[1, 2]), 3),
            vec![vec![0, 3]]
        );
        assert_eq!(
            invariant_monomials_up_to_degree(&cyc(2, &[1, 1]), 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(
            invariant_monomials_up_to_degree(&DiagonalAction::trivial(2), 1),
            vec![vec![1, 0], vec![0, 1]]
        );
    }

    #[test]
    fn group_enumeration() {
        let act = DiagonalAction::new(
            2,
            vec![
                GeneratorRow {
                    modulus: 2,
                    weights: vec![1, 0],
                },
                GeneratorRow {
                    modulus: 3,
                    weights: vec![0, 1],
                },
            ],
        )
        .unwrap();
        let (k, elems) = act.group_elements(100).unwrap();
        assert_eq!(k, 6);
        assert_eq!(elems.len(), 6);
        assert_eq!(element_order_and_residues(6, &[3, 2]), (6, vec![3, 2]));
        assert_eq!(element_order_and_residues(6, &[0, 2]), (3, vec![0, 1]));
        assert!(matches!(
            act.group_elements(3),
            Err(DiagError::GroupTooLarge(3))
        ));
    }
}
