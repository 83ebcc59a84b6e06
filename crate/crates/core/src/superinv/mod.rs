//! Invariants of the supergroups `D_{g,x}`.
//!
//! `D` is diagonalizable with character group `X = Z^u x Z/m_1 x ... x Z/m_v`,
//! `g` is a character and `x` an additive functional on `X` given by field
//! scalars `xi` on the free coordinates. The coordinate superalgebra `F[V]`
//! has even generators `f_{j,0}` and odd generators `f_{j,1}`, both of
//! weight `h_j`. A polynomial `sum a_{l,J} f_0^l f_1^J` is invariant iff
//! (1) every monomial in its support has weight `h^l h^J g^|J| = 1` and
//! (2) a linear condition coupling neighbouring coefficients holds.

mod algebra;
mod pairs;
mod system;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagmin::{DiagonalAction, GeneratorRow};
use crate::exactalg::{
    integer_kernel, parse_rational, ExactError, Field, FieldKind, Matrix, PrimeField, Rationals,
};

pub use algebra::{apply_phi, SuperPair, SuperPolynomial};
pub use pairs::{apply_pq, canonical_representative, pairs_of_degree, PqKind};
pub use system::{
    minimal_superdegree, pair_weight, satisfies_defining_equations, super_system,
    superinvariant_basis, SuperSearch, SuperSystem,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperError {
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("torsion moduli must be at least 2, got {0}")]
    InvalidTorsion(u64),
    #[error("torsion modulus {modulus} is divisible by the characteristic {p}")]
    CharacteristicDividesTorsion { modulus: u64, p: u64 },
    #[error("x != 0 requires g^2 = 1")]
    NotAnInvolution,
    #[error("quotient by g needs g to be purely torsion")]
    UnsupportedQuotient,
    #[error("xi entry {0:?} is not defined in this field")]
    BadScalar(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `Z^free_rank x prod Z/torsion_i`, written additively.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharacterGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

impl CharacterGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self, SuperError> {
        if let Some(&m) = torsion.iter().find(|&&m| m < 2) {
            return Err(SuperError::InvalidTorsion(m));
        }
        Ok(Self { free_rank, torsion })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn reduce(&self, mut a: Vec<i64>) -> Vec<i64> {
        for (v, &m) in a[self.free_rank..].iter_mut().zip(&self.torsion) {
            *v = v.rem_euclid(m as i64);
        }
        a
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn scale(&self, a: &[i64], k: i64) -> Vec<i64> {
        self.reduce(a.iter().map(|x| x * k).collect())
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        self.reduce(a.to_vec()).iter().all(|&v| v == 0)
    }

    fn check(&self, a: &[i64]) -> Result<Vec<i64>, SuperError> {
        if a.len() != self.rank() {
            return Err(SuperError::DimensionMismatch {
                expected: self.rank(),
                got: a.len(),
            });
        }
        Ok(self.reduce(a.to_vec()))
    }
}

/// The data `(X, g, x, h_1..h_s)` of a `D_{g,x}`-supermodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAction<F: Field> {
    field: F,
    group: CharacterGroup,
    g: Vec<i64>,
    xi: Vec<F::Elem>,
    weights: Vec<Vec<i64>>,
}

impl<F: Field> SuperAction<F> {
    pub fn new(
        field: F,
        group: CharacterGroup,
        g: Vec<i64>,
        xi: Vec<F::Elem>,
        weights: Vec<Vec<i64>>,
    ) -> Result<Self, SuperError> {
        let g = group.check(&g)?;
        let weights = weights
            .iter()
            .map(|h| group.check(h))
            .collect::<Result<Vec<_>, _>>()?;
        if xi.len() != group.free_rank() {
            return Err(SuperError::DimensionMismatch {
                expected: group.free_rank(),
                got: xi.len(),
            });
        }
        if let FieldKind::Prime { p } = field.kind() {
            if let Some(&m) = group.torsion().iter().find(|&&m| m % p == 0) {
                return Err(SuperError::CharacteristicDividesTorsion { modulus: m, p });
            }
        }
        if xi.iter().any(|c| !field.is_zero(c)) && !group.is_zero(&group.scale(&g, 2)) {
            return Err(SuperError::NotAnInvolution);
        }
        Ok(Self {
            field,
            group,
            g,
            xi,
            weights,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn group(&self) -> &CharacterGroup {
        &self.group
    }

    pub fn g(&self) -> &[i64] {
        &self.g
    }

    pub fn xi(&self) -> &[F::Elem] {
        &self.xi
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// Number of summands `s`.
    pub fn s(&self) -> usize {
        self.weights.len()
    }

    /// `x(h) = sum_i xi_i h_i` over the free coordinates.
    pub fn x_of(&self, h: &[i64]) -> F::Elem {
        self.xi
            .iter()
            .zip(h)
            .fold(self.field.zero(), |acc, (c, &v)| {
                self.field
                    .add(&acc, &self.field.mul(c, &self.field.from_i64(v)))
            })
    }
}

/// Purely even diagonal action of `D` (or of `D'` with characters
/// `X / <g>` when `quotient_by_g`) on the `2s` coordinates
/// `f_{1,0}, f_{1,1}, ..., f_{s,0}, f_{s,1}`.
pub fn even_action<F: Field>(
    act: &SuperAction<F>,
    quotient_by_g: bool,
) -> Result<DiagonalAction, SuperError> {
    let grp = act.group();
    let u = grp.free_rank();
    if quotient_by_g && act.g()[..u].iter().any(|&v| v != 0) {
        return Err(SuperError::UnsupportedQuotient);
    }
    let doubled = |f: &dyn Fn(&[i64]) -> i64| -> Vec<i64> {
        act.weights().iter().flat_map(|h| [f(h), f(h)]).collect()
    };
    let mut rows = Vec::new();
    for c in 0..u {
        rows.push(GeneratorRow {
            modulus: 0,
            weights: doubled(&|h| h[c]),
        });
    }
    let tors = grp.torsion();
    if !quotient_by_g || grp.is_zero(act.g()) {
        for (i, &m) in tors.iter().enumerate() {
            rows.push(GeneratorRow {
                modulus: m,
                weights: doubled(&|h| h[u + i]),
            });
        }
    } else if !tors.is_empty() {
        // Characters of the torsion part vanishing on g: c with
        // sum_i c_i g_i (K/m_i) = 0 mod K. Each one gives a row mod K.
        let k = tors.iter().fold(1u64, |acc, &m| acc.lcm(&m));
        let v = tors.len();
        let system = Matrix::from_fn(1, v + 1, |_, c| {
            if c < v {
                act.g()[u + c] * (k / tors[c]) as i64
            } else {
                k as i64
            }
        });
        for sol in integer_kernel(&system) {
            let chi = |h: &[i64]| -> i64 {
                (0..v)
                    .map(|i| sol[i] * h[u + i] * (k / tors[i]) as i64)
                    .sum::<i64>()
            };
            rows.push(GeneratorRow {
                modulus: k,
                weights: doubled(&chi),
            });
        }
    }
    let n = 2 * act.s();
    let rows = DiagonalAction::new(n, rows)
        .expect("weights have length 2s")
        .rows()
        .iter()
        .filter(|r| r.weights.iter().any(|&w| w != 0))
        .cloned()
        .collect();
    Ok(DiagonalAction::new(n, rows).expect("weights have length 2s"))
}

/// The SuperAction file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuperActionFile {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<u64>,
    pub g: Vec<i64>,
    pub xi: Vec<String>,
    pub weights: Vec<Vec<i64>>,
    pub field: FieldKind,
}

/// A [`SuperAction`] over whichever field its file names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnySuperAction {
    Rational(SuperAction<Rationals>),
    Prime(SuperAction<PrimeField>),
}

fn build<F: Field>(field: F, f: &SuperActionFile) -> Result<SuperAction<F>, SuperError> {
    let xi =
        f.xi.iter()
            .map(|s| {
                let q = parse_rational(s)?;
                field
                    .from_rational(&q)
                    .ok_or_else(|| SuperError::BadScalar(s.clone()))
            })
            .collect::<Result<Vec<_>, SuperError>>()?;
    let group = CharacterGroup::new(f.free_rank, f.torsion.clone())?;
    SuperAction::new(field, group, f.g.clone(), xi, f.weights.clone())
}

impl SuperActionFile {
    pub fn load(&self) -> Result<AnySuperAction, SuperError> {
        match self.field {
            FieldKind::Rational => Ok(AnySuperAction::Rational(build(Rationals, self)?)),
            FieldKind::Prime { p } => Ok(AnySuperAction::Prime(build(PrimeField::new(p)?, self)?)),
        }
    }
}
