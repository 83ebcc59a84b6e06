//! Public-key cryptosystem over F_p built on a secret diagonalizable group.
//!
//! Alice keeps a diagonal group `G`, an invariant monomial `f` of `G` and a
//! matrix `a`. She publishes messages `v_i` separated by `x -> f(a x)` and
//! generators `h_i = a^-1 g_i a` of the conjugated group. Bob sends
//! `u = h v_i` for a random word `h` in the `h_i`; Alice recovers `i` from
//! `f(a u) = f(a v_i)`.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagmin::{triangular_invariant_basis, DiagError, DiagonalAction, GeneratorRow};
use crate::exactalg::{identity, inverse, mat_mul, mat_vec, ExactError, Field, Matrix, PrimeField};
use crate::monomial::DegreeLex;
use crate::poly::eval_monomial;
use crate::rng::{seeded, SeededRng};

/// Resample limit for message vectors, per message.
pub const MESSAGE_ATTEMPTS_PER_MESSAGE: usize = 64;
/// Resample limit for the public generator set.
pub const GENERATOR_ROUNDS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CryptoError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid key: {0}")]
    InvalidKey(String),
    #[error("could not find {needed} separated messages in {attempts} attempts")]
    SeparationFailed { needed: usize, attempts: usize },
    #[error("no invariant monomial of degree {floor}..={cap}")]
    NoInvariant { floor: u32, cap: u32 },
    #[error("public generators did not generate the secret group in {0} rounds")]
    SubgroupNotGenerated(usize),
    #[error("message index {index} out of range (s = {count})")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("ciphertext does not decrypt to any message")]
    NoMatch,
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Diag(#[from] DiagError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Variant {
    /// Group and invariant are published.
    One,
    /// Group and invariant stay secret.
    Two,
}

impl TryFrom<u8> for Variant {
    type Error = String;

    fn try_from(v: u8) -> Result<Self, String> {
        match v {
            1 => Ok(Variant::One),
            2 => Ok(Variant::Two),
            other => Err(format!("variant must be 1 or 2, got {other}")),
        }
    }
}

impl From<Variant> for u8 {
    fn from(v: Variant) -> u8 {
        match v {
            Variant::One => 1,
            Variant::Two => 2,
        }
    }
}

fn default_min_degree() -> u32 {
    1
}

fn default_degree_cap() -> u32 {
    32
}

/// Key generation parameters (the keygen config file).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CryptoConfig {
    pub p: u64,
    /// Secret group; every modulus must divide `p - 1`.
    pub action: DiagonalAction,
    /// Number of messages `s`.
    pub messages: usize,
    /// Number of public generators `m`.
    pub generators: usize,
    /// Word length used to build each public generator.
    pub word_length: usize,
    pub variant: Variant,
    /// Lowest degree allowed for the secret invariant.
    #[serde(default = "default_min_degree")]
    pub min_degree: u32,
    #[serde(default = "default_degree_cap")]
    pub degree_cap: u32,
}

impl CryptoConfig {
    pub fn validate(&self) -> Result<PrimeField, CryptoError> {
        let field = PrimeField::new(self.p)?;
        let bad = |m: String| Err(CryptoError::InvalidConfig(m));
        if self.action.n() == 0 {
            return bad("dimension must be positive".into());
        }
        for row in self.action.rows() {
            if row.modulus == 0 || (self.p - 1) % row.modulus != 0 {
                return bad(format!(
                    "modulus {} does not divide p-1 = {}",
                    row.modulus,
                    self.p - 1
                ));
            }
        }
        if self.messages < 2 {
            return bad("need at least two messages".into());
        }
        if self.generators == 0 || self.word_length == 0 {
            return bad("generator count and word length must be positive".into());
        }
        Ok(field)
    }
}

/// One letter of a group word: generator index, optionally inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PublicKey {
    pub p: u64,
    pub n: usize,
    pub generators: Vec<Matrix<u64>>,
    pub messages: Vec<Vec<u64>>,
    pub variant: Variant,
    /// Published with variant one.
    pub group: Option<DiagonalAction>,
    /// Published with variant one.
    pub invariant: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrivateKey {
    pub p: u64,
    pub n: usize,
    pub a: Matrix<u64>,
    pub invariant: Vec<u32>,
    pub secret_action: DiagonalAction,
    /// `f(a v_i)` for every message.
    pub table: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ciphertext {
    pub u: Vec<u64>,
}

impl PrivateKey {
    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated on construction")
    }

    /// `diag(z_j^w_j1, ..., z_j^w_jn)` for each secret row.
    pub fn secret_generators(&self) -> Vec<Matrix<u64>> {
        secret_generators(&self.field(), &self.secret_action)
    }
}

impl PublicKey {
    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated on construction")
    }
}

/// Realizes each finite row as a diagonal matrix over F_p using the root
/// of unity `gamma^((p-1)/k)`, `gamma` the smallest primitive root.
pub fn secret_generators(field: &PrimeField, action: &DiagonalAction) -> Vec<Matrix<u64>> {
    let p = field.modulus();
    let gamma = field.primitive_root();
    let n = action.n();
    let rows: Vec<GeneratorRow> = if action.rows().is_empty() {
        vec![GeneratorRow {
            modulus: 1,
            weights: vec![0; n],
        }]
    } else {
        action.rows().to_vec()
    };
    rows.iter()
        .map(|row| {
            let lambda = field.pow(&gamma, (p - 1) / row.modulus);
            Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    field.pow(&lambda, row.weights[i] as u64)
                } else {
                    0
                }
            })
        })
        .collect()
}

/// True iff `f(a v_i)` are pairwise distinct.
pub fn separates(field: &PrimeField, f: &[u32], a: &Matrix<u64>, msgs: &[Vec<u64>]) -> bool {
    let mut values: Vec<u64> = msgs
        .iter()
        .map(|v| eval_monomial(field, f, &mat_vec(field, a, v)))
        .collect();
    values.sort_unstable();
    values.windows(2).all(|w| w[0] != w[1])
}

fn word_product(
    field: &PrimeField,
    gens: &[Matrix<u64>],
    inverses: &[Matrix<u64>],
    word: &[Letter],
) -> Matrix<u64> {
    let n = gens[0].rows();
    word.iter().fold(identity(field, n), |acc, l| {
        let g = if l.inverse {
            &inverses[l.generator]
        } else {
            &gens[l.generator]
        };
        mat_mul(field, &acc, g)
    })
}

fn random_word(rng: &mut SeededRng, generators: usize, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| Letter {
            generator: rng.random_range(0..generators),
            inverse: rng.random_bool(0.5),
        })
        .collect()
}

fn inverses(field: &PrimeField, gens: &[Matrix<u64>]) -> Result<Vec<Matrix<u64>>, CryptoError> {
    gens.iter()
        .map(|g| {
            inverse(field, g).ok_or_else(|| CryptoError::InvalidKey("generator is singular".into()))
        })
        .collect()
}

/// The diagonal action generated by words in the secret rows, on the
/// common modulus of those rows.
fn word_action(action: &DiagonalAction, words: &[Vec<Letter>]) -> DiagonalAction {
    let k = action.moduli_lcm();
    let rows = words
        .iter()
        .map(|w| {
            let mut weights = vec![0i64; action.n()];
            for l in w {
                let row = &action.rows()[l.generator];
                let scale = (k / row.modulus) as i64;
                for (acc, &wt) in weights.iter_mut().zip(&row.weights) {
                    let step = wt * scale;
                    *acc += if l.inverse { -step } else { step };
                }
            }
            GeneratorRow {
                modulus: k,
                weights,
            }
        })
        .collect();
    DiagonalAction::new(action.n(), rows).expect("weights have length n")
}

fn first_invariant_from(action: &DiagonalAction, floor: u32, cap: u32) -> Option<Vec<u32>> {
    (floor.max(1)..=cap).find_map(|d| {
        DegreeLex::new(action.n(), d)
            .find(|a| action.is_invariant_monomial(a).expect("lengths agree"))
    })
}

/// Generates a key pair; deterministic for a fixed seed.
pub fn keygen(cfg: &CryptoConfig, seed: u64) -> Result<(PublicKey, PrivateKey), CryptoError> {
    let field = cfg.validate()?;
    let p = cfg.p;
    let n = cfg.action.n();
    let f = first_invariant_from(&cfg.action, cfg.min_degree, cfg.degree_cap).ok_or(
        CryptoError::NoInvariant {
            floor: cfg.min_degree,
            cap: cfg.degree_cap,
        },
    )?;
    let mut rng = seeded(seed);

    let a = loop {
        let cand = Matrix::from_fn(n, n, |_, _| rng.random_range(0..p));
        if inverse(&field, &cand).is_some() {
            break cand;
        }
    };

    let attempts = MESSAGE_ATTEMPTS_PER_MESSAGE * cfg.messages;
    let mut messages: Vec<Vec<u64>> = Vec::with_capacity(cfg.messages);
    let mut table: Vec<u64> = Vec::with_capacity(cfg.messages);
    for _ in 0..attempts {
        if messages.len() == cfg.messages {
            break;
        }
        let v: Vec<u64> = (0..n).map(|_| rng.random_range(0..p)).collect();
        let value = eval_monomial(&field, &f, &mat_vec(&field, &a, &v));
        if value != 0 && !table.contains(&value) {
            messages.push(v);
            table.push(value);
        }
    }
    if messages.len() < cfg.messages {
        return Err(CryptoError::SeparationFailed {
            needed: cfg.messages,
            attempts,
        });
    }

    let secret = secret_generators(&field, &cfg.action);
    let secret_inv = inverses(&field, &secret)?;
    let target = if cfg.action.rows().is_empty() {
        None
    } else {
        Some(triangular_invariant_basis(&cfg.action)?)
    };
    let mut chosen = None;
    for _ in 0..GENERATOR_ROUNDS {
        let words: Vec<Vec<Letter>> = (0..cfg.generators)
            .map(|_| random_word(&mut rng, secret.len(), cfg.word_length))
            .collect();
        let full = match &target {
            None => true,
            Some(t) => triangular_invariant_basis(&word_action(&cfg.action, &words))? == *t,
        };
        if full {
            chosen = Some(words);
            break;
        }
    }
    let words = chosen.ok_or(CryptoError::SubgroupNotGenerated(GENERATOR_ROUNDS))?;
    let a_inv = inverse(&field, &a).expect("a is invertible");
    let public_generators = words
        .iter()
        .map(|w| {
            let g = word_product(&field, &secret, &secret_inv, w);
            mat_mul(&field, &mat_mul(&field, &a_inv, &g), &a)
        })
        .collect();
    build_keypair(
        p,
        cfg.action.clone(),
        a,
        f,
        messages,
        public_generators,
        cfg.variant,
    )
}

/// Assembles a key pair from explicit parts, checking every invariant:
/// `a` invertible, `f` invariant, messages separated by `f(a x)`, public
/// generators invertible.
pub fn build_keypair(
    p: u64,
    secret_action: DiagonalAction,
    a: Matrix<u64>,
    invariant: Vec<u32>,
    messages: Vec<Vec<u64>>,
    generators: Vec<Matrix<u64>>,
    variant: Variant,
) -> Result<(PublicKey, PrivateKey), CryptoError> {
    let field = PrimeField::new(p)?;
    let n = secret_action.n();
    let invalid = |m: &str| CryptoError::InvalidKey(m.to_string());
    if a.rows() != n || a.cols() != n || inverse(&field, &a).is_none() {
        return Err(invalid("a must be an invertible n x n matrix"));
    }
    if !secret_action.is_invariant_monomial(&invariant)? {
        return Err(invalid("f is not invariant under the secret group"));
    }
    for v in &messages {
        if v.len() != n || v.iter().any(|&x| x >= p) {
            return Err(invalid("messages must be vectors in F_p^n"));
        }
    }
    if !separates(&field, &invariant, &a, &messages) {
        return Err(CryptoError::SeparationFailed {
            needed: messages.len(),
            attempts: 0,
        });
    }
    if generators.is_empty() {
        return Err(invalid("need at least one public generator"));
    }
    for g in &generators {
        if g.rows() != n || g.cols() != n || inverse(&field, g).is_none() {
            return Err(invalid(
                "public generators must be invertible n x n matrices",
            ));
        }
    }
    let table = messages
        .iter()
        .map(|v| eval_monomial(&field, &invariant, &mat_vec(&field, &a, v)))
        .collect();
    let disclose = variant == Variant::One;
    let public = PublicKey {
        p,
        n,
        generators,
        messages,
        variant,
        group: disclose.then(|| secret_action.clone()),
        invariant: disclose.then(|| invariant.clone()),
    };
    let private = PrivateKey {
        p,
        n,
        a,
        invariant,
        secret_action,
        table,
    };
    Ok((public, private))
}

/// `u = h v_idx` for a random word `h` of length `word_len` in the public
/// generators and their inverses.
pub fn encrypt(
    pk: &PublicKey,
    idx: usize,
    seed: u64,
    word_len: usize,
) -> Result<Ciphertext, CryptoError> {
    let mut rng = seeded(seed);
    let word = random_word(&mut rng, pk.generators.len(), word_len);
    encrypt_with_word(pk, idx, &word)
}

pub fn encrypt_with_word(
    pk: &PublicKey,
    idx: usize,
    word: &[Letter],
) -> Result<Ciphertext, CryptoError> {
    let field = pk.field();
    let v = pk.messages.get(idx).ok_or(CryptoError::IndexOutOfRange {
        index: idx,
        count: pk.messages.len(),
    })?;
    if let Some(bad) = word.iter().find(|l| l.generator >= pk.generators.len()) {
        return Err(CryptoError::IndexOutOfRange {
            index: bad.generator,
            count: pk.generators.len(),
        });
    }
    let invs = inverses(&field, &pk.generators)?;
    let h = word_product(&field, &pk.generators, &invs, word);
    Ok(Ciphertext {
        u: mat_vec(&field, &h, v),
    })
}

/// Evaluates `f(a u)` and looks it up in the table.
pub fn decrypt(sk: &PrivateKey, ct: &Ciphertext) -> Result<usize, CryptoError> {
    if ct.u.len() != sk.n {
        return Err(CryptoError::DimensionMismatch {
            expected: sk.n,
            got: ct.u.len(),
        });
    }
    let field = sk.field();
    let value = eval_monomial(&field, &sk.invariant, &mat_vec(&field, &sk.a, &ct.u));
    sk.table
        .iter()
        .position(|&t| t == value)
        .ok_or(CryptoError::NoMatch)
}

// ---- file formats ----

#[derive(Serialize, Deserialize)]
struct InvariantDoc {
    exponents: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PublicKeyFile {
    p: u64,
    n: usize,
    generators: Vec<Vec<Vec<u64>>>,
    messages: Vec<Vec<u64>>,
    variant: Variant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group: Option<DiagonalAction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    invariant: Option<InvariantDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PrivateKeyFile {
    p: u64,
    n: usize,
    a: Vec<Vec<u64>>,
    invariant: InvariantDoc,
    table: Vec<u64>,
    secret_action: DiagonalAction,
}

fn square_matrix(
    p: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
    what: &str,
) -> Result<Matrix<u64>, CryptoError> {
    let m = Matrix::from_rows(&rows)?;
    if m.rows() != n || m.cols() != n {
        return Err(CryptoError::InvalidKey(format!("{what} must be {n} x {n}")));
    }
    if m.to_rows().iter().flatten().any(|&x| x >= p) {
        return Err(CryptoError::InvalidKey(format!(
            "{what} has entries outside [0, p)"
        )));
    }
    Ok(m)
}

impl PublicKey {
    pub fn to_json(&self) -> serde_json::Value {
        let file = PublicKeyFile {
            p: self.p,
            n: self.n,
            generators: self.generators.iter().map(Matrix::to_rows).collect(),
            messages: self.messages.clone(),
            variant: self.variant,
            group: self.group.clone(),
            invariant: self
                .invariant
                .clone()
                .map(|exponents| InvariantDoc { exponents }),
        };
        serde_json::to_value(file).expect("plain data serializes")
    }

    pub fn from_json(v: serde_json::Value) -> Result<Self, CryptoError> {
        let f: PublicKeyFile =
            serde_json::from_value(v).map_err(|e| CryptoError::InvalidKey(e.to_string()))?;
        let field = PrimeField::new(f.p)?;
        let generators = f
            .generators
            .into_iter()
            .map(|g| square_matrix(f.p, f.n, g, "generator"))
            .collect::<Result<Vec<_>, _>>()?;
        inverses(&field, &generators)?;
        if f.messages
            .iter()
            .any(|v| v.len() != f.n || v.iter().any(|&x| x >= f.p))
        {
            return Err(CryptoError::InvalidKey(
                "messages must be vectors in F_p^n".into(),
            ));
        }
        Ok(PublicKey {
            p: f.p,
            n: f.n,
            generators,
            messages: f.messages,
            variant: f.variant,
            group: f.group,
            invariant: f.invariant.map(|i| i.exponents),
        })
    }
}

impl PrivateKey {
    pub fn to_json(&self) -> serde_json::Value {
        let file = PrivateKeyFile {
            p: self.p,
            n: self.n,
            a: self.a.to_rows(),
            invariant: InvariantDoc {
                exponents: self.invariant.clone(),
            },
            table: self.table.clone(),
            secret_action: self.secret_action.clone(),
        };
        serde_json::to_value(file).expect("plain data serializes")
    }

    pub fn from_json(v: serde_json::Value) -> Result<Self, CryptoError> {
        let f: PrivateKeyFile =
            serde_json::from_value(v).map_err(|e| CryptoError::InvalidKey(e.to_string()))?;
        let field = PrimeField::new(f.p)?;
        let a = square_matrix(f.p, f.n, f.a, "a")?;
        if inverse(&field, &a).is_none() {
            return Err(CryptoError::InvalidKey("a is singular".into()));
        }
        if f.secret_action.n() != f.n || f.invariant.exponents.len() != f.n {
            return Err(CryptoError::InvalidKey("dimension mismatch".into()));
        }
        Ok(PrivateKey {
            p: f.p,
            n: f.n,
            a,
            invariant: f.invariant.exponents,
            secret_action: f.secret_action,
            table: f.table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn worked() -> (PublicKey, PrivateKey) {
        let field = f7();
        let action = DiagonalAction::cyclic(6, vec![1, 2]).unwrap();
        let a = Matrix::new(2, 2, vec![1u64, 1, 0, 1]).unwrap();
        let g = secret_generators(&field, &action);
        let a_inv = inverse(&field, &a).unwrap();
        let h1 = mat_mul(&field, &mat_mul(&field, &a_inv, &g[0]), &a);
        build_keypair(
            7,
            action,
            a,
            vec![0, 3],
            vec![vec![1, 1], vec![1, 3]],
            vec![h1],
            Variant::Two,
        )
        .unwrap()
    }

    #[test]
    fn worked_key_matches_hand_computation() {
        let (pk, sk) = worked();
        assert_eq!(sk.table, vec![1, 6]);
        assert_eq!(
            pk.generators[0],
            Matrix::new(2, 2, vec![3u64, 1, 0, 2]).unwrap()
        );
        assert_eq!(
            sk.secret_generators()[0],
            Matrix::new(2, 2, vec![3u64, 0, 0, 2]).unwrap()
        );
        assert!(pk.group.is_none() && pk.invariant.is_none());
    }

    #[test]
    fn separation_examples() {
        let a = Matrix::new(2, 2, vec![1u64, 1, 0, 1]).unwrap();
        assert!(separates(&f7(), &[0, 3], &a, &[vec![1, 1], vec![1, 3]]));
        assert!(!separates(&f7(), &[0, 3], &a, &[vec![1, 1], vec![1, 2]]));
        assert!(separates(&f7(), &[0, 3], &a, &[vec![1, 1]]));
        let action = DiagonalAction::cyclic(6, vec![1, 2]).unwrap();
        let err = build_keypair(
            7,
            action,
            a.clone(),
            vec![0, 3],
            vec![vec![1, 1], vec![1, 2]],
            vec![a],
            Variant::One,
        );
        assert!(matches!(err, Err(CryptoError::SeparationFailed { .. })));
    }

    #[test]
    fn encrypt_and_decrypt_worked_instance() {
        let (pk, sk) = worked();
        let h1 = [Letter {
            generator: 0,
            inverse: false,
        }];
        assert_eq!(encrypt_with_word(&pk, 0, &h1).unwrap().u, vec![4, 2]);
        assert_eq!(encrypt_with_word(&pk, 0, &[]).unwrap().u, vec![1, 1]);
        assert_eq!(encrypt_with_word(&pk, 1, &h1).unwrap().u, vec![6, 6]);
        assert_eq!(decrypt(&sk, &Ciphertext { u: vec![4, 2] }), Ok(0));
        assert_eq!(decrypt(&sk, &Ciphertext { u: vec![1, 3] }), Ok(1));
        assert_eq!(
            decrypt(&sk, &Ciphertext { u: vec![0, 0] }),
            Err(CryptoError::NoMatch)
        );
        assert!(matches!(
            encrypt(&pk, 2, 1, 3),
            Err(CryptoError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn trivial_group_uses_linear_invariant() {
        let cfg = CryptoConfig {
            p: 11,
            action: DiagonalAction::cyclic(1, vec![0, 0]).unwrap(),
            messages: 3,
            generators: 2,
            word_length: 2,
            variant: Variant::One,
            min_degree: 1,
            degree_cap: 4,
        };
        let (pk, sk) = keygen(&cfg, 5).unwrap();
        assert_eq!(sk.invariant, vec![1, 0]);
        assert_eq!(pk.invariant, Some(vec![1, 0]));
        for i in 0..3 {
            assert_eq!(decrypt(&sk, &encrypt(&pk, i, 99, 4).unwrap()), Ok(i));
        }
    }

    #[test]
    fn keygen_is_deterministic_and_round_trips() {
        let cfg = CryptoConfig {
            p: 13,
            action: DiagonalAction::cyclic(4, vec![1, 3, 2]).unwrap(),
            messages: 4,
            generators: 2,
            word_length: 3,
            variant: Variant::Two,
            min_degree: 1,
            degree_cap: 8,
        };
        let (pk1, sk1) = keygen(&cfg, 42).unwrap();
        let (pk2, sk2) = keygen(&cfg, 42).unwrap();
        assert_eq!(pk1, pk2);
        assert_eq!(sk1, sk2);
        for seed in 0..20 {
            let i = (seed % 4) as usize;
            assert_eq!(decrypt(&sk1, &encrypt(&pk1, i, seed, 5).unwrap()), Ok(i));
        }
        assert_eq!(PublicKey::from_json(pk1.to_json()).unwrap(), pk1);
        assert_eq!(PrivateKey::from_json(sk1.to_json()).unwrap(), sk1);
    }

    #[test]
    fn config_errors() {
        let mut cfg = CryptoConfig {
            p: 7,
            action: DiagonalAction::cyclic(4, vec![1, 1]).unwrap(),
            messages: 2,
            generators: 1,
            word_length: 1,
            variant: Variant::One,
            min_degree: 1,
            degree_cap: 8,
        };
        assert!(matches!(
            keygen(&cfg, 0),
            Err(CryptoError::InvalidConfig(_))
        ));
        cfg.action = DiagonalAction::cyclic(6, vec![1, 1]).unwrap();
        cfg.degree_cap = 5;
        assert_eq!(
            keygen(&cfg, 0),
            Err(CryptoError::NoInvariant { floor: 1, cap: 5 })
        );
        cfg.degree_cap = 8;
        cfg.messages = 7;
        assert!(matches!(
            keygen(&cfg, 0),
            Err(CryptoError::SeparationFailed { .. })
        ));
    }
}
