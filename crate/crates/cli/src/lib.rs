//! Command-line front end. Every command prints one minified JSON document
//! with sorted keys on stdout.
//!
//! Exit codes: 0 success, 1 selftest failure, 2 invalid input, 3 search
//! exhausted `--dmax`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use invdeg::attack::{find_min_invariant, recover_plaintext, AttackReport, Recovery};
use invdeg::diagmin::{
    minimal_degree_bruteforce, minimal_degree_ip, triangular_invariant_basis, DiagonalAction,
    MinDegreeResult,
};
use invdeg::exactalg::Field;
use invdeg::gl2family::{bruteforce_mindeg, closed_form_mindeg, Gl2Params};
use invdeg::invcrypt::{decrypt, encrypt, keygen, Ciphertext, CryptoConfig, PrivateKey, PublicKey};
use invdeg::selftest;
use invdeg::superinv::{
    minimal_superdegree, AnySuperAction, SuperAction, SuperActionFile, SuperSearch,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_SELFTEST_FAILED: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_NOT_FOUND: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "invdeg",
    version,
    about = "Minimal degrees of invariants, a toy invariant cryptosystem and its attack"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Brute,
    Ip,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal invariant degree of a diagonal action.
    Mindeg {
        #[arg(long)]
        action: PathBuf,
        #[arg(long, default_value_t = 32)]
        dmax: u64,
        #[arg(long, value_enum, default_value = "brute")]
        method: Method,
    },
    /// Closed form and brute force for the GL2 family.
    Gl2 {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        v1: u64,
        #[arg(long)]
        v2: u64,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        d: u64,
    },
    /// Generate a key pair from a config file.
    Keygen {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long = "priv")]
        private: PathBuf,
    },
    /// Encrypt message number `index`.
    Encrypt {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        word_length: usize,
    },
    Decrypt {
        #[arg(long = "priv")]
        private: PathBuf,
        #[arg(long)]
        ct: PathBuf,
    },
    /// Recover an invariant from the public key alone.
    Attack {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long)]
        ct: Option<PathBuf>,
        #[arg(long, default_value_t = 32)]
        dmax: u32,
    },
    /// Minimal degree and basis of superinvariants.
    Superinv {
        #[arg(long)]
        action: PathBuf,
        #[arg(long, default_value_t = 32)]
        dmax: u32,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn invalid(e: impl std::fmt::Display) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// A finished command: its document and exit code.
struct Outcome {
    doc: Value,
    code: u8,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Self { doc, code: EXIT_OK }
    }

    fn not_found(doc: Value) -> Self {
        Self {
            doc,
            code: EXIT_NOT_FOUND,
        }
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json {
        path: path.into(),
        source,
    })
}

fn read_as<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_value(read_json(path)?).map_err(|source| CliError::Json {
        path: path.into(),
        source,
    })
}

fn write_json(path: &Path, doc: &Value) -> Result<(), CliError> {
    fs::write(path, format!("{doc}\n")).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn mindeg(action: &Path, dmax: u64, method: Method) -> Result<Outcome, CliError> {
    let act: DiagonalAction = read_as(action)?;
    match method {
        Method::Ip => {
            let tb = triangular_invariant_basis(&act).map_err(CliError::invalid)?;
            let degree = minimal_degree_ip(&tb);
            Ok(Outcome::ok(
                json!({ "degree": degree, "triangular_basis": tb.rows() }),
            ))
        }
        Method::Brute => match minimal_degree_bruteforce(&act, dmax) {
            MinDegreeResult::Found { degree, witness } => {
                Ok(Outcome::ok(json!({ "degree": degree, "witness": witness })))
            }
            MinDegreeResult::Infinite { certificate } => Ok(Outcome::ok(
                json!({ "degree": null, "infinite": true, "certificate": certificate }),
            )),
            MinDegreeResult::NotFoundUpTo { dmax } => {
                Ok(Outcome::not_found(json!({ "not_found_up_to": dmax })))
            }
        },
    }
}

fn gl2(p: Gl2Params) -> Result<Outcome, CliError> {
    let closed = closed_form_mindeg(&p).map_err(CliError::invalid)?;
    let brute = bruteforce_mindeg(&p).map_err(CliError::invalid)?;
    Ok(Outcome::ok(
        json!({ "closed_form": closed, "bruteforce": brute }),
    ))
}

fn superinv_doc<F: Field>(act: &SuperAction<F>, dmax: u32) -> Outcome {
    match minimal_superdegree(act, dmax) {
        SuperSearch::Found { degree, basis } => {
            let basis: Vec<Value> = basis
                .iter()
                .map(|p| {
                    p.terms()
                        .map(|(pair, c)| json!({ "even": pair.l, "odd": pair.odd, "coeff": act.field().render(c) }))
                        .collect()
                })
                .collect();
            Outcome::ok(json!({ "degree": degree, "basis": basis }))
        }
        SuperSearch::NotFoundUpTo { dmax } => {
            Outcome::not_found(json!({ "not_found_up_to": dmax }))
        }
    }
}

fn execute(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Mindeg {
            action,
            dmax,
            method,
        } => mindeg(&action, dmax, method),
        Command::Gl2 { e, g, v1, v2, j, d } => gl2(Gl2Params { e, g, v1, v2, j, d }),
        Command::Keygen {
            config,
            seed,
            public,
            private,
        } => {
            let cfg: CryptoConfig = read_as(&config)?;
            let (pk, sk) = keygen(&cfg, seed).map_err(CliError::invalid)?;
            write_json(&public, &pk.to_json())?;
            write_json(&private, &sk.to_json())?;
            Ok(Outcome::ok(json!({
                "p": pk.p,
                "n": pk.n,
                "generators": pk.generators.len(),
                "messages": pk.messages.len(),
            })))
        }
        Command::Encrypt {
            public,
            index,
            seed,
            word_length,
        } => {
            let pk = PublicKey::from_json(read_json(&public)?).map_err(CliError::invalid)?;
            let ct = encrypt(&pk, index, seed, word_length).map_err(CliError::invalid)?;
            Ok(Outcome::ok(json!({ "u": ct.u })))
        }
        Command::Decrypt { private, ct } => {
            let sk = PrivateKey::from_json(read_json(&private)?).map_err(CliError::invalid)?;
            let ct: Ciphertext = read_as(&ct)?;
            let index = decrypt(&sk, &ct).map_err(CliError::invalid)?;
            Ok(Outcome::ok(json!({ "index": index })))
        }
        Command::Attack { public, ct, dmax } => {
            let pk = PublicKey::from_json(read_json(&public)?).map_err(CliError::invalid)?;
            let ct: Option<Ciphertext> = ct.as_deref().map(read_as).transpose()?;
            if let Some(c) = &ct {
                if c.u.len() != pk.n {
                    return Err(CliError::Invalid(format!(
                        "ciphertext has length {}, expected {}",
                        c.u.len(),
                        pk.n
                    )));
                }
            }
            let field = pk.field();
            let search = find_min_invariant(&field, &pk.generators, dmax);
            let recovered = match (&search, &ct) {
                (invdeg::attack::InvariantSearch::Found { basis, .. }, Some(c)) => {
                    match recover_plaintext(&pk.messages, basis, &c.u) {
                        Recovery::Index(i) => Some(i),
                        Recovery::Ambiguous(_) | Recovery::NoMatch => None,
                    }
                }
                _ => None,
            };
            let doc = serde_json::to_value(AttackReport::new(&search, recovered))
                .expect("plain data serializes");
            Ok(if search.degree().is_some() {
                Outcome::ok(doc)
            } else {
                Outcome::not_found(doc)
            })
        }
        Command::Superinv { action, dmax } => {
            let file: SuperActionFile = read_as(&action)?;
            Ok(match file.load().map_err(CliError::invalid)? {
                AnySuperAction::Rational(act) => superinv_doc(&act, dmax),
                AnySuperAction::Prime(act) => superinv_doc(&act, dmax),
            })
        }
        Command::Selftest { only } => {
            let reports = match only {
                Some(id) => vec![selftest::run(id)
                    .ok_or_else(|| CliError::Invalid(format!("no criterion {id}")))?],
                None => selftest::run_all(),
            };
            let passed = reports.iter().all(|r| r.passed);
            let doc = json!({ "passed": passed, "criteria": reports });
            Ok(Outcome {
                doc,
                code: if passed {
                    EXIT_OK
                } else {
                    EXIT_SELFTEST_FAILED
                },
            })
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    match execute(cli.command) {
        Ok(Outcome { doc, code }) => {
            let _ = writeln!(out, "{doc}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}
