//! Closed-form minimal degree for the two-generator diagonal subgroups of
//! `GL_2` generated by `A = diag(l^v1, l^(j v2))` and `B = diag(l^g, l^(d g))`,
//! `l` a primitive `e`-th root of unity.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagmin::{DiagonalAction, GeneratorRow};
use crate::exactalg::prime_factors;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gl2Params {
    pub e: u64,
    pub g: u64,
    pub v1: u64,
    pub v2: u64,
    pub j: u64,
    pub d: u64,
}

/// A failed side condition on [`Gl2Params`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gl2Violation {
    NotPositive(&'static str),
    V1TooSmall,
    V2TooSmall,
    V1V2NotDividingG,
    GNotDividingE,
    DNotDividingE,
    GcdV1V2(u64),
    GcdEJ(u64),
    GcdV1D(u64),
    GcdV2D(u64),
    DNotSquareFree,
    UncoveredPrime(u64),
    GcdEDv1MinusJv2(u64),
}

impl fmt::Display for Gl2Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gl2Violation::NotPositive(name) => write!(f, "{name} must be positive"),
            Gl2Violation::V1TooSmall => write!(f, "v1 > 1 fails"),
            Gl2Violation::V2TooSmall => write!(f, "v2 > 1 fails"),
            Gl2Violation::V1V2NotDividingG => write!(f, "v1*v2 does not divide g"),
            Gl2Violation::GNotDividingE => write!(f, "g does not divide e"),
            Gl2Violation::DNotDividingE => write!(f, "d does not divide e"),
            Gl2Violation::GcdV1V2(x) => write!(f, "gcd(v1,v2)={x}"),
            Gl2Violation::GcdEJ(x) => write!(f, "gcd(e,j)={x}"),
            Gl2Violation::GcdV1D(x) => write!(f, "gcd(v1,d)={x}"),
            Gl2Violation::GcdV2D(x) => write!(f, "gcd(v2,d)={x}"),
            Gl2Violation::DNotSquareFree => write!(f, "d is not square-free"),
            Gl2Violation::UncoveredPrime(p) => {
                write!(f, "prime {p} of e divides none of v1, v2, d")
            }
            Gl2Violation::GcdEDv1MinusJv2(x) => write!(f, "gcd(e, d*v1-j*v2)={x}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid parameters: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct InvalidParams(pub Vec<Gl2Violation>);

/// Checks every side condition and reports all failures.
pub fn validate_params(p: &Gl2Params) -> Result<(), Vec<Gl2Violation>> {
    let mut bad = Vec::new();
    for (name, v) in [
        ("e", p.e),
        ("g", p.g),
        ("v1", p.v1),
        ("v2", p.v2),
        ("j", p.j),
        ("d", p.d),
    ] {
        if v == 0 {
            bad.push(Gl2Violation::NotPositive(name));
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }
    if p.v1 <= 1 {
        bad.push(Gl2Violation::V1TooSmall);
    }
    if p.v2 <= 1 {
        bad.push(Gl2Violation::V2TooSmall);
    }
    if p.g % (p.v1 * p.v2) != 0 {
        bad.push(Gl2Violation::V1V2NotDividingG);
    }
    if p.e % p.g != 0 {
        bad.push(Gl2Violation::GNotDividingE);
    }
    if p.e % p.d != 0 {
        bad.push(Gl2Violation::DNotDividingE);
    }
    for (x, y, mk) in [
        (p.v1, p.v2, Gl2Violation::GcdV1V2 as fn(u64) -> Gl2Violation),
        (p.e, p.j, Gl2Violation::GcdEJ),
        (p.v1, p.d, Gl2Violation::GcdV1D),
        (p.v2, p.d, Gl2Violation::GcdV2D),
    ] {
        let g = x.gcd(&y);
        if g != 1 {
            bad.push(mk(g));
        }
    }
    if prime_factors(p.d).iter().any(|q| p.d % (q * q) == 0) {
        bad.push(Gl2Violation::DNotSquareFree);
    }
    for q in prime_factors(p.e) {
        if p.v1 % q != 0 && p.v2 % q != 0 && p.d % q != 0 {
            bad.push(Gl2Violation::UncoveredPrime(q));
        }
    }
    let diff = (p.d * p.v1).abs_diff(p.j * p.v2);
    let g = p.e.gcd(&diff);
    if g != 1 {
        bad.push(Gl2Violation::GcdEDv1MinusJv2(g));
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// Closed form of the minimal invariant degree.
///
/// `j v2 < v1`: `e / v1`. Otherwise the minimum of `e / v2` and, over
/// `0 < s < j`, `e s / v1 - floor(g s / (j v1 v2)) e (j v2 - v1) / g`.
pub fn closed_form_mindeg(p: &Gl2Params) -> Result<u64, InvalidParams> {
    validate_params(p).map_err(InvalidParams)?;
    let (e, g, v1, v2, j) = (
        p.e as i128,
        p.g as i128,
        p.v1 as i128,
        p.v2 as i128,
        p.j as i128,
    );
    if j * v2 < v1 {
        return Ok((e / v1) as u64);
    }
    let step = e * (v2 * j - v1) / g;
    let inner = (1..j).map(|s| e * s / v1 - (g * s / (j * v1 * v2)) * step);
    let best = inner
        .chain(std::iter::once(e / v2))
        .min()
        .expect("e / v2 is always present");
    Ok(best as u64)
}

/// Smallest `a1 + a2 > 0` solving `v1 a1 + j v2 a2 = 0` and
/// `g a1 + d g a2 = 0 (mod e)`, by enumeration of the total.
pub fn bruteforce_mindeg(p: &Gl2Params) -> Result<u64, InvalidParams> {
    validate_params(p).map_err(InvalidParams)?;
    let e = p.e;
    let holds = |a1: u64, a2: u64| {
        (p.v1 * a1 + p.j * p.v2 * a2) % e == 0 && (p.g * a1 + p.d * p.g * a2) % e == 0
    };
    let total = (1..=e)
        .find(|&t| (0..=t).any(|a1| holds(a1, t - a1)))
        .expect("(e, 0) always solves both congruences");
    Ok(total)
}

/// The same group as a [`DiagonalAction`] on two variables.
pub fn as_diagonal_action(p: &Gl2Params) -> DiagonalAction {
    let e = p.e;
    DiagonalAction::new(
        2,
        vec![
            GeneratorRow {
                modulus: e,
                weights: vec![p.v1 as i64, (p.j * p.v2) as i64],
            },
            GeneratorRow {
                modulus: e,
                weights: vec![p.g as i64, (p.d * p.g) as i64],
            },
        ],
    )
    .expect("two weights for two variables")
}

/// Every valid parameter tuple with `e <= emax` and `1 <= j < e`.
pub fn valid_params_up_to(emax: u64) -> Vec<Gl2Params> {
    let mut out = Vec::new();
    for e in 1..=emax {
        for g in (1..=e).filter(|g| e % g == 0) {
            for v1 in 2..=g {
                for v2 in (2..=g).filter(|v2| g % (v1 * v2) == 0) {
                    for d in (1..=e).filter(|d| e % d == 0) {
                        for j in 1..e {
                            let p = Gl2Params { e, g, v1, v2, j, d };
                            if validate_params(&p).is_ok() {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagmin::minimal_degree_bruteforce;

    const fn params(e: u64, g: u64, v1: u64, v2: u64, j: u64, d: u64) -> Gl2Params {
        Gl2Params { e, g, v1, v2, j, d }
    }

    #[test]
    fn validation_examples() {
        assert_eq!(validate_params(&params(6, 6, 3, 2, 1, 1)), Ok(()));
        let bad = validate_params(&params(6, 6, 2, 2, 1, 1)).unwrap_err();
        assert!(bad.contains(&Gl2Violation::GcdV1V2(2)));
        let bad = validate_params(&params(30, 10, 5, 2, 3, 3)).unwrap_err();
        assert!(bad.contains(&Gl2Violation::GcdEJ(3)));
    }

    #[test]
    fn worked_tuples() {
        for (p, want) in [
            (params(6, 6, 3, 2, 1, 1), 2),
            (params(6, 6, 2, 3, 1, 1), 2),
            (params(30, 10, 5, 2, 7, 3), 6),
        ] {
            assert_eq!(closed_form_mindeg(&p), Ok(want), "{p:?}");
            assert_eq!(bruteforce_mindeg(&p), Ok(want), "{p:?}");
        }
    }

    #[test]
    fn invalid_params_are_rejected() {
        assert!(closed_form_mindeg(&params(6, 6, 2, 2, 1, 1)).is_err());
        assert!(bruteforce_mindeg(&params(0, 6, 2, 3, 1, 1)).is_err());
    }

    #[test]
    fn agrees_with_diagonal_search_on_small_sweep() {
        for p in valid_params_up_to(24) {
            let bf = bruteforce_mindeg(&p).unwrap();
            assert_eq!(
                minimal_degree_bruteforce(&as_diagonal_action(&p), p.e).degree(),
                Some(bf)
            );
            assert!(bf <= p.e);
        }
    }
}
