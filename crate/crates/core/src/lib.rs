//! Minimal degrees of polynomial invariants of diagonalizable groups and of
//! the supergroups `D_{g,x}`, an invariant-based toy public-key
//! cryptosystem, and the degree-by-degree linear-algebra attack on it.

pub mod attack;
pub mod diagmin;
pub mod exactalg;
pub mod gl2family;
pub mod invcrypt;
pub mod monomial;
pub mod poly;
pub mod rng;
pub mod selftest;
pub mod superinv;
