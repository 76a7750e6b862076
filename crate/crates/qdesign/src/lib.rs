//! Exact intersection-number calculus for subspace designs over finite fields.
//!
//! Everything here is exact: coefficients and counts are arbitrary-precision
//! integers, and the `q`-parameter is either kept symbolic (as an element of
//! `Z[q]`) or pinned to a fixed integer `q0 >= 1`. The crate is organized in
//! five layers:
//!
//! - [`qpoly`]: the polynomial ring `Z[q]` with q-combinatorial constructors
//!   (q-integers, q-factorials, Gaussian binomials, cyclotomic polynomials)
//!   and factorization into q-powers times cyclotomics.
//! - [`designcalc`]: the parameter calculus of `t-(v,k,lambda)_q` designs:
//!   reduced indices `lambda_i`, the two-index `lambda_{i,j}`, duals,
//!   complements, admissibility.
//! - [`intersect`]: Mendelsohn and Koehler linear systems on intersection
//!   vectors, feasibility enumeration, nonexistence certificates, and the
//!   full analysis of a putative `2-(7,3,1)_q` Steiner system.
//! - [`fqoracle`]: a brute-force ground truth over small `F_q` vector spaces
//!   (subspace enumeration, trivial designs, spreads, direct measurement of
//!   every counting quantity the formula layers predict).
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod designcalc;
pub mod fqoracle;
pub mod intersect;
pub mod qpoly;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Exact division left a nonzero remainder. In symbolic admissibility
    /// checks this is a meaningful signal, not a bug.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("cannot factor zero")]
    FactorZero,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parameter set is not admissible")]
    NotAdmissible,

    #[error("complement empty: lambda equals the trivial value")]
    ComplementEmpty,

    #[error("dimension not in unique range: s={s} requires s <= t or s >= v-t")]
    DimensionRange { s: u32 },

    #[error("{what} requires numeric mode")]
    NumericOnly { what: &'static str },

    #[error("guard exceeded: {what} needs {needed}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field too large: q = {0} (limit {1})")]
    FieldTooLarge(u64, u64),

    #[error("ambient space mismatch: ({0},{1}) vs ({2},{3})")]
    AmbientMismatch(u16, u32, u16, u32),

    #[error("lambda_{{{i},{j}}} depends on the choice of (I,J): saw {a} and {b}; not a {t}-design")]
    IndependenceViolated { i: u32, j: u32, t: u32, a: u64, b: u64 },

    #[error("design file: {0}")]
    DesignFile(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
