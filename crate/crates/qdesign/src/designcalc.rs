//! Parameter calculus for `t-(v,k,lambda)_q` subspace designs.
//!
//! Derived indices `lambda_i`, the two-index `lambda_{i,j}` (plain and high
//! order), dual and complementary parameter sets, admissibility, and the
//! Colbourn-Mathon style bound for `3-(v,k,1)` block designs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::qpoly::{binomial_u64, QMode, Scalar};
use crate::{Error, Result};

/// The parameter tuple of a `t-(v,k,lambda)_q` subspace design, together
/// with the evaluation mode all derived scalars live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignParams {
    pub mode: QMode,
    pub t: u32,
    pub v: u32,
    pub k: u32,
    pub lambda: Scalar,
}

impl DesignParams {
    pub fn new(mode: QMode, t: u32, v: u32, k: u32, lambda: Scalar) -> Result<Self> {
        if !(t <= k && k <= v) {
            return Err(Error::InvalidParams(format!(
                "need 0 <= t <= k <= v, got t={t}, k={k}, v={v}"
            )));
        }
        match (&lambda, mode) {
            (Scalar::Num(n), QMode::Numeric(_)) => {
                if n < &BigInt::from(1) {
                    return Err(Error::InvalidParams("lambda must be >= 1".into()));
                }
            }
            (Scalar::Sym(p), QMode::Symbolic) => {
                if p.is_zero() {
                    return Err(Error::InvalidParams("lambda must be nonzero".into()));
                }
            }
            _ => {
                return Err(Error::InvalidParams(
                    "lambda scalar does not match the q-mode".into(),
                ))
            }
        }
        Ok(DesignParams { mode, t, v, k, lambda })
    }

    /// Convenience constructor with an integer lambda.
    pub fn with_int_lambda(mode: QMode, t: u32, v: u32, k: u32, lambda: i64) -> Result<Self> {
        Self::new(mode, t, v, k, mode.int(lambda))
    }

    /// Short display like `2-(7,3,1)_q` / `3-(11,5,2)_1`.
    pub fn describe(&self) -> String {
        let l = match &self.lambda {
            Scalar::Num(n) => n.to_string(),
            Scalar::Sym(p) => p.render_expanded(),
        };
        let sub = match self.mode {
            QMode::Symbolic => "q".to_string(),
            QMode::Numeric(q0) => q0.to_string(),
        };
        format!("{}-({},{},{})_{}", self.t, self.v, self.k, l, sub)
    }
}

/// The reduced indices `lambda_0 .. lambda_t` plus admissibility status.
///
/// When `admissible` is false, `values` holds the exact entries up to (not
/// including) `fail_witness`, the lowest index whose division left a
/// remainder.
#[derive(Clone, Debug)]
pub struct LambdaTable {
    pub values: Vec<Scalar>,
    pub admissible: bool,
    pub fail_witness: Option<u32>,
}

impl LambdaTable {
    pub fn get(&self, i: u32) -> Option<&Scalar> {
        self.values.get(i as usize)
    }
}

/// `lambda_i = lambda * [v-i t-i] / [k-i t-i]`, each division exact.
/// Failure is encoded in the table, not an error: non-integrality is the
/// admissibility verdict itself.
pub fn lambda_table(p: &DesignParams) -> LambdaTable {
    let m = p.mode;
    let mut values = Vec::with_capacity(p.t as usize + 1);
    for i in 0..=p.t {
        let num = p.lambda.mul(&m.gauss(p.v - i, (p.t - i) as i64));
        let den = m.gauss(p.k - i, (p.t - i) as i64);
        match num.exact_div(&den) {
            Ok(v) => values.push(v),
            Err(_) => {
                return LambdaTable {
                    values,
                    admissible: false,
                    fail_witness: Some(i),
                }
            }
        }
    }
    LambdaTable {
        values,
        admissible: true,
        fail_witness: None,
    }
}

/// The triangular table of `lambda_{i,j}` for `i + j <= t` at a given order.
#[derive(Clone, Debug)]
pub struct LambdaIJTable {
    pub order: u32,
    entries: BTreeMap<(u32, u32), Scalar>,
    pub t: u32,
}

impl LambdaIJTable {
    pub fn get(&self, i: u32, j: u32) -> Option<&Scalar> {
        self.entries.get(&(i, j))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.entries.iter()
    }
}

/// Fills the table from the seeds `lambda_{i,0} = C(lambda_i, ell)` by the
/// recurrence `lambda_{i,j+1} = lambda_{i,j} - q^j lambda_{i+1,j}`.
/// Order `ell >= 2` requires numeric mode.
pub fn lambda_ij(p: &DesignParams, order: u32) -> Result<LambdaIJTable> {
    if order == 0 {
        return Err(Error::InvalidParams("order must be >= 1".into()));
    }
    if order >= 2 && p.mode.is_symbolic() {
        return Err(Error::NumericOnly {
            what: "high-order lambda_{i,j}",
        });
    }
    let table = lambda_table(p);
    if !table.admissible {
        return Err(Error::NotAdmissible);
    }
    let mut entries = BTreeMap::new();
    for i in 0..=p.t {
        let seed = if order == 1 {
            table.values[i as usize].clone()
        } else {
            table.values[i as usize].binom(order)?
        };
        entries.insert((i, 0u32), seed);
    }
    for j in 0..p.t {
        for i in 0..=(p.t - j - 1) {
            let a = entries[&(i, j)].clone();
            let b = entries[&(i + 1, j)].clone();
            let next = a.sub(&p.mode.q_pow(j as u64).mul(&b));
            entries.insert((i, j + 1), next);
        }
    }
    Ok(LambdaIJTable {
        order,
        entries,
        t: p.t,
    })
}

/// Closed form `lambda_{i,j} = q^{j(k-i)} [v-i-j k-i] / [v-t k-t] * lambda`
/// (plain order only).
pub fn lambda_ij_closed(p: &DesignParams, i: u32, j: u32) -> Result<Scalar> {
    if i + j > p.t {
        return Err(Error::InvalidParams(format!(
            "need i + j <= t, got i={i}, j={j}, t={}",
            p.t
        )));
    }
    let m = p.mode;
    let num = m
        .q_pow((j * (p.k - i)) as u64)
        .mul(&m.gauss(p.v - i - j, (p.k - i) as i64))
        .mul(&p.lambda);
    num.exact_div(&m.gauss(p.v - p.t, (p.k - p.t) as i64))
}

/// Parameters of the dual design: `t-(v, v-k, [v-t k]/[v-t k-t] * lambda)`.
pub fn dual_params(p: &DesignParams) -> Result<DesignParams> {
    let m = p.mode;
    let num = m.gauss(p.v - p.t, p.k as i64).mul(&p.lambda);
    let lambda = num
        .exact_div(&m.gauss(p.v - p.t, (p.k - p.t) as i64))
        .map_err(|_| {
            Error::InvalidParams("dual lambda not exact; parameters not admissible".into())
        })?;
    DesignParams::new(m, p.t, p.v, p.v - p.k, lambda)
}

/// Parameters of the complementary design: `t-(v, k, [v-t k-t] - lambda)`.
pub fn complement_params(p: &DesignParams) -> Result<DesignParams> {
    let m = p.mode;
    let trivial = m.gauss(p.v - p.t, (p.k - p.t) as i64);
    let lambda = trivial.sub(&p.lambda);
    if lambda.is_zero() {
        return Err(Error::ComplementEmpty);
    }
    if lambda.is_negative() == Some(true) {
        return Err(Error::InvalidParams(format!(
            "lambda exceeds the trivial value {}",
            trivial
        )));
    }
    DesignParams::new(m, p.t, p.v, p.k, lambda)
}

/// Exact evaluation of the bound `C(v,3) >= (v/k) * C(v-1,1) * C(k,3)` that
/// the existence of a `3-(v,k,1)` block design implies. A violated bound is
/// a nonexistence proof.
#[derive(Clone, Debug)]
pub struct Steiner3Bound {
    pub holds: bool,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

pub fn steiner3_bound_check(v: u32, k: u32) -> Result<Steiner3Bound> {
    if !(3 <= k && k < v) {
        return Err(Error::InvalidParams(format!(
            "need 3 <= k < v, got v={v}, k={k}"
        )));
    }
    let lhs = BigRational::from_integer(binomial_u64(v as u64, 3));
    let rhs = BigRational::new(BigInt::from(v), BigInt::from(k))
        * BigRational::from_integer(binomial_u64(v as u64 - 1, 1))
        * BigRational::from_integer(binomial_u64(k as u64, 3));
    Ok(Steiner3Bound {
        holds: lhs >= rhs,
        lhs,
        rhs,
    })
}

/// True iff `q0 = p^e` for a prime `p` and `e >= 1`. Note `1` is not a
/// prime power.
pub fn is_prime_power(q0: u64) -> bool {
    prime_power_parts(q0).is_some()
}

/// Splits `q0` into `(p, e)` with `q0 = p^e`, `p` prime.
pub fn prime_power_parts(q0: u64) -> Option<(u64, u32)> {
    if q0 < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q0 {
        if q0 % p == 0 {
            let mut rest = q0;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            return if rest == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q0, 1))
}
