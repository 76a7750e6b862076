use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

use super::factor::factor_cyclotomic;
use super::poly::QPolynomial;
use super::{gauss_eval, gauss_poly};

/// Evaluation mode shared by every scalar of one computation: either the
/// symbolic ring `Z[q]` or integers at a fixed point `q0 >= 1`.
///
/// `q0 = 1` gives ordinary block designs; prime-power-ness of a numeric `q0`
/// is deliberately not enforced here (see [`crate::designcalc::is_prime_power`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QMode {
    Symbolic,
    Numeric(u64),
}

impl QMode {
    pub fn is_symbolic(self) -> bool {
        matches!(self, QMode::Symbolic)
    }

    pub fn q0(self) -> Option<u64> {
        match self {
            QMode::Symbolic => None,
            QMode::Numeric(q0) => Some(q0),
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            QMode::Symbolic => Scalar::Sym(QPolynomial::constant(n)),
            QMode::Numeric(_) => Scalar::Num(BigInt::from(n)),
        }
    }

    /// The Gaussian binomial `[n k]` in this mode. Numeric mode evaluates
    /// directly, never through the polynomial, whose degree `k(n-k)` is
    /// prohibitive for the large `v` the q0 = 1 family scans reach.
    pub fn gauss(self, n: u32, k: i64) -> Scalar {
        match self {
            QMode::Symbolic => Scalar::Sym(gauss_poly(n, k)),
            QMode::Numeric(q0) => Scalar::Num(gauss_eval(n as u64, k, q0)),
        }
    }

    /// `q^e` in this mode.
    pub fn q_pow(self, e: u64) -> Scalar {
        match self {
            QMode::Symbolic => Scalar::Sym(QPolynomial::q_power(e as usize)),
            QMode::Numeric(q0) => Scalar::Num(BigInt::from(q0).pow(e as u32)),
        }
    }

    /// Injects a polynomial: kept as-is symbolically, evaluated numerically.
    pub fn from_poly(self, p: &QPolynomial) -> Scalar {
        match self {
            QMode::Symbolic => Scalar::Sym(p.clone()),
            QMode::Numeric(q0) => Scalar::Num(p.eval_u64(q0)),
        }
    }
}

/// Rendering style for symbolic values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyStyle {
    Expanded,
    Factored,
}

/// A value in the active [`QMode`]: a polynomial in `q`, or an integer.
///
/// Arithmetic requires both operands in the same mode; mixing is a
/// programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Sym(QPolynomial),
    Num(BigInt),
}

impl Scalar {
    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(a + b),
            (Scalar::Num(a), Scalar::Num(b)) => Scalar::Num(a + b),
            _ => panic!("scalar mode mismatch"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(a - b),
            (Scalar::Num(a), Scalar::Num(b)) => Scalar::Num(a - b),
            _ => panic!("scalar mode mismatch"),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(a * b),
            (Scalar::Num(a), Scalar::Num(b)) => Scalar::Num(a * b),
            _ => panic!("scalar mode mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Sym(a) => Scalar::Sym(-a),
            Scalar::Num(a) => Scalar::Num(-a),
        }
    }

    /// Exact division; a nonzero remainder reports `NotDivisible`, which in
    /// symbolic mode is the non-admissibility signal.
    pub fn exact_div(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Sym(a), Scalar::Sym(b)) => Ok(Scalar::Sym(a.exact_div(b)?)),
            (Scalar::Num(a), Scalar::Num(b)) => {
                if b.is_zero() {
                    return Err(Error::InvalidParams("division by zero".into()));
                }
                let (q, r) = num_integer::Integer::div_rem(a, b);
                if r.is_zero() {
                    Ok(Scalar::Num(q))
                } else {
                    Err(Error::NotDivisible(format!("{} / {}", a, b)))
                }
            }
            _ => panic!("scalar mode mismatch"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Sym(p) => p.is_zero(),
            Scalar::Num(n) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Sym(p) => p.is_one(),
            Scalar::Num(n) => n.is_one(),
        }
    }

    /// Sign test; `None` in symbolic mode, where nonnegativity of a
    /// polynomial is deliberately undefined.
    pub fn is_negative(&self) -> Option<bool> {
        match self {
            Scalar::Sym(_) => None,
            Scalar::Num(n) => Some(n.is_negative()),
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Scalar::Sym(_) => None,
            Scalar::Num(n) => Some(n),
        }
    }

    pub fn as_poly(&self) -> Option<&QPolynomial> {
        match self {
            Scalar::Sym(p) => Some(p),
            Scalar::Num(_) => None,
        }
    }

    /// Binomial coefficient `C(self, ell)`, numeric mode only, since the
    /// binomial of a polynomial is not a polynomial.
    pub fn binom(&self, ell: u32) -> Result<Scalar> {
        match self {
            Scalar::Sym(_) => Err(Error::NumericOnly {
                what: "binomial of a scalar",
            }),
            Scalar::Num(n) => {
                if n.is_negative() {
                    return Err(Error::InvalidParams(format!(
                        "binomial of negative value {}",
                        n
                    )));
                }
                Ok(Scalar::Num(num_integer::binomial(
                    n.clone(),
                    BigInt::from(ell),
                )))
            }
        }
    }

    /// Text rendering: numeric values in decimal, symbolic values expanded
    /// or in cyclotomic-factored form.
    pub fn render(&self, style: PolyStyle) -> String {
        match self {
            Scalar::Num(n) => n.to_string(),
            Scalar::Sym(p) => match style {
                PolyStyle::Expanded => p.render_expanded(),
                PolyStyle::Factored => {
                    if p.is_zero() {
                        "0".to_string()
                    } else {
                        factor_cyclotomic(p)
                            .expect("nonzero polynomial factors")
                            .render()
                    }
                }
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(PolyStyle::Expanded))
    }
}
