use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer-coefficient polynomial in the indeterminate `q`.
///
/// Dense representation: `coeffs[i]` is the coefficient of `q^i`. Canonical
/// form keeps no trailing zeros, so the zero polynomial is the empty vector
/// and `degree()` is `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q` itself.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^e`.
    pub fn monomial<C: Into<BigInt>>(c: C, e: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        QPolynomial { coeffs }
    }

    /// `q^e`.
    pub fn q_power(e: usize) -> Self {
        Self::monomial(1, e)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: Vec<C>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True if the polynomial is a constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Multiplies by `q^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, q0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc
    }

    pub fn eval_u64(&self, q0: u64) -> BigInt {
        self.eval(&BigInt::from(q0))
    }

    /// Quotient of an exact division in `Z[q]`; `NotDivisible` otherwise.
    pub fn exact_div(&self, rhs: &QPolynomial) -> Result<QPolynomial> {
        if rhs.is_zero() {
            return Err(Error::InvalidParams("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dn = self.degree().unwrap();
        let dr = rhs.degree().unwrap();
        if dn < dr {
            return Err(Error::NotDivisible(format!("{} / {}", self, rhs)));
        }
        let lead = rhs.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dr + 1];
        for i in (0..=dn - dr).rev() {
            if rem[i + dr].is_zero() {
                continue;
            }
            let (qc, r) = rem[i + dr].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!("{} / {}", self, rhs)));
            }
            for (j, rc) in rhs.coeffs.iter().enumerate() {
                let sub = &qc * rc;
                rem[i + j] -= sub;
            }
            quot[i] = qc;
        }
        if rem.iter().take(dr).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible(format!("{} / {}", self, rhs)));
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn divides(&self, other: &QPolynomial) -> bool {
        other.exact_div(self).is_ok()
    }

    /// Expanded text form: descending powers, zero terms omitted, `q` not
    /// `q^1`, constants as plain integers (e.g. `q^8 - q^7 + q^3`).
    pub fn render_expanded(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            if i == 1 {
                out.push('q');
            } else if i > 1 {
                out.push_str(&format!("q^{}", i));
            }
        }
        out
    }

    /// Parses the expanded text form produced by [`render_expanded`], also
    /// tolerating missing spaces and an optional `*` between a coefficient
    /// and `q` (`"q^4+q^2+1"`, `"2*q^2"`).
    ///
    /// [`render_expanded`]: QPolynomial::render_expanded
    pub fn parse(s: &str) -> Result<QPolynomial> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(BigInt, usize)> = Vec::new();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1i32;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                pos += 1;
            }
            let term = &compact[start..pos];
            if term.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {:?}", s)));
            }
            let (coeff, power) = parse_term(term, s)?;
            let coeff = if sign < 0 { -coeff } else { coeff };
            terms.push((coeff, power));
        }
        let max_pow = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); max_pow + 1];
        for (c, p) in terms {
            coeffs[p] += c;
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}

fn parse_term(term: &str, whole: &str) -> Result<(BigInt, usize)> {
    let bad = || Error::Parse(format!("bad term {:?} in {:?}", term, whole));
    match term.find('q') {
        None => {
            let c: BigInt = term.parse().map_err(|_| bad())?;
            Ok((c, 0))
        }
        Some(qpos) => {
            let coeff_part = term[..qpos].trim_end_matches('*');
            let coeff = if coeff_part.is_empty() {
                BigInt::one()
            } else {
                coeff_part.parse().map_err(|_| bad())?
            };
            let rest = &term[qpos + 1..];
            let power = if rest.is_empty() {
                1
            } else {
                let exp = rest.strip_prefix('^').ok_or_else(bad)?;
                exp.parse().map_err(|_| bad())?
            };
            Ok((coeff, power))
        }
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_expanded())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[1, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn eval_at_one_is_coefficient_sum() {
        let f = p(&[3, -1, 4, 1]);
        assert_eq!(f.eval_u64(1), BigInt::from(7));
    }

    #[test]
    fn exact_div_examples() {
        // (q^4 + q^2 + 1) / (q^2 + q + 1) = q^2 - q + 1
        let num = p(&[1, 0, 1, 0, 1]);
        let den = p(&[1, 1, 1]);
        assert_eq!(num.exact_div(&den).unwrap(), p(&[1, -1, 1]));
        // (q^2 + 1) / (q + 1) leaves remainder 2
        assert!(matches!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::NotDivisible(_))
        ));
    }

    #[test]
    fn eval_example_from_tables() {
        // q^4 + q^2 + 1 at q = 3
        assert_eq!(p(&[1, 0, 1, 0, 1]).eval_u64(3), BigInt::from(91));
    }

    #[test]
    fn render_expanded_format() {
        assert_eq!(p(&[0, 0, 0, 1, 0, 0, 0, -1, 1]).render_expanded(), "q^8 - q^7 + q^3");
        assert_eq!(p(&[1, 1, 2, 1, 1]).render_expanded(), "q^4 + q^3 + 2q^2 + q + 1");
        assert_eq!(p(&[]).render_expanded(), "0");
        assert_eq!(p(&[-5]).render_expanded(), "-5");
        assert_eq!(p(&[1, -1]).render_expanded(), "-q + 1");
        assert_eq!(p(&[0, 1]).render_expanded(), "q");
        assert_eq!(p(&[0, -3]).render_expanded(), "-3q");
    }

    #[test]
    fn parse_round_trip() {
        for coeffs in [
            vec![1i64, 0, 1, 0, 1],
            vec![0, 0, 0, 1, 0, 0, 0, -1, 1],
            vec![-7],
            vec![0, 1],
            vec![],
            vec![5, -3, 0, 2],
        ] {
            let f = QPolynomial::from_coeffs(coeffs);
            assert_eq!(QPolynomial::parse(&f.render_expanded()).unwrap(), f);
        }
        assert_eq!(QPolynomial::parse("q^4+q^2+1").unwrap(), p(&[1, 0, 1, 0, 1]));
        assert_eq!(QPolynomial::parse("2*q^2 - q").unwrap(), p(&[0, -1, 2]));
        assert!(QPolynomial::parse("").is_err());
        assert!(QPolynomial::parse("q^").is_err());
        assert!(QPolynomial::parse("3 +").is_err());
    }

    #[test]
    fn ring_ops_basics() {
        let a = p(&[1, 2]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, -1, 2]));
        assert_eq!(&a + &b, p(&[0, 3]));
        assert_eq!(&a - &a, QPolynomial::zero());
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }
}
