use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::{Error, Result};

use super::cyclotomic;
use super::poly::QPolynomial;

/// A polynomial written as `q^a * prod Phi_d^m * cofactor`.
///
/// The cofactor collects whatever is left after extracting the maximal
/// q-power and all cyclotomic factors `Phi_d` with `d` up to one more than
/// the degree; it is exactly 1 when the input is a pure cyclotomic product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredForm {
    pub q_power: usize,
    /// Cyclotomic index -> multiplicity, ascending.
    pub cyclotomics: BTreeMap<u32, u32>,
    pub cofactor: QPolynomial,
}

impl FactoredForm {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> QPolynomial {
        let mut acc = QPolynomial::q_power(self.q_power);
        for (&d, &m) in &self.cyclotomics {
            let phi = cyclotomic(d);
            for _ in 0..m {
                acc = &acc * &phi;
            }
        }
        &acc * &self.cofactor
    }

    /// Factored text form, e.g. `q^3*(q^5 - q^4 + 1)` or `Phi2*Phi4*Phi6*Phi7`.
    /// Factors appear as: constant, q-power, `Phi_d` ascending in `d`
    /// (multiplicities as `^m`), then a parenthesized polynomial cofactor.
    pub fn render(&self) -> String {
        let negative = self
            .cofactor
            .leading_coeff()
            .is_some_and(|c| c.is_negative());
        let cof = if negative {
            -&self.cofactor
        } else {
            self.cofactor.clone()
        };
        let mut parts: Vec<String> = Vec::new();
        if cof.is_constant() && !cof.is_one() && !cof.is_zero() {
            parts.push(cof.coeff(0).to_string());
        }
        if self.q_power == 1 {
            parts.push("q".to_string());
        } else if self.q_power > 1 {
            parts.push(format!("q^{}", self.q_power));
        }
        for (&d, &m) in &self.cyclotomics {
            if m == 1 {
                parts.push(format!("Phi{}", d));
            } else {
                parts.push(format!("Phi{}^{}", d, m));
            }
        }
        if !cof.is_constant() {
            parts.push(format!("({})", cof.render_expanded()));
        }
        let body = if parts.is_empty() {
            if cof.is_zero() {
                "0".to_string()
            } else {
                "1".to_string()
            }
        } else {
            parts.join("*")
        };
        if negative {
            format!("-{}", body)
        } else {
            body
        }
    }
}

impl fmt::Display for FactoredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Extracts the maximal q-power, then trial-divides by `Phi_d` (repeatedly,
/// to full multiplicity) for every index `d` whose degree `phi(d)` fits in
/// the remaining polynomial. What remains is the cofactor, which therefore
/// has no cyclotomic divisor at all.
pub fn factor_cyclotomic(p: &QPolynomial) -> Result<FactoredForm> {
    if p.is_zero() {
        return Err(Error::FactorZero);
    }
    let q_power = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut rest = if q_power > 0 {
        let shifted: Vec<_> = p.coeffs()[q_power..].to_vec();
        QPolynomial::from_coeffs(shifted)
    } else {
        p.clone()
    };
    let mut cyclotomics = BTreeMap::new();
    let deg0 = rest.degree().unwrap_or(0);
    // phi(d) >= sqrt(d) for d > 6, so indices beyond max(6, deg^2) cannot
    // contribute a factor of degree <= deg
    let totients = totient_sieve(6usize.max(deg0 * deg0));
    let mut d = 1u32;
    loop {
        let deg = rest.degree().unwrap_or(0);
        if deg == 0 || d as usize > 6usize.max(deg * deg) {
            break;
        }
        if totients[d as usize] <= deg {
            let phi = cyclotomic(d);
            while let Ok(quot) = rest.exact_div(&phi) {
                *cyclotomics.entry(d).or_insert(0) += 1;
                rest = quot;
            }
        }
        d += 1;
    }
    Ok(FactoredForm {
        q_power,
        cyclotomics,
        cofactor: rest,
    })
}

/// `totients[n] = phi(n)` for `n = 0..=limit`.
fn totient_sieve(limit: usize) -> Vec<usize> {
    let mut phi: Vec<usize> = (0..=limit).collect();
    for i in 2..=limit {
        if phi[i] == i {
            let mut m = i;
            while m <= limit {
                phi[m] -= phi[m] / i;
                m += i;
            }
        }
    }
    phi
}
