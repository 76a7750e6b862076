//! Exact arithmetic in `Z[q]` with q-combinatorial constructors.
//!
//! The polynomial type [`QPolynomial`] is the universal scalar of the
//! symbolic mode. On top of it this module provides the q-integer `[n]`,
//! the q-factorial `[n]!`, Gaussian binomial coefficients `[n k]`,
//! cyclotomic polynomials `Phi_d`, and factorization of table entries into
//! `q^a * prod Phi_d * cofactor` form.

mod factor;
mod poly;
mod scalar;

pub use factor::{factor_cyclotomic, FactoredForm};
pub use poly::QPolynomial;
pub use scalar::{PolyStyle, QMode, Scalar};

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The q-integer `[n] = 1 + q + ... + q^(n-1)`; zero polynomial for `n = 0`.
pub fn q_integer(n: u32) -> QPolynomial {
    QPolynomial::from_coeffs(vec![BigInt::one(); n as usize])
}

/// The q-factorial `[n]! = [1][2]...[n]`; 1 for `n = 0`.
pub fn q_factorial(n: u32) -> QPolynomial {
    let mut acc = QPolynomial::one();
    for i in 1..=n {
        acc = &acc * &q_integer(i);
    }
    acc
}

/// The Gaussian binomial coefficient `[n k]` as a polynomial in `q`:
/// `[n]! / ([k]! [n-k]!)` for `k` in `0..=n`, the zero polynomial otherwise.
/// The division is exact by construction; a remainder would be an invariant
/// violation and panics.
pub fn gauss_poly(n: u32, k: i64) -> QPolynomial {
    if k < 0 || k > n as i64 {
        return QPolynomial::zero();
    }
    let k = k as u32;
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), QPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    // symmetric in k and n-k; one canonical cache key
    let key = (n, k.min(n - k));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let num = q_factorial(n);
    let den = &q_factorial(key.1) * &q_factorial(n - key.1);
    let result = num
        .exact_div(&den)
        .expect("[n]! is divisible by [k]![n-k]!");
    cache.lock().unwrap().insert(key, result.clone());
    result
}

/// The d-th cyclotomic polynomial, by iterated exact division of `q^d - 1`
/// by `Phi_e` over all proper divisors `e` of `d`.
pub fn cyclotomic(d: u32) -> QPolynomial {
    assert!(d >= 1, "cyclotomic index must be >= 1");
    static CACHE: OnceLock<Mutex<HashMap<u32, QPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&d) {
        return hit.clone();
    }
    // q^d - 1
    let mut coeffs = vec![BigInt::zero(); d as usize + 1];
    coeffs[0] = -BigInt::one();
    coeffs[d as usize] = BigInt::one();
    let mut acc = QPolynomial::from_coeffs(coeffs);
    for e in 1..d {
        if d % e == 0 {
            acc = acc
                .exact_div(&cyclotomic(e))
                .expect("Phi_e divides q^d - 1 for e | d");
        }
    }
    cache.lock().unwrap().insert(d, acc.clone());
    acc
}

/// Numeric Gaussian binomial `[n k]` at `q0 >= 1`, computed directly by the
/// stepwise product formula (ordinary binomial coefficient at `q0 = 1`).
pub fn gauss_eval(n: u64, k: i64, q0: u64) -> BigInt {
    assert!(q0 >= 1, "evaluation point must be >= 1");
    if k < 0 || k > n as i64 {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    if q0 == 1 {
        return binomial_u64(n, k);
    }
    let q = BigInt::from(q0);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= q.pow((n - k + i) as u32) - 1;
        let (quot, rem) =
            num_integer::Integer::div_rem(&acc, &(q.pow(i as u32) - 1));
        debug_assert!(rem.is_zero());
        acc = quot;
    }
    acc
}

/// Ordinary binomial coefficient `C(n, k)` as a big integer.
pub fn binomial_u64(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}
