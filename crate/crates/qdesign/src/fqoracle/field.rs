use crate::designcalc::prime_power_parts;
use crate::{Error, Result};

/// A small finite field `F_{p^e}` with full addition/multiplication tables.
///
/// Element `i` encodes the polynomial `sum c_j x^j` with digits `c_j` of `i`
/// in base `p`, reduced modulo a fixed monic irreducible of degree `e`. The
/// modulus is the lexicographically smallest irreducible, comparing the
/// coefficient sequence low degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    pub q: u16,
    pub p: u16,
    pub e: u32,
    /// Coefficients `c_0 ..= c_e` (monic, so the last entry is 1).
    pub modulus: Vec<u16>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Cap for the public constructor.
pub const MAX_Q: u64 = 16;
/// Cap for internal tower fields used by spreads.
pub(crate) const MAX_INTERNAL_Q: u64 = 1024;

/// Builds `F_{q0}` for a prime power `q0 <= 16`.
pub fn make_field(q0: u64) -> Result<FiniteField> {
    if q0 > MAX_Q {
        return Err(Error::FieldTooLarge(q0, MAX_Q));
    }
    let (p, e) = prime_power_parts(q0).ok_or(Error::NotPrimePower(q0))?;
    FiniteField::build(p as u16, e)
}

/// Internal constructor without the public size cap, for the spread tower
/// `F_{q^k}` over a prime `q`.
pub(crate) fn make_field_internal(p: u64, e: u32) -> Result<FiniteField> {
    let q = p.pow(e);
    if q > MAX_INTERNAL_Q {
        return Err(Error::FieldTooLarge(q, MAX_INTERNAL_Q));
    }
    FiniteField::build(p as u16, e)
}

impl FiniteField {
    fn build(p: u16, e: u32) -> Result<FiniteField> {
        let q = (p as u64).pow(e) as u16;
        let modulus = smallest_irreducible(p, e);
        let qs = q as usize;
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        let mut neg = vec![0u16; qs];
        for a in 0..q {
            for b in 0..q {
                add[a as usize * qs + b as usize] = add_digits(a, b, p, e);
                mul[a as usize * qs + b as usize] = mul_mod(a, b, p, e, &modulus);
            }
        }
        for a in 0..q {
            neg[a as usize] = (0..q)
                .find(|&b| add[a as usize * qs + b as usize] == 0)
                .expect("additive inverse exists");
        }
        let mut inv = vec![0u16; qs];
        for a in 1..q {
            inv[a as usize] = (1..q)
                .find(|&b| mul[a as usize * qs + b as usize] == 1)
                .expect("multiplicative inverse exists");
        }
        Ok(FiniteField {
            q,
            p,
            e,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    #[inline]
    pub fn div(&self, a: u16, b: u16) -> u16 {
        self.mul(a, self.inv(b))
    }
}

fn add_digits(a: u16, b: u16, p: u16, e: u32) -> u16 {
    let mut out = 0u16;
    let mut base = 1u16;
    let (mut a, mut b) = (a, b);
    for _ in 0..e {
        out += ((a + b) % p) * base;
        a /= p;
        b /= p;
        base *= p;
    }
    out
}

fn digits(a: u16, p: u16, e: u32) -> Vec<u16> {
    let mut out = Vec::with_capacity(e as usize);
    let mut a = a;
    for _ in 0..e {
        out.push(a % p);
        a /= p;
    }
    out
}

fn undigits(c: &[u16], p: u16) -> u16 {
    let mut out = 0u16;
    for &d in c.iter().rev() {
        out = out * p + d;
    }
    out
}

fn mul_mod(a: u16, b: u16, p: u16, e: u32, modulus: &[u16]) -> u16 {
    let da = digits(a, p, e);
    let db = digits(b, p, e);
    let mut prod = vec![0u16; 2 * e as usize];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce modulo the monic modulus of degree e
    for i in (e as usize..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &m) in modulus.iter().enumerate().take(e as usize) {
            let idx = i - e as usize + j;
            prod[idx] = (prod[idx] + p * p - (c * m) % p) % p;
        }
    }
    undigits(&prod[..e as usize], p)
}

/// Lexicographically smallest monic irreducible of degree `e` over `F_p`,
/// coefficient sequences compared constant term first.
fn smallest_irreducible(p: u16, e: u32) -> Vec<u16> {
    let total = (p as u64).pow(e);
    for idx in 0..total {
        // idx digits, most significant digit = constant coefficient c_0
        let mut coeffs = vec![0u16; e as usize + 1];
        let mut rest = idx;
        for slot in (0..e as usize).rev() {
            coeffs[slot] = (rest % p as u64) as u16;
            rest /= p as u64;
        }
        coeffs[e as usize] = 1;
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible of every degree exists over F_p")
}

/// Trial division by all monic polynomials of degree `1..=e/2`.
fn is_irreducible(poly: &[u16], p: u16) -> bool {
    let e = poly.len() - 1;
    if e == 1 {
        return true;
    }
    for d in 1..=e / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut div = vec![0u16; d + 1];
            let mut rest = idx;
            for c in div.iter_mut().take(d) {
                *c = (rest % p as u64) as u16;
                rest /= p as u64;
            }
            div[d] = 1;
            if poly_divides(&div, poly, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(div: &[u16], poly: &[u16], p: u16) -> bool {
    let mut rem: Vec<u16> = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d && rem.last() == Some(&0) {
        rem.pop();
    }
    while rem.len() > d && rem.iter().any(|&c| c != 0) {
        let shift = rem.len() - 1 - d;
        let lead = *rem.last().unwrap();
        // divisor is monic
        for (j, &m) in div.iter().enumerate() {
            rem[shift + j] = (rem[shift + j] + p * p - (lead * m) % p) % p;
        }
        while rem.len() > 1 && rem.last() == Some(&0) {
            rem.pop();
        }
        if rem.len() - 1 < d {
            break;
        }
    }
    rem.iter().all(|&c| c == 0)
}
