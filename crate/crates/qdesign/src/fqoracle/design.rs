use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::designcalc::prime_power_parts;
use crate::qpoly::binomial_u64;
use crate::{Error, Result};

use super::field::{make_field, make_field_internal, FiniteField};
use super::subspace::{
    enumerate_subspaces, intersect_subspaces, intersection_dim, orthogonal_complement,
    SubspaceMatrix,
};
use super::{OracleLimits, SampleCfg};

/// A concrete set of `k`-subspaces of `F_q^v`, duplicate-free and sorted.
#[derive(Clone, Debug)]
pub struct DesignInstance {
    pub field: FiniteField,
    pub v: u32,
    pub k: u32,
    blocks: Vec<SubspaceMatrix>,
}

impl DesignInstance {
    pub fn new(
        field: FiniteField,
        v: u32,
        k: u32,
        mut blocks: Vec<SubspaceMatrix>,
    ) -> Result<DesignInstance> {
        if blocks.is_empty() {
            return Err(Error::InvalidParams("a design needs at least one block".into()));
        }
        for b in &blocks {
            if b.q != field.q || b.v != v {
                return Err(Error::AmbientMismatch(b.q, b.v, field.q, v));
            }
            if b.dim() != k {
                return Err(Error::InvalidParams(format!(
                    "block of dimension {} in a {}-design",
                    b.dim(),
                    k
                )));
            }
        }
        blocks.sort();
        let before = blocks.len();
        blocks.dedup();
        if blocks.len() != before {
            return Err(Error::DesignFile("duplicate block".into()));
        }
        Ok(DesignInstance { field, v, k, blocks })
    }

    pub fn blocks(&self) -> &[SubspaceMatrix] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// All `k`-subspaces of `F_q^v`: the trivial `t-(v,k,[v-t k-t])` design for
/// every `t <= k`.
pub fn trivial_design(q0: u64, v: u32, k: u32, limits: &OracleLimits) -> Result<DesignInstance> {
    let field = make_field(q0)?;
    let blocks: Vec<SubspaceMatrix> = enumerate_subspaces(&field, v, k, limits)?.collect();
    DesignInstance::new(field, v, k, blocks)
}

/// A spread: the `1-(v,k,1)` design partitioning the nonzero vectors of
/// `F_q^v` into `k`-subspaces, via the identification of `F_q^v` with
/// `F_{q^k}^{v/k}`. Exists exactly when `k` divides `v`.
pub fn spread_construct(q0: u64, v: u32, k: u32) -> Result<DesignInstance> {
    if k == 0 || v == 0 || v % k != 0 {
        return Err(Error::InvalidParams(format!(
            "spread needs k | v, got v={v}, k={k}"
        )));
    }
    let field = make_field(q0)?;
    let (p, e) = prime_power_parts(q0).expect("field construction checked this");
    let tower = make_field_internal(p, e * k)?;
    let embed = embed_subfield(&field, &tower);
    // x (element index p) generates the tower over F_p, hence over F_q;
    // its first k powers are an F_q-basis of the tower
    let x = tower.p;
    let mut x_pow = vec![1u16; k as usize];
    for l in 1..k as usize {
        x_pow[l] = tower.mul(x_pow[l - 1], x);
    }
    // expansion of a tower element in that basis, as k digits over F_q
    let mut expansion: Vec<Option<Vec<u16>>> = vec![None; tower.q as usize];
    let mut digit_combo = vec![0u16; k as usize];
    loop {
        let mut z = 0u16;
        for (l, &d) in digit_combo.iter().enumerate() {
            z = tower.add(z, tower.mul(embed[d as usize], x_pow[l]));
        }
        assert!(expansion[z as usize].is_none(), "basis expansion collides");
        expansion[z as usize] = Some(digit_combo.clone());
        if !increment(&mut digit_combo, field.q) {
            break;
        }
    }

    let m = (v / k) as usize;
    let mut blocks = Vec::new();
    // canonical representatives of the 1-dim tower subspaces of tower^m:
    // first nonzero coordinate equals 1
    for lead in 0..m {
        let mut tail = vec![0u16; m - lead - 1];
        loop {
            let mut rep = vec![0u16; m];
            rep[lead] = 1;
            rep[lead + 1..].copy_from_slice(&tail);
            let mut rows = Vec::with_capacity(k as usize);
            for &xl in &x_pow {
                let mut row = Vec::with_capacity(v as usize);
                for &coord in &rep {
                    let scaled = tower.mul(xl, coord);
                    row.extend(expansion[scaled as usize].as_ref().expect("total map"));
                }
                rows.push(row);
            }
            let block = SubspaceMatrix::from_rows(&field, v, rows)?;
            assert_eq!(block.dim(), k, "spread block has full rank");
            blocks.push(block);
            if !increment(&mut tail, tower.q) {
                break;
            }
        }
    }
    DesignInstance::new(field, v, k, blocks)
}

/// Image of each element of `sub` inside `tower`, mapping the generator to
/// the smallest root of `sub.modulus` in the tower.
fn embed_subfield(sub: &FiniteField, tower: &FiniteField) -> Vec<u16> {
    if sub.e == 1 {
        // prime subfield: constant digits coincide
        return (0..sub.q).collect();
    }
    let w = (0..tower.q)
        .find(|&cand| eval_poly(tower, &sub.modulus, cand) == 0)
        .expect("subfield modulus splits in the tower");
    (0..sub.q)
        .map(|a| {
            let mut acc = 0u16;
            let mut rest = a;
            let mut w_pow = 1u16;
            for _ in 0..sub.e {
                let digit = rest % sub.p;
                rest /= sub.p;
                acc = tower.add(acc, tower.mul(digit, w_pow));
                w_pow = tower.mul(w_pow, w);
            }
            acc
        })
        .collect()
}

fn eval_poly(field: &FiniteField, coeffs: &[u16], x: u16) -> u16 {
    let mut acc = 0u16;
    for &c in coeffs.iter().rev() {
        acc = field.add(field.mul(acc, x), c % field.p);
    }
    acc
}

/// Odometer increment over digits `0..base`, most significant digit last;
/// false once the odometer wraps to all zeros.
fn increment(digits: &mut [u16], base: u16) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Outcome of checking the design property at strength `t`.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub is_design: bool,
    pub lambda: Option<u64>,
    /// Two `t`-subspaces with different containment counts, when not a
    /// design.
    pub counterexample: Option<Box<(SubspaceMatrix, u64, SubspaceMatrix, u64)>>,
}

/// Counts, for every `t`-subspace, the blocks containing it.
pub fn verify_design(d: &DesignInstance, t: u32, limits: &OracleLimits) -> Result<VerifyReport> {
    if t > d.k {
        return Err(Error::InvalidParams(format!("t={t} exceeds k={}", d.k)));
    }
    let mut first: Option<(SubspaceMatrix, u64)> = None;
    for tsub in enumerate_subspaces(&d.field, d.v, t, limits)? {
        let count = d
            .blocks
            .iter()
            .filter(|b| b.contains(&d.field, &tsub))
            .count() as u64;
        match &first {
            None => first = Some((tsub, count)),
            Some((witness, expected)) => {
                if count != *expected {
                    return Ok(VerifyReport {
                        is_design: false,
                        lambda: None,
                        counterexample: Some(Box::new((
                            witness.clone(),
                            *expected,
                            tsub,
                            count,
                        ))),
                    });
                }
            }
        }
    }
    Ok(VerifyReport {
        is_design: true,
        lambda: first.map(|(_, c)| c),
        counterexample: None,
    })
}

/// Measured intersection vector of `S` in `D` at order `ell`: entry `i`
/// counts the `ell`-subsets of blocks whose common meet intersects `S` in
/// dimension exactly `i` (plain blocks for `ell = 1`).
pub fn measure_alpha(
    d: &DesignInstance,
    s: &SubspaceMatrix,
    ell: u32,
    limits: &OracleLimits,
) -> Result<Vec<u64>> {
    if s.q != d.field.q || s.v != d.v {
        return Err(Error::AmbientMismatch(s.q, s.v, d.field.q, d.v));
    }
    if ell == 0 {
        return Err(Error::InvalidParams("order must be >= 1".into()));
    }
    let mut hist = vec![0u64; d.k as usize + 1];
    if ell == 1 {
        for b in &d.blocks {
            hist[intersection_dim(&d.field, b, s)? as usize] += 1;
        }
        return Ok(hist);
    }
    let tuples = binomial_u64(d.len() as u64, ell as u64);
    if tuples > limits.max_tuples.into() {
        return Err(Error::GuardExceeded {
            what: "block tuple enumeration",
            needed: u128::try_from(&tuples).unwrap_or(u128::MAX),
            limit: limits.max_tuples as u128,
        });
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(ell as usize);
    measure_tuples(d, s, ell as usize, 0, &mut chosen, None, &mut hist)?;
    Ok(hist)
}

fn measure_tuples(
    d: &DesignInstance,
    s: &SubspaceMatrix,
    ell: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    meet: Option<SubspaceMatrix>,
    hist: &mut [u64],
) -> Result<()> {
    if chosen.len() == ell {
        let m = meet.expect("nonempty tuple");
        hist[intersection_dim(&d.field, &m, s)? as usize] += 1;
        return Ok(());
    }
    for idx in from..d.len() {
        let next_meet = match &meet {
            None => d.blocks[idx].clone(),
            Some(m) => intersect_subspaces(&d.field, m, &d.blocks[idx])?,
        };
        chosen.push(idx);
        measure_tuples(d, s, ell, idx + 1, chosen, Some(next_meet), hist)?;
        chosen.pop();
    }
    Ok(())
}

/// Measures `lambda^(ell)_{i,j}`: the number of `ell`-subsets of blocks
/// whose meet contains a fixed `i`-subspace `I` and meets a fixed
/// `j`-subspace `J` (disjoint from `I`) trivially. Samples several random
/// `(I, J)` pairs (or all pairs with `exhaustive`) and checks the count is
/// independent of the choice.
pub fn measure_lambda_ij(
    d: &DesignInstance,
    t: u32,
    i: u32,
    j: u32,
    ell: u32,
    cfg: &SampleCfg,
    limits: &OracleLimits,
) -> Result<u64> {
    if i + j > t {
        return Err(Error::InvalidParams(format!(
            "need i + j <= t, got i={i}, j={j}, t={t}"
        )));
    }
    if ell == 0 {
        return Err(Error::InvalidParams("order must be >= 1".into()));
    }
    let field = &d.field;
    let mut result: Option<u64> = None;
    let mut record = |count: u64| -> Result<()> {
        match result {
            None => {
                result = Some(count);
                Ok(())
            }
            Some(prev) if prev == count => Ok(()),
            Some(prev) => Err(Error::IndependenceViolated {
                i,
                j,
                t,
                a: prev,
                b: count,
            }),
        }
    };

    if cfg.exhaustive {
        for isub in enumerate_subspaces(field, d.v, i, limits)? {
            for jsub in enumerate_subspaces(field, d.v, j, limits)? {
                if intersection_dim(field, &isub, &jsub)? != 0 {
                    continue;
                }
                record(count_lambda_ij(d, &isub, &jsub, ell, limits)?)?;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.samples {
            let isub = random_subspace(field, d.v, i, &mut rng);
            let jsub = loop {
                let cand = random_subspace(field, d.v, j, &mut rng);
                if intersection_dim(field, &isub, &cand)? == 0 {
                    break cand;
                }
            };
            record(count_lambda_ij(d, &isub, &jsub, ell, limits)?)?;
        }
    }
    result.ok_or_else(|| Error::InvalidParams("no (I,J) pair sampled".into()))
}

fn count_lambda_ij(
    d: &DesignInstance,
    isub: &SubspaceMatrix,
    jsub: &SubspaceMatrix,
    ell: u32,
    limits: &OracleLimits,
) -> Result<u64> {
    if ell == 1 {
        let mut count = 0;
        for b in &d.blocks {
            if b.contains(&d.field, isub) && intersection_dim(&d.field, b, jsub)? == 0 {
                count += 1;
            }
        }
        return Ok(count);
    }
    let tuples = binomial_u64(d.len() as u64, ell as u64);
    if tuples > limits.max_tuples.into() {
        return Err(Error::GuardExceeded {
            what: "block tuple enumeration",
            needed: u128::try_from(&tuples).unwrap_or(u128::MAX),
            limit: limits.max_tuples as u128,
        });
    }
    let mut count = 0u64;
    let mut chosen = Vec::with_capacity(ell as usize);
    count_tuples(d, isub, jsub, ell as usize, 0, &mut chosen, None, &mut count)?;
    Ok(count)
}

#[allow(clippy::too_many_arguments)]
fn count_tuples(
    d: &DesignInstance,
    isub: &SubspaceMatrix,
    jsub: &SubspaceMatrix,
    ell: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    meet: Option<SubspaceMatrix>,
    count: &mut u64,
) -> Result<()> {
    if chosen.len() == ell {
        let m = meet.expect("nonempty tuple");
        if m.contains(&d.field, isub) && intersection_dim(&d.field, &m, jsub)? == 0 {
            *count += 1;
        }
        return Ok(());
    }
    for idx in from..d.len() {
        let next_meet = match &meet {
            None => d.blocks[idx].clone(),
            Some(m) => intersect_subspaces(&d.field, m, &d.blocks[idx])?,
        };
        chosen.push(idx);
        count_tuples(d, isub, jsub, ell, idx + 1, chosen, Some(next_meet), count)?;
        chosen.pop();
    }
    Ok(())
}

fn random_subspace(field: &FiniteField, v: u32, dim: u32, rng: &mut ChaCha8Rng) -> SubspaceMatrix {
    loop {
        let rows: Vec<Vec<u16>> = (0..dim)
            .map(|_| (0..v).map(|_| rng.gen_range(0..field.q)).collect())
            .collect();
        let m = SubspaceMatrix::from_rows(field, v, rows).expect("entries are in range");
        if m.dim() == dim {
            return m;
        }
    }
}

/// The dual instance: every block replaced by its orthogonal complement.
pub fn dualize(d: &DesignInstance) -> DesignInstance {
    let blocks: Vec<SubspaceMatrix> = d
        .blocks
        .iter()
        .map(|b| orthogonal_complement(&d.field, b))
        .collect();
    DesignInstance::new(d.field.clone(), d.v, d.v - d.k, blocks)
        .expect("complement preserves distinctness")
}
