//! Intersection numbers of subspace designs.
//!
//! For a `t-(v,k,lambda)_q` design `D` and a subspace `S` of dimension `s`,
//! the intersection vector `(alpha_0, ..., alpha_k)` counts blocks by the
//! dimension of their meet with `S`. This module builds the Mendelsohn
//! linear system those numbers satisfy, solves it into Koehler affine forms
//! by inverting the upper triangular q-Pascal matrix, derives the unique
//! vectors in the ranges `s <= t` and `s >= v-t`, enumerates all feasible
//! vectors in numeric mode, and turns infeasibility into nonexistence
//! certificates.

mod fano;
mod family;

pub use fano::{fano_derived_design, fano_distribution, fano_params, fano_structure_graph,
               DistributionRow, FanoDerived, StructureEdge, StructureGraph};
pub use family::{family_params, scan_family, Family, ScanEntry, ScanOutcome};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::designcalc::{lambda_table, DesignParams, LambdaTable};
use crate::qpoly::{QMode, Scalar};
use crate::{Error, Result};

/// The intersection vector `(alpha_0, ..., alpha_k)` of a subspace of
/// dimension `s`, at intersection order `order` (1 = plain).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionVector {
    pub alphas: Vec<Scalar>,
    pub s: u32,
    pub order: u32,
}

impl IntersectionVector {
    pub fn k(&self) -> u32 {
        self.alphas.len() as u32 - 1
    }

    /// Numeric vectors as plain big integers, if in numeric mode.
    pub fn as_ints(&self) -> Option<Vec<BigInt>> {
        self.alphas.iter().map(|a| a.as_int().cloned()).collect()
    }

    pub fn render(&self, style: crate::qpoly::PolyStyle) -> String {
        let parts: Vec<String> = self.alphas.iter().map(|a| a.render(style)).collect();
        format!("({})", parts.join(", "))
    }
}

/// The `t+1` Mendelsohn equations for dimension `s`, as an explicit linear
/// system over the columns `alpha_0 .. alpha_k`:
/// row `i` is `sum_j [j i] alpha_j = [s i] * rhs_i` with `rhs_i = lambda_i`
/// (order 1) or `C(lambda_i, order)`.
#[derive(Clone, Debug)]
pub struct MendelsohnSystem {
    pub s: u32,
    pub t: u32,
    pub k: u32,
    pub order: u32,
    pub rows: Vec<Vec<Scalar>>,
    pub rhs: Vec<Scalar>,
}

impl MendelsohnSystem {
    /// Exact check of every row against a vector.
    pub fn satisfied_by(&self, vector: &IntersectionVector) -> bool {
        if vector.alphas.len() != self.k as usize + 1 {
            return false;
        }
        self.rows.iter().zip(&self.rhs).all(|(row, rhs)| {
            let mut acc = row[0].mul(&vector.alphas[0]);
            for (c, a) in row.iter().zip(&vector.alphas).skip(1) {
                acc = acc.add(&c.mul(a));
            }
            acc == *rhs
        })
    }
}

pub fn mendelsohn_system(p: &DesignParams, s: u32, order: u32) -> Result<MendelsohnSystem> {
    if s > p.v {
        return Err(Error::InvalidParams(format!("s={s} exceeds v={}", p.v)));
    }
    if order == 0 {
        return Err(Error::InvalidParams("order must be >= 1".into()));
    }
    if order >= 2 && p.mode.is_symbolic() {
        return Err(Error::NumericOnly {
            what: "high-order Mendelsohn right sides",
        });
    }
    let table = admissible_table(p)?;
    let m = p.mode;
    let mut rows = Vec::with_capacity(p.t as usize + 1);
    let mut rhs = Vec::with_capacity(p.t as usize + 1);
    for i in 0..=p.t {
        rows.push((0..=p.k).map(|j| m.gauss(j, i as i64)).collect());
        let level = if order == 1 {
            table.values[i as usize].clone()
        } else {
            table.values[i as usize].binom(order)?
        };
        rhs.push(m.gauss(s, i as i64).mul(&level));
    }
    Ok(MendelsohnSystem {
        s,
        t: p.t,
        k: p.k,
        order,
        rows,
        rhs,
    })
}

/// The solved Mendelsohn system: affine expressions
/// `alpha_i = c_i + sum_{j=t+1}^{k} g_{i,j} alpha_j` for `i = 0..=t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoehlerForm {
    pub s: u32,
    pub t: u32,
    pub k: u32,
    /// `c_0 .. c_t`.
    pub constants: Vec<Scalar>,
    /// `coeffs[i][j - (t+1)]` is `g_{i,j}`.
    pub coeffs: Vec<Vec<Scalar>>,
}

impl KoehlerForm {
    pub fn constant(&self, i: u32) -> &Scalar {
        &self.constants[i as usize]
    }

    /// `g_{i,j}` for `t+1 <= j <= k`.
    pub fn coeff(&self, i: u32, j: u32) -> &Scalar {
        &self.coeffs[i as usize][(j - self.t - 1) as usize]
    }

    /// Substitutes values for the free variables `alpha_{t+1} .. alpha_k`
    /// and assembles the full intersection vector.
    pub fn eval(&self, free: &[Scalar]) -> Result<IntersectionVector> {
        if free.len() != (self.k - self.t) as usize {
            return Err(Error::InvalidParams(format!(
                "expected {} free values, got {}",
                self.k - self.t,
                free.len()
            )));
        }
        let mut alphas = Vec::with_capacity(self.k as usize + 1);
        for i in 0..=self.t as usize {
            let mut acc = self.constants[i].clone();
            for (g, a) in self.coeffs[i].iter().zip(free) {
                acc = acc.add(&g.mul(a));
            }
            alphas.push(acc);
        }
        alphas.extend(free.iter().cloned());
        Ok(IntersectionVector {
            alphas,
            s: self.s,
            order: 1,
        })
    }
}

/// `(-1)^parity * value`.
fn signed(parity: u32, value: Scalar) -> Scalar {
    if parity % 2 == 1 {
        value.neg()
    } else {
        value
    }
}

fn choose2(n: u32) -> u64 {
    if n < 2 {
        0
    } else {
        (n as u64) * (n as u64 - 1) / 2
    }
}

fn admissible_table(p: &DesignParams) -> Result<LambdaTable> {
    let table = lambda_table(p);
    if !table.admissible {
        return Err(Error::NotAdmissible);
    }
    Ok(table)
}

/// Koehler forms by the closed formulas
/// `c_i = [s i] sum_{j=i}^{t} (-1)^{j-i} q^{C(j-i,2)} [s-i j-i] lambda_j` and
/// `g_{i,j} = (-1)^{t+1-i} q^{C(t+1-i,2)} [j i] [j-i-1 t-i]`.
pub fn koehler_forms(p: &DesignParams, s: u32) -> Result<KoehlerForm> {
    if s > p.v {
        return Err(Error::InvalidParams(format!("s={s} exceeds v={}", p.v)));
    }
    let table = admissible_table(p)?;
    let m = p.mode;
    let mut constants = Vec::new();
    let mut coeffs = Vec::new();
    for i in 0..=p.t {
        let mut sum = m.zero();
        for j in i..=p.t {
            let term = m
                .q_pow(choose2(j - i))
                .mul(&m.gauss(s.saturating_sub(i), (j - i) as i64))
                .mul(&table.values[j as usize]);
            sum = sum.add(&signed(j - i, term));
        }
        // [s i] vanishes for i > s, making the saturating_sub harmless there
        constants.push(m.gauss(s, i as i64).mul(&sum));
        let row: Vec<Scalar> = (p.t + 1..=p.k)
            .map(|j| {
                let g = m
                    .q_pow(choose2(p.t + 1 - i))
                    .mul(&m.gauss(j, i as i64))
                    .mul(&m.gauss(j - i - 1, (p.t - i) as i64));
                signed(p.t + 1 - i, g)
            })
            .collect();
        coeffs.push(row);
    }
    Ok(KoehlerForm {
        s,
        t: p.t,
        k: p.k,
        constants,
        coeffs,
    })
}

/// The upper triangular q-Pascal matrix `P = ([j i])` for `i, j = 0..=t`.
pub fn pascal_matrix(mode: QMode, t: u32) -> Vec<Vec<Scalar>> {
    (0..=t)
        .map(|i| (0..=t).map(|j| mode.gauss(j, i as i64)).collect())
        .collect()
}

/// Its explicit inverse `P^{-1} = ((-1)^{j-i} q^{C(j-i,2)} [j i])`.
pub fn pascal_inverse(mode: QMode, t: u32) -> Vec<Vec<Scalar>> {
    (0..=t)
        .map(|i| {
            (0..=t)
                .map(|j| {
                    if j < i {
                        mode.zero()
                    } else {
                        signed(j - i, mode.q_pow(choose2(j - i)).mul(&mode.gauss(j, i as i64)))
                    }
                })
                .collect()
        })
        .collect()
}

/// Koehler forms by explicit multiplication with `P^{-1}`:
/// constants are `P^{-1} b`, coefficients `-(P^{-1} A)`. Must agree with
/// [`koehler_forms`] exactly; the two routes cross-check each other.
pub fn koehler_forms_via_inverse(p: &DesignParams, s: u32) -> Result<KoehlerForm> {
    if s > p.v {
        return Err(Error::InvalidParams(format!("s={s} exceeds v={}", p.v)));
    }
    let table = admissible_table(p)?;
    let m = p.mode;
    let inv = pascal_inverse(m, p.t);
    let b: Vec<Scalar> = (0..=p.t)
        .map(|nu| m.gauss(s, nu as i64).mul(&table.values[nu as usize]))
        .collect();
    let mut constants = Vec::new();
    let mut coeffs = Vec::new();
    for i in 0..=p.t as usize {
        let mut c = m.zero();
        for nu in 0..=p.t as usize {
            c = c.add(&inv[i][nu].mul(&b[nu]));
        }
        constants.push(c);
        let row: Vec<Scalar> = (p.t + 1..=p.k)
            .map(|j| {
                let mut acc = m.zero();
                for nu in 0..=p.t as usize {
                    acc = acc.add(&inv[i][nu].mul(&m.gauss(j, nu as i64)));
                }
                acc.neg()
            })
            .collect();
        coeffs.push(row);
    }
    Ok(KoehlerForm {
        s,
        t: p.t,
        k: p.k,
        constants,
        coeffs,
    })
}

/// The unique intersection vector in the range `s <= t` or `s >= v-t`.
///
/// Plain order: `alpha_i = q^{(s-i)(k-i)} [s i][v-s k-i] / [v-t k-t] * lambda`.
/// Order `ell >= 2` (numeric only) is available for `s <= t`, where
/// `alpha_i = [s i] * lambda^(ell)_{i,s-i}`; the opposite range has no such
/// formula and is rejected.
pub fn unique_vector(p: &DesignParams, s: u32, order: u32) -> Result<IntersectionVector> {
    if s > p.v {
        return Err(Error::InvalidParams(format!("s={s} exceeds v={}", p.v)));
    }
    if order == 0 {
        return Err(Error::InvalidParams("order must be >= 1".into()));
    }
    let m = p.mode;
    if order == 1 {
        if !(s <= p.t || s + p.t >= p.v) {
            return Err(Error::DimensionRange { s });
        }
        let _ = admissible_table(p)?;
        let den = m.gauss(p.v - p.t, (p.k - p.t) as i64);
        let mut alphas = Vec::with_capacity(p.k as usize + 1);
        for i in 0..=p.k {
            if i > s || p.k - i > p.v - s {
                alphas.push(m.zero());
                continue;
            }
            let num = m
                .q_pow(((s - i) as u64) * ((p.k - i) as u64))
                .mul(&m.gauss(s, i as i64))
                .mul(&m.gauss(p.v - s, (p.k - i) as i64))
                .mul(&p.lambda);
            alphas.push(num.exact_div(&den)?);
        }
        Ok(IntersectionVector { alphas, s, order })
    } else {
        if s > p.t {
            return Err(Error::DimensionRange { s });
        }
        let lij = crate::designcalc::lambda_ij(p, order)?;
        let mut alphas = Vec::with_capacity(p.k as usize + 1);
        for i in 0..=p.k {
            if i > s {
                alphas.push(m.zero());
            } else {
                let entry = lij
                    .get(i, s - i)
                    .expect("i + (s - i) = s <= t is stored")
                    .clone();
                alphas.push(m.gauss(s, i as i64).mul(&entry));
            }
        }
        Ok(IntersectionVector { alphas, s, order })
    }
}

/// Budget for the feasibility search.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Maximum number of partial assignments visited.
    pub max_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_nodes: 100_000_000,
        }
    }
}

/// The upper bounds the feasibility search applies to the free variables
/// `alpha_{t+1} ..= alpha_k`, one per variable. Combines the row-0 budget
/// `lambda_0`, the dimension constraints (`alpha_j = 0` for `j > s` or
/// `k - j > v - s`), the containment bound
/// `alpha_k <= floor(lambda [s t] / [k t])` for `s >= k`, and the Steiner
/// bound `alpha_k <= 1` when additionally `lambda = 1` and `2k - s >= t`.
pub fn feasibility_caps(p: &DesignParams, s: u32) -> Result<Vec<(u32, BigInt)>> {
    let QMode::Numeric(q0) = p.mode else {
        return Err(Error::NumericOnly {
            what: "feasibility enumeration",
        });
    };
    let table = admissible_table(p)?;
    let lambda0 = table.values[0].as_int().expect("numeric mode").clone();
    let mut caps = Vec::with_capacity((p.k - p.t) as usize);
    for j in p.t + 1..=p.k {
        let mut cap = lambda0.clone();
        if j > s || (p.k - j) as i64 > (p.v - s) as i64 {
            cap = BigInt::zero();
        }
        if j == p.k && s >= p.k {
            let contain = p.lambda.as_int().unwrap()
                * crate::qpoly::gauss_eval(s as u64, p.t as i64, q0);
            let per_block = crate::qpoly::gauss_eval(p.k as u64, p.t as i64, q0);
            cap = cap.min(contain / per_block); // floor, both positive
            if p.lambda.is_one() && 2 * p.k >= s && 2 * p.k - s >= p.t {
                cap = cap.min(BigInt::one());
            }
        }
        caps.push((j, cap));
    }
    Ok(caps)
}

/// All nonnegative integer assignments of the free variables
/// `alpha_{t+1} .. alpha_k` whose Koehler values `alpha_0 .. alpha_t` are
/// all nonnegative, in lexicographic order of the free tuple. The search is
/// pruned by [`feasibility_caps`] and the running row-0 budget.
pub fn enumerate_feasible(
    p: &DesignParams,
    s: u32,
    limits: &SearchLimits,
) -> Result<Vec<IntersectionVector>> {
    let table = admissible_table(p)?;
    let caps: Vec<BigInt> = feasibility_caps(p, s)?
        .into_iter()
        .map(|(_, cap)| cap)
        .collect();
    let forms = koehler_forms(p, s)?;
    let lambda0 = table.values[0]
        .as_int()
        .expect("numeric mode")
        .clone();
    let free_count = (p.k - p.t) as usize;

    let mut out = Vec::new();
    let mut free: Vec<BigInt> = vec![BigInt::zero(); free_count];
    let mut nodes: u64 = 0;
    search(
        &forms, &caps, &lambda0, 0, &BigInt::zero(), &mut free, &mut out, &mut nodes,
        limits.max_nodes,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    forms: &KoehlerForm,
    caps: &[BigInt],
    lambda0: &BigInt,
    idx: usize,
    used: &BigInt,
    free: &mut Vec<BigInt>,
    out: &mut Vec<IntersectionVector>,
    nodes: &mut u64,
    max_nodes: u64,
) -> Result<()> {
    *nodes += 1;
    if *nodes > max_nodes {
        return Err(Error::GuardExceeded {
            what: "feasibility search nodes",
            needed: *nodes as u128,
            limit: max_nodes as u128,
        });
    }
    if idx == caps.len() {
        let values: Vec<Scalar> = free.iter().map(|v| Scalar::Num(v.clone())).collect();
        let vector = forms.eval(&values)?;
        let ok = vector.alphas[..=forms.t as usize]
            .iter()
            .all(|a| a.is_negative() == Some(false));
        if ok {
            out.push(vector);
        }
        return Ok(());
    }
    let budget = lambda0 - used;
    let cap = caps[idx].clone().min(budget);
    let mut value = BigInt::zero();
    while value <= cap {
        free[idx] = value.clone();
        let next_used = used + &value;
        search(
            forms, caps, lambda0, idx + 1, &next_used, free, out, nodes, max_nodes,
        )?;
        value += 1;
    }
    free[idx] = BigInt::zero();
    Ok(())
}

/// How a nonexistence check concluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertStage {
    /// A Koehler row with negative free-variable coefficients bounds some
    /// `alpha_i` strictly below zero for a block.
    KoehlerNegativity,
    /// Exactly one feasible block vector exists, it forces at least two
    /// blocks disjoint from a block, and forbids the meeting dimensions
    /// those two blocks must realize inside the complementary space.
    UniqueVectorPigeonhole,
    /// No verdict.
    Feasible,
}

/// Proof data for a Koehler-negativity verdict: with `alpha_k = 1` and all
/// other free terms nonpositive, `alpha_index <= constant - |block_coeff| =
/// upper_bound < 0`.
#[derive(Clone, Debug)]
pub struct NegativityWitness {
    pub index: u32,
    pub constant: Scalar,
    pub block_coeff: Scalar,
    pub upper_bound: Scalar,
}

/// Re-checkable record of a nonexistence pipeline run.
#[derive(Clone, Debug)]
pub struct NonexistenceCertificate {
    pub params: DesignParams,
    pub lambda: LambdaTable,
    pub stage: CertStage,
    pub forced_vector: Option<IntersectionVector>,
    pub negativity: Option<NegativityWitness>,
    /// Number of feasible block vectors found when stage 2 ran.
    pub feasible_blocks: Option<usize>,
}

impl NonexistenceCertificate {
    pub fn realizable_ruled_out(&self) -> bool {
        matches!(
            self.stage,
            CertStage::KoehlerNegativity | CertStage::UniqueVectorPigeonhole
        )
    }
}

/// Nonexistence pipeline for admissible numeric parameters, looking at the
/// intersection vector of a block (`s = k`, `alpha_k = 1`):
///
/// 1. For each Koehler row `i` with `t+1-i` odd (all free coefficients
///    negative), the largest possible `alpha_i` is `c_i - |g_{i,k}|`; if
///    that is negative the parameters are not realizable.
/// 2. Otherwise enumerate the feasible block vectors. If exactly one
///    remains and it shows `alpha_0 >= 2` while `alpha_j = 0` for all
///    `j` in `[2k-(v-k), k)`, two blocks disjoint from a block would have
///    to meet in one of exactly those dimensions: not realizable.
/// 3. Otherwise: no verdict.
pub fn nonexistence_check(
    p: &DesignParams,
    limits: &SearchLimits,
) -> Result<NonexistenceCertificate> {
    let QMode::Numeric(_) = p.mode else {
        return Err(Error::NumericOnly {
            what: "nonexistence check",
        });
    };
    let lambda = admissible_table(p)?;

    // stage 1
    if p.k > p.t {
        let forms = koehler_forms(p, p.k)?;
        for i in 0..=p.t {
            if (p.t + 1 - i) % 2 == 0 {
                continue;
            }
            let g = forms.coeff(i, p.k).clone();
            let bound = forms.constant(i).add(&g);
            if bound.is_negative() == Some(true) {
                return Ok(NonexistenceCertificate {
                    params: p.clone(),
                    lambda,
                    stage: CertStage::KoehlerNegativity,
                    forced_vector: None,
                    negativity: Some(NegativityWitness {
                        index: i,
                        constant: forms.constant(i).clone(),
                        block_coeff: g,
                        upper_bound: bound,
                    }),
                    feasible_blocks: None,
                });
            }
        }
    }

    // stage 2
    let one = BigInt::one();
    let blocks: Vec<IntersectionVector> = enumerate_feasible(p, p.k, limits)?
        .into_iter()
        .filter(|v| v.alphas[p.k as usize].as_int() == Some(&one))
        .collect();
    if blocks.len() == 1 {
        let v = &blocks[0];
        let alpha0_ge_2 = v.alphas[0].as_int().unwrap() >= &BigInt::from(2);
        let lo = (3 * p.k as i64 - p.v as i64).max(0) as u32;
        let zeros = (lo..p.k).all(|j| v.alphas[j as usize].is_zero());
        if alpha0_ge_2 && lo < p.k && zeros {
            return Ok(NonexistenceCertificate {
                params: p.clone(),
                lambda,
                stage: CertStage::UniqueVectorPigeonhole,
                forced_vector: Some(v.clone()),
                negativity: None,
                feasible_blocks: Some(1),
            });
        }
    }
    Ok(NonexistenceCertificate {
        params: p.clone(),
        lambda,
        stage: CertStage::Feasible,
        forced_vector: blocks.first().cloned().filter(|_| blocks.len() == 1),
        negativity: None,
        feasible_blocks: Some(blocks.len()),
    })
}

#[cfg(test)]
mod tests;
