use crate::qpoly::gauss_eval;
use crate::{Error, Result};

use super::field::FiniteField;
use super::OracleLimits;

/// A subspace of `F_q^v` as its unique reduced row echelon basis matrix.
///
/// Canonical form: pivot columns strictly increasing, pivot entries 1,
/// zeros above and below pivots. Two equal subspaces compare equal
/// entrywise, so set semantics are plain `Ord`/`Eq`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubspaceMatrix {
    pub q: u16,
    pub v: u32,
    rows: Vec<Vec<u16>>,
}

impl SubspaceMatrix {
    /// Canonicalizes arbitrary spanning rows; the result's dimension is the
    /// rank of the input.
    pub fn from_rows(field: &FiniteField, v: u32, rows: Vec<Vec<u16>>) -> Result<SubspaceMatrix> {
        for row in &rows {
            if row.len() != v as usize {
                return Err(Error::InvalidParams(format!(
                    "row length {} does not match v={}",
                    row.len(),
                    v
                )));
            }
            if row.iter().any(|&x| x >= field.q) {
                return Err(Error::InvalidParams("entry outside the field".into()));
            }
        }
        let mut rows = rows;
        rref_in_place(field, &mut rows);
        Ok(SubspaceMatrix {
            q: field.q,
            v,
            rows,
        })
    }

    /// The zero subspace (empty matrix).
    pub fn zero_space(q: u16, v: u32) -> SubspaceMatrix {
        SubspaceMatrix {
            q,
            v,
            rows: Vec::new(),
        }
    }

    /// The full space (identity matrix).
    pub fn full_space(q: u16, v: u32) -> SubspaceMatrix {
        let rows = (0..v as usize)
            .map(|i| {
                let mut row = vec![0u16; v as usize];
                row[i] = 1;
                row
            })
            .collect();
        SubspaceMatrix { q, v, rows }
    }

    pub fn dim(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn rows(&self) -> &[Vec<u16>] {
        &self.rows
    }

    pub(crate) fn same_ambient(&self, other: &SubspaceMatrix) -> Result<()> {
        if self.q != other.q || self.v != other.v {
            return Err(Error::AmbientMismatch(self.q, self.v, other.q, other.v));
        }
        Ok(())
    }

    /// True iff `other` is contained in `self` (reduce each row of `other`
    /// against this RREF basis).
    pub fn contains(&self, field: &FiniteField, other: &SubspaceMatrix) -> bool {
        other
            .rows
            .iter()
            .all(|row| reduce_against(field, row.clone(), &self.rows).iter().all(|&x| x == 0))
    }
}

/// In-place reduced row echelon form; returns the rank and truncates zero
/// rows away.
pub(crate) fn rref_in_place(field: &FiniteField, rows: &mut Vec<Vec<u16>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let v = rows[0].len();
    let mut pivot_row = 0;
    for col in 0..v {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = field.inv(rows[pivot_row][col]);
        for x in rows[pivot_row].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..v {
                    let sub = field.mul(factor, rows[pivot_row][c]);
                    rows[r][c] = field.sub(rows[r][c], sub);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|&x| x != 0));
    // rows are already sorted by pivot column after elimination
    rows.len()
}

/// Reduces one row against an RREF basis.
fn reduce_against(field: &FiniteField, mut row: Vec<u16>, basis: &[Vec<u16>]) -> Vec<u16> {
    for b in basis {
        let pivot = b.iter().position(|&x| x != 0).expect("basis rows nonzero");
        if row[pivot] != 0 {
            let factor = row[pivot];
            for (x, &bx) in row.iter_mut().zip(b) {
                *x = field.sub(*x, field.mul(factor, bx));
            }
        }
    }
    row
}

/// `dim(A) + dim(B) - rank(A stacked on B)`.
pub fn intersection_dim(
    field: &FiniteField,
    a: &SubspaceMatrix,
    b: &SubspaceMatrix,
) -> Result<u32> {
    a.same_ambient(b)?;
    let mut stacked: Vec<Vec<u16>> = a.rows.iter().chain(b.rows.iter()).cloned().collect();
    let rank = rref_in_place(field, &mut stacked) as u32;
    Ok(a.dim() + b.dim() - rank)
}

/// Null space of the basis matrix under the standard dot product,
/// canonicalized: the orthogonal complement, of dimension `v - dim`.
pub fn orthogonal_complement(field: &FiniteField, a: &SubspaceMatrix) -> SubspaceMatrix {
    let v = a.v as usize;
    if a.rows.is_empty() {
        return SubspaceMatrix::full_space(a.q, a.v);
    }
    let pivots: Vec<usize> = a
        .rows
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("canonical row"))
        .collect();
    let mut basis = Vec::with_capacity(v - a.rows.len());
    for free in 0..v {
        if pivots.contains(&free) {
            continue;
        }
        let mut vec = vec![0u16; v];
        vec[free] = 1;
        for (row, &p) in a.rows.iter().zip(&pivots) {
            vec[p] = field.neg(row[free]);
        }
        basis.push(vec);
    }
    let mut rows = basis;
    rref_in_place(field, &mut rows);
    SubspaceMatrix {
        q: a.q,
        v: a.v,
        rows,
    }
}

/// `A` meet `B`, computed as the complement of the span of the two
/// complements.
pub fn intersect_subspaces(
    field: &FiniteField,
    a: &SubspaceMatrix,
    b: &SubspaceMatrix,
) -> Result<SubspaceMatrix> {
    a.same_ambient(b)?;
    let ca = orthogonal_complement(field, a);
    let cb = orthogonal_complement(field, b);
    let mut stacked: Vec<Vec<u16>> = ca.rows.iter().chain(cb.rows.iter()).cloned().collect();
    rref_in_place(field, &mut stacked);
    let span = SubspaceMatrix {
        q: a.q,
        v: a.v,
        rows: stacked,
    };
    Ok(orthogonal_complement(field, &span))
}

/// Streams every `d`-subspace of `F_q^v` exactly once, in lexicographic
/// order of (pivot-column set, free entries).
pub fn enumerate_subspaces<'f>(
    field: &'f FiniteField,
    v: u32,
    d: u32,
    limits: &OracleLimits,
) -> Result<SubspaceIter<'f>> {
    let count = gauss_eval(v as u64, d as i64, field.q as u64);
    let limit = limits.max_subspaces;
    if count > limit.into() {
        let needed = u128::try_from(&count).unwrap_or(u128::MAX);
        return Err(Error::GuardExceeded {
            what: "subspace enumeration",
            needed,
            limit: limit as u128,
        });
    }
    Ok(SubspaceIter::new(field, v, d))
}

pub struct SubspaceIter<'f> {
    field: &'f FiniteField,
    v: u32,
    d: u32,
    pivots: Vec<usize>,
    free_positions: Vec<(usize, usize)>,
    free_values: Vec<u16>,
    fresh_combo: bool,
    done: bool,
}

impl<'f> SubspaceIter<'f> {
    fn new(field: &'f FiniteField, v: u32, d: u32) -> Self {
        if d > v {
            return SubspaceIter {
                field,
                v,
                d,
                pivots: Vec::new(),
                free_positions: Vec::new(),
                free_values: Vec::new(),
                fresh_combo: false,
                done: true,
            };
        }
        let pivots: Vec<usize> = (0..d as usize).collect();
        let mut it = SubspaceIter {
            field,
            v,
            d,
            pivots,
            free_positions: Vec::new(),
            free_values: Vec::new(),
            fresh_combo: true,
            done: false,
        };
        it.reset_free();
        it
    }

    fn reset_free(&mut self) {
        self.free_positions.clear();
        for (i, &p) in self.pivots.iter().enumerate() {
            for col in (p + 1)..self.v as usize {
                if !self.pivots.contains(&col) {
                    self.free_positions.push((i, col));
                }
            }
        }
        self.free_values = vec![0; self.free_positions.len()];
        self.fresh_combo = true;
    }

    fn next_combination(&mut self) -> bool {
        let d = self.d as usize;
        let v = self.v as usize;
        if d == 0 {
            return false;
        }
        let mut i = d;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < v - (d - i) {
                self.pivots[i] += 1;
                for j in i + 1..d {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn advance_odometer(&mut self) -> bool {
        let q = self.field.q;
        for slot in self.free_values.iter_mut().rev() {
            *slot += 1;
            if *slot < q {
                return true;
            }
            *slot = 0;
        }
        false
    }

    fn current_matrix(&self) -> SubspaceMatrix {
        let mut rows = vec![vec![0u16; self.v as usize]; self.d as usize];
        for (i, &p) in self.pivots.iter().enumerate() {
            rows[i][p] = 1;
        }
        for (&(r, c), &val) in self.free_positions.iter().zip(&self.free_values) {
            rows[r][c] = val;
        }
        SubspaceMatrix {
            q: self.field.q,
            v: self.v,
            rows,
        }
    }
}

impl Iterator for SubspaceIter<'_> {
    type Item = SubspaceMatrix;

    fn next(&mut self) -> Option<SubspaceMatrix> {
        if self.done {
            return None;
        }
        if self.fresh_combo {
            self.fresh_combo = false;
            return Some(self.current_matrix());
        }
        if self.advance_odometer() {
            return Some(self.current_matrix());
        }
        if self.next_combination() {
            self.reset_free();
            self.fresh_combo = false;
            return Some(self.current_matrix());
        }
        self.done = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::super::field::make_field;
    use super::*;

    fn limits() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn enumeration_counts_match_gauss_eval() {
        for q in [2u64, 3, 4, 5] {
            let field = make_field(q).unwrap();
            for v in 0..=5u32 {
                for d in 0..=v {
                    let count = enumerate_subspaces(&field, v, d, &limits()).unwrap().count();
                    assert_eq!(
                        num_bigint::BigInt::from(count),
                        gauss_eval(v as u64, d as i64, q),
                        "[{} {}]_{}",
                        v,
                        d,
                        q
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let f2 = make_field(2).unwrap();
        assert_eq!(enumerate_subspaces(&f2, 4, 2, &limits()).unwrap().count(), 35);
        assert_eq!(enumerate_subspaces(&f2, 4, 0, &limits()).unwrap().count(), 1);
        let f3 = make_field(3).unwrap();
        assert_eq!(enumerate_subspaces(&f3, 4, 1, &limits()).unwrap().count(), 40);
    }

    #[test]
    fn enumeration_yields_canonical_distinct_matrices() {
        let f3 = make_field(3).unwrap();
        let all: Vec<_> = enumerate_subspaces(&f3, 4, 2, &limits()).unwrap().collect();
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
        for m in &all {
            let again = SubspaceMatrix::from_rows(&f3, 4, m.rows().to_vec()).unwrap();
            assert_eq!(&again, m, "not canonical: {:?}", m);
        }
    }

    #[test]
    fn enumeration_guard() {
        let f2 = make_field(2).unwrap();
        let tight = OracleLimits {
            max_subspaces: 10,
            ..OracleLimits::default()
        };
        assert!(matches!(
            enumerate_subspaces(&f2, 4, 2, &tight),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn intersection_dim_basics() {
        let f2 = make_field(2).unwrap();
        let a = SubspaceMatrix::from_rows(&f2, 4, vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let b = SubspaceMatrix::from_rows(&f2, 4, vec![vec![0, 0, 1, 0], vec![0, 0, 0, 1]]).unwrap();
        assert_eq!(intersection_dim(&f2, &a, &a).unwrap(), 2);
        assert_eq!(intersection_dim(&f2, &a, &b).unwrap(), 0);
        // two distinct 3-spaces inside F_2^4 meet in dimension 2
        let c = SubspaceMatrix::from_rows(
            &f2,
            4,
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]],
        )
        .unwrap();
        let d = SubspaceMatrix::from_rows(
            &f2,
            4,
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]],
        )
        .unwrap();
        assert_eq!(intersection_dim(&f2, &c, &d).unwrap(), 2);

        let f3 = make_field(3).unwrap();
        let e = SubspaceMatrix::from_rows(&f3, 3, vec![vec![1, 0, 0]]).unwrap();
        assert!(matches!(
            intersection_dim(&f3, &e, &SubspaceMatrix::zero_space(2, 3)),
            Err(Error::AmbientMismatch(..))
        ));
    }

    #[test]
    fn complement_is_involutive_and_dimension_correct() {
        for q in [2u64, 3, 4] {
            let field = make_field(q).unwrap();
            for m in enumerate_subspaces(&field, 4, 2, &limits()).unwrap() {
                let c = orthogonal_complement(&field, &m);
                assert_eq!(c.dim(), 2);
                assert_eq!(orthogonal_complement(&field, &c), m);
                // every basis vector of c is orthogonal to every row of m
                for a in m.rows() {
                    for b in c.rows() {
                        let dot = a
                            .iter()
                            .zip(b)
                            .fold(0u16, |acc, (&x, &y)| field.add(acc, field.mul(x, y)));
                        assert_eq!(dot, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn complement_of_extremes() {
        let f2 = make_field(2).unwrap();
        let full = SubspaceMatrix::full_space(2, 4);
        assert_eq!(orthogonal_complement(&f2, &full).dim(), 0);
        let zero = SubspaceMatrix::zero_space(2, 4);
        assert_eq!(orthogonal_complement(&f2, &zero), full);
    }

    #[test]
    fn intersect_subspaces_agrees_with_dimension_formula() {
        let f2 = make_field(2).unwrap();
        let subs: Vec<_> = enumerate_subspaces(&f2, 4, 2, &limits()).unwrap().collect();
        for a in &subs {
            for b in &subs {
                let meet = intersect_subspaces(&f2, a, b).unwrap();
                assert_eq!(meet.dim(), intersection_dim(&f2, a, b).unwrap());
                assert!(a.contains(&f2, &meet));
                assert!(b.contains(&f2, &meet));
            }
        }
    }

    #[test]
    fn rank_deficient_input_shrinks() {
        let f2 = make_field(2).unwrap();
        let m =
            SubspaceMatrix::from_rows(&f2, 3, vec![vec![1, 1, 0], vec![1, 1, 0]]).unwrap();
        assert_eq!(m.dim(), 1);
    }
}
