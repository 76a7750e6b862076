//! Brute-force ground truth over small `F_q` vector spaces.
//!
//! Everything the formula layers predict, `lambda_i`, `lambda_{i,j}`,
//! intersection vectors, their high-order versions, is measured here
//! directly on concrete designs (full Grassmannians and spreads), by
//! enumerating subspaces in canonical RREF form and counting.

mod design;
mod field;
mod io;
mod subspace;

pub use design::{
    dualize, measure_alpha, measure_lambda_ij, spread_construct, trivial_design, verify_design,
    DesignInstance, VerifyReport,
};
pub use field::{make_field, FiniteField, MAX_Q};
pub use io::{load_design, save_design};
pub use subspace::{
    enumerate_subspaces, intersect_subspaces, intersection_dim, orthogonal_complement,
    SubspaceIter, SubspaceMatrix,
};

/// Enumeration guards. These are configuration, not hard limits of the
/// algorithms.
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    /// Largest subspace count an enumeration may stream.
    pub max_subspaces: u64,
    /// Largest number of block `ell`-subsets a high-order measurement may
    /// visit.
    pub max_tuples: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_subspaces: 10_000_000,
            max_tuples: 10_000_000,
        }
    }
}

/// Sampling policy for the independence check in [`measure_lambda_ij`].
#[derive(Clone, Copy, Debug)]
pub struct SampleCfg {
    pub samples: u32,
    pub seed: u64,
    /// Check every admissible `(I, J)` pair instead of sampling.
    pub exhaustive: bool,
}

impl Default for SampleCfg {
    fn default() -> Self {
        SampleCfg {
            samples: 20,
            seed: 0,
            exhaustive: false,
        }
    }
}
