//! Two infinite families of admissible but non-realizable block-design
//! parameters, scanned through the nonexistence pipeline at `q = 1`:
//!
//! - `T4`: `4-(C(n,2)+2, n+1, 2)` for `n >= 5` with `4` not dividing `n`,
//! - `T3`: `3-((2n-1)(4n-1)+1, 4n-1, 1)` for `n >= 2`.

use crate::designcalc::DesignParams;
use crate::qpoly::QMode;
use crate::{Error, Result};

use super::{nonexistence_check, NonexistenceCertificate, SearchLimits};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    T4,
    T3,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::T4 => "t4",
            Family::T3 => "t3",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t4" => Ok(Family::T4),
            "t3" => Ok(Family::T3),
            other => Err(Error::Parse(format!("unknown family {other:?} (use t4 or t3)"))),
        }
    }
}

/// Block-design parameters of family member `n`, or the reason `n` is out.
pub fn family_params(family: Family, n: u64) -> Result<DesignParams> {
    match family {
        Family::T4 => {
            if n < 5 {
                return Err(Error::InvalidParams(format!("t4 family needs n >= 5, got {n}")));
            }
            if n % 4 == 0 {
                return Err(Error::InvalidParams(format!(
                    "t4 family needs 4 to not divide n, got {n}"
                )));
            }
            let v = n * (n - 1) / 2 + 2;
            DesignParams::with_int_lambda(QMode::Numeric(1), 4, v as u32, n as u32 + 1, 2)
        }
        Family::T3 => {
            if n < 2 {
                return Err(Error::InvalidParams(format!("t3 family needs n >= 2, got {n}")));
            }
            let v = (2 * n - 1) * (4 * n - 1) + 1;
            DesignParams::with_int_lambda(QMode::Numeric(1), 3, v as u32, 4 * n as u32 - 1, 1)
        }
    }
}

#[derive(Clone, Debug)]
pub enum ScanOutcome {
    Skipped(String),
    Checked(NonexistenceCertificate),
}

#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub n: u64,
    pub outcome: ScanOutcome,
}

/// Runs the pipeline over `n` in `from..=to`, skipping ineligible members
/// with their reason.
pub fn scan_family(
    family: Family,
    from: u64,
    to: u64,
    limits: &SearchLimits,
) -> Result<Vec<ScanEntry>> {
    let mut out = Vec::new();
    for n in from..=to {
        let outcome = match family_params(family, n) {
            Err(Error::InvalidParams(reason)) => ScanOutcome::Skipped(reason),
            Err(e) => return Err(e),
            Ok(params) => ScanOutcome::Checked(nonexistence_check(&params, limits)?),
        };
        out.push(ScanEntry { n, outcome });
    }
    Ok(out)
}
