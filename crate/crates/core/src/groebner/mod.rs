//! Division, S-polynomials, Buchberger's algorithm, certificates and
//! ideal-level operations.

mod buchberger;
mod cache;
mod certificate;
mod ideal;
mod reduce;

use serde::{Deserialize, Serialize};

pub use buchberger::{buchberger_extend, buchberger_gens, Budget, GbStats, GroebnerBasis};
pub use cache::{CacheEntry, GbCache};
pub use certificate::{certify_pair, verify_gb_certificate, CertificateVerdict, SPairCertificate};
pub use ideal::IdealPresentation;
pub use reduce::{normal_form, s_polynomial};

use crate::error::{Error, Result};

/// Two-sided bound on the regularity of an ideal, with the method behind
/// each side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegBracket {
    pub lower: i64,
    pub upper: i64,
    pub lower_method: String,
    pub upper_method: String,
}

impl RegBracket {
    pub fn new(lower: i64, upper: i64, lower_method: &str, upper_method: &str) -> Result<RegBracket> {
        if lower > upper {
            return Err(Error::Internal(format!("empty regularity bracket [{lower}, {upper}]")));
        }
        Ok(RegBracket { lower, upper, lower_method: lower_method.into(), upper_method: upper_method.into() })
    }

    pub fn is_valid(&self) -> bool {
        self.lower <= self.upper
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lower <= v && v <= self.upper
    }

    /// True when `[lower, upper] ⊆ [lo, hi]`.
    pub fn within(&self, lo: i64, hi: i64) -> bool {
        lo <= self.lower && self.upper <= hi
    }

    pub fn shifted(&self, by: i64) -> RegBracket {
        RegBracket { lower: self.lower + by, upper: self.upper + by, ..self.clone() }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

impl std::fmt::Display for RegBracket {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}
