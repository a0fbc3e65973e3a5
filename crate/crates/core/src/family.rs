//! Sum family identifiers and their argument shapes.
//!
//! Every summation identity in the crate belongs to exactly one family;
//! the id picks both the closed-form evaluator and the brute-force oracle
//! form, and declares which of the shared arguments (t, m, r, s) the
//! family actually reads so grids never iterate dead dimensions.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SumFamilyId {
    Linear,
    LinearAlt,
    Fifth,
    FifthAlt,
    FiveProduct,
    FiveProductAlt,
    FiveProductWeighted,
    PentadProgression,
    Reciprocal,
    RProduct,
    RReciprocal,
}

pub const ALL_FAMILIES: [SumFamilyId; 11] = [
    SumFamilyId::Linear,
    SumFamilyId::LinearAlt,
    SumFamilyId::Fifth,
    SumFamilyId::FifthAlt,
    SumFamilyId::FiveProduct,
    SumFamilyId::FiveProductAlt,
    SumFamilyId::FiveProductWeighted,
    SumFamilyId::PentadProgression,
    SumFamilyId::Reciprocal,
    SumFamilyId::RProduct,
    SumFamilyId::RReciprocal,
];

impl SumFamilyId {
    pub fn name(self) -> &'static str {
        match self {
            SumFamilyId::Linear => "linear",
            SumFamilyId::LinearAlt => "linear_alt",
            SumFamilyId::Fifth => "fifth",
            SumFamilyId::FifthAlt => "fifth_alt",
            SumFamilyId::FiveProduct => "five_product",
            SumFamilyId::FiveProductAlt => "five_product_alt",
            SumFamilyId::FiveProductWeighted => "five_product_weighted",
            SumFamilyId::PentadProgression => "pentad_progression",
            SumFamilyId::Reciprocal => "reciprocal",
            SumFamilyId::RProduct => "r_product",
            SumFamilyId::RReciprocal => "r_reciprocal",
        }
    }

    /// One-line description of the sum the family evaluates.
    pub fn describe(self) -> &'static str {
        match self {
            SumFamilyId::Linear => "sum of G_{j+t} for j = 1..n",
            SumFamilyId::LinearAlt => "alternating sum of G_{j+t}",
            SumFamilyId::Fifth => "sum of fifth powers G_{j+t}^5",
            SumFamilyId::FifthAlt => "alternating sum of fifth powers G_{j+t}^5",
            SumFamilyId::FiveProduct => "sum of G_{j+t-1} G_{j+t} G_{j+t+1} G_{j+t+2} G_{j+t+m}",
            SumFamilyId::FiveProductAlt => "alternating sum of the five-term products",
            SumFamilyId::FiveProductWeighted => {
                "five-term products with (-F_{m-3})^{n-j} F_{m+2}^j weights"
            }
            SumFamilyId::PentadProgression => {
                "sum of G_{5(j+t)+m+s} with (-F_{m-5})^{n-j} F_m^{j-1} weights"
            }
            SumFamilyId::Reciprocal => {
                "weighted sum of G_{j+t+m} over six-term denominator products"
            }
            SumFamilyId::RProduct => "sum of r-term products G_{j+t+1}..G_{j+t+r-1} G_{j+t+m}",
            SumFamilyId::RReciprocal => {
                "weighted sum of G_{j+t+m} over (r+1)-term denominator products"
            }
        }
    }

    pub fn uses_m(self) -> bool {
        !matches!(
            self,
            SumFamilyId::Linear
                | SumFamilyId::LinearAlt
                | SumFamilyId::Fifth
                | SumFamilyId::FifthAlt
        )
    }

    pub fn uses_r(self) -> bool {
        matches!(self, SumFamilyId::RProduct | SumFamilyId::RReciprocal)
    }

    pub fn uses_s(self) -> bool {
        matches!(self, SumFamilyId::PentadProgression)
    }

    /// Whether denominators can vanish, making ZeroTerm skips legitimate.
    pub fn is_reciprocal(self) -> bool {
        matches!(self, SumFamilyId::Reciprocal | SumFamilyId::RReciprocal)
    }
}

impl fmt::Display for SumFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown sum family {0:?}; see `list` for valid names")]
pub struct UnknownFamily(pub String);

impl FromStr for SumFamilyId {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_FAMILIES
            .iter()
            .find(|f| f.name() == s)
            .copied()
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

/// Shared error type for sum evaluation, used identically by the closed
/// forms and the brute-force oracle so grid cells stay comparable.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SumError {
    #[error("sum length must be nonnegative, got n = {0}")]
    NegativeLength(i64),
    #[error("window length r must be at least {min}, got r = {r}")]
    OrderTooSmall { r: i64, min: i64 },
    #[error("Fibonacci divisor F_{0} is zero")]
    ZeroFibDivisor(i64),
    #[error("sequence term G_{0} vanishes in a denominator")]
    ZeroTerm(i64),
}

impl SumError {
    /// Domain errors are legitimate grid holes; the rest are usage errors.
    pub fn is_domain(&self) -> bool {
        matches!(self, SumError::ZeroTerm(_) | SumError::ZeroFibDivisor(_))
    }
}

/// The shared argument bundle for sum evaluation. Families ignore the
/// fields they do not use (see the `uses_*` predicates).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumArgs {
    pub n: i64,
    pub t: i64,
    pub m: i64,
    pub r: i64,
    pub s: i64,
}

impl SumArgs {
    pub fn new(n: i64, t: i64) -> Self {
        SumArgs {
            n,
            t,
            m: 0,
            r: 2,
            s: 0,
        }
    }

    pub fn with_m(mut self, m: i64) -> Self {
        self.m = m;
        self
    }

    pub fn with_r(mut self, r: i64) -> Self {
        self.r = r;
        self
    }

    pub fn with_s(mut self, s: i64) -> Self {
        self.s = s;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in ALL_FAMILIES {
            assert_eq!(f.name().parse::<SumFamilyId>().unwrap(), f);
        }
        assert!("no_such_family".parse::<SumFamilyId>().is_err());
    }

    #[test]
    fn applicability() {
        assert!(!SumFamilyId::Linear.uses_m());
        assert!(SumFamilyId::FiveProduct.uses_m());
        assert!(SumFamilyId::RProduct.uses_r());
        assert!(!SumFamilyId::RProduct.uses_s());
        assert!(SumFamilyId::PentadProgression.uses_s());
        assert!(SumFamilyId::Reciprocal.is_reciprocal());
        assert!(!SumFamilyId::Fifth.is_reciprocal());
    }
}
