use crate::exactalg::{int, ratio, Rational};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The five sequences that satisfy the product rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    /// `T(n) = 0`.
    Zero,
    /// `T(n) = 1/2`.
    Half,
    /// `T(0) = 0`, `T(2k) = T(2k-1) = k`.
    CeilHalf,
    /// `T(3k+1) = 1`, zero elsewhere.
    Period3,
    /// `T(n) = n(n+1)/2`.
    Triangular,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [
        FamilyId::Zero,
        FamilyId::Half,
        FamilyId::CeilHalf,
        FamilyId::Period3,
        FamilyId::Triangular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Zero => "zero",
            FamilyId::Half => "half",
            FamilyId::CeilHalf => "ceilhalf",
            FamilyId::Period3 => "period3",
            FamilyId::Triangular => "triangular",
        }
    }

    /// Families with `T(0) = 0, T(1) = 1`, i.e. the ones selected by a value of `c = T(2)`.
    pub fn from_c(c: &Rational) -> Option<FamilyId> {
        [FamilyId::Period3, FamilyId::CeilHalf, FamilyId::Triangular]
            .into_iter()
            .find(|f| family_value(*f, 2) == *c)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// Closed-form `T(n)` for a family.
pub fn family_value(family: FamilyId, n: u64) -> Rational {
    match family {
        FamilyId::Zero => int(0),
        FamilyId::Half => ratio(1, 2),
        FamilyId::CeilHalf => Rational::from_integer(BigInt::from(n.div_ceil(2))),
        FamilyId::Period3 => int(i64::from(n % 3 == 1)),
        FamilyId::Triangular => Rational::new(
            BigInt::from(n) * BigInt::from(n) + BigInt::from(n),
            BigInt::from(2),
        ),
    }
}
