//! Evaluation of `T(n)`: the closed-form solution families, and the
//! symbolic sequence forced by `T(0) = 0, T(1) = 1, T(2) = c`.
//!
//! Under those initial values the product rule at `m = 2` and the two
//! expressions for `T(4n)` give, for the indices they cover,
//!
//! ```text
//! T(2n)   = c T(n) + T(n-1)            (even index >= 4)
//! T(2n-1) = T(n) + (d - c) T(n-1)      (odd index >= 5)
//! ```
//!
//! with `d = T(3)`. [`BivariateTable`] keeps `d` free; [`SymbolicTable`]
//! substitutes the value of `d` forced by the rule.

mod bivariate;
mod family;
mod symbolic;

pub use bivariate::{BivariateTable, DEFAULT_BIVARIATE_MAX_INDEX};
pub use family::{family_value, FamilyId};
pub use symbolic::{d_formula, SymbolicTable, DEFAULT_MAX_INDEX};

use crate::exactalg::{Poly, Poly2, RatFunc};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("index {index} exceeds the supported range (max {max})")]
    OutOfRange { index: u64, max: u64 },
    #[error("product-rule instance ({m}, {n}) needs m, n >= 1")]
    InvalidPair { m: u64, n: u64 },
    #[error("structural check failed: {0}")]
    Structural(String),
}

/// Solves for `d = T(3)` by equating two expansions of `T(18)`.
///
/// `T(3)T(6) + T(2)T(5)` (the rule at `(3, 6)`) is compared with
/// `c T(9) + T(8)` (the rule at `(2, 9)`), where `T(9)` is taken from the
/// rule at `(3, 3)`, `T(3)^2 + T(2)^2`. The difference is linear in `d`; its
/// `d` coefficient must be `c^2 + 2c - 1` up to sign and coprime to the
/// constant term.
pub fn derive_d() -> Result<RatFunc, SeqError> {
    let mut table = BivariateTable::new();
    let t2 = table.get(2)?;
    let t3 = table.get(3)?;
    let t5 = table.get(5)?;
    let t6 = table.get(6)?;
    let t8 = table.get(8)?;

    let via_three_six = &(&t3 * &t6) + &(&t2 * &t5);
    let t9 = &(&t3 * &t3) + &(&t2 * &t2);
    let via_two_nine = &(&Poly2::var_c() * &t9) + &t8;
    let diff = &via_three_six - &via_two_nine;

    if diff.degree_d() != 1 {
        return Err(SeqError::Structural(format!(
            "T(18) difference should be linear in d, got {diff}"
        )));
    }
    let linear = diff.coeff(1);
    let constant = diff.coeff(0);
    if !linear.eq_up_to_scalar(&Poly::from_ints(&[-1, 2, 1])) {
        return Err(SeqError::Structural(format!(
            "d coefficient should be c^2 + 2c - 1, got {linear}"
        )));
    }
    let gcd = Poly::gcd(&constant, &linear).map_err(|e| SeqError::Structural(e.to_string()))?;
    if !gcd.is_constant() {
        return Err(SeqError::Structural(format!(
            "numerator and denominator of d share the factor {gcd}"
        )));
    }
    RatFunc::new(-constant, linear).map_err(|e| SeqError::Structural(e.to_string()))
}

/// `T(mn) - T(m)T(n) - T(m-1)T(n-1)` over `Q(c)`.
pub fn residual(table: &mut SymbolicTable, m: u64, n: u64) -> Result<RatFunc, SeqError> {
    if m == 0 || n == 0 {
        return Err(SeqError::InvalidPair { m, n });
    }
    let product = m.checked_mul(n).ok_or(SeqError::OutOfRange {
        index: u64::MAX,
        max: table.max_index(),
    })?;
    let lhs = table.get(product)?;
    let first = &table.get(m)? * &table.get(n)?;
    let second = &table.get(m - 1)? * &table.get(n - 1)?;
    Ok(&(&lhs - &first) - &second)
}

/// Numerator of [`residual`]; `c` satisfies the `(m, n)` instance exactly at its roots.
pub fn residual_numerator(table: &mut SymbolicTable, m: u64, n: u64) -> Result<Poly, SeqError> {
    Ok(residual(table, m, n)?.num().clone())
}
