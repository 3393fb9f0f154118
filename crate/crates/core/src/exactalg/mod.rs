//! Exact arithmetic kernel.
//!
//! Everything here is a value type: operations never mutate their inputs
//! and results are always in canonical form, so structural equality is
//! mathematical equality.

mod poly;
mod poly2;
mod ratfunc;
mod rational;
mod roots;

pub use poly::Poly;
pub use poly2::Poly2;
pub use ratfunc::{RatFunc, RfOp};
pub use rational::{int, parse_rational, ratio, Rational};
pub use roots::{extract_rational_roots, rational_roots, RationalRoot, RootFactorization};

use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
}
