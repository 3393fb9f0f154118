//! Exact machine-checking of the triangular-number product rule
//! `T(mn) = T(m)T(n) + T(m-1)T(n-1)`.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`]: rationals, dense polynomials in `c`, polynomials in `d`
//!   over `Q[c]`, canonical rational functions and rational-root extraction.
//! * [`seqengine`]: the closed-form solution families and the symbolic
//!   evaluation of `T(n)` as a function of `c = T(2)`.
//! * [`veritool`]: exhaustive exact verification of the rule.
//! * [`classifier`]: case analysis on `(T(0), T(1))` and constraint solving
//!   for `c`.
//! * [`cli`]: the `trirule` command-line front end.

pub mod classifier;
pub mod cli;
pub mod exactalg;
pub mod seqengine;
pub mod veritool;

pub use exactalg::{Poly, Poly2, RatFunc, Rational};
pub use seqengine::FamilyId;
