//! Exact computational algebra over finite fields F_{p^n}, centred on one
//! question: is a monic polynomial irreducible, and if so, is it
//! primitive? The decision runs through the multiplicative order of the
//! polynomial's companion matrix rather than through factorization, and
//! every answer can be cross-checked against brute-force oracles shipped
//! in this crate.
//!
//! Module map:
//! - [`gf`]: prime fields and one-level extensions, exact element arithmetic
//! - [`numth`]: integer factorization, divisors, totient, orders mod m
//! - [`poly`]: dense polynomials, parsing/formatting, companion matrices
//! - [`matrix`]: exact linear algebra (rank, characteristic and minimal
//!   polynomials, multiplicative order, the strip recurrence)
//! - [`irred`]: the verdict pipeline and closed-form order predictions
//! - [`generate`]: all irreducibles of a dividing degree from one
//!   primitive polynomial
//! - [`oracle`]: independent brute-force ground truth

// Index loops mirror the row/column arithmetic in the elimination kernels,
// and divisibility tests read better as `%` here.
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod error;
pub mod generate;
pub mod gf;
pub mod irred;
pub mod matrix;
pub mod numth;
pub mod oracle;
pub mod poly;

pub use error::{Error, Result};
pub use generate::{GenerationReport, OrderBucket};
pub use gf::{FieldElement, FieldSpec};
pub use irred::{Outcome, PipelineOptions, Verdict, Witness};
pub use matrix::{Mat, StripState};
pub use poly::Poly;
