//! Singularities of offsets to rational plane curves.
//!
//! Given a rational parametrization `(X/W, Y/W)` with integer coefficients
//! and a rational distance `d`, [`solver::run_offset_sing`] computes a
//! univariate polynomial `ω(t)` whose real roots contain every parameter
//! generating a real, non-isolated singularity of the offset, and isolates
//! those roots. [`classify`] labels them, [`oracle`] holds the independent
//! checks used by the tests, and [`report`] / [`svg`] produce the outputs of
//! the `offsetsing` tool.
//!
//! The polynomial layer is generic over the coefficient ring through the
//! traits in [`scalar`]; the aliases below fix the concrete rings used by
//! the pipeline.

pub mod classify;
pub mod corpus;
pub mod curve_file;
pub mod error;
pub mod interval;
pub mod offset;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod solver;
pub mod subres;
pub mod svg;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IntPoly = poly::UniPoly<Int>;
pub type RatPoly = poly::UniPoly<Rat>;
pub type FloatPoly = poly::UniPoly<f64>;
pub type IntTriPoly = poly::TriPoly<Int>;
pub type RatTriPoly = poly::TriPoly<Rat>;
