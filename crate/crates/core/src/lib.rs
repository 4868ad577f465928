//! Exact truncated q-series: triple, quintuple and Winquist products,
//! p-dissections of products of two quintuple products, and the checks built
//! on them.

pub mod analysis;
pub mod arith;
pub mod combinatorics;
pub mod coeff;
pub mod dissection;
pub mod error;
pub mod expr;
pub mod products;
pub mod series;
pub mod term;

pub use coeff::Coefficient;
pub use error::{Error, Result};
pub use series::{Comparison, LaurentSeries};

/// Series with arbitrary-precision coefficients; the default everywhere.
pub type Series = LaurentSeries<num_bigint::BigInt>;
/// Series with checked 64-bit coefficients.
pub type Series64 = LaurentSeries<i64>;
