//! Scalars: GF(2)[t], its fraction field GF(2)(t), truncated power series,
//! and the characteristic-2 field interface used by the linear algebra.

mod field;
mod parse;
mod poly;
mod rational;
mod series;

pub use field::{Char2Field, Gf2, RationalField};
pub use parse::parse_rational;
pub use poly::Gf2Poly;
pub use rational::{RationalFunction, Valuation};
pub use series::PowerSeries;

use thiserror::Error;

/// Default truncation order for power-series expansions.
pub const DEFAULT_SERIES_PRECISION: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value has negative t-adic valuation {0} and is not a power series")]
    NegativeValuation(i64),
    #[error("power series precision must be positive")]
    ZeroPrecision,
    #[error("power series with zero constant term is not invertible")]
    NotInvertible,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}
