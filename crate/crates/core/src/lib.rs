//! Exact construction of a separable deformation of the quaternion group
//! algebra GF(2)Q8 over GF(2)(t), together with machine checks of every
//! identity the construction relies on.
//!
//! The deformed algebra is built in layers:
//!
//! - [`scalar`]: GF(2)[t], GF(2)(t) and truncated power series.
//! - [`quotient`]: the commutative algebra F[x]/(p_t) deforming GF(2)C4.
//! - [`skew`]: the involution eta and the skew polynomial ring over it.
//! - [`deformation`]: the central relation q_t, the 8-dimensional quotient,
//!   its structure constants and their t-expansion.
//! - [`analysis`]: block decomposition, separability and splitting.
//! - [`report`]: the ordered verification pipeline.

pub mod algebra;
pub mod analysis;
pub mod deformation;
pub mod linalg;
pub mod params;
pub mod quotient;
pub mod report;
pub mod scalar;
pub mod skew;

pub use params::DeformationParams;
