//! Euler-product Dirichlet series built from a common local factor.

pub mod beta;
pub mod constant;
pub mod euler;

pub use beta::{beta, beta_with, residual_check, residual_series, BetaTable};
pub use constant::{mean_constant, MeanValueConstant};
pub use euler::{coefficient, zeta_power_coeffs, EulerProductSeries, SeriesKind, DEFAULT_SIEVE_LIMIT};
