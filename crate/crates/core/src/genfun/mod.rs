//! Generating functions of the subgroup-class counts, as truncated series
//! and as exact rational functions.

pub mod bivariate;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod series;

pub use bivariate::BivariatePoly;
pub use poly::IntPoly;
pub use rational::{
    check_funceq, rational_f, series_matches_rational, BinomialProduct, BivariateRational, RationalF, UnivariateRational,
    DEFAULT_MAX_RANK,
};
pub use roots::{find_roots, numerator_root_moduli, ComplexPolyRoots};
pub use series::{check_partition_lower_bound, product_exponents, series_f, series_log_p, IntSeries};
