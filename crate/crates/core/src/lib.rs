//! Exact counting functions attached to finite abelian groups.
//!
//! The library computes, by exact integer arithmetic,
//!
//! - the number of subgroup classes `α_r(k)` of abelian p-groups of order
//!   `p^k` and rank at most `r` ([`alpha`]),
//! - the generating functions `F_r(x, y)` and `F_r(x)` both as truncated
//!   power series and as exact rational functions ([`genfun`]),
//! - the zeta exponents `β_r(m)` in `Z_r(s) = ∏ ζ(ms)^{β_r(m)} G(s)`,
//!   Dirichlet coefficients and summatory functions of the associated Euler
//!   products, and their mean-value constants ([`dirichlet`]),
//! - Smith normal forms and the direct, unitary and subgroup-class
//!   factorisations on the group side ([`groups`]).
//!
//! The group side and the brute-force enumerations in [`partitions`] are
//! kept independent of the recursions so each can be used as an oracle for
//! the other.

pub mod alpha;
pub mod arith;
pub mod dirichlet;
mod error;
pub mod genfun;
pub mod groups;
pub mod partitions;

pub use error::{Error, Result};
pub use num_bigint::BigInt as Integer;
pub use num_rational::BigRational as Rational;

/// Rank parameter of the counting functions: a finite bound `r` or the
/// limit `r → ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rank {
    Finite(u32),
    Limit,
}

impl Rank {
    /// The finite rank that agrees with `self` on every coefficient of
    /// degree `<= order`. For the limit this is `max(order, 1)`, since
    /// `α_r(k) = α(k)` as soon as `r >= k`.
    pub fn effective(self, order: usize) -> u32 {
        match self {
            Rank::Finite(r) => r,
            Rank::Limit => order.max(1) as u32,
        }
    }
}

impl std::fmt::Display for Rank {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rank::Finite(r) => write!(f, "{r}"),
            Rank::Limit => f.write_str("limit"),
        }
    }
}
