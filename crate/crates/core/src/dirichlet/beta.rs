use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alpha::AlphaTable;
use crate::genfun::{product_exponents, IntSeries};
use crate::{Rank, Result};

/// Zeta exponents `β(1..=m_max)` for each rank in a table.
///
/// `Z_r(s) = ∏_{m<=k} ζ(ms)^{β_r(m)}·G_{k,r}(s)`, where the exponents come
/// from writing `F_r(u) = ∏_m (1 − u^m)^{−β_r(m)}` formally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaTable {
    pub m_max: usize,
    pub rows: Vec<(Rank, Vec<BigInt>)>,
}

impl BetaTable {
    /// `β_r(m)` for `1 <= r <= r_max`, `1 <= m <= m_max`.
    pub fn finite(r_max: u32, m_max: usize) -> Result<Self> {
        let mut table = AlphaTable::with_bounds(r_max, m_max);
        let rows = (1..=r_max)
            .map(|r| {
                let rank = Rank::Finite(r);
                Ok((rank, beta_with(&mut table, rank, m_max)?))
            })
            .collect::<Result<_>>()?;
        Ok(Self { m_max, rows })
    }

    /// `β(m)` for `1 <= m <= m_max`.
    pub fn limit(m_max: usize) -> Result<Self> {
        Ok(Self {
            m_max,
            rows: vec![(Rank::Limit, beta(Rank::Limit, m_max)?)],
        })
    }

    pub fn row(&self, rank: Rank) -> Option<&[BigInt]> {
        self.rows.iter().find(|(r, _)| *r == rank).map(|(_, v)| v.as_slice())
    }
}

/// `[β_r(1), …, β_r(m_max)]`.
pub fn beta(rank: Rank, m_max: usize) -> Result<Vec<BigInt>> {
    beta_with(&mut AlphaTable::new(), rank, m_max)
}

pub fn beta_with(table: &mut AlphaTable, rank: Rank, m_max: usize) -> Result<Vec<BigInt>> {
    product_exponents(&IntSeries::new(table.coefficients(rank, m_max)))
}

/// The local factor of `G_{k,r}`: `F_r(u)·∏_{m<=k} (1 − u^m)^{β_r(m)}`
/// expanded to order `n`.
pub fn residual_series(rank: Rank, k: usize, order: usize) -> Result<IntSeries> {
    let mut table = AlphaTable::new();
    let n = order.max(k);
    let betas = beta_with(&mut table, rank, k)?;
    let f = IntSeries::new(table.coefficients(rank, n));
    let mut acc = f;
    for (m, b) in betas.iter().enumerate() {
        let e: i64 = b.try_into().map_err(|_| crate::Error::Overflow("zeta exponent"))?;
        acc = acc.mul(&IntSeries::one_minus_x_pow(m + 1, e, n));
    }
    Ok(acc.truncate(order))
}

/// Whether the local factor of `G_{k,r}` is `1 + O(u^{k+1})`.
pub fn residual_check(rank: Rank, k: usize) -> Result<bool> {
    let s = residual_series(rank, k, k)?;
    Ok(s.coeffs()[0].is_one() && s.coeffs()[1..].iter().all(Zero::is_zero))
}
