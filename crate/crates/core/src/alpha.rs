//! Subgroup-class counts `α_r(k, j)`, `α_r(k)` and `α(k)`.
//!
//! The values satisfy
//!
//! ```text
//! α_0(k, j) = j + 1 if k = 0, else 0
//! α_r(k, j) = 0                                                  (j < 0)
//! α_r(k, j) = α_r(k, j−1) + ∑_{m=0}^{⌊k/r⌋} α_{r−1}(k − m·r, m + j)   (r >= 1, j >= 0)
//! ```
//!
//! with `α_r(k) = α_r(k, 0)` and `α(k) = α_k(k)`.
//!
//! Each step of the recursion maps `(k, j)` to `(k − m·r, j + m)`, so `k + j`
//! never increases. [`AlphaTable`] therefore stores, for every rank, the
//! triangle `k + j <= extent`, filled bottom-up.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::partition_counts;
use crate::Rank;

/// Memo of `α_r(k, j)` over `0 <= r <= ranks`, `k + j <= extent`.
///
/// Queries outside the stored region grow it; existing values are never
/// modified, only recomputed identically when the extent grows. A table is
/// owned by one caller at a time (`&mut self`); share results, not tables.
#[derive(Debug, Clone, Default)]
pub struct AlphaTable {
    extent: usize,
    // layers[r][k][j]
    layers: Vec<Vec<Vec<BigInt>>>,
}

impl AlphaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// A table prefilled for `r <= r_max` and `k + j <= extent`.
    pub fn with_bounds(r_max: u32, extent: usize) -> Self {
        let mut t = Self::new();
        t.ensure(r_max as usize, extent);
        t
    }

    pub fn extent(&self) -> usize {
        self.extent
    }

    /// Largest rank currently stored.
    pub fn ranks(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }

    fn ensure(&mut self, r: usize, extent: usize) {
        if extent > self.extent || self.layers.is_empty() {
            self.extent = extent.max(self.extent);
            self.layers.clear();
        }
        let e = self.extent;
        if self.layers.is_empty() {
            let base = (0..=e)
                .map(|k| {
                    (0..=e - k)
                        .map(|j| if k == 0 { BigInt::from(j + 1) } else { BigInt::zero() })
                        .collect()
                })
                .collect();
            self.layers.push(base);
        }
        while self.layers.len() <= r {
            let rank = self.layers.len();
            let prev = &self.layers[rank - 1];
            let mut layer: Vec<Vec<BigInt>> = Vec::with_capacity(e + 1);
            for k in 0..=e {
                let mut row: Vec<BigInt> = Vec::with_capacity(e - k + 1);
                for j in 0..=e - k {
                    let mut v = match j {
                        0 => BigInt::zero(),
                        _ => row[j - 1].clone(),
                    };
                    for m in 0..=k / rank {
                        v += &prev[k - m * rank][m + j];
                    }
                    row.push(v);
                }
                layer.push(row);
            }
            self.layers.push(layer);
        }
    }

    /// `α_r(k, j)`; zero for `j < 0`.
    pub fn alpha_rkj(&mut self, r: u32, k: u32, j: i64) -> BigInt {
        if j < 0 {
            return BigInt::zero();
        }
        let (r, k, j) = (r as usize, k as usize, j as usize);
        self.ensure(r, k + j);
        self.layers[r][k][j].clone()
    }

    /// `α_r(k) = α_r(k, 0)`.
    pub fn alpha_r(&mut self, r: u32, k: u32) -> BigInt {
        self.alpha_rkj(r, k, 0)
    }

    /// `α(k) = α_k(k)`, with `α(0) = 1`.
    pub fn alpha_limit(&mut self, k: u32) -> BigInt {
        self.alpha_r(k.max(1), k)
    }

    /// `[α_r(0), …, α_r(n)]`, or `[α(0), …, α(n)]` for the limit.
    pub fn coefficients(&mut self, rank: Rank, n: usize) -> Vec<BigInt> {
        let r = rank.effective(n) as usize;
        self.ensure(r, n);
        let layer = &self.layers[r];
        (0..=n).map(|k| layer[k][0].clone()).collect()
    }
}

pub fn alpha_rkj(r: u32, k: u32, j: i64) -> BigInt {
    AlphaTable::new().alpha_rkj(r, k, j)
}

pub fn alpha_r(r: u32, k: u32) -> BigInt {
    AlphaTable::new().alpha_r(r, k)
}

pub fn alpha_limit(k: u32) -> BigInt {
    AlphaTable::new().alpha_limit(k)
}

/// Whether `q(k) <= α(k) <= k·q(k)²`.
///
/// The upper bound fails at `k = 1`, where `α(1) = 2` and `1·q(1)² = 1`;
/// it holds for every `k >= 2` that has been checked.
pub fn check_alpha_bounds(k: u32) -> bool {
    let q = partition_counts(k as usize).pop().unwrap();
    let a = alpha_limit(k);
    let upper = BigInt::from(k) * &q * &q;
    q <= a && a <= upper
}
