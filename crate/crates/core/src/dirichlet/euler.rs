use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::alpha::AlphaTable;
use crate::arith::factorize;
use crate::genfun::IntSeries;
use crate::{Error, Rank, Result};

/// Default largest `x` accepted by the coefficient sieve.
pub const DEFAULT_SIEVE_LIMIT: u64 = 10_000_000;

/// Which Dirichlet series an [`EulerProductSeries`] expands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesKind {
    /// `Z_r(s) = ∏_p F_r(p^{-s})`: subgroup classes of groups of rank `<= r`.
    SubgroupClasses(Rank),
    /// `𝒟_r(s) = ζ²(s)ζ²(2s)…ζ²(rs)`: direct factors.
    DirectFactors(Rank),
    /// `𝒰_r(s) = ∏_{j<=r} ζ²(js)/ζ(2js)`: unitary factors.
    UnitaryFactors(Rank),
    /// `∏_m ζ(ms)^{e_m}` with `e` listed from `m = 1`.
    ZetaPowers(Vec<i64>),
}

impl std::fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesKind::SubgroupClasses(r) => write!(f, "Z[{r}]"),
            SeriesKind::DirectFactors(r) => write!(f, "D[{r}]"),
            SeriesKind::UnitaryFactors(r) => write!(f, "U[{r}]"),
            SeriesKind::ZetaPowers(e) => write!(f, "zeta-powers{e:?}"),
        }
    }
}

/// A Dirichlet series `∑ a(n) n^{-s} = ∏_p L(p^{-s})` whose local factor
/// `L(u) = ∑ c_k u^k` is the same power series for every prime. The
/// coefficients are multiplicative with `a(p^k) = c_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerProductSeries {
    pub kind: SeriesKind,
}

/// `∏_{j in js} (1 − u^j)^{e}` to order `n`.
fn zeta_block(js: impl Iterator<Item = usize>, e: i64, order: usize) -> IntSeries {
    js.fold(IntSeries::one(order), |acc, j| acc.mul(&IntSeries::one_minus_x_pow(j, e, order)))
}

/// Largest `j` that matters to order `n` for a rank.
fn rank_cap(rank: Rank, order: usize) -> usize {
    match rank {
        Rank::Finite(r) => (r as usize).min(order.max(1)),
        Rank::Limit => order.max(1),
    }
}

impl EulerProductSeries {
    pub fn new(kind: SeriesKind) -> Self {
        Self { kind }
    }

    /// `c_0, …, c_n` of the local factor.
    pub fn local_series(&self, order: usize) -> IntSeries {
        self.local_series_with(&mut AlphaTable::new(), order)
    }

    pub fn local_series_with(&self, table: &mut AlphaTable, order: usize) -> IntSeries {
        match &self.kind {
            SeriesKind::SubgroupClasses(rank) => IntSeries::new(table.coefficients(*rank, order)),
            SeriesKind::DirectFactors(rank) => zeta_block(1..=rank_cap(*rank, order), -2, order),
            SeriesKind::UnitaryFactors(rank) => {
                let cap = rank_cap(*rank, order);
                zeta_block(1..=cap, -2, order).mul(&zeta_block((1..=cap).map(|j| 2 * j), 1, order))
            }
            SeriesKind::ZetaPowers(e) => e
                .iter()
                .enumerate()
                .filter(|(m, _)| *m < order.max(1))
                .fold(IntSeries::one(order), |acc, (m, &em)| {
                    acc.mul(&IntSeries::one_minus_x_pow(m + 1, -em, order))
                }),
        }
    }

    /// `a(n)`, by factorising `n`.
    pub fn coefficient(&self, n: u64) -> Result<BigInt> {
        let f = factorize(n)?;
        let order = f.iter().map(|&(_, e)| e as usize).max().unwrap_or(0);
        let local = self.local_series(order);
        Ok(f.iter().map(|&(_, e)| local.coeffs()[e as usize].clone()).product())
    }

    /// `[0, a(1), …, a(n)]` (index 0 is unused and holds 0).
    pub fn coefficients(&self, n: u64) -> Result<Vec<BigInt>> {
        let values = self.sieve(n, DEFAULT_SIEVE_LIMIT)?;
        Ok(values.into_iter().map(BigInt::from).collect())
    }

    /// `∑_{n<=x} a(n)`.
    pub fn summatory(&self, x: u64) -> Result<BigInt> {
        self.summatory_with_limit(x, DEFAULT_SIEVE_LIMIT)
    }

    pub fn summatory_with_limit(&self, x: u64, limit: u64) -> Result<BigInt> {
        let values = self.sieve(x, limit)?;
        let mut acc: i128 = 0;
        for v in &values[1..] {
            acc = acc.checked_add(*v as i128).ok_or(Error::Overflow("summatory"))?;
        }
        Ok(BigInt::from(acc))
    }

    /// Multiplicative sieve over `n <= x`: `a(n) = c_e·a(n / p^e)` where `p`
    /// is the least prime factor of `n` and `p^e ‖ n`. Values are exact
    /// `i64`s; a coefficient or product outside that range is an error.
    fn sieve(&self, x: u64, limit: u64) -> Result<Vec<i64>> {
        if x > limit {
            return Err(Error::OutOfRange {
                what: "x",
                value: x,
                bound: limit,
            });
        }
        let n = x as usize;
        let order = (u64::BITS - 1 - x.max(1).leading_zeros()) as usize;
        let local: Vec<i64> = self
            .local_series(order)
            .coeffs()
            .iter()
            .map(|c| c.to_i64().ok_or(Error::Overflow("local coefficient")))
            .collect::<Result<_>>()?;
        let spf = least_prime_factors(n);
        let mut values = vec![0i64; n + 1];
        if n >= 1 {
            values[1] = 1;
        }
        for i in 2..=n {
            let p = spf[i] as usize;
            let (mut rest, mut e) = (i, 0);
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            values[i] = local[e]
                .checked_mul(values[rest])
                .ok_or(Error::Overflow("coefficient sieve"))?;
        }
        Ok(values)
    }
}

/// Least prime factor of every `n <= x` (0 and 1 map to themselves).
fn least_prime_factors(x: usize) -> Vec<u32> {
    let mut spf: Vec<u32> = (0..=x as u32).collect();
    let mut i = 2;
    while i * i <= x {
        if spf[i] == i as u32 {
            let mut j = i * i;
            while j <= x {
                if spf[j] == j as u32 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
        i += 1;
    }
    spf
}

/// Coefficients `a(1..=n)` of `∏_m ζ(ms)^{e_m}`, as `[0, a(1), …]`.
pub fn zeta_power_coeffs(exponents: &[i64], n: u64) -> Result<Vec<BigInt>> {
    EulerProductSeries::new(SeriesKind::ZetaPowers(exponents.to_vec())).coefficients(n)
}

/// `a(n)` of the series of the given kind.
pub fn coefficient(kind: SeriesKind, n: u64) -> Result<BigInt> {
    EulerProductSeries::new(kind).coefficient(n)
}
