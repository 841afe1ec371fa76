//! Truncated integer power series.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPoly;
use crate::alpha::AlphaTable;
use crate::arith::{divisors, mobius};
use crate::{Error, Rank, Result};

/// `a_0 + a_1 x + … + a_N x^N + O(x^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// A series truncated at order `coeffs.len() − 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The series `1` to order `n`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// Product, truncated at the smaller order.
    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let n = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        IntSeries { coeffs: out }
    }

    /// Polynomial truncated to a series of order `n`.
    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        Self::new((0..=order).map(|i| p.coeff(i)).collect())
    }

    /// `p(x)/q(x)` expanded to order `n`; `q(0)` must be `±1`.
    pub fn from_ratio(p: &IntPoly, q: &IntPoly, order: usize) -> Result<Self> {
        let q0 = q.coeff(0);
        if !q0.abs().is_one() {
            return Err(Error::InvalidArgument(format!(
                "series division needs a unit constant term, got {q0}"
            )));
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let mut v = p.coeff(i);
            for (k, qk) in q.coeffs().iter().enumerate().skip(1) {
                if k > i {
                    break;
                }
                v -= qk * &out[i - k];
            }
            out.push(v * &q0);
        }
        Ok(Self::new(out))
    }

    /// `(1 − x^m)^e` to order `n`, for any integer `e`.
    pub fn one_minus_x_pow(m: usize, e: i64, order: usize) -> Self {
        assert!(m >= 1);
        let mut coeffs = vec![BigInt::zero(); order + 1];
        // generalised binomial: (1 − t)^e = ∑ (−1)^k C(e, k) t^k
        let mut binom = BigInt::one();
        let mut k = 0usize;
        while k * m <= order {
            let term = if k % 2 == 0 { binom.clone() } else { -binom.clone() };
            coeffs[k * m] = term;
            binom = binom * BigInt::from(e - k as i64) / BigInt::from(k as i64 + 1);
            k += 1;
        }
        Self { coeffs }
    }

    /// The Newton sequence `P(m) = m·B(m)` of `log f = ∑ B(m) x^m`, for
    /// `m = 1..=N`, from `P(m) = m·a_m − ∑_{j=1}^{m−1} P(j)·a_{m−j}`.
    pub fn log_newton(&self) -> Result<Vec<BigInt>> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidArgument(format!(
                "logarithm needs constant term 1, got {}",
                self.coeffs[0]
            )));
        }
        let a = &self.coeffs;
        let mut p: Vec<BigInt> = vec![BigInt::zero()];
        for m in 1..=self.order() {
            let mut v = BigInt::from(m) * &a[m];
            for j in 1..m {
                v -= &p[j] * &a[m - j];
            }
            p.push(v);
        }
        p.remove(0);
        Ok(p)
    }
}

/// `F_r(x)` (or `F(x)` for the limit) to order `n`.
pub fn series_f(rank: Rank, order: usize) -> IntSeries {
    series_f_with(&mut AlphaTable::new(), rank, order)
}

pub fn series_f_with(table: &mut AlphaTable, rank: Rank, order: usize) -> IntSeries {
    IntSeries::new(table.coefficients(rank, order))
}

/// `P(m) = m·B(m)` for `log f(x) = ∑ B(m) x^m`.
pub fn series_log_p(f: &IntSeries) -> Result<Vec<BigInt>> {
    f.log_newton()
}

/// The exponents `β(1..=N)` with `f(x) = ∏_m (1 − x^m)^{−β(m)}` to order `N`,
/// by Möbius inversion of the Newton sequence:
/// `β(m) = (1/m)·∑_{d|m} μ(m/d)·P(d)`.
///
/// Fails with [`Error::Consistency`] if some sum is not divisible by `m`.
pub fn product_exponents(f: &IntSeries) -> Result<Vec<BigInt>> {
    let p = f.log_newton()?;
    let mut out = Vec::with_capacity(p.len());
    for m in 1..=p.len() as u64 {
        let mut s = BigInt::zero();
        for d in divisors(m)? {
            match mobius(m / d)? {
                1 => s += &p[d as usize - 1],
                -1 => s -= &p[d as usize - 1],
                _ => {}
            }
        }
        let (q, r) = s.div_rem(&BigInt::from(m));
        if !r.is_zero() {
            return Err(Error::Consistency(format!(
                "Möbius sum {s} at m = {m} is not divisible by m"
            )));
        }
        out.push(q);
    }
    Ok(out)
}

/// Check that the truncation of `F(x)` dominates that of `∏ (1 − x^k)^{-1}`
/// at each sample point.
///
/// Both truncations are taken at degree `order`; coefficientwise
/// `q(k) <= α(k)` is verified as well, which implies the pointwise result.
pub fn check_partition_lower_bound(samples: &[f64], order: usize) -> Result<bool> {
    if let Some(x) = samples.iter().find(|x| !(**x > 0.0 && **x < 1.0)) {
        return Err(Error::InvalidArgument(format!("sample {x} is not in (0, 1)")));
    }
    let alpha = series_f(Rank::Limit, order).into_coeffs();
    let q = crate::arith::partition_counts(order);
    if alpha.iter().zip(&q).any(|(a, q)| q > a) {
        return Ok(false);
    }
    let eval = |c: &[BigInt], x: f64| {
        c.iter()
            .rev()
            .fold(0.0, |acc, v| acc * x + v.to_f64().unwrap_or(f64::INFINITY))
    };
    Ok(samples.iter().all(|&x| eval(&alpha, x) >= eval(&q, x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn series_f_examples() {
        assert_eq!(series_f(Rank::Finite(1), 5).coeffs(), ints(&[1, 2, 3, 4, 5, 6]));
        assert_eq!(series_f(Rank::Finite(2), 3).coeffs(), ints(&[1, 2, 6, 9]));
        assert_eq!(series_f(Rank::Limit, 3).coeffs(), ints(&[1, 2, 6, 13]));
    }

    #[test]
    fn f2_matches_product_formula() {
        let n = 30;
        let prod = IntSeries::one_minus_x_pow(1, -2, n)
            .mul(&IntSeries::one_minus_x_pow(2, -3, n))
            .mul(&IntSeries::one_minus_x_pow(3, 1, n));
        assert_eq!(series_f(Rank::Finite(2), n), prod);
    }

    #[test]
    fn log_newton_examples() {
        let p = series_f(Rank::Finite(1), 8).log_newton().unwrap();
        assert!(p.iter().all(|v| *v == BigInt::from(2)));
        assert_eq!(IntSeries::one(6).log_newton().unwrap(), ints(&[0; 6]));
        assert_eq!(IntSeries::from_i64(&[1, 2, 6, 9]).log_newton().unwrap(), ints(&[2, 8, -1]));
        assert!(IntSeries::from_i64(&[2, 1]).log_newton().is_err());
    }

    #[test]
    fn exponents_of_known_products() {
        let f = IntSeries::from_i64(&[1, 2, 6, 9]);
        assert_eq!(product_exponents(&f).unwrap(), ints(&[2, 3, -1]));
        let n = 12;
        let g = IntSeries::one_minus_x_pow(3, -5, n).mul(&IntSeries::one_minus_x_pow(7, 4, n));
        let mut expect = vec![0i64; n];
        expect[2] = 5;
        expect[6] = -4;
        assert_eq!(product_exponents(&g).unwrap(), ints(&expect));
    }

    #[test]
    fn binomial_series() {
        assert_eq!(IntSeries::one_minus_x_pow(1, -2, 4), IntSeries::from_i64(&[1, 2, 3, 4, 5]));
        assert_eq!(IntSeries::one_minus_x_pow(2, 3, 6), IntSeries::from_i64(&[1, 0, -3, 0, 3, 0, -1]));
        assert_eq!(IntSeries::one_minus_x_pow(3, 0, 4), IntSeries::one(4));
    }

    #[test]
    fn ratio_expansion() {
        let num = IntPoly::one();
        let den = IntPoly::from_i64(&[1, -2, 1]);
        assert_eq!(
            IntSeries::from_ratio(&num, &den, 4).unwrap(),
            IntSeries::from_i64(&[1, 2, 3, 4, 5])
        );
        assert!(IntSeries::from_ratio(&num, &IntPoly::from_i64(&[2, 1]), 3).is_err());
    }

    #[test]
    fn partition_lower_bound() {
        assert!(check_partition_lower_bound(&[0.5], 30).unwrap());
        assert!(check_partition_lower_bound(&[0.1], 10).unwrap());
        assert!(check_partition_lower_bound(&[0.05, 0.3, 0.7, 0.95], 40).unwrap());
        assert!(check_partition_lower_bound(&[1.0], 5).is_err());
        assert!(check_partition_lower_bound(&[0.0], 5).is_err());
    }

    #[test]
    fn rank_monotone_coefficientwise() {
        let lim = series_f(Rank::Limit, 20);
        for r in 1..=5 {
            let a = series_f(Rank::Finite(r), 20);
            let b = series_f(Rank::Finite(r + 1), 20);
            for k in 0..=20 {
                assert!(a.coeffs()[k] <= b.coeffs()[k]);
                assert!(b.coeffs()[k] <= lim.coeffs()[k]);
            }
        }
    }
}
