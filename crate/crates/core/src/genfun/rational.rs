//! Exact rational generating functions `F_r(x, y)` and `F_r(x)`.
//!
//! `F_r(x, y)` is built from
//!
//! ```text
//! F_0(x, y) = 1 / (1 − y)²
//! F_r(x, y) = (F_{r−1}(x, x^r)·x^r − F_{r−1}(x, y)·y) / ((x^r − y)(1 − y))
//! ```
//!
//! and `F_r(x) = F_{r−1}(x, x^r)`. Every denominator that arises is a
//! product of binomials `1 − x^a·y^b`, so denominators are kept factored.
//! Two fractions are combined over the least common multiple of their
//! factored denominators, and the division by `x^r − y` is carried out
//! exactly on the numerator. No bivariate gcd is ever taken.
//!
//! Univariate results are reduced completely: each `1 − x^a` splits into
//! cyclotomic polynomials, and every `Φ_d` dividing the numerator is
//! cancelled. Since the `Φ_d` are irreducible and pairwise distinct, what
//! remains is in lowest terms.

use std::collections::BTreeMap;

use num_traits::Signed;

use super::bivariate::BivariatePoly;
use super::poly::{cyclotomic, IntPoly};
use super::series::IntSeries;
use crate::{Error, Result};

/// Default largest `r` accepted by [`rational_f`].
pub const DEFAULT_MAX_RANK: u32 = 6;

/// `∏ (1 − x^a·y^b)^{e}`, keyed by `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinomialProduct(BTreeMap<(usize, usize), u32>);

impl BinomialProduct {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn single(a: usize, b: usize, e: u32) -> Self {
        let mut m = BTreeMap::new();
        if e > 0 {
            m.insert((a, b), e);
        }
        Self(m)
    }

    pub fn factors(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.0.iter().map(|(&k, &e)| (k, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (k, e) in other.factors() {
            *m.entry(k).or_default() += e;
        }
        Self(m)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (k, e) in other.factors() {
            let slot = m.entry(k).or_default();
            *slot = (*slot).max(e);
        }
        Self(m)
    }

    /// `self / other`; `other` must divide `self` factor by factor.
    pub fn div(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (k, e) in other.factors() {
            let slot = m.get_mut(&k).expect("divisor factor missing");
            *slot -= e;
            if *slot == 0 {
                m.remove(&k);
            }
        }
        Self(m)
    }

    /// `y := x^r`: each `1 − x^a y^b` becomes `1 − x^{a + r·b}`.
    pub fn subst_y_pow(&self, r: usize) -> Self {
        let mut m = BTreeMap::new();
        for ((a, b), e) in self.factors() {
            *m.entry((a + r * b, 0)).or_default() += e;
        }
        Self(m)
    }

    /// `y := 0`: factors involving `y` become 1.
    pub fn at_y_zero(&self) -> Self {
        Self(self.0.iter().filter(|(k, _)| k.1 == 0).map(|(&k, &e)| (k, e)).collect())
    }

    pub fn expand(&self) -> BivariatePoly {
        self.factors().fold(BivariatePoly::one(), |acc, ((a, b), e)| {
            &acc * &BivariatePoly::one_minus_monomial(a, b).pow(e)
        })
    }

    /// Exponents `e_a` of `∏ (1 − x^a)^{e_a}`; panics if a factor involves `y`.
    fn univariate(&self) -> BTreeMap<usize, u32> {
        self.factors()
            .map(|((a, b), e)| {
                assert_eq!(b, 0, "factor involves y");
                (a, e)
            })
            .collect()
    }
}

impl std::fmt::Display for BinomialProduct {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|((a, b), e)| {
                let base = BivariatePoly::one_minus_monomial(a, b);
                match e {
                    1 => format!("({base})"),
                    _ => format!("({base})^{e}"),
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// `num / den` with a factored denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateRational {
    pub num: BivariatePoly,
    pub den: BinomialProduct,
}

impl BivariateRational {
    /// The expanded denominator.
    pub fn denominator(&self) -> BivariatePoly {
        self.den.expand()
    }

    /// `F(x, x^r)`, reduced.
    pub fn subst_y_pow(&self, r: usize) -> UnivariateRational {
        UnivariateRational::from_binomials(self.num.subst_y_pow(r), &self.den.subst_y_pow(r).univariate())
    }

    /// `F(x, 0)`, reduced.
    pub fn at_y_zero(&self) -> UnivariateRational {
        UnivariateRational::from_binomials(self.num.at_y_zero(), &self.den.at_y_zero().univariate())
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &BivariateRational) -> bool {
        &self.num * &other.denominator() == &other.num * &self.denominator()
    }
}

/// `num / ∏ Φ_d^{e_d}` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateRational {
    pub num: IntPoly,
    /// Exponent of each cyclotomic factor `Φ_d` of the denominator.
    pub den: BTreeMap<usize, u32>,
}

impl UnivariateRational {
    /// Reduces `num / ∏ (1 − x^a)^{e_a}`.
    pub fn from_binomials(num: IntPoly, binomials: &BTreeMap<usize, u32>) -> Self {
        // 1 − x^a = −∏_{d|a} Φ_d
        let mut den: BTreeMap<usize, u32> = BTreeMap::new();
        let mut sign_flips = 0u32;
        for (&a, &e) in binomials {
            assert!(a >= 1, "constant factor 1 − x^0 = 0 in a denominator");
            sign_flips += e;
            for d in (1..=a).filter(|d| a % d == 0) {
                *den.entry(d).or_default() += e;
            }
        }
        let mut num = if sign_flips % 2 == 1 { -&num } else { num };
        for (&d, e) in den.iter_mut() {
            let phi = cyclotomic(d);
            while *e > 0 {
                match num.div_exact_unit(&phi) {
                    Some(q) => {
                        num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|_, e| *e > 0);
        Self { num, den }
    }

    pub fn denominator(&self) -> IntPoly {
        self.den
            .iter()
            .fold(IntPoly::one(), |acc, (&d, &e)| &acc * &cyclotomic(d).pow(e))
    }

    /// Power series expansion to order `n`.
    pub fn to_series(&self, order: usize) -> IntSeries {
        IntSeries::from_ratio(&self.num, &self.denominator(), order)
            .expect("cyclotomic denominators have unit constant term")
    }

    /// Equality as rational functions with `p / q`.
    pub fn same_function(&self, p: &IntPoly, q: &IntPoly) -> bool {
        &self.num * q == p * &self.denominator()
    }
}

impl std::fmt::Display for UnivariateRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.num)?;
        if self.den.is_empty() {
            return Ok(());
        }
        let parts: Vec<String> = self
            .den
            .iter()
            .map(|(&d, &e)| match e {
                1 => format!("({})", cyclotomic(d)),
                _ => format!("({})^{e}", cyclotomic(d)),
            })
            .collect();
        write!(f, " / ({})", parts.join("*"))
    }
}

/// `F_r(x, y)` and `F_r(x)` for one `r`.
#[derive(Debug, Clone)]
pub struct RationalF {
    pub r: u32,
    pub bivariate: BivariateRational,
    pub univariate: UnivariateRational,
}

/// `F_0, …, F_r`.
pub fn rational_f_sequence(r: u32, max_rank: u32) -> Result<Vec<RationalF>> {
    if r > max_rank {
        return Err(Error::OutOfRange {
            what: "closed-form rank r",
            value: r as u64,
            bound: max_rank as u64,
        });
    }
    let f0 = BivariateRational {
        num: BivariatePoly::one(),
        den: BinomialProduct::single(0, 1, 2),
    };
    let mut out = vec![RationalF {
        r: 0,
        univariate: f0.at_y_zero(),
        bivariate: f0,
    }];
    for rank in 1..=r as usize {
        let prev = &out[rank - 1].bivariate;
        let at_xr_den = prev.den.subst_y_pow(rank);
        let at_xr_num = BivariatePoly::from_x(prev.num.subst_y_pow(rank));
        let common = at_xr_den.lcm(&prev.den);
        let lhs = &at_xr_num.shift(rank, 0) * &common.div(&at_xr_den).expand();
        let rhs = &prev.num.shift(0, 1) * &common.div(&prev.den).expand();
        let num = (&lhs - &rhs).div_exact_xr_minus_y(rank).ok_or_else(|| {
            Error::Consistency(format!("numerator of F_{rank}(x, y) is not divisible by x^{rank} − y"))
        })?;
        let bivariate = BivariateRational {
            num,
            den: common.mul(&BinomialProduct::single(0, 1, 1)),
        };
        let univariate = prev.subst_y_pow(rank);
        out.push(RationalF {
            r: rank as u32,
            bivariate,
            univariate,
        });
    }
    Ok(out)
}

/// `F_r(x, y)` and the reduced `F_r(x)`, for `r <= max_rank`.
pub fn rational_f(r: u32, max_rank: u32) -> Result<RationalF> {
    Ok(rational_f_sequence(r, max_rank)?.pop().unwrap())
}

/// `x^{-shift_x}·y^{-shift_y}·F(1/x, 1/y) == F(x, y)`, tested exactly by
/// reversing coefficients and cross-multiplying.
fn bivariate_reciprocal_identity(f: &BivariateRational, shift_x: i64, shift_y: i64) -> bool {
    let (n, d) = (&f.num, f.denominator());
    let (nx, ny) = (n.deg_x().unwrap_or(0), n.deg_y().unwrap_or(0));
    let (dx, dy) = (d.deg_x().unwrap_or(0), d.deg_y().unwrap_or(0));
    let (n_rev, d_rev) = (n.reversed(nx, ny), d.reversed(dx, dy));
    // F(1/x, 1/y) = x^{dx − nx} y^{dy − ny} · n_rev / d_rev
    let ex = dx as i64 - nx as i64 - shift_x;
    let ey = dy as i64 - ny as i64 - shift_y;
    let lhs = (n * &d_rev).shift((-ex).max(0) as usize, (-ey).max(0) as usize);
    let rhs = (&n_rev * &d).shift(ex.max(0) as usize, ey.max(0) as usize);
    lhs == rhs
}

fn univariate_reciprocal_identity(f: &UnivariateRational, shift: i64) -> bool {
    let (n, d) = (&f.num, f.denominator());
    let (nd, dd) = (n.degree().unwrap_or(0), d.degree().unwrap_or(0));
    let e = dd as i64 - nd as i64 - shift;
    let lhs = (n * &d.reversed(dd)).shift((-e).max(0) as usize);
    let rhs = (&n.reversed(nd) * &d).shift(e.max(0) as usize);
    lhs == rhs
}

/// Whether `F_r(x, y) = x^{−r(r+1)/2}·y^{−2}·F_r(1/x, 1/y)` and
/// `F_r(x) = x^{−r(r+3)/2}·F_r(1/x)` both hold exactly.
pub fn check_funceq(r: u32, max_rank: u32) -> Result<bool> {
    let f = rational_f(r, max_rank)?;
    let r = r as i64;
    Ok(bivariate_reciprocal_identity(&f.bivariate, r * (r + 1) / 2, 2)
        && univariate_reciprocal_identity(&f.univariate, r * (r + 3) / 2))
}

/// Whether the expansion of the reduced `F_r(x)` agrees with the
/// recursion's coefficients `α_r(0..=n)`.
pub fn series_matches_rational(r: u32, order: usize, max_rank: u32) -> Result<bool> {
    let f = rational_f(r, max_rank)?;
    Ok(f.univariate.to_series(order) == super::series::series_f(crate::Rank::Finite(r), order))
}

/// The numerator of `F_r(x)` normalised to a positive leading coefficient.
pub fn numerator(r: u32, max_rank: u32) -> Result<IntPoly> {
    let f = rational_f(r, max_rank)?;
    let n = f.univariate.num;
    Ok(if n.leading().is_negative() { -&n } else { n })
}
