//! Polynomials in `x` and `y` over ℤ.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// `∑_j p_j(x)·y^j`, with no trailing zero `p_j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    ys: Vec<IntPoly>,
}

impl BivariatePoly {
    pub fn new(mut ys: Vec<IntPoly>) -> Self {
        while ys.last().is_some_and(IntPoly::is_zero) {
            ys.pop();
        }
        Self { ys }
    }

    pub fn zero() -> Self {
        Self { ys: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_x(IntPoly::one())
    }

    /// A polynomial in `x` alone.
    pub fn from_x(p: IntPoly) -> Self {
        Self::new(vec![p])
    }

    /// `c·x^i·y^j`.
    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        let mut ys = vec![IntPoly::zero(); j + 1];
        ys[j] = IntPoly::monomial(c, i);
        Self::new(ys)
    }

    /// `1 − x^a·y^b`.
    pub fn one_minus_monomial(a: usize, b: usize) -> Self {
        &Self::one() - &Self::monomial(BigInt::one(), a, b)
    }

    /// Coefficient polynomials in `x`, indexed by the power of `y`.
    pub fn y_coeffs(&self) -> &[IntPoly] {
        &self.ys
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.ys.get(j).map(|p| p.coeff(i)).unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.ys.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.ys.iter().filter_map(IntPoly::degree).max()
    }

    /// Number of nonzero terms.
    pub fn terms(&self) -> usize {
        self.ys
            .iter()
            .map(|p| p.coeffs().iter().filter(|c| !c.is_zero()).count())
            .sum()
    }

    /// `x^i·y^j·self`.
    pub fn shift(&self, i: usize, j: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut ys = vec![IntPoly::zero(); j];
        ys.extend(self.ys.iter().map(|p| p.shift(i)));
        Self { ys }
    }

    /// `self(x, x^r)`.
    pub fn subst_y_pow(&self, r: usize) -> IntPoly {
        self.ys
            .iter()
            .enumerate()
            .fold(IntPoly::zero(), |acc, (j, p)| &acc + &p.shift(r * j))
    }

    /// `self(x, 0)`.
    pub fn at_y_zero(&self) -> IntPoly {
        self.ys.first().cloned().unwrap_or_default()
    }

    /// `self / (x^r − y)` when the division is exact.
    pub fn div_exact_xr_minus_y(&self, r: usize) -> Option<Self> {
        let Some(d) = self.deg_y() else {
            return Some(Self::zero());
        };
        if d == 0 {
            return None;
        }
        // synthetic division by the monic (y − x^r): q_{j−1} = n_j + x^r·q_j
        let mut q = vec![IntPoly::zero(); d];
        let mut carry = IntPoly::zero();
        for j in (1..=d).rev() {
            carry = &self.ys[j] + &carry.shift(r);
            q[j - 1] = carry.clone();
        }
        let rem = &self.ys[0] + &carry.shift(r);
        if !rem.is_zero() {
            return None;
        }
        Some(-&Self::new(q))
    }

    /// `x^dx·y^dy·self(1/x, 1/y)` for `dx >= deg_x`, `dy >= deg_y`.
    pub fn reversed(&self, dx: usize, dy: usize) -> Self {
        let mut ys = vec![IntPoly::zero(); dy + 1];
        for (j, p) in self.ys.iter().enumerate() {
            ys[dy - j] = p.reversed(dx);
        }
        Self::new(ys)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let n = self.ys.len().max(rhs.ys.len());
        let zero = IntPoly::zero();
        BivariatePoly::new(
            (0..n)
                .map(|j| self.ys.get(j).unwrap_or(&zero) + rhs.ys.get(j).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        self + &(-rhs)
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            ys: self.ys.iter().map(|p| -p).collect(),
        }
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        if self.is_zero() || rhs.is_zero() {
            return BivariatePoly::zero();
        }
        let mut ys = vec![IntPoly::zero(); self.ys.len() + rhs.ys.len() - 1];
        for (i, a) in self.ys.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.ys.iter().enumerate() {
                ys[i + j] = &ys[i + j] + &(a * b);
            }
        }
        BivariatePoly::new(ys)
    }
}

impl std::fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, p) in self.ys.iter().enumerate() {
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let neg = c.is_negative();
                if first {
                    if neg {
                        f.write_str("-")?;
                    }
                } else {
                    f.write_str(if neg { " - " } else { " + " })?;
                }
                first = false;
                let mag = c.abs();
                let mut factors = Vec::new();
                if !mag.is_one() || (i == 0 && j == 0) {
                    factors.push(mag.to_string());
                }
                match i {
                    0 => {}
                    1 => factors.push("x".into()),
                    _ => factors.push(format!("x^{i}")),
                }
                match j {
                    0 => {}
                    1 => factors.push("y".into()),
                    _ => factors.push(format!("y^{j}")),
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}
