//! Dense integer matrices and the Smith normal form.

use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A dense integer matrix, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
    ncols: usize,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidArgument("matrix rows have different lengths".into()));
        }
        Ok(Self { rows, ncols })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn zero(n: usize, m: usize) -> Self {
        Self {
            rows: vec![vec![BigInt::zero(); m]; n],
            ncols: m,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![BigInt::one(); n])
    }

    pub fn diagonal(d: &[BigInt]) -> Self {
        let mut m = Self::zero(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m.rows[i][i] = v.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Entries off the diagonal are all zero.
    pub fn is_diagonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, v)| i == j || v.is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
        }
        let n = self.nrows();
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.rows {
            r.swap(a, b);
        }
    }

    /// row `dst` += q · row `src`
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.ncols {
            let v = &self.rows[src][j] * q;
            self.rows[dst][j] += v;
        }
    }

    /// col `dst` += q · col `src`
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in &mut self.rows {
            let v = &r[src] * q;
            r[dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in &mut self.rows[i] {
            *v = -&*v;
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, rhs.nrows(), "matrix shapes do not match");
        let mut out = IntMatrix::zero(self.nrows(), rhs.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    out.rows[i][j] += a * &rhs.rows[k][j];
                }
            }
        }
        out
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// A diagonal matrix `diag(d_1, …, d_r)` with `d_1 | d_2 | … | d_r` and
/// `d_i >= 0`. Zeros may only occur at the end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SnfMatrix {
    diag: Vec<BigInt>,
}

impl SnfMatrix {
    pub fn new(diag: Vec<BigInt>) -> Result<Self> {
        if diag.iter().any(Signed::is_negative) {
            return Err(Error::InvalidArgument("invariant factors must be nonnegative".into()));
        }
        if !diag.windows(2).all(|w| divides(&w[0], &w[1])) {
            return Err(Error::InvalidArgument(format!(
                "diagonal is not a divisibility chain: {}",
                diag.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            )));
        }
        Ok(Self { diag })
    }

    pub fn diag(&self) -> &[BigInt] {
        &self.diag
    }

    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// `∏ d_i`: the order of the group with this relation matrix.
    pub fn determinant(&self) -> BigInt {
        self.diag.iter().product()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(&self.diag)
    }
}

/// `a | b`, with `0 | b` only for `b = 0`.
fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        (b % a).is_zero()
    }
}

/// The Smith normal form of a square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub s: SnfMatrix,
    /// Unimodular row transform.
    pub u: IntMatrix,
    /// Unimodular column transform.
    pub v: IntMatrix,
}

/// `U·M·V = S` with `S` in Smith normal form and `U`, `V` unimodular.
///
/// Pivots on the smallest nonzero entry of the trailing block, clears its row
/// and column by division with remainder, and folds in any row whose entries
/// the pivot does not divide. Zero invariant factors come last.
pub fn snf(m: &IntMatrix) -> Result<SmithForm> {
    if !m.is_square() {
        return Err(Error::InvalidArgument("Smith normal form needs a square matrix".into()));
    }
    let n = m.nrows();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(n);
    let mut v = IntMatrix::identity(n);
    for t in 0..n {
        'pivot: loop {
            // smallest nonzero entry of the trailing block
            let best = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a.rows[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a.rows[i][j].abs().cmp(&a.rows[k][l].abs()));
            let Some((pi, pj)) = best else {
                break 'pivot;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..n {
                    if a.rows[i][t].is_zero() {
                        continue;
                    }
                    let q = -a.rows[i][t].div_floor(&a.rows[t][t]);
                    a.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                    dirty |= !a.rows[i][t].is_zero();
                }
                for j in t + 1..n {
                    if a.rows[t][j].is_zero() {
                        continue;
                    }
                    let q = -a.rows[t][j].div_floor(&a.rows[t][t]);
                    a.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    dirty |= !a.rows[t][j].is_zero();
                }
                if dirty {
                    // a remainder is smaller than the pivot: re-pivot
                    continue 'pivot;
                }
                break;
            }
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !divides(&a.rows[t][t], &a.rows[i][j]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break 'pivot,
            }
        }
        if a.rows[t][t].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    let diag: Vec<BigInt> = (0..n).map(|i| a.rows[i][i].clone()).collect();
    let s = SnfMatrix::new(diag).map_err(|e| Error::Consistency(format!("Smith form: {e}")))?;
    Ok(SmithForm { s, u, v })
}
