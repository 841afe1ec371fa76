//! Complex roots of integer polynomials by Aberth–Ehrlich iteration.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::poly::IntPoly;
use super::rational::numerator;
use crate::{Error, Result};

pub const MAX_ITERATIONS: usize = 10_000;
/// Convergence threshold on `|p(z)| / ∑|a_i||z|^i`.
pub const RELATIVE_RESIDUAL: f64 = 1e-12;

/// Roots of an exact integer polynomial with per-root residual bounds.
#[derive(Debug, Clone)]
pub struct ComplexPolyRoots {
    pub coefficients: Vec<num_bigint::BigInt>,
    pub roots: Vec<Complex64>,
    /// `|p(z)| / ∑|a_i||z|^i` at each root.
    pub residuals: Vec<f64>,
    pub iterations: usize,
}

impl ComplexPolyRoots {
    pub fn moduli(&self) -> Vec<f64> {
        self.roots.iter().map(|z| z.norm()).collect()
    }

    pub fn min_modulus(&self) -> Option<f64> {
        self.moduli().into_iter().reduce(f64::min)
    }

    pub fn max_modulus(&self) -> Option<f64> {
        self.moduli().into_iter().reduce(f64::max)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    let mut scale = 0.0;
    let r = z.norm();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
        scale = scale * r + a.abs();
    }
    (p, dp, scale)
}

/// All complex roots of `p`, with multiplicity.
pub fn find_roots(p: &IntPoly) -> Result<ComplexPolyRoots> {
    let Some(n) = p.degree() else {
        return Err(Error::InvalidArgument("the zero polynomial has no finite root set".into()));
    };
    // x = 0 is an exact root of multiplicity equal to the low-order zeros
    let zeros = p.coeffs().iter().take_while(|a| a.is_zero()).count();
    let c: Vec<f64> = p.coeffs()[zeros..].iter().map(|a| a.to_f64().unwrap()).collect();
    let n = n - zeros;
    if n == 0 {
        return Ok(ComplexPolyRoots {
            coefficients: p.coeffs().to_vec(),
            roots: vec![Complex64::zero(); zeros],
            residuals: vec![0.0; zeros],
            iterations: 0,
        });
    }
    // start on a circle of radius |a_0/a_n|^{1/n} (or 1 for a zero root),
    // rotated off the real axis so conjugate pairs separate
    let radius = match (c[0].abs(), c[n].abs()) {
        (a0, an) if a0 > 0.0 => (a0 / an).powf(1.0 / n as f64),
        _ => 1.0,
    };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    let residual = |z: Complex64| {
        let (v, _, s) = horner(&c, z);
        if s == 0.0 {
            0.0
        } else {
            v.norm() / s
        }
    };
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut converged = true;
        for k in 0..n {
            let (v, dv, scale) = horner(&c, z[k]);
            if v.norm() <= RELATIVE_RESIDUAL * scale {
                continue;
            }
            converged = false;
            let ratio = v / dv;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
            }
        }
        if converged {
            break;
        }
    }
    let mut residuals: Vec<f64> = z.iter().map(|&w| residual(w)).collect();
    let worst = residuals.iter().copied().fold(0.0, f64::max);
    if worst > RELATIVE_RESIDUAL {
        return Err(Error::NoConvergence {
            iterations,
            residual: worst,
            partial: z,
        });
    }
    z.extend(std::iter::repeat(Complex64::zero()).take(zeros));
    residuals.extend(std::iter::repeat(0.0).take(zeros));
    Ok(ComplexPolyRoots {
        coefficients: p.coeffs().to_vec(),
        roots: z,
        residuals,
        iterations,
    })
}

/// Roots of the numerator of the reduced `F_r(x)`.
pub fn numerator_root_moduli(r: u32, max_rank: u32) -> Result<ComplexPolyRoots> {
    find_roots(&numerator(r, max_rank)?)
}
