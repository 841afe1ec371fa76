use num_traits::ToPrimitive;

use super::beta::beta;
use super::euler::SeriesKind;
use crate::arith::{zeta_minus_one, Real};
use crate::{Error, Rank, Result};

/// `H(1)` for a series `ζ²(s)·H(s)`, where `H(s) = ∏_{m>=2} ζ(ms)^{e_m}`.
/// The summatory function of such a series grows like `H(1)·x·log x`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanValueConstant {
    pub kind: SeriesKind,
    /// Value with the error of the truncated product actually evaluated.
    pub value: Real,
    /// Estimated contribution of the factors beyond the cutoff; not a bound.
    pub tail_estimate: f64,
    /// Largest `m` whose factor was included.
    pub cutoff: usize,
    pub formula: String,
}

/// Exponents `e_m` of `ζ(ms)` for `m = 1..=len`, and whether the product
/// was cut short.
fn exponents(kind: &SeriesKind, m_max: usize) -> Result<(Vec<f64>, bool)> {
    Ok(match kind {
        SeriesKind::SubgroupClasses(rank) => {
            let b = beta(*rank, m_max)?;
            (b.iter().map(|v| v.to_f64().unwrap()).collect(), true)
        }
        SeriesKind::DirectFactors(rank) | SeriesKind::UnitaryFactors(rank) => {
            let (top, truncated) = match rank {
                Rank::Finite(r) => (*r as usize, false),
                Rank::Limit => (m_max, true),
            };
            let unitary = matches!(kind, SeriesKind::UnitaryFactors(_));
            let len = if unitary && !truncated { 2 * top } else { top.max(1) };
            let mut e = vec![0.0; len];
            for j in 1..=top.min(len) {
                e[j - 1] += 2.0;
                if unitary && 2 * j <= len {
                    e[2 * j - 1] -= 1.0;
                }
            }
            (e, truncated)
        }
        SeriesKind::ZetaPowers(e) => (e.iter().map(|&v| v as f64).collect(), false),
    })
}

/// `∏_{m=2}^{m_max} ζ(m)^{e_m}` for the series kind, with `ζ(m) − 1`
/// evaluated to about `eps` overall.
///
/// Finite-rank direct and unitary kinds use their closed finite products and
/// ignore the cutoff; subgroup-class kinds use the zeta exponents up to
/// `m_max`. The series must have `ζ²(s)` as its first factor.
pub fn mean_constant(kind: &SeriesKind, m_max: usize, eps: f64) -> Result<MeanValueConstant> {
    if m_max < 2 {
        return Err(Error::OutOfRange {
            what: "m_max",
            value: m_max as u64,
            bound: 2,
        });
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidArgument(format!("eps must be positive, got {eps}")));
    }
    let (mut e, truncated) = exponents(kind, m_max)?;
    if e.first() != Some(&2.0) {
        return Err(Error::InvalidArgument(format!("{kind} does not start with zeta(s)^2")));
    }
    if truncated {
        e.truncate(m_max);
    }
    let share = eps / e.len() as f64;
    let mut log_sum = 0.0;
    let mut log_err = 0.0;
    for (idx, &em) in e.iter().enumerate().skip(1) {
        if em == 0.0 {
            continue;
        }
        let m = idx as u32 + 1;
        // keep ~13 significant digits of ζ(m) − 1 however small it is
        let floor = 1e-13 * 2f64.powi(2 - m as i32);
        let z = zeta_minus_one(m, (share / (1.0 + em.abs())).max(floor))?;
        log_sum += em * z.value.ln_1p();
        log_err += em.abs() * z.err / (1.0 + z.value) + em.abs() * z.value * f64::EPSILON;
    }
    let value = log_sum.exp();
    let err = value * (log_err.exp_m1() + 4.0 * f64::EPSILON * (1.0 + log_sum.abs()));
    let tail = if truncated { tail_log(&e) } else { 0.0 };
    Ok(MeanValueConstant {
        kind: kind.clone(),
        value: Real { value, err },
        tail_estimate: value * tail.exp_m1(),
        cutoff: e.len(),
        formula: formula(kind, e.len()),
    })
}

/// `∑_{m>M} g^m 2^{1−m}` with `g` the largest `|e_m|^{1/m}` over the upper half
/// of the computed exponents: a heuristic size of `log` of the omitted factors.
fn tail_log(e: &[f64]) -> f64 {
    let n = e.len();
    let g = (n / 2..=n)
        .filter(|&m| m >= 1)
        .map(|m| e[m - 1].abs().powf(1.0 / m as f64))
        .fold(0.0, f64::max);
    let ratio = g / 2.0;
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    2.0 * ratio.powi(n as i32 + 1) / (1.0 - ratio)
}

fn formula(kind: &SeriesKind, cutoff: usize) -> String {
    match kind {
        SeriesKind::SubgroupClasses(rank) => {
            format!("prod_{{m=2}}^{{{cutoff}}} zeta(m)^beta_{rank}(m)")
        }
        SeriesKind::DirectFactors(Rank::Finite(r)) => format!("prod_{{j=2}}^{{{r}}} zeta(j)^2"),
        SeriesKind::UnitaryFactors(Rank::Finite(r)) => {
            format!("prod_{{j=2}}^{{{r}}} zeta(j)^2 / prod_{{j=1}}^{{{r}}} zeta(2j)")
        }
        SeriesKind::DirectFactors(Rank::Limit) => format!("prod_{{j=2}}^{{{cutoff}}} zeta(j)^2"),
        SeriesKind::UnitaryFactors(Rank::Limit) => {
            format!("prod_{{j=2}}^{{{cutoff}}} zeta(j)^2 / prod_{{2j<={cutoff}}} zeta(2j)")
        }
        SeriesKind::ZetaPowers(_) => format!("prod_{{m=2}}^{{{cutoff}}} zeta(m)^e_m"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::zeta_real;

    fn z(m: u32) -> f64 {
        zeta_real(m, 1e-14).unwrap().value
    }

    #[test]
    fn rank_one_is_exactly_one() {
        let c = mean_constant(&SeriesKind::SubgroupClasses(Rank::Finite(1)), 50, 1e-12).unwrap();
        assert_eq!(c.value.value, 1.0);
        assert_eq!(c.tail_estimate, 0.0);
    }

    #[test]
    fn rank_two_closed_form() {
        let c = mean_constant(&SeriesKind::SubgroupClasses(Rank::Finite(2)), 40, 1e-12).unwrap();
        let expect = z(2).powi(3) / z(3);
        assert!((c.value.value - expect).abs() < 1e-12);
        assert!((c.value.value - 3.702716472475540).abs() < 1e-12);
    }

    #[test]
    fn limit_constant() {
        let c = mean_constant(&SeriesKind::SubgroupClasses(Rank::Limit), 100, 1e-12).unwrap();
        assert!((c.value.value - 13.1854452968422695).abs() < 1e-10);
        assert!(c.value.err < 1e-10);
        assert!(c.tail_estimate.abs() < 1e-10);
    }

    #[test]
    fn direct_and_unitary() {
        let d = mean_constant(&SeriesKind::DirectFactors(Rank::Finite(3)), 2, 1e-12).unwrap();
        assert!((d.value.value - (z(2) * z(3)).powi(2)).abs() < 1e-12);
        let u = mean_constant(&SeriesKind::UnitaryFactors(Rank::Finite(2)), 2, 1e-12).unwrap();
        let expect = z(2).powi(2) / (z(2) * z(4));
        assert!((u.value.value - expect).abs() < 1e-12);
        // unitary factors are a subset of direct factors
        for r in 1..=6 {
            let d = mean_constant(&SeriesKind::DirectFactors(Rank::Finite(r)), 2, 1e-12).unwrap();
            let u = mean_constant(&SeriesKind::UnitaryFactors(Rank::Finite(r)), 2, 1e-12).unwrap();
            assert!(u.value.value > 0.0 && u.value.value < d.value.value + 1e-15);
        }
    }

    #[test]
    fn zeta_powers_match_rank_two() {
        let a = mean_constant(&SeriesKind::ZetaPowers(vec![2, 3, -1]), 2, 1e-12).unwrap();
        let b = mean_constant(&SeriesKind::SubgroupClasses(Rank::Finite(2)), 30, 1e-12).unwrap();
        assert!((a.value.value - b.value.value).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        let k = SeriesKind::SubgroupClasses(Rank::Limit);
        assert!(mean_constant(&k, 1, 1e-12).is_err());
        assert!(mean_constant(&SeriesKind::ZetaPowers(vec![1, 1]), 10, 1e-12).is_err());
    }
}
