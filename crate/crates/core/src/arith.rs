//! Exact integer primitives and double-precision zeta values with error bounds.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Default bound of the cached prime sieve used for factorisation.
pub const DEFAULT_SIEVE_BOUND: u64 = 10_000_000;

/// Primes up to a fixed bound, used for trial division.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    bound: u64,
    primes: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(bound: u64) -> Self {
        Self {
            bound,
            primes: primes_up_to(bound as usize),
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Prime factorisation `n = ∏ p^e` in ascending order of `p`.
    ///
    /// Trial division is complete for `n <= bound²`; larger inputs are
    /// rejected.
    pub fn factorize(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        if n == 0 {
            return Err(Error::InvalidArgument("cannot factor 0".into()));
        }
        if (n as u128) > (self.bound as u128) * (self.bound as u128) {
            return Err(Error::OutOfRange {
                what: "n",
                value: n,
                bound: self.bound.saturating_mul(self.bound),
            });
        }
        let mut rest = n;
        let mut out = Vec::new();
        for &p in &self.primes {
            if p * p > rest {
                break;
            }
            if rest % p == 0 {
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                out.push((p, e));
            }
        }
        if rest > 1 {
            out.push((rest, 1));
        }
        Ok(out)
    }
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: usize) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut i = 2;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| !composite[k]).map(|k| k as u64).collect()
}

/// The shared sieve, built once on first use.
pub fn default_sieve() -> &'static PrimeSieve {
    static SIEVE: OnceLock<PrimeSieve> = OnceLock::new();
    SIEVE.get_or_init(|| PrimeSieve::new(DEFAULT_SIEVE_BOUND))
}

pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    default_sieve().factorize(n)
}

/// The Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if f.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if f.len() % 2 == 0 { 1 } else { -1 })
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n)? {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of distinct prime factors.
pub fn omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.len() as u32)
}

/// Number of unitary divisors `d | n` with `gcd(d, n/d) = 1`, i.e. `2^ω(n)`.
pub fn unitary_divisor_count(n: u64) -> Result<u64> {
    Ok(1u64 << omega(n)?)
}

/// `q(0), …, q(n)` by Euler's pentagonal number recurrence.
pub fn partition_counts(n: usize) -> Vec<BigInt> {
    let mut q: Vec<BigInt> = Vec::with_capacity(n + 1);
    q.push(BigInt::one());
    for i in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = q[i - g1].clone();
            if g2 <= i {
                term += &q[i - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        q.push(acc);
    }
    q
}

/// The number of partitions `q(n)`.
pub fn partition_count(n: usize) -> BigInt {
    partition_counts(n).pop().unwrap()
}

/// `⌊√n⌋`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// `∑_{n<=x} d(n)` by the Dirichlet hyperbola method.
pub fn divisor_summatory(x: u64) -> BigInt {
    let u = isqrt(x);
    let mut s: u128 = 0;
    for i in 1..=u {
        s += (x / i) as u128;
    }
    BigInt::from(2 * s) - BigInt::from(u as u128 * u as u128)
}

/// A double-precision value with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real {
    pub value: f64,
    pub err: f64,
}

// B_2, B_4, …, B_24
const BERNOULLI_EVEN: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

/// `ζ(m) − 1` with absolute error below `eps`.
///
/// Evaluated as `∑_{2<=n<N} n^{-m}` plus the Euler–Maclaurin tail at `N`.
/// For real `m > 1` the remainder after the `B_{2K}` term is bounded by the
/// magnitude of the first omitted term; the reported error adds that bound
/// to a bound on accumulated rounding. Computing `ζ(m) − 1` directly keeps
/// full relative precision for large `m`, where `ζ(m)` itself rounds to 1.
pub fn zeta_minus_one(m: u32, eps: f64) -> Result<Real> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("zeta(m) needs m >= 2, got {m}")));
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidArgument(format!("eps must be positive, got {eps}")));
    }
    let s = m as f64;
    let terms = BERNOULLI_EVEN.len() - 1;
    let mut n_cut = 8u64;
    loop {
        let nf = n_cut as f64;
        let mut partial = 0.0;
        for n in (2..n_cut).rev() {
            partial += (n as f64).powf(-s);
        }
        let mut tail = nf.powf(1.0 - s) / (s - 1.0) + 0.5 * nf.powf(-s);
        // Running factor s(s+1)…(s+2k-2) / (2k)! · N^{-s-2k+1}.
        let mut factor = s * nf.powf(-s - 1.0) / 2.0;
        let mut omitted = 0.0;
        for k in 1..=terms + 1 {
            let term = BERNOULLI_EVEN[k - 1] * factor;
            if k <= terms {
                tail += term;
            } else {
                omitted = term.abs();
            }
            let kk = k as f64;
            factor *= (s + 2.0 * kk - 1.0) * (s + 2.0 * kk) / ((2.0 * kk + 1.0) * (2.0 * kk + 2.0))
                / (nf * nf);
        }
        let value = partial + tail;
        // first-order bound for n roundings of relative size u = ε/2 each
        let rounding = (n_cut as f64 + terms as f64 + 4.0) * 0.5 * f64::EPSILON * value.abs();
        let err = omitted + rounding;
        if err < eps {
            return Ok(Real { value, err });
        }
        if n_cut >= 1 << 20 {
            return Err(Error::InvalidArgument(format!(
                "cannot reach eps = {eps:e} for zeta({m}) in double precision"
            )));
        }
        n_cut *= 2;
    }
}

/// `ζ(m)` with absolute error below `eps`.
pub fn zeta_real(m: u32, eps: f64) -> Result<Real> {
    let r = zeta_minus_one(m, eps)?;
    Ok(Real {
        value: 1.0 + r.value,
        err: r.err + f64::EPSILON,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_divisors(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n % d == 0).collect()
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn mobius_sums_to_indicator() {
        for n in 1..=10_000u64 {
            let s: i64 = divisors(n).unwrap().iter().map(|&d| mobius(d).unwrap() as i64).sum();
            assert_eq!(s, (n == 1) as i64, "n = {n}");
        }
    }

    #[test]
    fn mobius_multiplicative() {
        for a in 1..200u64 {
            for b in 1..200u64 {
                if num_integer::gcd(a, b) == 1 {
                    assert_eq!(mobius(a * b).unwrap(), mobius(a).unwrap() * mobius(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(97).unwrap(), vec![1, 97]);
        assert!(divisors(0).is_err());
        for n in 1..500 {
            assert_eq!(divisors(n).unwrap(), brute_divisors(n));
        }
    }

    #[test]
    fn omega_and_unitary() {
        assert_eq!((omega(1).unwrap(), unitary_divisor_count(1).unwrap()), (0, 1));
        assert_eq!((omega(12).unwrap(), unitary_divisor_count(12).unwrap()), (2, 4));
        assert_eq!((omega(3u64.pow(7)).unwrap(), unitary_divisor_count(2187).unwrap()), (1, 2));
        for n in 1..300u64 {
            let t = brute_divisors(n)
                .into_iter()
                .filter(|&d| num_integer::gcd(d, n / d) == 1)
                .count() as u64;
            assert_eq!(unitary_divisor_count(n).unwrap(), t);
        }
        assert!(omega(0).is_err());
    }

    #[test]
    fn factorize_large_and_out_of_range() {
        let n = 999_983u64 * 1_000_003;
        assert_eq!(factorize(n).unwrap(), vec![(999_983, 1), (1_000_003, 1)]);
        let small = PrimeSieve::new(10);
        assert!(small.factorize(101).is_err());
        assert_eq!(small.factorize(97).unwrap(), vec![(97, 1)]);
    }

    fn partitions_dp(n: usize) -> Vec<BigInt> {
        let mut t = vec![BigInt::zero(); n + 1];
        t[0] = BigInt::one();
        for part in 1..=n {
            for s in part..=n {
                let add = t[s - part].clone();
                t[s] += add;
            }
        }
        t
    }

    #[test]
    fn partition_count_examples() {
        assert_eq!(partition_count(0), BigInt::from(1));
        assert_eq!(partition_count(5), BigInt::from(7));
        assert_eq!(partition_count(100), BigInt::from(190_569_292u64));
        assert_eq!(partition_counts(100), partitions_dp(100));
    }

    #[test]
    fn divisor_summatory_matches_direct_sum() {
        assert_eq!(divisor_summatory(1), BigInt::from(1));
        assert_eq!(divisor_summatory(10), BigInt::from(27));
        let mut running = 0u64;
        for x in 1..=10_000u64 {
            running += divisors(x).unwrap().len() as u64;
            assert_eq!(divisor_summatory(x), BigInt::from(running), "x = {x}");
        }
    }

    #[test]
    fn zeta_values() {
        let z2 = zeta_real(2, 1e-13).unwrap();
        let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((z2.value - pi2_6).abs() < 1e-13);
        assert!(z2.err < 1e-13);
        let z3 = zeta_real(3, 1e-13).unwrap();
        assert!((z3.value - 1.202_056_903_159_594_3).abs() < 1e-13);
        let z4 = zeta_real(4, 1e-14).unwrap();
        assert!((z4.value - std::f64::consts::PI.powi(4) / 90.0).abs() < 1e-14);
        let z100 = zeta_minus_one(100, 1e-40).unwrap();
        let expect = 2f64.powi(-100) * (1.0 + 1.5f64.powi(-100));
        assert!(((z100.value - expect) / expect).abs() < 1e-14);
        assert!((zeta_real(100, 1e-14).unwrap().value - 1.0).abs() < 1e-15);
        assert!(zeta_real(1, 1e-3).is_err());
        assert!(zeta_real(2, 0.0).is_err());
    }

    #[test]
    fn zeta_strictly_decreasing() {
        let mut prev = f64::INFINITY;
        for m in 2..=60 {
            let z = zeta_minus_one(m, 1e-14).unwrap().value;
            assert!(z < prev, "m = {m}");
            prev = z;
        }
    }
}
