//! Acceptance gate: runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use abzeta::alpha::{alpha_limit, alpha_r, check_alpha_bounds};
use abzeta::arith::{divisor_summatory, partition_counts};
use abzeta::dirichlet::{mean_constant, residual_check, zeta_power_coeffs, EulerProductSeries, SeriesKind};
use abzeta::genfun::{check_funceq, numerator_root_moduli, rational_f, series_f, IntPoly, DEFAULT_MAX_RANK};
use abzeta::groups::{
    direct_factor_total, snf, subgroup_class_total, u_decompositions, unitary_factor_total, IntMatrix,
};
use abzeta::partitions::{count_dominated_pairs, weighted_alpha_oracle};
use abzeta::{Integer, Rank};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;

const FIXTURE_TABLE: &str = include_str!("../../../fixtures/beta_table.csv");
const FIXTURE_LIMIT: &str = include_str!("../../../fixtures/beta_limit.txt");
const PRINTED_C: f64 = 13.18544529684;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_cli(args: &[&str]) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_abzeta"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run abzeta: {e}"))?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || {
        format!("abzeta {args:?} exited with {}: {}", out.status, String::from_utf8_lossy(&out.stderr))
    })?;
    Ok((String::from_utf8(out.stdout).map_err(|e| e.to_string())?, elapsed))
}

fn beta_table_reproduction() -> Outcome {
    let (out, took) = run_cli(&["beta-table", "--rmax", "16", "--mmax", "16", "--format", "csv"])?;
    ensure(out == FIXTURE_TABLE, || "output differs from the golden table".into())?;
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("256 entries byte-identical in {took:.2?}"))
}

fn beta_list_reproduction() -> Outcome {
    let (out, took) = run_cli(&["beta", "--mmax", "100"])?;
    ensure(out == FIXTURE_LIMIT, || "output differs from the golden list".into())?;
    ensure(took < Duration::from_secs(60), || format!("took {took:?}"))?;
    Ok(format!("100 values byte-identical in {took:.2?}"))
}

fn mean_value_constant() -> Outcome {
    let (out, _) = run_cli(&["constant", "--series", "z", "--limit", "--mmax", "100"])?;
    let fields: Vec<&str> = out.trim().split(',').collect();
    ensure(fields.len() == 3, || format!("expected value,err,tail; got {out:?}"))?;
    let value: f64 = fields[0].parse().map_err(|e| format!("{e}"))?;
    let diff = (value - PRINTED_C).abs();
    ensure(diff < 1e-8, || format!("C = {value}, off by {diff:e}"))?;
    Ok(format!("C = {value} (|diff| = {diff:.1e}, err {}, tail {})", fields[1], fields[2]))
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn closed_forms() -> Outcome {
    let one_minus = |a: usize| IntPoly::one_minus_x_pow(a);
    let f0 = rational_f(0, DEFAULT_MAX_RANK).map_err(|e| e.to_string())?;
    ensure(f0.univariate.same_function(&IntPoly::one(), &IntPoly::one()), || "F_0 != 1".into())?;
    let f1 = rational_f(1, DEFAULT_MAX_RANK).map_err(|e| e.to_string())?;
    ensure(f1.univariate.same_function(&IntPoly::one(), &one_minus(1).pow(2)), || "F_1 mismatch".into())?;
    let f2 = rational_f(2, DEFAULT_MAX_RANK).map_err(|e| e.to_string())?;
    let d2 = &one_minus(1).pow(2) * &one_minus(2).pow(3);
    ensure(f2.univariate.same_function(&one_minus(3), &d2), || "F_2 mismatch".into())?;
    let f3 = rational_f(3, DEFAULT_MAX_RANK).map_err(|e| e.to_string())?;
    let n3 = &poly(&[1, 2, 2, 1, 1]) * &poly(&[1, 1, 2, 2, 1]);
    let d3 = &(&poly(&[-1, 1]).pow(6) * &poly(&[1, 1]).pow(3)) * &poly(&[1, 1, 1]).pow(4);
    ensure(f3.univariate.same_function(&n3, &d3), || format!("F_3 = {}", f3.univariate))?;
    // the identities are between rational functions: also compare expansions
    for (f, p, q) in [(&f2, one_minus(3), d2), (&f3, n3, d3)] {
        let lhs = f.univariate.to_series(40);
        let rhs = abzeta::genfun::IntSeries::from_ratio(&p, &q, 40).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("series of F_{} differ", f.r))?;
    }
    Ok("F_0..F_3 equal the closed forms exactly".into())
}

fn functional_equations() -> Outcome {
    for r in 0..=5 {
        ensure(check_funceq(r, DEFAULT_MAX_RANK).map_err(|e| e.to_string())?, || format!("fails at r = {r}"))?;
    }
    Ok("both reciprocity identities hold for r = 0..5".into())
}

fn subgroup_class_oracles() -> Outcome {
    let mut checked = 0;
    for r in 1..=4u32 {
        for k in 0..=10u32 {
            let a = alpha_r(r, k);
            let pairs = count_dominated_pairs(k, r as usize);
            let weighted = weighted_alpha_oracle(k, r as usize);
            let snf_side = subgroup_class_total(k, r, 2).map_err(|e| e.to_string())?;
            ensure(a == pairs && a == weighted && a == snf_side, || {
                format!("r={r} k={k}: recursion {a}, pairs {pairs}, weighted {weighted}, snf {snf_side}")
            })?;
            checked += 1;
        }
    }
    for k in 0..=20u32 {
        let lim = alpha_limit(k);
        for r in k.max(1)..=k.max(1) + 4 {
            ensure(alpha_r(r, k) == lim, || format!("alpha_{r}({k}) != alpha({k})"))?;
        }
    }
    Ok(format!("{checked} (r, k) pairs agree across four methods; stable for r >= k, k <= 20"))
}

fn rank_two_identity() -> Outcome {
    let z2 = EulerProductSeries::new(SeriesKind::SubgroupClasses(Rank::Finite(2)))
        .coefficients(10_000)
        .map_err(|e| e.to_string())?;
    let zp = zeta_power_coeffs(&[2, 3, -1], 10_000).map_err(|e| e.to_string())?;
    let bad = (1..=10_000).find(|&n| z2[n] != zp[n]);
    ensure(bad.is_none(), || format!("differ at n = {}", bad.unwrap()))?;
    Ok("coefficients agree for n <= 10^4".into())
}

fn local(kind: SeriesKind, k: u32) -> Integer {
    EulerProductSeries::new(kind).local_series(k as usize).coeffs()[k as usize].clone()
}

fn direct_and_unitary() -> Outcome {
    for r in 1..=4u32 {
        for k in 0..=8u32 {
            let d = direct_factor_total(k, r, 2).map_err(|e| e.to_string())?;
            let u = unitary_factor_total(k, r, 2).map_err(|e| e.to_string())?;
            ensure(d == local(SeriesKind::DirectFactors(Rank::Finite(r)), k), || format!("direct r={r} k={k}"))?;
            ensure(u == local(SeriesKind::UnitaryFactors(Rank::Finite(r)), k), || format!("unitary r={r} k={k}"))?;
        }
        let coeffs = EulerProductSeries::new(SeriesKind::UnitaryFactors(Rank::Finite(r)))
            .coefficients(1000)
            .map_err(|e| e.to_string())?;
        for n in 1..=1000u64 {
            let total = u_decompositions(n, r).map_err(|e| e.to_string())?.total;
            ensure(total == coeffs[n as usize], || format!("u_{r}({n}) = {total} vs {}", coeffs[n as usize]))?;
        }
    }
    Ok("group sums match local coefficients; u_r(n) matches for n <= 1000".into())
}

fn residual_vanishing() -> Outcome {
    for r in 1..=5 {
        for k in 1..=8 {
            ensure(residual_check(Rank::Finite(r), k).map_err(|e| e.to_string())?, || format!("r={r} k={k}"))?;
        }
    }
    ensure(residual_check(Rank::Limit, 13).map_err(|e| e.to_string())?, || "limit, k = 13".into())?;
    Ok("40 finite cases and the limit at k = 13".into())
}

fn root_modulus() -> Outcome {
    let roots = numerator_root_moduli(3, DEFAULT_MAX_RANK).map_err(|e| e.to_string())?;
    let best = roots
        .moduli()
        .into_iter()
        .min_by(|a, b| (a - 0.762031).abs().total_cmp(&(b - 0.762031).abs()))
        .ok_or("no roots")?;
    ensure((best - 0.762031).abs() < 1e-5, || format!("closest modulus {best}"))?;
    ensure(roots.max_residual() < 1e-10, || format!("residual {:e}", roots.max_residual()))?;
    Ok(format!("modulus {best:.9}, max residual {:.1e}", roots.max_residual()))
}

fn summatory_checks() -> Outcome {
    let z1 = EulerProductSeries::new(SeriesKind::SubgroupClasses(Rank::Finite(1)));
    let coeffs = z1.coefficients(10_000).map_err(|e| e.to_string())?;
    let mut running = Integer::zero();
    for x in 1..=10_000u64 {
        running += &coeffs[x as usize];
        ensure(running == divisor_summatory(x), || format!("prefix sum differs at x = {x}"))?;
    }
    ensure(z1.summatory(10_000).map_err(|e| e.to_string())? == divisor_summatory(10_000), || {
        "summatory(10^4) differs".into()
    })?;
    let c = mean_constant(&SeriesKind::SubgroupClasses(Rank::Limit), 100, 1e-12)
        .map_err(|e| e.to_string())?
        .value
        .value;
    let z = EulerProductSeries::new(SeriesKind::SubgroupClasses(Rank::Limit));
    let ratio = |x: u64| -> Result<f64, String> {
        let s: f64 = z.summatory(x).map_err(|e| e.to_string())?.to_string().parse().unwrap();
        Ok(s / (c * x as f64 * (x as f64).ln()))
    };
    let (small, large) = (ratio(10_000)?, ratio(1_000_000)?);
    ensure(large > 0.5 && large < 2.0, || format!("ratio at 10^6 is {large}"))?;
    ensure((large - 1.0).abs() < (small - 1.0).abs(), || format!("ratio {small} at 10^4, {large} at 10^6"))?;
    Ok(format!("exact for x <= 10^4; ratio {small:.4} at 10^4, {large:.4} at 10^6"))
}

/// `gcd` of the `k × k` minors of `m`, for `k = 1..=n`.
fn minor_gcds(m: &IntMatrix) -> Vec<Integer> {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (k - 1..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }
    let n = m.nrows();
    (1..=n)
        .map(|k| {
            let mut g = Integer::zero();
            for rows in subsets(n, k) {
                for cols in subsets(n, k) {
                    let sub: Vec<Vec<Integer>> =
                        rows.iter().map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
                    g = g.gcd(&IntMatrix::new(sub).unwrap().determinant().unwrap());
                }
            }
            g
        })
        .collect()
}

fn property_suites() -> Outcome {
    let kinds = [
        SeriesKind::SubgroupClasses(Rank::Finite(1)),
        SeriesKind::SubgroupClasses(Rank::Finite(2)),
        SeriesKind::SubgroupClasses(Rank::Finite(4)),
        SeriesKind::SubgroupClasses(Rank::Limit),
        SeriesKind::DirectFactors(Rank::Finite(3)),
        SeriesKind::DirectFactors(Rank::Limit),
        SeriesKind::UnitaryFactors(Rank::Finite(3)),
        SeriesKind::UnitaryFactors(Rank::Limit),
    ];
    let (m_max, n_max) = (2000u64, 500u64);
    let arrays: Vec<Vec<Integer>> = kinds
        .iter()
        .map(|k| EulerProductSeries::new(k.clone()).coefficients(m_max * n_max))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let pairs = (1u64..=m_max, 1u64..=n_max).prop_filter("coprime", |(a, b)| a.gcd(b) == 1);
    let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
    runner
        .run(&pairs, |(a, b)| {
            for (kind, arr) in kinds.iter().zip(&arrays) {
                let (a, b) = (a as usize, b as usize);
                prop_assert_eq!(&arr[a * b], &(&arr[a] * &arr[b]), "{} at {} * {}", kind, a, b);
            }
            Ok(())
        })
        .map_err(|e| format!("multiplicativity: {e}"))?;

    let matrix = |k: usize| {
        proptest::collection::vec(proptest::collection::vec(-20i64..=20, k), k)
            .prop_map(|rows| IntMatrix::from_i64(&rows).unwrap())
    };
    let mut runner = TestRunner::new(Config { cases: 100, failure_persistence: None, ..Config::default() });
    runner
        .run(&prop_oneof![matrix(3), matrix(4)], |m| {
            let f = snf(&m).unwrap();
            prop_assert_eq!(&(&f.u * &m) * &f.v, f.s.to_matrix());
            prop_assert!(f.u.determinant().unwrap().abs().is_one() && f.v.determinant().unwrap().abs().is_one());
            let gcds = minor_gcds(&m);
            let mut prefix = Integer::one();
            for (k, d) in f.s.diag().iter().enumerate() {
                prefix *= d;
                prop_assert_eq!(&prefix, &gcds[k]);
            }
            Ok(())
        })
        .map_err(|e| format!("SNF minor gcds: {e}"))?;

    for k in 2..=50 {
        ensure(check_alpha_bounds(k), || format!("q(k) <= alpha(k) <= k q(k)^2 fails at k = {k}"))?;
    }
    let alpha = series_f(Rank::Limit, 40).into_coeffs();
    let q = partition_counts(40);
    let bad = (0..=40).find(|&k| q[k] > alpha[k]);
    ensure(bad.is_none(), || format!("q(k) > alpha(k) at k = {}", bad.unwrap()))?;
    Ok("1000 coprime pairs x 8 kinds, 100 random matrices, bounds for k in 2..=50, q <= alpha to 40".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("1 beta-table reproduction", beta_table_reproduction),
        ("2 beta list reproduction", beta_list_reproduction),
        ("3 mean-value constant C", mean_value_constant),
        ("4 closed forms F_0..F_3", closed_forms),
        ("5 functional equations", functional_equations),
        ("6 subgroup-class oracle equivalence", subgroup_class_oracles),
        ("7 rank-two zeta quotient identity", rank_two_identity),
        ("8 direct/unitary cross-checks", direct_and_unitary),
        ("9 residual vanishing", residual_vanishing),
        ("10 root modulus", root_modulus),
        ("11 summatory checks", summatory_checks),
        ("12 property suites", property_suites),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {name}: {detail} [{:.2?}]", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 12 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
