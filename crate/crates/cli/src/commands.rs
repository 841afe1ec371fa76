use num_bigint::BigInt;

use abzeta::alpha::{alpha_limit, alpha_r, alpha_rkj, AlphaTable};
use abzeta::arith::divisor_summatory;
use abzeta::dirichlet::{
    beta, mean_constant, residual_check, zeta_power_coeffs, BetaTable, EulerProductSeries, SeriesKind,
};
use abzeta::genfun::{check_funceq, numerator_root_moduli, rational_f, series_f, DEFAULT_MAX_RANK};
use abzeta::groups::{
    direct_factor_total, direct_factorizations, snf_divisor_count, subgroup_class_total, unitary_factor_total,
    unitary_factorizations, GroupType,
};
use abzeta::partitions::{count_dominated_pairs, weighted_alpha_oracle};
use abzeta::Rank;

use crate::output::{Cell, Table};
use crate::{Command, Failure, GroupKind};

pub const BETA_TABLE_FIXTURE: &str = include_str!("../../../fixtures/beta_table.csv");
pub const BETA_LIMIT_FIXTURE: &str = include_str!("../../../fixtures/beta_limit.txt");

/// Runs a command. The flag is set when the output reports a failed check.
pub fn run(cmd: &Command) -> Result<(Table, bool), Failure> {
    Ok(match cmd {
        Command::Alpha { rank, k, j } => (alpha(rank.rank(), *k, *j)?, false),
        Command::AlphaTable { rank, kmax } => (alpha_table(rank.rank(), *kmax), false),
        Command::BetaTable { rmax, mmax } => (beta_table(*rmax, *mmax)?, false),
        Command::Beta { mmax } => (beta_limit(*mmax)?, false),
        Command::Series { rank, order } => (series(rank.rank(), *order), false),
        Command::ClosedForm { r } => (closed_form(*r)?, false),
        Command::VerifyFunceq { r } => {
            let ok = check_funceq(*r, DEFAULT_MAX_RANK)?;
            let mut t = Table::new("verify-funceq", &["r", "holds"]).param("r", r);
            t.push(vec![Cell::from(*r as u64), ok.into()]);
            (t, !ok)
        }
        Command::Coeff { series, rank, n } => {
            let kind = series.kind(rank.rank());
            let v = EulerProductSeries::new(kind.clone()).coefficient(*n)?;
            let mut t = Table::new("coeff", &["n", "a(n)"]).param("series", &kind).param("n", n);
            t.push(vec![Cell::from(*n), v.into()]);
            (t, false)
        }
        Command::Sum { series, rank, x } => {
            let kind = series.kind(rank.rank());
            let v = EulerProductSeries::new(kind.clone()).summatory(*x)?;
            let mut t = Table::new("sum", &["x", "sum"]).param("series", &kind).param("x", x);
            t.push(vec![Cell::from(*x), v.into()]);
            (t, false)
        }
        Command::Constant { series, rank, mmax, eps } => (constant(series.kind(rank.rank()), *mmax, *eps)?, false),
        Command::Roots { r } => (roots(*r)?, false),
        Command::Group { lambda, p, kind, list } => (group(lambda, *p, *kind, *list)?, false),
        Command::Selftest => selftest(),
    })
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn alpha(rank: Rank, k: u32, j: Option<i64>) -> Result<Table, Failure> {
    let value = match (rank, j) {
        (Rank::Finite(r), Some(j)) => alpha_rkj(r, k, j),
        (Rank::Finite(r), None) => alpha_r(r, k),
        (Rank::Limit, None) => alpha_limit(k),
        (Rank::Limit, Some(_)) => return Err(usage("--j needs a finite --r")),
    };
    let mut t = Table::new("alpha", &["value"]).param("r", rank).param("k", k);
    if let Some(j) = j {
        t = t.param("j", j);
    }
    t.push(vec![value.into()]);
    Ok(t)
}

fn alpha_table(rank: Rank, kmax: u32) -> Table {
    let mut t = Table::new("alpha-table", &["k", "alpha"]).param("r", rank).param("kmax", kmax);
    let values = AlphaTable::new().coefficients(rank, kmax as usize);
    for (k, v) in values.into_iter().enumerate() {
        t.push(vec![Cell::from(k as u64), v.into()]);
    }
    t
}

fn beta_table(rmax: u32, mmax: usize) -> Result<Table, Failure> {
    if rmax == 0 || mmax == 0 {
        return Err(usage("--rmax and --mmax must be positive"));
    }
    let table = BetaTable::finite(rmax, mmax)?;
    let columns: Vec<String> = (1..=mmax).map(|m| format!("m={m}")).collect();
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut t = Table::new("beta-table", &cols).param("rmax", rmax).param("mmax", mmax);
    for (_, row) in &table.rows {
        t.push(row.iter().map(Cell::from).collect());
    }
    Ok(t)
}

fn beta_limit(mmax: usize) -> Result<Table, Failure> {
    if mmax == 0 {
        return Err(usage("--mmax must be positive"));
    }
    let mut t = Table::new("beta", &["beta"]).param("mmax", mmax);
    for v in beta(Rank::Limit, mmax)? {
        t.push(vec![v.into()]);
    }
    Ok(t)
}

fn series(rank: Rank, order: usize) -> Table {
    let mut t = Table::new("series", &["k", "coefficient"]).param("r", rank).param("order", order);
    for (k, v) in series_f(rank, order).coeffs().iter().enumerate() {
        t.push(vec![Cell::from(k as u64), v.into()]);
    }
    t
}

fn closed_form(r: u32) -> Result<Table, Failure> {
    let f = rational_f(r, DEFAULT_MAX_RANK)?;
    let mut t = Table::new("closed-form", &["part", "expression"])
        .param("r", r)
        .param("max_r", DEFAULT_MAX_RANK);
    t.push(vec!["F(x,y) numerator".into(), f.bivariate.num.to_string().into()]);
    t.push(vec!["F(x,y) denominator".into(), f.bivariate.den.to_string().into()]);
    t.push(vec!["F(x) numerator".into(), f.univariate.num.to_string().into()]);
    t.push(vec!["F(x) denominator".into(), f.univariate.denominator().to_string().into()]);
    t.push(vec!["F(x)".into(), f.univariate.to_string().into()]);
    Ok(t)
}

fn constant(kind: SeriesKind, mmax: usize, eps: f64) -> Result<Table, Failure> {
    let c = mean_constant(&kind, mmax, eps)?;
    let mut t = Table::new("constant", &["value", "err", "tail_estimate"])
        .param("series", &kind)
        .param("mmax", mmax)
        .param("eps", format!("{eps:e}"))
        .param("cutoff", c.cutoff)
        .param("formula", &c.formula);
    t.push(vec![Cell::Real(c.value.value, c.value.err), Cell::Float(c.tail_estimate)]);
    Ok(t)
}

fn roots(r: u32) -> Result<Table, Failure> {
    let found = numerator_root_moduli(r, DEFAULT_MAX_RANK)?;
    let mut t = Table::new("roots", &["re", "im", "modulus", "residual"])
        .param("r", r)
        .param("iterations", found.iterations);
    let mut rows: Vec<_> = found.roots.iter().zip(&found.residuals).collect();
    // stable order: by modulus, then argument
    rows.sort_by(|a, b| {
        a.0.norm()
            .total_cmp(&b.0.norm())
            .then(a.0.arg().total_cmp(&b.0.arg()))
    });
    for (z, res) in rows {
        t.push(vec![Cell::Float(z.re), Cell::Float(z.im), Cell::Float(z.norm()), Cell::Float(*res)]);
    }
    Ok(t)
}

fn group(lambda: &[u32], p: u64, kind: GroupKind, list: bool) -> Result<Table, Failure> {
    let g = GroupType::from_parts(p, lambda)?;
    let lam = lambda.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let base = |name: &str, cols: &[&str]| Table::new(name, cols).param("lambda", &lam).param("p", p);
    Ok(match kind {
        GroupKind::Classes => {
            let mut t = base("group", &["classes"]).param("kind", "classes");
            t.push(vec![snf_divisor_count(&g)?.into()]);
            t
        }
        GroupKind::Direct | GroupKind::Unitary => {
            let (name, f) = match kind {
                GroupKind::Direct => ("direct", direct_factorizations(&g)?),
                _ => ("unitary", unitary_factorizations(&g)?),
            };
            if list {
                let mut t = base("group", &["split", "H", "K"]).param("kind", name);
                for pair in &f.pairs {
                    let split = pair.split.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                    t.push(vec![split.into(), pair.h.to_string().into(), pair.k.to_string().into()]);
                }
                t
            } else {
                let mut t = base("group", &["ordered", "unordered"]).param("kind", name);
                t.push(vec![f.count().into(), f.unordered_count().into()]);
                t
            }
        }
    })
}

fn parse_fixture_table() -> Vec<Vec<BigInt>> {
    BETA_TABLE_FIXTURE
        .lines()
        .map(|l| l.split(',').map(|v| v.parse().expect("fixture integer")).collect())
        .collect()
}

fn parse_fixture_list() -> Vec<BigInt> {
    BETA_LIMIT_FIXTURE.lines().map(|v| v.parse().expect("fixture integer")).collect()
}

type Check = (&'static str, fn() -> abzeta::Result<bool>);

fn checks() -> Vec<Check> {
    vec![
        ("beta table fixture", || {
            let t = BetaTable::finite(16, 16)?;
            Ok(t.rows.iter().map(|(_, r)| r.clone()).collect::<Vec<_>>() == parse_fixture_table())
        }),
        ("beta limit fixture", || Ok(beta(Rank::Limit, 100)? == parse_fixture_list())),
        ("subgroup class oracles", || {
            for r in 1..=4u32 {
                for k in 0..=8u32 {
                    let a = alpha_r(r, k);
                    if a != count_dominated_pairs(k, r as usize)
                        || a != weighted_alpha_oracle(k, r as usize)
                        || a != subgroup_class_total(k, r, 2)?
                    {
                        return Ok(false);
                    }
                }
            }
            Ok((0..=12).all(|k| alpha_r(k.max(1), k) == alpha_limit(k)))
        }),
        ("functional equations", || {
            for r in 0..=4 {
                if !check_funceq(r, DEFAULT_MAX_RANK)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        ("rank two zeta quotient", || {
            let z2 = EulerProductSeries::new(SeriesKind::SubgroupClasses(Rank::Finite(2))).coefficients(2000)?;
            Ok(z2 == zeta_power_coeffs(&[2, 3, -1], 2000)?)
        }),
        ("direct and unitary factor sums", || {
            for r in 1..=3u32 {
                for k in 0..=6u32 {
                    let d = EulerProductSeries::new(SeriesKind::DirectFactors(Rank::Finite(r))).local_series(k as usize);
                    let u = EulerProductSeries::new(SeriesKind::UnitaryFactors(Rank::Finite(r))).local_series(k as usize);
                    if direct_factor_total(k, r, 2)? != d.coeffs()[k as usize]
                        || unitary_factor_total(k, r, 2)? != u.coeffs()[k as usize]
                    {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        ("residual series", || {
            for r in 1..=4 {
                for k in 1..=6 {
                    if !residual_check(Rank::Finite(r), k)? {
                        return Ok(false);
                    }
                }
            }
            residual_check(Rank::Limit, 13)
        }),
        ("divisor summatory", || {
            let z1 = EulerProductSeries::new(SeriesKind::SubgroupClasses(Rank::Finite(1)));
            Ok(z1.summatory(1000)? == divisor_summatory(1000))
        }),
    ]
}

fn selftest() -> (Table, bool) {
    let mut t = Table::new("selftest", &["check", "status"]);
    let mut failed = false;
    for (name, check) in checks() {
        let status = match check() {
            Ok(true) => "PASS".to_string(),
            Ok(false) => "FAIL".to_string(),
            Err(e) => format!("FAIL ({e})"),
        };
        failed |= status != "PASS";
        t.push(vec![name.into(), status.into()]);
    }
    (t, failed)
}
