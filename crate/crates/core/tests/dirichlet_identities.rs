use abzeta::arith::divisor_summatory;
use abzeta::dirichlet::{zeta_power_coeffs, EulerProductSeries, SeriesKind};
use abzeta::Rank;
use num_integer::Integer as _;
use proptest::prelude::*;

#[test]
fn rank_two_is_a_zeta_quotient() {
    let z2 = EulerProductSeries::new(SeriesKind::SubgroupClasses(Rank::Finite(2)))
        .coefficients(10_000)
        .unwrap();
    assert_eq!(z2, zeta_power_coeffs(&[2, 3, -1], 10_000).unwrap());
}

#[test]
fn rank_one_summatory_is_divisor_summatory() {
    let z1 = EulerProductSeries::new(SeriesKind::SubgroupClasses(Rank::Finite(1)));
    for x in [1u64, 10, 100, 1000, 10_000, 12_345] {
        assert_eq!(z1.summatory(x).unwrap(), divisor_summatory(x), "x={x}");
    }
}

fn kinds() -> Vec<SeriesKind> {
    vec![
        SeriesKind::SubgroupClasses(Rank::Finite(2)),
        SeriesKind::SubgroupClasses(Rank::Finite(5)),
        SeriesKind::SubgroupClasses(Rank::Limit),
        SeriesKind::DirectFactors(Rank::Finite(3)),
        SeriesKind::DirectFactors(Rank::Limit),
        SeriesKind::UnitaryFactors(Rank::Finite(2)),
        SeriesKind::UnitaryFactors(Rank::Limit),
        SeriesKind::ZetaPowers(vec![2, 3, -1]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn coefficients_are_multiplicative(m in 1u64..=3000, n in 1u64..=3000) {
        prop_assume!(m.gcd(&n) == 1);
        for kind in kinds() {
            let s = EulerProductSeries::new(kind);
            let lhs = s.coefficient(m * n).unwrap();
            let rhs = s.coefficient(m).unwrap() * s.coefficient(n).unwrap();
            prop_assert_eq!(lhs, rhs, "{} at {} * {}", s.kind, m, n);
        }
    }
}
