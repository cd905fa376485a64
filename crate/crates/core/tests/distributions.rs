use approx::assert_abs_diff_eq;
use proptest::prelude::*;
use ugp::uncertain::{
    check_regularity, critical_value, expected_by_simpson, expected_via_quadrature,
    CriticalValueQuery, LinearUd, TrapezoidalUd, TriangularUd, UncertaintyDistribution,
};
use ugp::Error;

fn tri() -> impl Strategy<Value = TriangularUd> {
    (-50.0..50.0f64, 0.01..20.0f64, 0.01..20.0f64)
        .prop_map(|(a, p, q)| TriangularUd::new(a, a + p, a + p + q).unwrap())
}

fn tra() -> impl Strategy<Value = TrapezoidalUd> {
    (-50.0..50.0f64, 0.01..20.0f64, 0.01..20.0f64, 0.01..20.0f64)
        .prop_map(|(a, p, q, r)| TrapezoidalUd::new(a, a + p, a + p + q, a + p + q + r).unwrap())
}

fn lin() -> impl Strategy<Value = LinearUd> {
    (-50.0..50.0f64, 0.01..20.0f64).prop_map(|(a, p)| LinearUd::new(a, a + p).unwrap())
}

fn check_common<U: UncertaintyDistribution>(ud: &U, alpha: f64) -> Result<(), TestCaseError> {
    let (lo, hi) = ud.support();
    prop_assert_eq!(ud.cdf(lo - 1.0), 0.0);
    prop_assert_eq!(ud.cdf(hi + 1.0), 1.0);
    prop_assert!(check_regularity(ud).passed());

    let x = ud.inverse(alpha).unwrap();
    prop_assert!((lo..=hi).contains(&x));
    prop_assert!((ud.cdf(x) - alpha).abs() <= 1e-9);

    let sup = ud.optimistic(alpha).unwrap();
    let inf = ud.pessimistic(alpha).unwrap();
    prop_assert!((sup - ud.inverse(1.0 - alpha).unwrap()).abs() <= 1e-9);
    prop_assert!((inf - x).abs() <= 1e-12);
    if alpha <= 0.5 {
        prop_assert!(inf <= sup + 1e-9);
    }
    let e = ud.expected().unwrap();
    prop_assert!(lo <= e && e <= hi);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn linear_laws(ud in lin(), alpha in 0.001..0.999f64) {
        check_common(&ud, alpha)?;
        prop_assert!((ud.expected().unwrap() - (ud.a() + ud.b()) / 2.0).abs() <= 1e-12);
    }

    #[test]
    fn triangular_laws(ud in tri(), alpha in 0.001..0.999f64) {
        check_common(&ud, alpha)?;
        let [a, b, c] = ud.params();
        prop_assert!((ud.cdf(b) - ud.knot_value()).abs() <= 1e-15);
        prop_assert!((ud.expected().unwrap() - (a + b + c) / 3.0).abs() <= 1e-10);
        let pw = ud.to_piecewise();
        prop_assert!((expected_via_quadrature(&pw).unwrap() - ud.expected().unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn trapezoidal_laws(ud in tra(), alpha in 0.001..0.999f64) {
        check_common(&ud, alpha)?;
        let [a, b, c, d] = ud.params();
        let (vb, vc) = ud.knot_values();
        prop_assert!((ud.cdf(b) - vb).abs() <= 1e-15 && (ud.cdf(c) - vc).abs() <= 1e-15);
        prop_assert!((ud.scale() - (d + c - a - b)).abs() <= 1e-12);
        let pw = ud.to_piecewise();
        prop_assert!((expected_by_simpson(&pw).unwrap() - ud.expected().unwrap()).abs() <= 1e-8);
    }

    #[test]
    fn piecewise_form_agrees_pointwise(ud in tra(), t in 0.0..1.0f64) {
        let (lo, hi) = ud.support();
        let x = lo - 0.5 + t * (hi - lo + 1.0);
        prop_assert!((ud.to_piecewise().cdf(x) - ud.cdf(x)).abs() <= 1e-12);
    }

    /// Measure inversion: `M{ξ ≤ Φ⁻¹(α)} = α`.
    #[test]
    fn measure_inversion(ud in tri(), alpha in 0.001..0.999f64) {
        prop_assert!((ud.cdf(ud.inverse(alpha).unwrap()) - alpha).abs() <= 1e-9);
    }
}

#[test]
fn known_values() {
    let t = TriangularUd::new(2.0, 4.0, 5.0).unwrap();
    assert_abs_diff_eq!(t.cdf(3.0), 1.0 / 6.0, epsilon = 1e-15);
    assert_abs_diff_eq!(t.cdf(4.5), 1.0 - 0.25 / 3.0, epsilon = 1e-15);
    assert_abs_diff_eq!(t.expected().unwrap(), 11.0 / 3.0, epsilon = 1e-12);
    assert_abs_diff_eq!(
        t.pessimistic(0.5).unwrap(),
        2.0 + 3.0f64.sqrt(),
        epsilon = 1e-12
    );
    assert_abs_diff_eq!(
        t.optimistic(0.1).unwrap(),
        5.0 - 0.3f64.sqrt(),
        epsilon = 1e-12
    );

    let z = TrapezoidalUd::new(2.0, 4.0, 6.0, 8.0).unwrap();
    assert_abs_diff_eq!(z.cdf(5.0), 0.5, epsilon = 1e-15);
    assert_abs_diff_eq!(z.expected().unwrap(), 5.0, epsilon = 1e-12);
    assert_abs_diff_eq!(z.pessimistic(0.5).unwrap(), 5.0, epsilon = 1e-12);

    let l = LinearUd::new(1.0, 3.0).unwrap();
    assert_abs_diff_eq!(
        critical_value(&l, CriticalValueQuery::optimistic(0.25).unwrap()).unwrap(),
        2.5,
        epsilon = 1e-12
    );
    assert_abs_diff_eq!(
        critical_value(&l, CriticalValueQuery::Expected).unwrap(),
        2.0,
        epsilon = 1e-12
    );
}

#[test]
fn rejected_inputs() {
    assert!(matches!(
        TriangularUd::new(1.0, 1.0, 2.0),
        Err(Error::InvalidParameters(_))
    ));
    assert!(matches!(
        TrapezoidalUd::new(1.0, 2.0, 4.0, 3.0),
        Err(Error::InvalidParameters(_))
    ));
    assert!(matches!(
        LinearUd::new(f64::NAN, 1.0),
        Err(Error::InvalidParameters(_))
    ));
    let t = TriangularUd::new(0.0, 1.0, 2.0).unwrap();
    for alpha in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
        assert!(
            matches!(t.inverse(alpha), Err(Error::AlphaOutOfRange(_))),
            "{alpha}"
        );
        assert!(CriticalValueQuery::optimistic(alpha).is_err());
    }
}
