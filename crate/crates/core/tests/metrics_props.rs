mod common;

use common::oracle;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use quadfit::{
    fit_polynomial, fit_report, r_squared, residuals, MetricsError, PolynomialModel, Series,
};

fn derived_series() -> Series {
    Series::new(vec![1.0, 2.0, 3.0, 4.0], vec![1.0, 4.0, 9.0, 17.0]).unwrap()
}

#[test]
fn derived_residuals_and_report_match_oracle() {
    let series = derived_series();
    let exact = oracle::diagnostics(series.xs(), series.ys(), 2);
    // frozen from the exact fit: residuals -1/20, 3/20, -3/20, 1/20
    let frozen = [-0.05, 0.15, -0.15, 0.05];
    let exact_res: Vec<f64> = exact.residuals.iter().map(oracle::to_f64).collect();
    assert_eq!(exact_res, frozen);
    assert_eq!(oracle::to_f64(&exact.ss_res), 0.05);
    assert_eq!(oracle::to_f64(&exact.ss_tot), 146.75);
    assert_eq!(exact.r_squared.to_f64().unwrap(), 2934.0 / 2935.0);

    let (model, _) = fit_polynomial(&series, 2).unwrap();
    for (got, want) in residuals(&model, &series).iter().zip(frozen) {
        assert!((got - want).abs() < 1e-9, "{got} vs {want}");
    }
    let report = fit_report(&model, &series).unwrap();
    assert!((report.ss_res - 0.05).abs() < 1e-9);
    assert!((report.ss_tot - 146.75).abs() < 1e-12);
    assert!((report.r_squared - 2934.0 / 2935.0).abs() < 1e-12);
    assert_eq!(report.n, 4);
    assert_eq!(report.model, model);

    let fitted: Vec<f64> = series.xs().iter().map(|&x| model.eval(x)).collect();
    assert!((r_squared(&series, &fitted).unwrap() - 2934.0 / 2935.0).abs() < 1e-12);
}

#[test]
fn constant_data_with_wrong_model_is_undefined() {
    let series = Series::new(vec![1.0, 2.0, 3.0], vec![2.0; 3]).unwrap();
    let model = PolynomialModel::new(vec![0.0, 1.0]).unwrap();
    assert!(matches!(
        fit_report(&model, &series).unwrap_err(),
        MetricsError::UndefinedRSquared { .. }
    ));
}

#[test]
fn perfect_fit_on_large_series() {
    let xs: Vec<f64> = (0..1_000_000).map(|i| i as f64 * 1e-5).collect();
    let ys: Vec<f64> = xs.iter().map(|x| 0.1 + 0.2 * x + 0.3 * x * x).collect();
    let series = Series::new(xs, ys).unwrap();
    assert_eq!(r_squared(&series, series.ys()).unwrap(), 1.0);
}

fn dataset(n: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (
        prop::collection::vec(0.0f64..0.8, n),
        prop::collection::vec(-100.0f64..100.0, n),
    )
        .prop_map(move |(jitter, ys)| {
            let xs = jitter
                .iter()
                .enumerate()
                .map(|(i, j)| -10.0 + 20.0 * (i as f64 + 0.1 + j) / n as f64)
                .collect();
            (xs, ys)
        })
}

proptest! {
    #[test]
    fn r_squared_grows_with_degree((xs, ys) in (6usize..30).prop_flat_map(dataset), degree in 0usize..=3) {
        let series = Series::new(xs, ys).unwrap();
        let low = fit_report(&fit_polynomial(&series, degree).unwrap().0, &series).unwrap();
        let high = fit_report(&fit_polynomial(&series, degree + 1).unwrap().0, &series).unwrap();
        prop_assert!(high.r_squared >= low.r_squared - 1e-10);
    }

    #[test]
    fn r_squared_is_bounded((xs, ys) in (4usize..40).prop_flat_map(dataset), degree in 0usize..=3) {
        let series = Series::new(xs, ys).unwrap();
        let report = fit_report(&fit_polynomial(&series, degree).unwrap().0, &series).unwrap();
        prop_assert!(report.r_squared >= -1e-12 && report.r_squared <= 1.0);
        prop_assert!(report.ss_res >= 0.0 && report.ss_tot >= 0.0);
    }

    #[test]
    fn sum_of_squares_decomposes((xs, ys) in (4usize..40).prop_flat_map(dataset), degree in 0usize..=3) {
        let series = Series::new(xs, ys).unwrap();
        let (model, _) = fit_polynomial(&series, degree).unwrap();
        let report = fit_report(&model, &series).unwrap();
        let mean = series.ys().iter().sum::<f64>() / series.len() as f64;
        let explained: f64 = series.xs().iter().map(|&x| (model.eval(x) - mean).powi(2)).sum();
        let total = report.ss_res + explained;
        prop_assert!((report.ss_tot - total).abs() <= 1e-8 * report.ss_tot.max(1e-300));
    }

    #[test]
    fn r_squared_ignores_y_scale(
        (xs, ys) in (5usize..30).prop_flat_map(dataset),
        lambda in prop_oneof![-1e3f64..-1e-3, 1e-3f64..1e3],
    ) {
        let series = Series::new(xs.clone(), ys.clone()).unwrap();
        let scaled = Series::new(xs, ys.iter().map(|y| y * lambda).collect()).unwrap();
        let r1 = fit_report(&fit_polynomial(&series, 2).unwrap().0, &series).unwrap().r_squared;
        let r2 = fit_report(&fit_polynomial(&scaled, 2).unwrap().0, &scaled).unwrap().r_squared;
        prop_assert!((r1 - r2).abs() <= 1e-10);
    }
}
