mod common;

use std::f64::consts::PI;

use common::rel_diff;
use dpp_reach::kernels::{example_specs, max_param, spectral_radial};
use dpp_reach::quadrature::{integrate_log, LogIntegrand, QuadConfig};
use dpp_reach::repulsion::*;
use dpp_reach::{AlphaRule, Error, Family, KernelSpec};
use proptest::prelude::*;
use statrs::function::gamma::{gamma_lr, ln_gamma};

#[test]
fn indicator_total_is_c() {
    for n in [1u32, 4, 33] {
        let s = KernelSpec::indicator_spectral(n, 0.2, 0.7);
        assert!((eta_total_log(&s).unwrap() - 0.7f64.ln()).abs() < 1e-14);
    }
}

#[test]
fn pe_total_closed_form() {
    let s = KernelSpec::power_exponential(12, 0.1, 3.0, 1.0, AlphaRule::Scaled);
    let a = 12f64.powf(1.0 / 3.0 - 0.5);
    let want = -4.0 * 2f64.ln() + 12.0 * a.ln() + 1.2 + ln_gamma(7.0) - 6.0 * PI.ln() - ln_gamma(5.0);
    assert!((eta_total_log(&s).unwrap() - want).abs() < 1e-13);
}

#[test]
fn gaussian_total_n2() {
    let s = KernelSpec::laguerre_gauss(2, 0.0, 1, 0.5);
    assert!((eta_total_log(&s).unwrap() - (PI / 8.0).ln()).abs() < 1e-14);
}

#[test]
fn ball_ratio_endpoints() {
    for s in example_specs(6) {
        if s.family == Family::PowerExponential {
            continue;
        }
        assert_eq!(eta_ball_ratio(&s, 0.0).unwrap(), 0.0);
        assert_eq!(eta_ball_ratio(&s, f64::INFINITY).unwrap(), 1.0);
    }
}

#[test]
fn gaussian_ball_ratio_is_incomplete_gamma() {
    let alpha = 0.45;
    for n in [1u32, 3, 40, 300] {
        let s = KernelSpec::laguerre_gauss(n, 0.0, 1, alpha);
        let nf = f64::from(n);
        let grid: Vec<f64> = (1..=30).map(|i| 0.02 * f64::from(i)).collect();
        let got = eta_ball_ratios(&s, &grid, &QuadConfig::default()).unwrap();
        for (r, g) in grid.iter().zip(got) {
            let want = gamma_lr(0.5 * nf, 2.0 * nf * r * r / (alpha * alpha));
            assert!((g - want).abs() < 1e-9, "n={n} R={r}: {g} vs {want}");
        }
    }
}

#[test]
fn pe_ball_ratio_refused_with_hint() {
    let s = KernelSpec::power_exponential(5, 0.0, 3.0, 1.0, AlphaRule::Scaled);
    match eta_ball_ratio(&s, 0.1) {
        Err(Error::Unsupported { hint: Some(h), .. }) => assert!(h.contains("Chebyshev")),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn oscillatory_families_limited_in_n() {
    let s = KernelSpec::bessel_type(OSCILLATORY_MAX_N + 1, 0.0, 2.0, 0.5);
    assert!(matches!(eta_ball_ratio(&s, 0.1), Err(Error::Unsupported { .. })));
    // moments stay available
    assert!(radial_moment(&s, 1).is_ok());
}

#[test]
fn moment_examples() {
    let s = KernelSpec::cauchy(2, -1.0, 1.0, 1.0, AlphaRule::Fixed);
    assert!(rel_diff(radial_moment(&s, 2).unwrap(), 0.5) < 1e-14);
    for n in [1u32, 5, 80] {
        let nf = f64::from(n);
        let s = KernelSpec::laguerre_gauss(n, 0.0, 1, 0.5);
        assert!(rel_diff(radial_moment(&s, 2).unwrap(), nf * 0.25 / 4.0) < 1e-13);
        let s = KernelSpec::power_exponential(n, 0.0, 2.0, 0.3, AlphaRule::Fixed);
        assert!(rel_diff(radial_moment(&s, 2).unwrap(), nf * 0.09 / (4.0 * PI * PI)) < 1e-13);
    }
}

#[test]
fn cauchy_fourth_moment() {
    let n = 9.0;
    let nu = 1.5;
    let a: f64 = 0.2 * 3.0;
    let s = KernelSpec::cauchy(9, 0.0, nu, 0.2, AlphaRule::Scaled);
    let want = a.powi(4) * n * (n + 2.0) / ((n + 4.0 * nu - 4.0) * (n + 4.0 * nu - 2.0));
    assert!(rel_diff(radial_moment(&s, 4).unwrap(), want) < 1e-13);
    let want = a * a * n / (n + 4.0 * nu - 2.0);
    assert!(rel_diff(radial_moment(&s, 2).unwrap(), want) < 1e-13);
}

#[test]
fn moment_divergence() {
    let s = KernelSpec::bessel_type(4, 0.0, 1.0, 0.4);
    assert!(matches!(radial_moment(&s, 2), Err(Error::MomentDivergence { .. })));
    let s = KernelSpec::indicator_spectral(4, 0.0, 0.5);
    assert!(matches!(radial_moment(&s, 2), Err(Error::MomentDivergence { .. })));
    assert_eq!(radial_moment(&s, 0).unwrap(), 1.0);
}

#[test]
fn moments_match_quadrature() {
    let cfg = QuadConfig::with_tol(1e-10);
    for n in [2u32, 10, 50, 100] {
        let cases = [
            (KernelSpec::cauchy(n, 0.0, 1.0, 0.2, AlphaRule::Scaled), vec![1, 2, 4]),
            (KernelSpec::cauchy(n, 0.0, 0.5, 0.1, AlphaRule::Fixed), vec![2]),
            (KernelSpec::whittle_matern(n, 0.0, 1.0, 0.02), vec![1, 2, 4]),
            (KernelSpec::whittle_matern(n, 0.0, 0.5, 0.01), vec![2]),
            (KernelSpec::bessel_type(n, 0.0, 2.0, 0.5), vec![1, 2]),
            (KernelSpec::bessel_type(n, 0.0, 0.5, 0.5), vec![1]),
            (KernelSpec::laguerre_gauss(n, 0.0, 3, 0.3), vec![1, 2, 4]),
            (
                KernelSpec::power_exponential(n, 0.0, 2.0, 0.3, AlphaRule::Fixed),
                vec![1, 2, 3],
            ),
        ];
        for (s, ks) in cases {
            for k in ks {
                let closed = radial_moment(&s, k).unwrap();
                let quad = radial_moment_numeric(&s, k, &cfg).unwrap();
                assert!(
                    rel_diff(quad, closed) < 1e-6,
                    "{:?} n={n} k={k}: {closed} vs {quad}",
                    s.family
                );
            }
        }
    }
}

/// E|X|² and E|X|⁴ from the spectral side: ∫|x|²K² = ∫|∇K̂|²/(4π²) and
/// ∫|x|⁴K² = ∫(ΔK̂)²/(16π⁴).
fn pe_spectral_moments(spec: &KernelSpec) -> (f64, f64) {
    let nf = spec.nf();
    let nu = spec.nu.unwrap();
    let a = dpp_reach::kernels::effective_scale(spec).unwrap();
    let shape = |xi: f64| (-(a * xi).powf(nu)).exp();
    let d1 = |xi: f64| -nu * a.powf(nu) * xi.powf(nu - 1.0) * shape(xi);
    let d2 = |xi: f64| {
        let u = (a * xi).powf(nu);
        nu * a.powf(nu) * xi.powf(nu - 2.0) * shape(xi) * (nu * u - (nu - 1.0))
    };
    let lap = |xi: f64| d2(xi) + (nf - 1.0) / xi * d1(xi);
    let int = |g: &(dyn Fn(f64) -> f64 + Sync)| {
        let f = LogIntegrand::new(0.0, f64::INFINITY, |xi: f64| {
            (nf - 1.0) * xi.ln() + 2.0 * g(xi).abs().ln()
        });
        integrate_log(&f, 0.0, f64::INFINITY, 1e-11).unwrap().log_magnitude
    };
    let base = int(&shape);
    let m2 = (int(&d1) - base).exp() / (4.0 * PI * PI);
    let m4 = (int(&lap) - base).exp() / (16.0 * PI.powi(4));
    (m2, m4)
}

#[test]
fn pe_moments_match_spectral_quadrature() {
    for n in [3u32, 10, 50] {
        for (nu, alpha) in [(3.0, 1.0), (1.5, 1.0), (5.0, 1.0)] {
            let s = KernelSpec::power_exponential(n, 0.0, nu, alpha, AlphaRule::Scaled);
            let (m2, m4) = pe_spectral_moments(&s);
            assert!(rel_diff(radial_moment(&s, 2).unwrap(), m2) < 1e-8, "n={n} nu={nu}");
            assert!(rel_diff(radial_moment(&s, 4).unwrap(), m4) < 1e-8, "n={n} nu={nu}");
        }
    }
    let s = KernelSpec::power_exponential(5, 0.0, 3.0, 1.0, AlphaRule::Scaled);
    assert!(matches!(radial_moment(&s, 3), Err(Error::Unsupported { .. })));
}

#[test]
fn pe_spectrum_is_the_density_of_the_norm() {
    // sanity link between the two sides at ν = 2
    let s = KernelSpec::power_exponential(4, 0.0, 2.0, 0.3, AlphaRule::Fixed);
    let (m2, _) = pe_spectral_moments(&s);
    assert!(rel_diff(m2, 4.0 * 0.09 / (4.0 * PI * PI)) < 1e-9);
    assert!(spectral_radial(&s, 0.0).unwrap() < 1.0);
}

#[test]
fn pair_correlation_examples() {
    let s = KernelSpec::laguerre_gauss(3, 0.0, 1, 0.5);
    assert_eq!(pair_correlation(&s, 0.0).unwrap(), 0.0);
    for r in [0.01, 0.1, 0.3, 1.0] {
        let want = -(-2.0 * r * r / 0.25f64).exp_m1();
        assert!(rel_diff(pair_correlation(&s, r).unwrap(), want) < 1e-13);
    }
    for s in example_specs(5) {
        if matches!(s.family, Family::PowerExponential) {
            continue;
        }
        let g = pair_correlation(&s, 1e3).unwrap();
        assert!(g > 1.0 - 1e-6 && g <= 1.0, "{:?} {g}", s.family);
    }
}

#[test]
fn nn_bounds_limits() {
    let s = KernelSpec::laguerre_gauss(100, 0.0, 1, 0.5);
    let rt = 0.24197072451914337;
    let lo = nn_bounds(&s, 0.5 * rt).unwrap();
    assert!(lo.e_hi < 1e-20 && lo.e_lo == 0.0 && lo.p_hi == 1.0);
    assert!((lo.p_lo - (1.0 - lo.e_hi)).abs() < 1e-15);
    let hi = nn_bounds(&s, 2.0 * rt).unwrap();
    assert!(hi.p_hi < 1e-100 && hi.p_lo == 0.0);
    let at = nn_bounds(&s, rt).unwrap();
    // ln e_hi is sub-linear in n at the threshold
    assert!(at.log_e_hi.abs() < 5.0, "{}", at.log_e_hi);
    let big = nn_bounds(&s.with_n(400), 1.2 * rt).unwrap();
    assert!(big.p_lo <= big.p_hi && big.e_lo <= big.e_hi);
}

#[test]
fn boolean_ratio_examples() {
    let s = KernelSpec::laguerre_gauss(200, 0.0, 1, 0.4);
    let v = boolean_degree_ratio(&s, 0.1).unwrap();
    let rate = -v.ln() / 200.0;
    assert!((rate - 2.0 * 0.01 / 0.16).abs() < 0.03, "{rate}");
    for s in example_specs(7) {
        if s.family == Family::PowerExponential {
            continue;
        }
        for r in [0.01, 0.1, 1.0, 10.0] {
            let v = boolean_degree_ratio(&s, r).unwrap();
            assert!((0.0..=1.0).contains(&v), "{:?} {r} {v}", s.family);
        }
        let far = boolean_degree_ratio(&s, 1e8).unwrap();
        assert!(far < 1e-10);
    }
}

#[test]
fn totals_respect_bounds() {
    for n in (2..=400).step_by(7) {
        for s in example_specs(n) {
            let total = eta_total_log(&s).unwrap();
            assert!(total.exp() <= 1.0 + 1e-12);
            let bound = eta_total_bound_log(&s).unwrap();
            if s.family == Family::IndicatorSpectral {
                assert!((total - bound).abs() < 1e-14);
            } else {
                assert!(total < bound, "{:?} n={n}: {total} vs {bound}", s.family);
            }
        }
    }
}

#[test]
fn totals_near_existence_bound_stay_below_one() {
    for n in [1u32, 2, 10, 100] {
        for probe in [
            KernelSpec::laguerre_gauss(n, 0.0, 2, 1.0),
            KernelSpec::power_exponential(n, 0.0, 3.0, 1.0, AlphaRule::Fixed),
            KernelSpec::bessel_type(n, 0.0, 1.0, 1.0),
            KernelSpec::whittle_matern(n, 0.0, 1.0, 1.0),
            KernelSpec::cauchy(n, 0.0, 1.0, 1.0, AlphaRule::Fixed),
        ] {
            let s = KernelSpec {
                alpha: Some(0.999999 * max_param(&probe).unwrap()),
                ..probe
            };
            assert!(eta_total_log(&s).unwrap() < 1e-12);
        }
    }
}

#[test]
fn chebyshev_consistency() {
    let cfg = QuadConfig::default();
    for n in [5u32, 40, 150] {
        let specs = [
            KernelSpec::laguerre_gauss(n, 0.0, 2, 0.4),
            KernelSpec::cauchy(n, 0.0, 2.0, 0.2, AlphaRule::Scaled),
            KernelSpec::whittle_matern(n, 0.0, 1.0, 0.02),
            KernelSpec::power_exponential(n, 0.0, 2.0, 0.3, AlphaRule::Fixed),
        ];
        for s in specs {
            let m2 = radial_moment(&s, 2).unwrap();
            let var = radial_moment(&s, 4).unwrap() - m2 * m2;
            let nf = s.nf();
            for f in [1.1, 1.5, 3.0] {
                let r = f * (m2 / nf).sqrt();
                let tail = 1.0 - eta_ball_ratios(&s, &[r], &cfg).unwrap()[0];
                let bound = var / (nf * r * r - m2).powi(2);
                assert!(
                    tail <= bound * (1.0 + 1e-9) + 1e-12,
                    "{:?} n={n} f={f}: {tail} > {bound}",
                    s.family
                );
            }
        }
    }
}

#[test]
fn report_renderings() {
    let s = KernelSpec::laguerre_gauss(10, 0.0, 1, 0.5);
    let rep = eta_report(&s, &[0.3, 0.1, 0.2], &QuadConfig::default()).unwrap();
    let rs: Vec<f64> = rep.ratio_curve.iter().map(|p| p.0).collect();
    assert_eq!(rs, vec![0.1, 0.2, 0.3]);
    let csv = rep.to_csv();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("# log_total="));
    assert_eq!(lines.next(), Some("R,ratio"));
    let row: Vec<f64> = lines.next().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(row, vec![rep.ratio_curve[0].0, rep.ratio_curve[0].1]);
    let back: EtaReport = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(back, rep);
}

#[test]
fn indicator_ratio_curve() {
    let s = KernelSpec::indicator_spectral(5, 0.0, 0.5);
    let grid: Vec<f64> = (1..=20).map(|i| 0.1 * f64::from(i)).collect();
    let v = eta_ball_ratios(&s, &grid, &QuadConfig::default()).unwrap();
    assert!(v.windows(2).all(|w| w[0] <= w[1]));
    assert!(v[19] > 0.9 && v[19] < 1.0);
}

#[test]
fn oscillatory_ratios_across_the_tail_start() {
    let cfg = QuadConfig::default();
    for s in [
        KernelSpec::bessel_type(3, 0.0, 2.0, 0.5),
        KernelSpec::indicator_spectral(3, 0.0, 0.5),
    ] {
        let d = RadialDensity::new(&s).unwrap();
        let start = d.tail(0.0, 0.0).unwrap().start / 3f64.sqrt();
        let rs = [0.5 * start, 0.999 * start, 1.001 * start, 2.0 * start, 1e3 * start];
        let v = eta_ball_log_ratios(&s, &rs, &cfg).unwrap();
        assert!(v.windows(2).all(|w| w[0] <= w[1]), "{v:?}");
        // one-sided tails: 1 − P decays like R^{−index}
        let t1 = -v[1].exp_m1();
        let t2 = -v[2].exp_m1();
        assert!(rel_diff(t2, t1) < 0.01, "{t1} {t2}");
        let t3 = -v[3].exp_m1();
        let index = 2.0 * (0.5 * (s.sigma.unwrap_or(0.0) + 3.0)) - 2.0;
        assert!(rel_diff(t3, t2 * 0.5f64.powf(index)) < 0.01, "{t2} {t3}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ratio_curve_monotone(n in 1u32..120, fam in 0usize..6, mut rs in proptest::collection::vec(0.0f64..2.0, 1..12)) {
        let s = example_specs(n).swap_remove(fam);
        prop_assume!(s.family != Family::PowerExponential);
        rs.sort_by(f64::total_cmp);
        let v = eta_ball_ratios(&s, &rs, &QuadConfig::default()).unwrap();
        for w in v.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        for x in v {
            prop_assert!((0.0..=1.0).contains(&x));
        }
    }

    #[test]
    fn nn_bounds_ordered(n in 1u32..1000, rho in -1.0f64..1.0, r in 0.01f64..1.0) {
        let s = KernelSpec::laguerre_gauss(n, rho, 1, 0.1 * (-rho).exp());
        let b = nn_bounds(&s, r).unwrap();
        prop_assert!(b.p_lo <= b.p_hi);
        prop_assert!(b.e_lo <= b.e_hi);
        prop_assert!((0.0..=1.0).contains(&b.p_lo) && (0.0..=1.0).contains(&b.p_hi));
    }
}
