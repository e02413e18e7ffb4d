use dpp_reach::asymptotics::RateQuantity;
use dpp_reach::kernels::example_specs;
use dpp_reach::oracle::*;
use dpp_reach::quadrature::QuadConfig;
use dpp_reach::repulsion::{eta_ball_log, eta_ball_ratio, eta_total_log};
use dpp_reach::{AlphaRule, Error, Family, KernelSpec};
use statrs::function::gamma::gamma_lr;

/// Kolmogorov–Smirnov statistic of `xs` against `cdf`.
fn ks_statistic(xs: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n).abs().max((f - (i + 1) as f64 / n).abs())
        })
        .fold(0.0, f64::max)
}

/// Asymptotic 1% critical value.
fn ks_critical(n: usize) -> f64 {
    1.628 / (n as f64).sqrt()
}

#[test]
fn same_seed_same_samples() {
    let s = KernelSpec::cauchy(6, 0.0, 1.0, 0.2, AlphaRule::Scaled);
    let a = sample_radius(&s, 20_000, 42).unwrap();
    let b = sample_radius(&s, 20_000, 42).unwrap();
    assert_eq!(a, b);
    let c = sample_radius(&s, 20_000, 43).unwrap();
    assert_ne!(a, c);
    // a prefix of a longer run is the shorter run
    let d = sample_radius(&s, 30_000, 42).unwrap();
    assert_eq!(&d[..20_000], &a[..]);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let s = KernelSpec::laguerre_gauss(3, 0.0, 1, 0.5);
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let (a, ma) = one.install(|| {
        (
            sample_radius(&s, 50_000, 9).unwrap(),
            cartesian_mc_integral(&s, 0.3, 50_000, 9).unwrap(),
        )
    });
    let b = sample_radius(&s, 50_000, 9).unwrap();
    let mb = cartesian_mc_integral(&s, 0.3, 50_000, 9).unwrap();
    assert_eq!(a, b);
    assert_eq!(ma, mb);
}

#[test]
fn gaussian_mean_square() {
    let (n, alpha) = (12u32, 0.5);
    let s = KernelSpec::laguerre_gauss(n, 0.0, 1, alpha);
    let r = sample_radius(&s, 100_000, 1).unwrap();
    let sq: Vec<f64> = r.iter().map(|x| x * x).collect();
    let mean = sq.iter().sum::<f64>() / sq.len() as f64;
    let var = sq.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (sq.len() - 1) as f64;
    let se = (var / sq.len() as f64).sqrt();
    let want = f64::from(n) * alpha * alpha / 4.0;
    assert!((mean - want).abs() < 4.0 * se, "{mean} vs {want} (se {se})");
}

#[test]
fn gaussian_samples_follow_chi_law() {
    let alpha = 0.5;
    for n in [1u32, 7, 100] {
        let s = KernelSpec::laguerre_gauss(n, 0.0, 1, alpha);
        let mut r = sample_radius(&s, 100_000, 5).unwrap();
        let d = ks_statistic(&mut r, |x| gamma_lr(0.5 * f64::from(n), 2.0 * x * x / (alpha * alpha)));
        assert!(d < ks_critical(r.len()), "n={n} D={d}");
    }
}

#[test]
fn samples_follow_radial_cdf() {
    let cfg = QuadConfig::default();
    for n in [2u32, 10] {
        for s in example_specs(n) {
            if s.family == Family::PowerExponential {
                continue;
            }
            let sampler = RadialSampler::new(&s, &cfg).unwrap();
            let mut r = sampler.sample(50_000, 11);
            let d = ks_statistic(&mut r, |x| sampler.cdf(x));
            assert!(d < ks_critical(r.len()), "{:?} n={n} D={d}", s.family);
        }
    }
}

#[test]
fn sampler_quantile_inverts_cdf() {
    let s = KernelSpec::bessel_type(3, 0.0, 2.0, 0.5);
    let sampler = RadialSampler::new(&s, &QuadConfig::default()).unwrap();
    for u in [0.01, 0.3, 0.7, 0.99, 0.999_999] {
        let r = sampler.quantile(u);
        assert!((sampler.cdf(r) - u).abs() < 1e-6, "u={u}");
    }
}

#[test]
fn ball_ratio_limits() {
    let s = KernelSpec::laguerre_gauss(5, 0.0, 1, 0.5);
    let inf = mc_ball_ratio(&s, f64::INFINITY, 1000, 3).unwrap();
    assert_eq!((inf.value, inf.std_error), (1.0, 0.0));
    let zero = mc_ball_ratio(&s, 0.0, 1000, 3).unwrap();
    assert_eq!((zero.value, zero.std_error), (0.0, 0.0));
    assert_eq!(zero.samples, 1000);
    assert_eq!(zero.seed, 3);
}

#[test]
fn ball_ratio_agrees_with_quadrature() {
    for n in [3u32, 10, 50] {
        for s in [
            KernelSpec::laguerre_gauss(n, 0.0, 2, 0.4),
            KernelSpec::cauchy(n, 0.0, 1.0, 0.2, AlphaRule::Scaled),
            KernelSpec::bessel_type(n, 0.0, 2.0, 0.5),
        ] {
            // near the median so the binomial error is informative
            let sampler = RadialSampler::new(&s, &QuadConfig::default()).unwrap();
            let r = sampler.quantile(0.5) / s.nf().sqrt();
            let mc = mc_ball_ratio(&s, r, 100_000, 17).unwrap();
            let q = eta_ball_ratio(&s, r).unwrap();
            assert!(
                (mc.value - q).abs() < 3.0 * mc.std_error,
                "{:?} n={n}: {} vs {q}",
                s.family,
                mc.value
            );
        }
    }
}

#[test]
fn cartesian_gaussian_plane() {
    let alpha = 0.5;
    let s = KernelSpec::laguerre_gauss(2, 0.0, 1, alpha);
    let r = 0.2;
    let mc = cartesian_mc_integral(&s, r, 200_000, 21).unwrap();
    let closed = eta_total_log(&s).unwrap().exp() * gamma_lr(1.0, 2.0 * 2.0 * r * r / (alpha * alpha));
    assert!(
        (mc.value - closed).abs() < 3.0 * mc.std_error,
        "{} vs {closed}",
        mc.value
    );
    assert!(mc.std_error > 0.0);
}

#[test]
fn cartesian_cauchy_space() {
    let s = KernelSpec::cauchy(3, 0.0, 1.0, 0.2, AlphaRule::Scaled);
    let r = 0.15;
    let mc = cartesian_mc_integral(&s, r, 200_000, 22).unwrap();
    let q = eta_ball_log(&s, r, &QuadConfig::default()).unwrap().exp();
    assert!((mc.value - q).abs() < 3.0 * mc.std_error, "{} vs {q}", mc.value);
}

#[test]
fn cartesian_refusals() {
    let s = KernelSpec::laguerre_gauss(9, 0.0, 1, 0.5);
    assert!(matches!(
        cartesian_mc_integral(&s, 0.2, 100, 1),
        Err(Error::Unsupported { .. })
    ));
    let s = KernelSpec::indicator_spectral(3, 0.0, 0.5);
    assert!(matches!(
        cartesian_mc_integral(&s, 0.2, 100, 1),
        Err(Error::Unsupported { .. })
    ));
    let s = KernelSpec::laguerre_gauss(3, 0.0, 1, 0.5);
    assert!(cartesian_mc_integral(&s, f64::INFINITY, 100, 1).is_err());
    let s = KernelSpec::power_exponential(3, 0.0, 3.0, 1.0, AlphaRule::Scaled);
    assert!(matches!(
        cartesian_mc_integral(&s, 0.2, 100, 1),
        Err(Error::Unsupported { .. })
    ));
}

#[test]
fn sampling_refusals() {
    let s = KernelSpec::power_exponential(3, 0.0, 3.0, 1.0, AlphaRule::Scaled);
    assert!(matches!(sample_radius(&s, 10, 1), Err(Error::Unsupported { .. })));
    let s = KernelSpec::laguerre_gauss(3, 0.0, 1, 0.5);
    assert!(sample_radius(&s, 0, 1).is_err());
}

#[test]
fn estimate_json_carries_seed() {
    let s = KernelSpec::laguerre_gauss(3, 0.0, 1, 0.5);
    let mc = mc_ball_ratio(&s, 0.2, 5000, 77).unwrap();
    let v: serde_json::Value = serde_json::from_str(&mc.to_json()).unwrap();
    assert_eq!(v["seed"], 77);
    assert_eq!(v["samples"], 5000);
}

#[test]
fn empirical_rate_rows() {
    let cfg = QuadConfig::default();
    let t = KernelSpec::laguerre_gauss(10, 0.0, 1, 0.3);
    let one = empirical_rate(&t, 0.05, &[40], RateQuantity::EtaBall, &cfg).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].n, 40);
    // above the reach the normalized ratio rate goes to zero
    let rows = empirical_rate(&t, 0.17, &[25, 100, 400], RateQuantity::EtaBallRatio, &cfg).unwrap();
    assert!(rows.windows(2).all(|w| w[1].rate <= w[0].rate));
    assert!(rows[2].rate < 1e-3);
}
