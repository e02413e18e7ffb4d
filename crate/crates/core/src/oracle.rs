//! Brute-force checks: inverse-CDF sampling of |X_n|, Cartesian Monte Carlo
//! integrals in low dimension, and finite-n rate sequences.
//!
//! Random numbers come from ChaCha8 seeded with the user seed, with stream
//! number = chunk index. Chunks have a fixed size, so results do not depend on
//! the number of threads.

use rand::distr::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asymptotics::{EmpiricalRate, RateQuantity};
use crate::error::{Error, Result};
use crate::kernels::{intensity_log, kernel_radial, Family, KernelSpec};
use crate::quadrature::{locate_peak, QuadConfig, RadialCdf};
use crate::repulsion::{boolean_degree_ratio_log, eta_ball_log, eta_ball_log_ratios, RadialDensity, RadialTail};

/// Samples per RNG stream.
pub const CHUNK: usize = 8192;

/// Largest dimension accepted by [`cartesian_mc_integral`].
pub const CARTESIAN_MAX_N: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

impl McEstimate {
    pub fn to_json(&self) -> String {
        crate::render::to_json(self)
    }
}

fn stream(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn chunks(count: usize) -> Vec<(usize, usize)> {
    (0..count.div_ceil(CHUNK))
        .map(|i| (i, CHUNK.min(count - i * CHUNK)))
        .collect()
}

/// Inverse-CDF sampler for |X_n|, with a power-law tail beyond the grid for
/// J²-type densities.
#[derive(Clone, Debug)]
pub struct RadialSampler {
    pub cdf: RadialCdf,
    pub tail: Option<RadialTail>,
    tail_fraction: f64,
}

impl RadialSampler {
    pub fn new(spec: &KernelSpec, cfg: &QuadConfig) -> Result<Self> {
        let density = RadialDensity::new(spec)?;
        let (cdf, tail) = density.radial_cdf(cfg)?;
        let tail_fraction = match tail {
            Some(t) => {
                let log_total = crate::special_functions::log_sum_exp(&[cdf.log_total, t.log_mass]);
                (t.log_mass - log_total).exp()
            }
            None => 0.0,
        };
        Ok(RadialSampler {
            cdf,
            tail,
            tail_fraction,
        })
    }

    /// CDF of the sampled law at `r`.
    pub fn cdf(&self, r: f64) -> f64 {
        let body = 1.0 - self.tail_fraction;
        match self.tail {
            Some(t) if r > t.start => 1.0 - self.tail_fraction * (t.start / r).powf(t.index),
            _ => body * self.cdf.cdf(r),
        }
    }

    /// Radius at uniform `u` ∈ (0, 1).
    pub fn quantile(&self, u: f64) -> f64 {
        let body = 1.0 - self.tail_fraction;
        match self.tail {
            Some(t) if u > body => {
                let v = (u - body) / self.tail_fraction;
                t.start * (1.0 - v).powf(-1.0 / t.index)
            }
            _ => self.cdf.inverse(u / body),
        }
    }

    pub fn sample(&self, count: usize, seed: u64) -> Vec<f64> {
        let parts: Vec<Vec<f64>> = chunks(count)
            .into_par_iter()
            .map(|(i, len)| {
                let mut rng = stream(seed, i);
                (0..len).map(|_| self.quantile(rng.sample(Open01))).collect()
            })
            .collect();
        parts.concat()
    }
}

/// `count` i.i.d. draws of |X_n|, reproducible from `seed`.
pub fn sample_radius(spec: &KernelSpec, count: usize, seed: u64) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::Domain("count must be at least 1".into()));
    }
    let sampler = RadialSampler::new(spec, &QuadConfig::default())?;
    Ok(sampler.sample(count, seed))
}

/// Fraction of sampled radii within √n·R, with its binomial standard error.
pub fn mc_ball_ratio(spec: &KernelSpec, big_r: f64, count: usize, seed: u64) -> Result<McEstimate> {
    if !(big_r >= 0.0) {
        return Err(Error::Domain(format!("R must be non-negative, got {big_r}")));
    }
    let radii = sample_radius(spec, count, seed)?;
    let b = spec.nf().sqrt() * big_r;
    let inside = radii.iter().filter(|&&r| r <= b).count();
    let p = inside as f64 / count as f64;
    Ok(McEstimate {
        value: p,
        std_error: (p * (1.0 - p) / count as f64).sqrt(),
        samples: count as u64,
        seed,
    })
}

/// Importance-sampled ∫_{B(√nR)} K(x)² dx / e^{nρ} with an isotropic Gaussian
/// proposal whose mode radius matches that of r^{n−1}K(r)².
pub fn cartesian_mc_integral(spec: &KernelSpec, big_r: f64, count: usize, seed: u64) -> Result<McEstimate> {
    if spec.n > CARTESIAN_MAX_N {
        return Err(Error::Unsupported {
            family: spec.family,
            operation: "Cartesian Monte Carlo above n = 8",
            hint: Some("use the radial quadrature instead"),
        });
    }
    if spec.family == Family::IndicatorSpectral {
        return Err(Error::Unsupported {
            family: spec.family,
            operation: "Cartesian Monte Carlo",
            hint: Some("the kernel tail is too heavy for the Gaussian proposal"),
        });
    }
    if !(big_r > 0.0 && big_r.is_finite()) {
        return Err(Error::Domain(format!("R must be positive and finite, got {big_r}")));
    }
    if count < 2 {
        return Err(Error::Domain("count must be at least 2".into()));
    }
    crate::repulsion::RadialDensity::new(spec)?;
    let n = spec.n as usize;
    let nf = spec.nf();
    let rho_n = intensity_log(spec);
    let log_k = |r: f64| kernel_radial(spec, r).map(|k| k.log_magnitude);
    let radial = crate::quadrature::LogIntegrand::new(0.0, f64::INFINITY, |r: f64| {
        let k = log_k(r).unwrap_or(f64::NAN);
        if r == 0.0 {
            return if spec.n == 1 {
                2.0 * (k - rho_n)
            } else {
                f64::NEG_INFINITY
            };
        }
        (nf - 1.0) * r.ln() + 2.0 * (k - rho_n)
    });
    let peak = locate_peak(&radial, 0.0, f64::INFINITY)?;
    let scale = if spec.n >= 2 {
        1.25 * (peak.r / (nf - 1.0).sqrt()).max(peak.width)
    } else {
        peak.width
    };
    let ball = nf.sqrt() * big_r;
    let log_norm = 0.5 * nf * (2.0 * std::f64::consts::PI * scale * scale).ln();
    // shift: the weight at the mode radius
    let shift = 2.0 * log_k(peak.r)? - rho_n + log_norm + peak.r * peak.r / (2.0 * scale * scale);

    let parts: Vec<Result<(f64, f64)>> = chunks(count)
        .into_par_iter()
        .map(|(i, len)| {
            let mut rng = stream(seed, i);
            let (mut s1, mut s2) = (0.0f64, 0.0f64);
            let mut x = vec![0.0f64; n];
            for _ in 0..len {
                for xi in x.iter_mut() {
                    *xi = scale * rng.sample::<f64, _>(StandardNormal);
                }
                let r2: f64 = x.iter().map(|v| v * v).sum();
                let r = r2.sqrt();
                if r > ball {
                    continue;
                }
                let k = kernel_radial(spec, r)?;
                if k.is_zero() {
                    continue;
                }
                let lw = 2.0 * k.log_magnitude - rho_n + log_norm + r2 / (2.0 * scale * scale) - shift;
                let w = lw.exp();
                s1 += w;
                s2 += w * w;
            }
            Ok((s1, s2))
        })
        .collect();
    let (mut s1, mut s2) = (0.0, 0.0);
    for p in parts {
        let (a, b) = p?;
        s1 += a;
        s2 += b;
    }
    let nn = count as f64;
    let mean = s1 / nn;
    let var = ((s2 / nn - mean * mean) * nn / (nn - 1.0)).max(0.0);
    let factor = shift.exp();
    Ok(McEstimate {
        value: mean * factor,
        std_error: (var / nn).sqrt() * factor,
        samples: count as u64,
        seed,
    })
}

/// −(1/n)·ln of a finite-n quantity at fixed R for each n, by quadrature.
pub fn empirical_rate(
    template: &KernelSpec,
    big_r: f64,
    n_list: &[u32],
    quantity: RateQuantity,
    cfg: &QuadConfig,
) -> Result<Vec<EmpiricalRate>> {
    n_list
        .par_iter()
        .map(|&n| {
            let spec = template.with_n(n);
            let log_value = match quantity {
                RateQuantity::EtaBall => eta_ball_log(&spec, big_r, cfg)?,
                RateQuantity::EtaBallRatio => eta_ball_log_ratios(&spec, &[big_r], cfg)?[0],
                RateQuantity::EtaBooleanRatio => boolean_degree_ratio_log(&spec, big_r, cfg)?,
            };
            Ok(EmpiricalRate {
                n,
                big_r,
                rate: -log_value / f64::from(n),
            })
        })
        .collect()
}
