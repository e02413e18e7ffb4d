//! The first-moment measure of the repulsion process η at finite n.
//!
//! E[η(B)] = ∫_B K(x)²dx / e^{nρ}. Everything radial goes through the
//! integrand r^{n−1}K(r)²/e^{2nρ}; totals come from the closed-form squared
//! norms in [`crate::kernels`] and moments from their Gamma-ratio forms.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{
    effective_scale, indicator_radius_log, intensity_log, kernel_radial, laguerre_moment_sum, squared_norm_log,
    validate, Family, KernelSpec,
};
use crate::quadrature::{build_cdf, integrate_log_cells, LogIntegrand, QuadConfig, RadialCdf};
use crate::render::fmt_f64;
use crate::special_functions::{bessel_j, lgamma, ln_ball_volume, ln_beta, ln_gamma_ratio, log_sum_exp};

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Largest dimension for which J²-type integrands are integrated numerically.
pub const OSCILLATORY_MAX_N: u32 = 200;

const CHEBYSHEV_HINT: &str =
    "no closed-form position kernel unless nu = 2; certify concentration with exact moments (moments command) and Chebyshev";
const OSCILLATION_HINT: &str = "oscillation count grows with n; only exact moments are offered there";

pub(crate) fn checked(spec: &KernelSpec) -> Result<()> {
    validate(spec).map(|_| ()).map_err(Error::InvalidSpec)
}

/// ln of the surface area of the unit sphere in ℝⁿ.
pub fn ln_sphere_area(n: u32) -> f64 {
    let h = 0.5 * f64::from(n);
    LN_2 + h * LN_PI - lgamma(h)
}

#[derive(Clone, Copy, Debug)]
enum Shape {
    Smooth,
    /// K(r) = K(0)·Γ(order+1)(2/y)^order J_order(y), y = scale·r.
    Bessel {
        order: f64,
        scale: f64,
        log_k0: f64,
    },
}

/// Density of |X_n| where X_n has density K²/‖K‖².
#[derive(Clone, Debug)]
pub struct RadialDensity {
    pub spec: KernelSpec,
    /// ln ‖K‖₂² from the closed form.
    pub log_norm: f64,
    shape: Shape,
}

impl RadialDensity {
    pub fn new(spec: &KernelSpec) -> Result<Self> {
        checked(spec)?;
        if spec.family == Family::PowerExponential {
            // surfaces the unsupported error before any integration starts
            kernel_radial(spec, 0.0).map_err(|_| Error::Unsupported {
                family: spec.family,
                operation: "position-space radial integrals",
                hint: Some(CHEBYSHEV_HINT),
            })?;
        }
        let n = spec.nf();
        let shape = match spec.family {
            Family::BesselType => {
                let order = 0.5 * (spec.sigma_param()? + n);
                Shape::Bessel {
                    order,
                    scale: 2.0 * order.sqrt() / spec.alpha_param()?,
                    log_k0: intensity_log(spec),
                }
            }
            Family::IndicatorSpectral => Shape::Bessel {
                order: 0.5 * n,
                scale: 2.0 * PI * indicator_radius_log(spec).exp(),
                log_k0: intensity_log(spec) + 0.5 * spec.c_param()?.ln(),
            },
            _ => Shape::Smooth,
        };
        Ok(RadialDensity {
            spec: spec.clone(),
            log_norm: squared_norm_log(spec)?,
            shape,
        })
    }

    /// Support of the radius.
    pub fn support(&self) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }

    pub fn is_oscillatory(&self) -> bool {
        matches!(self.shape, Shape::Bessel { .. })
    }

    /// ln(r^{n−1+power} K(r)² / e^{2nρ}); −∞ at zeros of K.
    pub fn log_integrand(&self, r: f64, power: f64) -> f64 {
        let expo = self.spec.nf() - 1.0 + power;
        let k = match kernel_radial(&self.spec, r) {
            Ok(k) => k,
            Err(_) => return f64::NAN,
        };
        let kpart = if k.is_zero() {
            f64::NEG_INFINITY
        } else {
            2.0 * (k.log_magnitude - intensity_log(&self.spec))
        };
        if r == 0.0 {
            return if expo == 0.0 { kpart } else { f64::NEG_INFINITY };
        }
        expo * r.ln() + kpart
    }

    /// ln of the probability density of |X_n| at r.
    pub fn log_pdf(&self, r: f64) -> f64 {
        ln_sphere_area(self.spec.n) + 2.0 * intensity_log(&self.spec) + self.log_integrand(r, 0.0) - self.log_norm
    }

    pub fn integrand(&self, power: f64) -> LogIntegrand<'_> {
        let f = LogIntegrand::new(0.0, f64::INFINITY, move |r: f64| self.log_integrand(r, power));
        match self.shape {
            Shape::Smooth => f,
            Shape::Bessel { scale, .. } => f.oscillatory(PI / scale),
        }
    }

    /// ln ∫ r^{n−1+power}K²/e^{2nρ} dr over the cells cut at `cuts` (radii,
    /// increasing, positive, finite). The last cell runs to +∞.
    pub fn cells(&self, cuts: &[f64], power: f64, cfg: &QuadConfig) -> Result<Vec<f64>> {
        match self.shape {
            Shape::Smooth => integrate_log_cells(&self.integrand(power), 0.0, f64::INFINITY, cuts, cfg),
            Shape::Bessel { scale, order, .. } => {
                let tail = self.tail(power, 0.0)?;
                let f = self.integrand(power);
                let split = cuts.partition_point(|&c| c < tail.start);
                let mut cells = integrate_log_cells(&f, 0.0, tail.start, &cuts[..split], cfg)?;
                let last = cells.len() - 1;
                if split == cuts.len() {
                    cells[last] = log_sum_exp(&[cells[last], tail.log_mass]);
                    return Ok(cells);
                }
                // far cuts: differences of the tail mass beyond each cut
                // the gap between a cut and its nearest zero is under one
                // oscillation, where far out the nodes lose relative precision
                let gap_cfg = QuadConfig::with_tol(cfg.rel_tol.max(1e-6));
                let mut beyond = vec![tail.log_mass];
                for &c in &cuts[split..] {
                    let zero = bessel_zero_near(scale * c, order)?;
                    let at_zero = self.tail_at_zero(power, zero)?;
                    let z = zero / scale;
                    let log_gap = |a: f64, b: f64| -> Result<f64> {
                        let v = integrate_log_cells(&f, a, b, &[], &gap_cfg)?;
                        Ok(v[0])
                    };
                    let t = if z > c {
                        log_sum_exp(&[at_zero, log_gap(c, z)?])
                    } else if z < c {
                        log_diff_exp(at_zero, log_gap(z, c)?)
                    } else {
                        at_zero
                    };
                    beyond.push(t.min(*beyond.last().unwrap()));
                }
                for w in beyond.windows(2) {
                    cells.push(log_diff_exp(w[0], w[1]));
                }
                cells[last] = log_sum_exp(&[cells[last], cells[last + 1]]);
                cells.remove(last + 1);
                cells.push(*beyond.last().unwrap());
                Ok(cells)
            }
        }
    }

    /// Analytic tail of a J²-type integrand beyond a zero of J placed well
    /// past both the oscillation onset and `beyond`. Smooth families have
    /// none; they are integrated to +∞ directly.
    pub fn tail(&self, power: f64, beyond: f64) -> Result<RadialTail> {
        let Shape::Bessel { order, scale, .. } = self.shape else {
            return Err(Error::Domain("only J²-type densities have an analytic tail".into()));
        };
        if self.spec.n > OSCILLATORY_MAX_N {
            return Err(Error::Unsupported {
                family: self.spec.family,
                operation: "numeric radial integrals above n = 200",
                hint: Some(OSCILLATION_HINT),
            });
        }
        let n = self.spec.nf();
        let index = 2.0 * order - n + 1.0 - power;
        if !(index > 0.0) {
            return Err(Error::MomentDivergence {
                family: self.spec.family,
                k: power.max(0.0) as u32,
            });
        }
        let target = (100.0 * order).max(2000.0).max(1.05 * beyond * scale + 10.0);
        let y_end = bessel_zero_near(target, order)?;
        Ok(RadialTail {
            start: y_end / scale,
            index,
            log_mass: self.tail_at_zero(power, y_end)?,
        })
    }

    /// ln ∫ over r > y_zero/scale, with y_zero a zero of J far past the order.
    fn tail_at_zero(&self, power: f64, y_zero: f64) -> Result<f64> {
        let Shape::Bessel { order, scale, log_k0 } = self.shape else {
            return Err(Error::Domain("only J²-type densities have an analytic tail".into()));
        };
        let n = self.spec.nf();
        let index = 2.0 * order - n + 1.0 - power;
        Ok(-(n + power) * scale.ln()
            + 2.0 * (log_k0 - intensity_log(&self.spec))
            + 2.0 * lgamma(order + 1.0)
            + 2.0 * order * LN_2
            - LN_PI
            + modulus_tail_log(order, index, y_zero))
    }

    /// CDF of the radius. J²-type densities are tabulated up to the start of
    /// their analytic tail, which is returned separately.
    pub fn radial_cdf(&self, cfg: &QuadConfig) -> Result<(RadialCdf, Option<RadialTail>)> {
        match self.shape {
            Shape::Smooth => Ok((build_cdf(&self.integrand(0.0), cfg)?, None)),
            Shape::Bessel { .. } => {
                let tail = self.tail(0.0, 0.0)?;
                let mut f = self.integrand(0.0);
                f.hi = tail.start;
                Ok((build_cdf(&f, cfg)?, Some(tail)))
            }
        }
    }
}

/// ln(e^a − e^b), −∞ when b ≥ a.
fn log_diff_exp(a: f64, b: f64) -> f64 {
    if !(b < a) {
        return f64::NEG_INFINITY;
    }
    a + (-(b - a).exp()).ln_1p()
}

/// Mass of a J²-type radial integrand beyond `start`, where it decays like
/// r^{−index−1} on average.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialTail {
    pub start: f64,
    pub index: f64,
    pub log_mass: f64,
}

/// Zero of J_order closest to `target`, for target well past the order.
fn bessel_zero_near(target: f64, order: f64) -> Result<f64> {
    let mu = 4.0 * order * order;
    let k = (target / PI - 0.5 * order + 0.25).round();
    let beta = (k + 0.5 * order - 0.25) * PI;
    let guess = beta - (mu - 1.0) / (8.0 * beta);
    let j = |y: f64| bessel_j(order, y);
    let mut lo = guess - 1.5;
    let mut f_lo = j(lo)?;
    let mut found = None;
    for i in 1..=12 {
        let hi = guess - 1.5 + 0.25 * f64::from(i);
        let f_hi = j(hi)?;
        if f_lo == 0.0 {
            return Ok(lo);
        }
        if f_lo.signum() != f_hi.signum() {
            found = Some((lo, hi, f_lo));
            break;
        }
        lo = hi;
        f_lo = f_hi;
    }
    let (mut a, mut b, fa) =
        found.ok_or_else(|| Error::Numeric(format!("no zero of J_{order} found near {target}")))?;
    for _ in 0..80 {
        let m = 0.5 * (a + b);
        let fm = j(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// ln Σ_k c_k Y^{−q−2k}/(q + 2k), the integral over [Y, ∞) of y^{−q} times
/// the mean of J² (half the squared modulus, times π).
fn modulus_tail_log(order: f64, q: f64, y: f64) -> f64 {
    let mu = 4.0 * order * order;
    let y2 = y * y;
    let mut c = 1.0;
    let mut sum = 1.0 / q;
    for k in 1..60 {
        let kf = f64::from(k);
        c *= (2.0 * kf - 1.0) / (2.0 * kf) * (mu - (2.0 * kf - 1.0).powi(2)) / (4.0 * y2);
        let t = c / (q + 2.0 * kf);
        sum += t;
        if t.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    -q * y.ln() + sum.ln()
}

/// ln E[η(ℝⁿ)] = ln ‖K‖² − nρ.
pub fn eta_total_log(spec: &KernelSpec) -> Result<f64> {
    checked(spec)?;
    Ok(squared_norm_log(spec)? - intensity_log(spec))
}

fn ball_radius(spec: &KernelSpec, big_r: f64) -> Result<f64> {
    if !(big_r >= 0.0) {
        return Err(Error::Domain(format!("R must be non-negative, got {big_r}")));
    }
    Ok(spec.nf().sqrt() * big_r)
}

/// ln P(|X_n| ≤ √n·R) for each R, from one shared panel decomposition.
/// The result is non-decreasing in R and at most 0.
pub fn eta_ball_log_ratios(spec: &KernelSpec, rs: &[f64], cfg: &QuadConfig) -> Result<Vec<f64>> {
    let density = RadialDensity::new(spec)?;
    let radii: Vec<f64> = rs.iter().map(|&r| ball_radius(spec, r)).collect::<Result<_>>()?;
    let mut cuts: Vec<f64> = radii.iter().copied().filter(|b| *b > 0.0 && b.is_finite()).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let cells = density.cells(&cuts, 0.0, cfg)?;
    let total = log_sum_exp(&cells);
    let mut cumulative = Vec::with_capacity(cells.len());
    let mut acc = f64::NEG_INFINITY;
    for c in &cells {
        acc = log_sum_exp(&[acc, *c]);
        cumulative.push(acc);
    }
    Ok(radii
        .iter()
        .map(|&b| {
            if b == 0.0 {
                f64::NEG_INFINITY
            } else if b.is_infinite() {
                0.0
            } else {
                let i = cuts.partition_point(|&c| c < b);
                (cumulative[i] - total).min(0.0)
            }
        })
        .collect())
}

/// P(|X_n| ≤ √n·R) for each R; see [`eta_ball_log_ratios`].
pub fn eta_ball_ratios(spec: &KernelSpec, rs: &[f64], cfg: &QuadConfig) -> Result<Vec<f64>> {
    Ok(eta_ball_log_ratios(spec, rs, cfg)?.into_iter().map(f64::exp).collect())
}

/// P(|X_n| ≤ √n·R) = E[η(B(√nR))]/E[η(ℝⁿ)].
pub fn eta_ball_ratio(spec: &KernelSpec, big_r: f64) -> Result<f64> {
    Ok(eta_ball_ratios(spec, &[big_r], &QuadConfig::default())?[0])
}

/// ln E[η(B(√nR))] by quadrature of the ball integral alone.
pub fn eta_ball_log(spec: &KernelSpec, big_r: f64, cfg: &QuadConfig) -> Result<f64> {
    let density = RadialDensity::new(spec)?;
    let b = ball_radius(spec, big_r)?;
    let head = if b == 0.0 {
        f64::NEG_INFINITY
    } else if b.is_infinite() {
        log_sum_exp(&density.cells(&[], 0.0, cfg)?)
    } else {
        density.cells(&[b], 0.0, cfg)?[0]
    };
    Ok(ln_sphere_area(spec.n) + intensity_log(spec) + head)
}

/// E[η(B(√nR))]/E[Φ(B(√nR))], the Boolean-model degree ratio, in log form.
pub fn boolean_degree_ratio_log(spec: &KernelSpec, big_r: f64, cfg: &QuadConfig) -> Result<f64> {
    let b = ball_radius(spec, big_r)?;
    if !(b > 0.0) {
        return Err(Error::Domain(format!("R must be positive, got {big_r}")));
    }
    if b.is_infinite() {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(eta_ball_log(spec, big_r, cfg)? - intensity_log(spec) - ln_ball_volume(spec.n, b))
}

/// E[η(B(√nR))]/E[Φ(B(√nR))] in [0, 1].
pub fn boolean_degree_ratio(spec: &KernelSpec, big_r: f64) -> Result<f64> {
    Ok(boolean_degree_ratio_log(spec, big_r, &QuadConfig::default())?
        .exp()
        .clamp(0.0, 1.0))
}

fn divergent(spec: &KernelSpec, k: u32) -> Error {
    Error::MomentDivergence { family: spec.family, k }
}

/// ln E[|X_n|^k] from the family's exact finite-n formula.
pub fn radial_moment_log(spec: &KernelSpec, k: u32) -> Result<f64> {
    checked(spec)?;
    if k == 0 {
        return Ok(0.0);
    }
    let n = spec.nf();
    let h = 0.5 * n;
    let kf = f64::from(k);
    let hk = 0.5 * kf;
    match spec.family {
        Family::LaguerreGauss => {
            let m = spec.m_param()?;
            let alpha = spec.alpha_param()?;
            let s_k = laguerre_moment_sum(spec.n, m, kf);
            let s_0 = laguerre_moment_sum(spec.n, m, 0.0);
            Ok(hk * (0.5 * f64::from(m) * alpha * alpha).ln() + s_k.log_magnitude - s_0.log_magnitude)
        }
        Family::PowerExponential => {
            let nu = spec.nu_param()?;
            let a = effective_scale(spec)?;
            if nu == 2.0 {
                // Gaussian: 2π²|x|²/α² ~ Gamma(n/2)
                return Ok(hk * (a * a / (2.0 * PI * PI)).ln() + ln_gamma_ratio(h, hk));
            }
            match k {
                2 => {
                    let g = (n - 2.0) / nu + 1.0;
                    if !(g > 0.0) {
                        return Err(Error::Domain(format!(
                            "second-moment formula needs (n − 2)/nu + 1 > 0, got {g}"
                        )));
                    }
                    Ok(n.ln() + 2.0 / nu * LN_2 + 2.0 * a.ln() + lgamma(g)
                        - (4.0 * PI * PI).ln()
                        - lgamma(n / nu + 1.0)
                        + ((n + nu - 2.0) / 4.0).ln())
                }
                4 => {
                    let s = (n - 4.0) / nu;
                    if !(s + 2.0 > 0.0) {
                        return Err(Error::Domain(format!(
                            "fourth-moment formula needs (n − 4)/nu + 2 > 0, got {}",
                            s + 2.0
                        )));
                    }
                    let w = nu - 2.0 + n;
                    // every Gamma value relative to Γ(s+2)
                    let bracket = nu.powi(3) / 16.0 * (s + 3.0) * (s + 2.0) - 2.0 * nu * nu * w / 8.0 * (s + 2.0)
                        + nu * w * w / 4.0;
                    Ok(
                        4.0 * a.ln() + n.ln() + 4.0 / nu * LN_2 - 4.0 * (2.0 * PI).ln() - lgamma(n / nu + 1.0)
                            + lgamma(s + 2.0)
                            + bracket.ln(),
                    )
                }
                _ => Err(Error::Unsupported {
                    family: spec.family,
                    operation: "moments other than k = 2, 4 unless nu = 2",
                    hint: None,
                }),
            }
        }
        Family::BesselType => {
            let s = spec.sigma_param()?;
            if !(kf < s + 1.0) {
                return Err(divergent(spec, k));
            }
            let alpha = spec.alpha_param()?;
            Ok(
                kf * alpha.ln() + hk * LN_2 - hk * (s + n).ln() + ln_gamma_ratio(h, hk) + lgamma(s + 1.0 - kf)
                    - lgamma(s + 1.0)
                    + 2.0 * (lgamma(0.5 * s + 1.0) - lgamma(0.5 * (s - kf) + 1.0))
                    + ln_gamma_ratio(s + h + 1.0 - hk, hk),
            )
        }
        Family::WhittleMatern => {
            let nu = spec.nu_param()?;
            let alpha = spec.alpha_param()?;
            Ok(kf * (2.0 * alpha).ln()
                + ln_gamma_ratio(h + 2.0 * nu, hk)
                + 2.0 * ln_gamma_ratio(h + nu, hk)
                + ln_gamma_ratio(h, hk)
                - ln_gamma_ratio(n + 2.0 * nu, kf))
        }
        Family::Cauchy => {
            let nu = spec.nu_param()?;
            let a = effective_scale(spec)?;
            if !(kf < 4.0 * nu + n) {
                return Err(divergent(spec, k));
            }
            Ok(kf * a.ln() + ln_beta(h + hk, 2.0 * nu + h - hk) - ln_beta(h, 2.0 * nu + h))
        }
        Family::IndicatorSpectral => Err(divergent(spec, k)),
    }
}

/// E[|X_n|^k] from the exact finite-n formula.
pub fn radial_moment(spec: &KernelSpec, k: u32) -> Result<f64> {
    Ok(radial_moment_log(spec, k)?.exp())
}

/// E[|X_n|^k] by direct radial quadrature (where the position kernel exists).
pub fn radial_moment_numeric(spec: &KernelSpec, k: u32, cfg: &QuadConfig) -> Result<f64> {
    let density = RadialDensity::new(spec)?;
    let top = log_sum_exp(&density.cells(&[], f64::from(k), cfg)?);
    let bottom = log_sum_exp(&density.cells(&[], 0.0, cfg)?);
    Ok((top - bottom).exp())
}

/// g(r) = 1 − K(r)²/K(0)².
pub fn pair_correlation(spec: &KernelSpec, r: f64) -> Result<f64> {
    let k0 = kernel_radial(spec, 0.0)?;
    let kr = kernel_radial(spec, r)?;
    if kr.is_zero() {
        return Ok(1.0);
    }
    Ok((-(2.0 * (kr.log_magnitude - k0.log_magnitude)).exp_m1()).clamp(0.0, 1.0))
}

/// Bounds on E[Φ^{0,!}(B)] and on the void probability of the reduced Palm
/// process in B = B(√nR).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NnBounds {
    pub p_lo: f64,
    pub p_hi: f64,
    pub e_lo: f64,
    pub e_hi: f64,
    /// ln e_hi, exact even when e_hi overflows.
    pub log_e_hi: f64,
}

pub fn nn_bounds(spec: &KernelSpec, big_r: f64) -> Result<NnBounds> {
    checked(spec)?;
    let b = ball_radius(spec, big_r)?;
    if !(b > 0.0) {
        return Err(Error::Domain(format!("R must be positive, got {big_r}")));
    }
    let log_e_hi = intensity_log(spec) + ln_ball_volume(spec.n, b);
    let e_hi = log_e_hi.exp();
    let e_lo = log_e_hi.exp_m1().clamp(0.0, e_hi);
    Ok(NnBounds {
        p_lo: (-log_e_hi.exp_m1()).max(0.0),
        p_hi: (-e_lo).exp(),
        e_lo,
        e_hi,
        log_e_hi,
    })
}

/// Total repulsion mass and the normalized ball-ratio curve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EtaReport {
    pub spec: KernelSpec,
    pub log_total: f64,
    pub ratio_curve: Vec<(f64, f64)>,
}

impl EtaReport {
    pub fn to_csv(&self) -> String {
        let mut out = format!("# log_total={}\nR,ratio\n", fmt_f64(self.log_total));
        for (r, v) in &self.ratio_curve {
            out.push_str(&format!("{},{}\n", fmt_f64(*r), fmt_f64(*v)));
        }
        out
    }

    pub fn to_json(&self) -> String {
        crate::render::to_json(self)
    }
}

/// [`EtaReport`] over `grid`, sorted by R.
pub fn eta_report(spec: &KernelSpec, grid: &[f64], cfg: &QuadConfig) -> Result<EtaReport> {
    let log_total = eta_total_log(spec)?;
    let mut rs = grid.to_vec();
    rs.sort_by(f64::total_cmp);
    let ratios = eta_ball_ratios(spec, &rs, cfg)?;
    Ok(EtaReport {
        spec: spec.clone(),
        log_total,
        ratio_curve: rs.into_iter().zip(ratios).collect(),
    })
}

/// ln of the family's stated upper bound on E[η(ℝⁿ)].
pub fn eta_total_bound_log(spec: &KernelSpec) -> Result<f64> {
    let n = spec.nf();
    let h = 0.5 * n;
    Ok(match spec.family {
        Family::LaguerreGauss => -h * LN_2 + crate::kernels::laguerre_mass_factor_log(spec.n, spec.m_param()?),
        Family::PowerExponential => -n / spec.nu_param()? * LN_2,
        Family::BesselType => {
            let s = spec.sigma_param()?;
            lgamma(s + 1.0) + lgamma(0.5 * s + h + 1.0) - lgamma(0.5 * s + 1.0) - lgamma(s + h + 1.0)
        }
        Family::WhittleMatern | Family::Cauchy => -h * LN_2,
        Family::IndicatorSpectral => spec.c_param()?.ln(),
    })
}
