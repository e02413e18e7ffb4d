//! Kernel families: parameters, existence bounds, radial and spectral evaluation,
//! Palm kernel and closed-form squared norms.
//!
//! Fourier convention: K̂(ξ) = ∫ K(x) e^{−2πi x·ξ} dx.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special_functions::{
    bessel_k, laguerre_log, lgamma, ln_ball_volume, ln_beta, ln_binomial, ln_gamma_ratio, normalized_bessel_j_log,
    signed_log_sum, LogValue,
};

const LN_PI: f64 = 1.144_729_885_849_400_2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    LaguerreGauss,
    PowerExponential,
    BesselType,
    WhittleMatern,
    Cauchy,
    IndicatorSpectral,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::LaguerreGauss,
        Family::PowerExponential,
        Family::BesselType,
        Family::WhittleMatern,
        Family::Cauchy,
        Family::IndicatorSpectral,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::LaguerreGauss => "LaguerreGauss",
            Family::PowerExponential => "PowerExponential",
            Family::BesselType => "BesselType",
            Family::WhittleMatern => "WhittleMatern",
            Family::Cauchy => "Cauchy",
            Family::IndicatorSpectral => "IndicatorSpectral",
        }
    }

    /// Parses both the JSON tag (`laguerre_gauss`) and the display name.
    pub fn parse(s: &str) -> Option<Family> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Family::ALL.into_iter().find(|f| f.name().to_ascii_lowercase() == key)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaRule {
    #[default]
    Fixed,
    /// α_n = α·n^{1/ν−1/2} for PowerExponential, α_n = α·√n for Cauchy.
    Scaled,
}

fn is_fixed(rule: &AlphaRule) -> bool {
    *rule == AlphaRule::Fixed
}

/// One kernel family instance in dimension `n` with intensity e^{nρ}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelSpec {
    pub family: Family,
    pub n: u32,
    #[serde(default)]
    pub rho: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "is_fixed")]
    pub alpha_rule: AlphaRule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
}

impl KernelSpec {
    fn bare(family: Family, n: u32, rho: f64) -> Self {
        KernelSpec {
            family,
            n,
            rho,
            m: None,
            alpha: None,
            alpha_rule: AlphaRule::Fixed,
            nu: None,
            sigma: None,
            c: None,
        }
    }

    pub fn laguerre_gauss(n: u32, rho: f64, m: u32, alpha: f64) -> Self {
        KernelSpec {
            m: Some(m),
            alpha: Some(alpha),
            ..Self::bare(Family::LaguerreGauss, n, rho)
        }
    }

    pub fn power_exponential(n: u32, rho: f64, nu: f64, alpha: f64, rule: AlphaRule) -> Self {
        KernelSpec {
            nu: Some(nu),
            alpha: Some(alpha),
            alpha_rule: rule,
            ..Self::bare(Family::PowerExponential, n, rho)
        }
    }

    pub fn bessel_type(n: u32, rho: f64, sigma: f64, alpha: f64) -> Self {
        KernelSpec {
            sigma: Some(sigma),
            alpha: Some(alpha),
            ..Self::bare(Family::BesselType, n, rho)
        }
    }

    pub fn whittle_matern(n: u32, rho: f64, nu: f64, alpha: f64) -> Self {
        KernelSpec {
            nu: Some(nu),
            alpha: Some(alpha),
            ..Self::bare(Family::WhittleMatern, n, rho)
        }
    }

    pub fn cauchy(n: u32, rho: f64, nu: f64, alpha: f64, rule: AlphaRule) -> Self {
        KernelSpec {
            nu: Some(nu),
            alpha: Some(alpha),
            alpha_rule: rule,
            ..Self::bare(Family::Cauchy, n, rho)
        }
    }

    pub fn indicator_spectral(n: u32, rho: f64, c: f64) -> Self {
        KernelSpec {
            c: Some(c),
            ..Self::bare(Family::IndicatorSpectral, n, rho)
        }
    }

    /// Same parameters in another dimension.
    pub fn with_n(&self, n: u32) -> Self {
        KernelSpec { n, ..self.clone() }
    }

    pub fn nf(&self) -> f64 {
        f64::from(self.n)
    }

    fn missing(&self, field: &str) -> Error {
        Error::InvalidSpec(Violation {
            constraint: format!("{} requires field `{field}`", self.family),
            value: f64::NAN,
            limit: f64::NAN,
        })
    }

    pub fn m_param(&self) -> Result<u32> {
        self.m.ok_or_else(|| self.missing("m"))
    }

    pub fn alpha_param(&self) -> Result<f64> {
        self.alpha.ok_or_else(|| self.missing("alpha"))
    }

    pub fn nu_param(&self) -> Result<f64> {
        self.nu.ok_or_else(|| self.missing("nu"))
    }

    pub fn sigma_param(&self) -> Result<f64> {
        self.sigma.ok_or_else(|| self.missing("sigma"))
    }

    pub fn c_param(&self) -> Result<f64> {
        self.c.ok_or_else(|| self.missing("c"))
    }
}

/// A failed existence or positivity constraint.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub constraint: String,
    pub value: f64,
    pub limit: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_nan() {
            write!(f, "{}", self.constraint)
        } else {
            write!(
                f,
                "{}: value {} vs limit {} (excess {:.6e})",
                self.constraint,
                self.value,
                self.limit,
                self.value - self.limit
            )
        }
    }
}

/// Outcome of a successful validation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Validation {
    /// α_n, or c for IndicatorSpectral.
    pub effective_scale: f64,
    pub bound: f64,
    pub notes: Vec<String>,
}

/// log of the intensity e^{nρ}.
pub fn intensity_log(spec: &KernelSpec) -> f64 {
    spec.nf() * spec.rho
}

/// α_n after applying the alpha rule (α itself for fixed-rule families).
pub fn effective_scale(spec: &KernelSpec) -> Result<f64> {
    let alpha = spec.alpha_param()?;
    let n = spec.nf();
    Ok(match (spec.family, spec.alpha_rule) {
        (Family::PowerExponential, AlphaRule::Scaled) => alpha * n.powf(1.0 / spec.nu_param()? - 0.5),
        (Family::Cauchy, AlphaRule::Scaled) => alpha * n.sqrt(),
        _ => alpha,
    })
}

/// n-uniform sufficient bound e^{−ρ}(mπ)^{−1/2} for LaguerreGauss.
pub fn laguerre_uniform_bound(rho: f64, m: u32) -> f64 {
    (-rho).exp() / (f64::from(m) * PI).sqrt()
}

/// Strict upper bound on the effective scale at this exact n (on c for IndicatorSpectral).
pub fn max_param(spec: &KernelSpec) -> Result<f64> {
    let n = spec.nf();
    let h = 0.5 * n;
    let rho = spec.rho;
    Ok(match spec.family {
        Family::LaguerreGauss => {
            let m = spec.m_param()?;
            let ln_c = ln_binomial(f64::from(m) - 1.0 + h, m - 1);
            laguerre_uniform_bound(rho, m) * (ln_c / n).exp()
        }
        Family::PowerExponential => {
            let nu = spec.nu_param()?;
            ((lgamma(n / nu + 1.0) - lgamma(h + 1.0)) / n + 0.5 * LN_PI - rho).exp()
        }
        Family::BesselType => {
            let s = spec.sigma_param()?;
            (0.5 * (s + n).ln() + (lgamma(0.5 * s + 1.0) - lgamma(0.5 * (s + n) + 1.0)) / n
                - rho
                - 0.5 * (2.0 * PI).ln())
            .exp()
        }
        Family::WhittleMatern => {
            let nu = spec.nu_param()?;
            (-ln_gamma_ratio(nu, h) / n - LN_2 - 0.5 * LN_PI - rho).exp()
        }
        Family::Cauchy => {
            let nu = spec.nu_param()?;
            (ln_gamma_ratio(nu, h) / n - 0.5 * LN_PI - rho).exp()
        }
        Family::IndicatorSpectral => 1.0,
    })
}

fn positive(name: &str, v: Option<f64>, family: Family) -> std::result::Result<f64, Violation> {
    match v {
        None => Err(Violation {
            constraint: format!("{family} requires field `{name}`"),
            value: f64::NAN,
            limit: f64::NAN,
        }),
        Some(x) if x > 0.0 && x.is_finite() => Ok(x),
        Some(x) => Err(Violation {
            constraint: format!("`{name}` must be positive and finite"),
            value: x,
            limit: 0.0,
        }),
    }
}

/// Checks positivity constraints and the strict existence bound.
pub fn validate(spec: &KernelSpec) -> std::result::Result<Validation, Violation> {
    let fam = spec.family;
    if spec.n == 0 {
        return Err(Violation {
            constraint: "dimension n must be at least 1".into(),
            value: 0.0,
            limit: 1.0,
        });
    }
    if !spec.rho.is_finite() {
        return Err(Violation {
            constraint: "rho must be finite".into(),
            value: spec.rho,
            limit: f64::NAN,
        });
    }
    let mut notes = Vec::new();
    match fam {
        Family::LaguerreGauss => {
            match spec.m {
                Some(m) if m >= 1 => {}
                Some(m) => {
                    return Err(Violation {
                        constraint: "`m` must be at least 1".into(),
                        value: f64::from(m),
                        limit: 1.0,
                    })
                }
                None => {
                    return Err(Violation {
                        constraint: format!("{fam} requires field `m`"),
                        value: f64::NAN,
                        limit: f64::NAN,
                    })
                }
            }
            positive("alpha", spec.alpha, fam)?;
        }
        Family::PowerExponential | Family::WhittleMatern | Family::Cauchy => {
            positive("nu", spec.nu, fam)?;
            positive("alpha", spec.alpha, fam)?;
        }
        Family::BesselType => {
            match spec.sigma {
                Some(s) if s >= 0.0 && s.is_finite() => {
                    if s == 0.0 {
                        notes.push(
                            "sigma = 0 lies outside the sigma > 0 hypothesis of the Bessel-type results".to_string(),
                        );
                    }
                }
                Some(s) => {
                    return Err(Violation {
                        constraint: "`sigma` must be non-negative and finite".into(),
                        value: s,
                        limit: 0.0,
                    })
                }
                None => {
                    return Err(Violation {
                        constraint: format!("{fam} requires field `sigma`"),
                        value: f64::NAN,
                        limit: f64::NAN,
                    })
                }
            }
            positive("alpha", spec.alpha, fam)?;
        }
        Family::IndicatorSpectral => {
            let c = positive("c", spec.c, fam)?;
            if c >= 1.0 {
                return Err(Violation {
                    constraint: "spectrum must stay below 1 (c < 1)".into(),
                    value: c,
                    limit: 1.0,
                });
            }
            return Ok(Validation {
                effective_scale: c,
                bound: 1.0,
                notes,
            });
        }
    }
    let scale = effective_scale(spec).map_err(|e| Violation {
        constraint: e.to_string(),
        value: f64::NAN,
        limit: f64::NAN,
    })?;
    let bound = max_param(spec).map_err(|e| Violation {
        constraint: e.to_string(),
        value: f64::NAN,
        limit: f64::NAN,
    })?;
    if !(scale < bound) {
        let what = if spec.alpha_rule == AlphaRule::Scaled {
            "scaled alpha_n"
        } else {
            "alpha"
        };
        return Err(Violation {
            constraint: format!("{what} must be below the existence bound at n = {}", spec.n),
            value: scale,
            limit: bound,
        });
    }
    Ok(Validation {
        effective_scale: scale,
        bound,
        notes,
    })
}

/// ln r_n where Vol(B_n(r_n)) = e^{nρ}.
pub fn indicator_radius_log(spec: &KernelSpec) -> f64 {
    let n = spec.nf();
    (n * spec.rho - ln_ball_volume(spec.n, 1.0)) / n
}

fn unsupported(spec: &KernelSpec, operation: &'static str, hint: Option<&'static str>) -> Error {
    Error::Unsupported {
        family: spec.family,
        operation,
        hint,
    }
}

const PE_POSITION_HINT: &str =
    "no closed-form position kernel unless nu = 2; use the exact moments (moments command) instead";

/// Signed log of K_n(x) at |x| = r.
pub fn kernel_radial(spec: &KernelSpec, r: f64) -> Result<LogValue> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("radius must be non-negative, got {r}")));
    }
    let n = spec.nf();
    let base = intensity_log(spec);
    match spec.family {
        Family::LaguerreGauss => {
            let m = spec.m_param()?;
            let alpha = spec.alpha_param()?;
            let t = r * r / (f64::from(m) * alpha * alpha);
            let ln_c = ln_binomial(f64::from(m) - 1.0 + 0.5 * n, m - 1);
            let poly = laguerre_log(m - 1, 0.5 * n, t);
            Ok(poly * LogValue::from_log(base - ln_c - t))
        }
        Family::PowerExponential => {
            if spec.nu_param()? != 2.0 {
                return Err(unsupported(
                    spec,
                    "position-space kernel evaluation",
                    Some(PE_POSITION_HINT),
                ));
            }
            let a = effective_scale(spec)?;
            Ok(LogValue::from_log(base - PI * PI * r * r / (a * a)))
        }
        Family::BesselType => {
            let s = spec.sigma_param()?;
            let alpha = spec.alpha_param()?;
            let order = 0.5 * (s + n);
            let y = 2.0 * (r / alpha) * order.sqrt();
            Ok(normalized_bessel_j_log(order, y)? * LogValue::from_log(base))
        }
        Family::WhittleMatern => {
            let nu = spec.nu_param()?;
            let alpha = spec.alpha_param()?;
            let x = r / alpha;
            if x == 0.0 {
                return Ok(LogValue::from_log(base));
            }
            let k = bessel_k(nu, x)?;
            Ok(LogValue::from_log(
                base + (1.0 - nu) * LN_2 - lgamma(nu) + nu * x.ln() + k.log_magnitude,
            ))
        }
        Family::Cauchy => {
            let nu = spec.nu_param()?;
            let a = effective_scale(spec)?;
            let q = r / a;
            Ok(LogValue::from_log(base - (nu + 0.5 * n) * (q * q).ln_1p()))
        }
        Family::IndicatorSpectral => {
            // Inverse transform of √c on the ball of volume e^{nρ}; K(0) = √c·e^{nρ}.
            let c = spec.c_param()?;
            let rn = indicator_radius_log(spec).exp();
            let y = 2.0 * PI * rn * r;
            Ok(normalized_bessel_j_log(0.5 * n, y)? * LogValue::from_log(base + 0.5 * c.ln()))
        }
    }
}

/// Radial Fourier transform K̂_n at frequency radius `xi`.
pub fn spectral_radial(spec: &KernelSpec, xi: f64) -> Result<f64> {
    if !(xi >= 0.0) {
        return Err(Error::Domain(format!("frequency must be non-negative, got {xi}")));
    }
    let n = spec.nf();
    let base = intensity_log(spec);
    match spec.family {
        Family::PowerExponential => {
            let nu = spec.nu_param()?;
            let a = effective_scale(spec)?;
            let ln_peak = base + lgamma(0.5 * n + 1.0) + n * a.ln() - 0.5 * n * LN_PI - lgamma(n / nu + 1.0);
            Ok((ln_peak - (a * xi).powf(nu)).exp())
        }
        Family::IndicatorSpectral => {
            let c = spec.c_param()?;
            let rn = indicator_radius_log(spec).exp();
            Ok(if xi <= rn { c.sqrt() } else { 0.0 })
        }
        Family::LaguerreGauss if spec.m_param()? == 1 => {
            let alpha = spec.alpha_param()?;
            Ok((base + 0.5 * n * (PI * alpha * alpha).ln() - PI * PI * alpha * alpha * xi * xi).exp())
        }
        _ => Err(unsupported(
            spec,
            "spectral evaluation",
            Some("available for PowerExponential, IndicatorSpectral and LaguerreGauss with m = 1"),
        )),
    }
}

/// Signed log of the reduced Palm kernel K(x−y) − K(x)K(y)/K(0).
pub fn palm_kernel(spec: &KernelSpec, x_dist: f64, y_dist: f64, xy_dist: f64) -> Result<LogValue> {
    let slack = 1e-12 * (x_dist + y_dist) + f64::MIN_POSITIVE;
    if !(x_dist >= 0.0 && y_dist >= 0.0 && xy_dist >= 0.0)
        || xy_dist > x_dist + y_dist + slack
        || xy_dist < (x_dist - y_dist).abs() - slack
    {
        return Err(Error::InfeasibleDistances {
            x: x_dist,
            y: y_dist,
            xy: xy_dist,
        });
    }
    let k0 = kernel_radial(spec, 0.0)?;
    let kxy = kernel_radial(spec, xy_dist)?;
    let kx = kernel_radial(spec, x_dist)?;
    let ky = kernel_radial(spec, y_dist)?;
    let correction = if x_dist == 0.0 {
        ky
    } else if y_dist == 0.0 {
        kx
    } else {
        kx * ky / k0
    };
    Ok(kxy.sub(correction))
}

/// Σ_{k,j} a_k a_j (−1)^{k+j} 2^{−(k+j)} Γ(n/2+k+j+p/2)/Γ(n/2) with
/// a_k = C(m−1+n/2, m−1−k)/k!: the Laguerre–Gauss |x|^p moment sum.
pub(crate) fn laguerre_moment_sum(n: u32, m: u32, p: f64) -> LogValue {
    let h = 0.5 * f64::from(n);
    let top = f64::from(m) - 1.0 + h;
    let ln_a: Vec<f64> = (0..m)
        .map(|k| ln_binomial(top, m - 1 - k) - lgamma(f64::from(k) + 1.0))
        .collect();
    let mut terms = Vec::with_capacity((m * m) as usize);
    for k in 0..m {
        for j in 0..m {
            let s = f64::from(k + j);
            let ln_t = ln_a[k as usize] + ln_a[j as usize] - s * LN_2 + ln_gamma_ratio(h, s + 0.5 * p);
            terms.push(LogValue::new(if (k + j) % 2 == 0 { 1 } else { -1 }, ln_t));
        }
    }
    let (sum, cancellation) = signed_log_sum(&terms);
    let half_p = 0.5 * p;
    if cancellation > 1e6 && half_p.fract() == 0.0 {
        return laguerre_moment_sum_exact(n, m, half_p as u32);
    }
    sum
}

fn ln_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().unwrap_or(f64::NAN).abs().ln();
    }
    let shift = bits - 64;
    let top: BigInt = x.abs() >> shift;
    top.to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * LN_2
}

/// Exact rational evaluation of the same sum for even moment orders.
fn laguerre_moment_sum_exact(n: u32, m: u32, half_p: u32) -> LogValue {
    let h = BigRational::new(BigInt::from(n), BigInt::from(2));
    let factorial = |k: u32| -> BigInt { (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)) };
    let poch = |q: u32| -> BigRational {
        (0..q).fold(BigRational::one(), |acc, i| {
            acc * (h.clone() + BigRational::from_integer(i.into()))
        })
    };
    let a: Vec<BigRational> = (0..m)
        .map(|k| {
            let num = (k + 1..m).fold(BigRational::one(), |acc, i| {
                acc * (h.clone() + BigRational::from_integer(i.into()))
            });
            num / BigRational::from_integer(factorial(m - 1 - k) * factorial(k))
        })
        .collect();
    let mut sum = BigRational::zero();
    for k in 0..m {
        for j in 0..m {
            let mut t = a[k as usize].clone() * a[j as usize].clone() * poch(k + j + half_p)
                / BigRational::from_integer(BigInt::one() << (k + j));
            if (k + j) % 2 == 1 {
                t = -t;
            }
            sum += t;
        }
    }
    if sum.is_zero() {
        return LogValue::ZERO;
    }
    let sign = if sum.is_negative() { -1 } else { 1 };
    LogValue::new(sign, ln_bigint(sum.numer()) - ln_bigint(sum.denom()))
}

/// ln f(n, m): the Laguerre double sum divided by C(m−1+n/2, m−1), so that
/// E[η(ℝⁿ)] < 2^{−n/2} f(n, m).
pub fn laguerre_mass_factor_log(n: u32, m: u32) -> f64 {
    let top = f64::from(m) - 1.0 + 0.5 * f64::from(n);
    laguerre_moment_sum(n, m, 0.0).log_magnitude - ln_binomial(top, m - 1)
}

/// ln ‖K_n‖₂² from the family's closed form.
pub fn squared_norm_log(spec: &KernelSpec) -> Result<f64> {
    let n = spec.nf();
    let h = 0.5 * n;
    let two_base = 2.0 * intensity_log(spec);
    Ok(match spec.family {
        Family::LaguerreGauss => {
            let m = spec.m_param()?;
            let alpha = spec.alpha_param()?;
            let ln_c = ln_binomial(f64::from(m) - 1.0 + h, m - 1);
            let s = laguerre_moment_sum(spec.n, m, 0.0);
            two_base - 2.0 * ln_c + n * alpha.ln() + h * (0.5 * f64::from(m) * PI).ln() + s.log_magnitude
        }
        Family::PowerExponential => {
            let nu = spec.nu_param()?;
            let a = effective_scale(spec)?;
            two_base - n / nu * LN_2 + n * a.ln() + lgamma(h + 1.0) - h * LN_PI - lgamma(n / nu + 1.0)
        }
        Family::BesselType => {
            let s = spec.sigma_param()?;
            let alpha = spec.alpha_param()?;
            let top = 0.5 * s + h + 1.0;
            two_base + h * (2.0 * PI).ln() + n * alpha.ln() - h * (s + n).ln() + lgamma(s + 1.0)
                - 2.0 * lgamma(0.5 * s + 1.0)
                + lgamma(top)
                - ln_gamma_ratio(top, 0.5 * s)
        }
        Family::WhittleMatern => {
            let nu = spec.nu_param()?;
            let alpha = spec.alpha_param()?;
            two_base + h * LN_PI + n * LN_2 + n * alpha.ln() + 2.0 * ln_gamma_ratio(nu, h)
                - ln_gamma_ratio(h + 2.0 * nu, h)
        }
        Family::Cauchy => {
            let nu = spec.nu_param()?;
            let a = effective_scale(spec)?;
            two_base + h * LN_PI + n * a.ln() - lgamma(h) + ln_beta(h, 2.0 * nu + h)
        }
        Family::IndicatorSpectral => intensity_log(spec) + spec.c_param()?.ln(),
    })
}

/// One spec per family, valid for every n ≤ 600.
pub fn example_specs(n: u32) -> Vec<KernelSpec> {
    vec![
        KernelSpec::laguerre_gauss(n, 0.0, 1, 0.5),
        KernelSpec::power_exponential(n, 0.0, 3.0, 1.0, AlphaRule::Scaled),
        KernelSpec::bessel_type(n, 0.0, 2.0, 0.5),
        KernelSpec::whittle_matern(n, 0.0, 1.0, 0.02),
        KernelSpec::cauchy(n, 0.0, 1.0, 0.2, AlphaRule::Scaled),
        KernelSpec::indicator_spectral(n, 0.0, 0.5),
    ]
}
