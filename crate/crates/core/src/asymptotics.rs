//! Closed-form limits on the √n scale: the reach R*, the nearest-neighbor
//! threshold R̃, Laguerre–Gauss rate functions and the summary table.

use std::f64::consts::{E, LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{validate, AlphaRule, Family, KernelSpec};
use crate::render::fmt_f64;
use crate::repulsion::{eta_total_bound_log, eta_total_log};

const LN_2PIE: f64 = 2.837_877_066_409_345_3;

fn scaled_only(spec: &KernelSpec) -> Result<()> {
    if spec.alpha_rule != AlphaRule::Scaled {
        return Err(Error::Unsupported {
            family: spec.family,
            operation: "reach under the fixed alpha rule",
            hint: Some("R* is stated for alpha_rule = scaled"),
        });
    }
    Ok(())
}

/// R* for the family, or `None` where there is no concentration radius on
/// the √n scale (BesselType, IndicatorSpectral).
///
/// For WhittleMatern this is the stated value α/2, which the exact second
/// moment does not reproduce; see [`whittle_matern_rms_scale`].
pub fn reach(spec: &KernelSpec) -> Result<Option<f64>> {
    validate(spec).map_err(Error::InvalidSpec)?;
    Ok(match spec.family {
        Family::LaguerreGauss => Some(f64::from(spec.m_param()?).sqrt() * spec.alpha_param()? / 2.0),
        Family::PowerExponential => {
            scaled_only(spec)?;
            let nu = spec.nu_param()?;
            Some(spec.alpha_param()? * (2.0 * nu).powf(1.0 / nu) / (4.0 * PI))
        }
        Family::WhittleMatern => Some(spec.alpha_param()? / 2.0),
        Family::Cauchy => {
            scaled_only(spec)?;
            Some(spec.alpha_param()?)
        }
        Family::BesselType | Family::IndicatorSpectral => None,
    })
}

/// √(E|X_n|²/n) from the exact WhittleMatern second moment. It grows like √n
/// at fixed α, unlike the stated reach α/2.
pub fn whittle_matern_rms_scale(spec: &KernelSpec) -> Result<f64> {
    if spec.family != Family::WhittleMatern {
        return Err(Error::Domain("expected a WhittleMatern spec".into()));
    }
    let m2 = crate::repulsion::radial_moment_log(spec, 2)?;
    Ok((0.5 * (m2 - spec.nf().ln())).exp())
}

/// R̃ = (2πe)^{−1/2}e^{−ρ}.
pub fn nn_threshold(rho: f64) -> f64 {
    (-0.5 * LN_2PIE - rho).exp()
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
    }
    Ok(())
}

/// Rate function Λ*(x) = 2x²/(α²m) − 1/2 + ½ ln(α²m/(4x²)) of |X_n|/√n.
pub fn laguerre_rate(x: f64, m: u32, alpha: f64) -> Result<f64> {
    check_positive("x", x)?;
    check_positive("alpha", alpha)?;
    if m == 0 {
        return Err(Error::Domain("m must be at least 1".into()));
    }
    let s = alpha * alpha * f64::from(m);
    let t = 4.0 * x * x / s;
    // t/2 − 1/2 − ½ ln t, written to stay accurate near t = 1
    Ok(0.5 * ((t - 1.0) - (t - 1.0).ln_1p()))
}

fn laguerre_reach(m: u32, alpha: f64) -> f64 {
    f64::from(m).sqrt() * alpha / 2.0
}

/// lim −(1/n) ln E[η_n(B(√nR))] for LaguerreGauss.
pub fn laguerre_eta_rate(big_r: f64, m: u32, alpha: f64, rho: f64) -> Result<f64> {
    check_positive("R", big_r)?;
    check_positive("alpha", alpha)?;
    let mf = f64::from(m);
    Ok(if big_r < laguerre_reach(m, alpha) {
        -rho - 0.5 * LN_2PIE + 2.0 * big_r * big_r / (alpha * alpha * mf) - big_r.ln()
    } else {
        -rho - alpha.ln() - 0.5 * (mf * PI / 2.0).ln()
    })
}

/// lim −(1/n) ln P(|X_n| ≤ √nR) for LaguerreGauss: Λ*(R) below R*, 0 above.
pub fn laguerre_ratio_rate(big_r: f64, m: u32, alpha: f64) -> Result<f64> {
    check_positive("R", big_r)?;
    Ok(if big_r < laguerre_reach(m, alpha) {
        laguerre_rate(big_r, m, alpha)?
    } else {
        0.0
    })
}

/// lim −(1/n) ln(E[η(B(√nR))]/E[Φ(B(√nR))]) for LaguerreGauss.
pub fn boolean_rate(big_r: f64, m: u32, alpha: f64) -> Result<f64> {
    check_positive("R", big_r)?;
    check_positive("alpha", alpha)?;
    let mf = f64::from(m);
    Ok(if big_r < laguerre_reach(m, alpha) {
        2.0 * big_r * big_r / (alpha * alpha * mf)
    } else {
        0.5 + LN_2 - alpha.ln() - 0.5 * mf.ln() + big_r.ln()
    })
}

/// Which quantity a [`RateCurve`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RateQuantity {
    /// E[η(B(√nR))]
    EtaBall,
    /// E[η(B(√nR))]/E[η(ℝⁿ)]; its analytic limit is 0 past R*.
    EtaBallRatio,
    /// E[η(B(√nR))]/E[Φ(B(√nR))]
    EtaBooleanRatio,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalRate {
    pub n: u32,
    pub big_r: f64,
    pub rate: f64,
}

/// Analytic limit curve with an optional finite-n column.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateCurve {
    pub quantity: RateQuantity,
    pub analytic: Vec<(f64, f64)>,
    pub empirical: Vec<EmpiricalRate>,
}

impl RateCurve {
    /// Analytic Laguerre–Gauss curve over `grid`.
    pub fn laguerre(quantity: RateQuantity, grid: &[f64], m: u32, alpha: f64, rho: f64) -> Result<Self> {
        let analytic = grid
            .iter()
            .map(|&r| {
                let v = match quantity {
                    RateQuantity::EtaBall => laguerre_eta_rate(r, m, alpha, rho)?,
                    RateQuantity::EtaBallRatio => laguerre_ratio_rate(r, m, alpha)?,
                    RateQuantity::EtaBooleanRatio => boolean_rate(r, m, alpha)?,
                };
                Ok((r, v))
            })
            .collect::<Result<_>>()?;
        Ok(RateCurve {
            quantity,
            analytic,
            empirical: Vec::new(),
        })
    }

    /// Long format: one row per analytic point, then one per empirical point.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("R,n,rate,kind\n");
        for (r, v) in &self.analytic {
            out.push_str(&format!("{},,{},analytic\n", fmt_f64(*r), fmt_f64(*v)));
        }
        for e in &self.empirical {
            out.push_str(&format!("{},{},{},empirical\n", fmt_f64(e.big_r), e.n, fmt_f64(e.rate)));
        }
        out
    }

    pub fn to_json(&self) -> String {
        crate::render::to_json(self)
    }
}

/// Whether R* > R̃, with the parameter window that decides it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReachCertificate {
    pub exceeds: bool,
    pub reach: f64,
    pub threshold: f64,
    /// Open interval for α on which the reach passes R̃, when the family has one.
    pub alpha_window: Option<(f64, f64)>,
    pub condition: String,
}

pub fn reach_exceeds_nn(spec: &KernelSpec) -> Result<ReachCertificate> {
    let Some(r_star) = reach(spec)? else {
        return Err(Error::Unsupported {
            family: spec.family,
            operation: "reach comparison",
            hint: Some("the family has no finite reach on the sqrt(n) scale"),
        });
    };
    let rho = spec.rho;
    let threshold = nn_threshold(rho);
    let alpha = spec.alpha_param()?;
    Ok(match spec.family {
        Family::LaguerreGauss => {
            let root = (f64::from(spec.m_param()?) * PI).sqrt() * rho.exp();
            let window = ((2.0 / E).sqrt() / root, 1.0 / root);
            ReachCertificate {
                exceeds: alpha > window.0 && alpha < window.1,
                reach: r_star,
                threshold,
                alpha_window: Some(window),
                condition: "(2/e)^(1/2) < e^rho sqrt(m pi) alpha < 1".into(),
            }
        }
        Family::PowerExponential => {
            let nu = spec.nu_param()?;
            let lo = 4.0 * PI / ((2.0 * nu).powf(1.0 / nu) * rho.exp() * (2.0 * PI * E).sqrt());
            let hi = (2.0 * PI * E).sqrt() / (rho.exp() * (nu * E).powf(1.0 / nu));
            ReachCertificate {
                exceeds: alpha > lo && alpha < hi,
                reach: r_star,
                threshold,
                alpha_window: Some((lo, hi)),
                condition: "4 pi/((2 nu)^(1/nu) e^rho sqrt(2 pi e)) < alpha < sqrt(2 pi e)/(e^rho (nu e)^(1/nu))"
                    .into(),
            }
        }
        Family::WhittleMatern => ReachCertificate {
            exceeds: false,
            reach: r_star,
            threshold,
            alpha_window: None,
            condition: "never: the existence bound keeps alpha/2 below the threshold".into(),
        },
        Family::Cauchy => ReachCertificate {
            exceeds: false,
            reach: r_star,
            threshold,
            alpha_window: None,
            condition: "never: the existence bound keeps alpha below the threshold".into(),
        },
        Family::BesselType | Family::IndicatorSpectral => unreachable!("reach() returned None"),
    })
}

/// One row of the per-family summary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub family: Family,
    pub n: u32,
    pub eta_total: f64,
    pub eta_bound: String,
    pub eta_bound_value: f64,
    pub reach: Option<f64>,
    pub reach_formula: String,
    pub rate_type: String,
    pub reach_past_nn: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryTable {
    pub rows: Vec<SummaryRow>,
}

fn summary_row(spec: &KernelSpec) -> Result<SummaryRow> {
    let eta_total = eta_total_log(spec)?.exp();
    let eta_bound_value = eta_total_bound_log(spec)?.exp();
    let reach_value = match spec.family {
        Family::PowerExponential | Family::Cauchy if spec.alpha_rule == AlphaRule::Fixed => None,
        _ => reach(spec)?,
    };
    let (bound, formula, rate, past) = match spec.family {
        Family::LaguerreGauss => (
            "2^(-n/2) f(n,m), f = O(n^(m-1))",
            "sqrt(m) alpha/2",
            "LDP",
            "(2/e)^(1/2) < e^rho sqrt(m pi) alpha < 1",
        ),
        Family::PowerExponential => (
            "2^(-n/nu)",
            "alpha (2 nu)^(1/nu)/(4 pi)",
            "Chebychev",
            "2/(2^(1/nu) e) < e^rho nu^(1/nu) alpha/sqrt(2 pi e) < e^(-1/nu)",
        ),
        Family::BesselType => ("O(n^(-sigma/2))", "N/A", "N/A", "N/A"),
        Family::WhittleMatern => ("2^(-n/2)", "alpha/2", "Log-concave", "N/A"),
        Family::Cauchy => ("2^(-n/2)", "alpha", "Chebychev", "N/A"),
        Family::IndicatorSpectral => ("= c", "N/A", "N/A", "N/A"),
    };
    Ok(SummaryRow {
        family: spec.family,
        n: spec.n,
        eta_total,
        eta_bound: bound.into(),
        eta_bound_value,
        reach: reach_value,
        reach_formula: formula.into(),
        rate_type: rate.into(),
        reach_past_nn: past.into(),
    })
}

/// One row per spec, in input order.
pub fn summary_table(specs: &[KernelSpec]) -> Result<SummaryTable> {
    Ok(SummaryTable {
        rows: specs.iter().map(summary_row).collect::<Result<_>>()?,
    })
}

impl SummaryTable {
    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| family | n | E[eta] | bound | bound value | R* | R* formula | rate type | R* > R~ when |\n\
             |---|---|---|---|---|---|---|---|---|\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "| {} | {} | {:.6e} | {} | {:.6e} | {} | {} | {} | {} |\n",
                r.family.name(),
                r.n,
                r.eta_total,
                r.eta_bound,
                r.eta_bound_value,
                r.reach.map_or("N/A".to_string(), |v| format!("{v:.6}")),
                r.reach_formula,
                r.rate_type,
                r.reach_past_nn
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        let mut out =
            String::from("family,n,eta_total,eta_bound,eta_bound_value,reach,reach_formula,rate_type,reach_past_nn\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.family.name(),
                r.n,
                fmt_f64(r.eta_total),
                quote(&r.eta_bound),
                fmt_f64(r.eta_bound_value),
                r.reach.map(fmt_f64).unwrap_or_default(),
                quote(&r.reach_formula),
                quote(&r.rate_type),
                quote(&r.reach_past_nn)
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        crate::render::to_json(self)
    }
}
