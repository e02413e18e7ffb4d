//! Experiment configuration: JSON file (or a previous output file) plus flag
//! overrides, resolved into one record that is embedded in every output.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use dpp_reach::asymptotics::RateQuantity;
use dpp_reach::quadrature::CURVE_TOL;
use dpp_reach::{AlphaRule, Family, KernelSpec};
use serde::{Deserialize, Serialize};

use crate::Failure;

pub const DEFAULT_GRID: &str = "0.05:0.6:12";
pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_TABLE_N: u32 = 100;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
#[allow(clippy::enum_variant_names)]
pub enum QuantityArg {
    EtaBall,
    EtaBallRatio,
    EtaBooleanRatio,
}

impl From<QuantityArg> for RateQuantity {
    fn from(q: QuantityArg) -> Self {
        match q {
            QuantityArg::EtaBall => RateQuantity::EtaBall,
            QuantityArg::EtaBallRatio => RateQuantity::EtaBallRatio,
            QuantityArg::EtaBooleanRatio => RateQuantity::EtaBooleanRatio,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Fixed,
    Scaled,
}

/// Everything that determines a command's output. The output path is not
/// part of it, so re-running from an embedded config reproduces the bytes.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<KernelSpec>,
    /// Dimension for `table` when no spec is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, rename = "R", skip_serializing_if = "Option::is_none")]
    pub big_r: Option<f64>,
    #[serde(default, rename = "R_grid", skip_serializing_if = "Option::is_none")]
    pub r_grid: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_list: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantity: Option<QuantityArg>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

/// Flags shared by all subcommands. Each one overrides the config file.
#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// Experiment config (JSON), or an earlier output file of this tool
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Kernel family: laguerre_gauss, power_exponential, bessel_type, whittle_matern, cauchy, indicator_spectral
    #[arg(long)]
    pub family: Option<String>,
    /// Dimension [table default: 100]
    #[arg(long)]
    pub n: Option<u32>,
    /// Intensity exponent, intensity = e^(n rho) [default: 0]
    #[arg(long, allow_negative_numbers = true)]
    pub rho: Option<f64>,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Laguerre-Gauss degree parameter
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    /// scaled: alpha_n = alpha n^(1/nu - 1/2) (power exponential) or alpha sqrt(n) (Cauchy)
    #[arg(long, value_enum)]
    pub alpha_rule: Option<RuleArg>,
    /// Radius on the sqrt(n) scale
    #[arg(long = "R", allow_negative_numbers = true)]
    pub big_r: Option<f64>,
    /// Grid lo:hi:steps, inclusive and evenly spaced [default: 0.05:0.6:12]
    #[arg(long = "R-grid", value_name = "LO:HI:STEPS")]
    pub r_grid: Option<String>,
    /// Comma-separated dimensions for empirical rates
    #[arg(long, value_delimiter = ',')]
    pub n_list: Option<Vec<u32>>,
    /// Comma-separated moment orders [default: 1,2]
    #[arg(long, value_delimiter = ',')]
    pub k: Option<Vec<u32>>,
    /// Rate quantity [default: eta_ball]
    #[arg(long, value_enum)]
    pub quantity: Option<QuantityArg>,
    /// Relative quadrature tolerance [default: 1e-8]
    #[arg(long)]
    pub tol: Option<f64>,
    /// Monte Carlo sample count [default: 10000]
    #[arg(long)]
    pub samples: Option<usize>,
    /// RNG seed [default: 1]
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output file; without it the machine output goes to stdout
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Output format [default: from the --out extension, else csv]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Extracts the config from a config file or from an earlier output.
pub fn parse_config_text(text: &str) -> Result<ExperimentConfig, Failure> {
    let bad = |e: serde_json::Error| Failure::Usage(format!("malformed config: {e}"));
    if text.starts_with("# ") {
        let line = text
            .lines()
            .find_map(|l| l.strip_prefix("# config="))
            .ok_or_else(|| Failure::Usage("CSV file carries no embedded config".into()))?;
        return serde_json::from_str(line).map_err(bad);
    }
    let value: serde_json::Value = serde_json::from_str(text).map_err(bad)?;
    match value {
        serde_json::Value::Object(ref map) if map.contains_key("result") && map.contains_key("config") => {
            serde_json::from_value(map["config"].clone()).map_err(bad)
        }
        v => serde_json::from_value(v).map_err(bad),
    }
}

fn load(path: &Path) -> Result<ExperimentConfig, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_config_text(&text)
}

fn bare(family: Family, n: u32) -> KernelSpec {
    KernelSpec {
        family,
        n,
        rho: 0.0,
        m: None,
        alpha: None,
        alpha_rule: AlphaRule::Fixed,
        nu: None,
        sigma: None,
        c: None,
    }
}

impl CommonArgs {
    /// Config file overlaid with flags. The kernel spec stays `None` when neither
    /// source names a family.
    pub fn resolve(&self) -> Result<ExperimentConfig, Failure> {
        let mut cfg = match &self.config {
            Some(p) => load(p)?,
            None => ExperimentConfig::default(),
        };
        cfg.spec = self.resolve_spec(cfg.spec.take())?;
        if cfg.spec.is_some() {
            cfg.n = None;
        } else if self.n.is_some() {
            cfg.n = self.n;
        }
        macro_rules! overlay {
            ($($field:ident),*) => { $(if self.$field.is_some() { cfg.$field = self.$field.clone(); })* };
        }
        overlay!(big_r, r_grid, n_list, k, quantity, tol, samples, seed);
        if let Some(f) = self.format {
            cfg.format = Some(f);
        } else if cfg.format.is_none() {
            let json = self
                .out
                .as_ref()
                .and_then(|p| p.extension())
                .is_some_and(|e| e.eq_ignore_ascii_case("json"));
            cfg.format = Some(if json { Format::Json } else { Format::Csv });
        }
        if cfg.tol.is_none() {
            cfg.tol = Some(CURVE_TOL);
        }
        Ok(cfg)
    }

    fn resolve_spec(&self, base: Option<KernelSpec>) -> Result<Option<KernelSpec>, Failure> {
        let family = match &self.family {
            Some(name) => Some(Family::parse(name).ok_or_else(|| Failure::Usage(format!("unknown family `{name}`")))?),
            None => None,
        };
        let mut spec = match (base, family) {
            (Some(s), Some(f)) if s.family != f => bare(f, s.n),
            (Some(s), _) => s,
            (None, Some(f)) => bare(f, 0),
            (None, None) => {
                let orphan = [self.rho, self.alpha, self.nu, self.sigma, self.c]
                    .iter()
                    .any(Option::is_some)
                    || self.m.is_some()
                    || self.alpha_rule.is_some();
                if orphan {
                    return Err(Failure::Usage("kernel parameters given without --family".into()));
                }
                return Ok(None);
            }
        };
        if let Some(n) = self.n {
            spec.n = n;
        }
        if spec.n == 0 {
            return Err(Failure::Usage("missing --n".into()));
        }
        if let Some(v) = self.rho {
            spec.rho = v;
        }
        if let Some(v) = self.m {
            spec.m = Some(v);
        }
        if let Some(v) = self.alpha {
            spec.alpha = Some(v);
        }
        if let Some(v) = self.nu {
            spec.nu = Some(v);
        }
        if let Some(v) = self.sigma {
            spec.sigma = Some(v);
        }
        if let Some(v) = self.c {
            spec.c = Some(v);
        }
        if let Some(r) = self.alpha_rule {
            spec.alpha_rule = match r {
                RuleArg::Fixed => AlphaRule::Fixed,
                RuleArg::Scaled => AlphaRule::Scaled,
            };
        }
        Ok(Some(spec))
    }
}

/// Parses `lo:hi:steps` into `steps` evenly spaced values.
pub fn parse_grid(text: &str) -> Result<Vec<f64>, Failure> {
    let bad = || Failure::Usage(format!("grid must be lo:hi:steps, got `{text}`"));
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let steps: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if steps == 0 || !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(bad());
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    let h = (hi - lo) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i + 1 == steps { hi } else { lo + h * i as f64 })
        .collect())
}
