use std::path::Path;

use dpp_reach::asymptotics::{
    nn_threshold, reach, reach_exceeds_nn, summary_table, whittle_matern_rms_scale, RateCurve, RateQuantity,
};
use dpp_reach::kernels::{example_specs, max_param, validate};
use dpp_reach::oracle::{empirical_rate, mc_ball_ratio, sample_radius};
use dpp_reach::quadrature::QuadConfig;
use dpp_reach::render::{fmt_f64, to_json, to_json_pretty};
use dpp_reach::repulsion::{eta_report, radial_moment_log};
use dpp_reach::{Family, KernelSpec};
use serde_json::{json, Value};

use crate::config::{
    parse_grid, ExperimentConfig, Format, QuantityArg, DEFAULT_GRID, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_TABLE_N,
};
use crate::{Command, Failure};

/// What a command produced. `status` is reported after the output is written.
struct Output {
    csv: String,
    result: Value,
    summary: String,
    status: Result<(), Failure>,
}

impl Output {
    fn ok(csv: String, result: Value, summary: String) -> Self {
        Output {
            csv,
            result,
            summary,
            status: Ok(()),
        }
    }
}

pub fn run(command: Command) -> Result<(), Failure> {
    let (name, args) = match command {
        Command::Check(a) => ("check", a),
        Command::Eta(a) => ("eta", a),
        Command::Reach(a) => ("reach", a),
        Command::Rate(a) => ("rate", a),
        Command::Table(a) => ("table", a),
        Command::Moments(a) => ("moments", a),
        Command::Sample(a) => ("sample", a),
    };
    let mut cfg = args.resolve()?;
    let output = match name {
        "check" => check(&cfg)?,
        "eta" => eta(&mut cfg)?,
        "reach" => reach_cmd(&cfg)?,
        "rate" => rate(&mut cfg)?,
        "table" => table(&mut cfg)?,
        "moments" => moments(&mut cfg)?,
        "sample" => sample(&mut cfg)?,
        _ => unreachable!("every subcommand is listed"),
    };
    emit(name, &cfg, &output, args.out.as_deref())?;
    output.status
}

fn emit(name: &str, cfg: &ExperimentConfig, output: &Output, out: Option<&Path>) -> Result<(), Failure> {
    let text = match cfg.format.unwrap_or_default() {
        Format::Csv => format!("# command={name}\n# config={}\n{}", to_json(cfg), output.csv),
        Format::Json => {
            let doc = json!({
                "command": name,
                "config": serde_json::to_value(cfg).expect("config is plain data"),
                "result": output.result,
            });
            format!("{}\n", to_json_pretty(&doc))
        }
    };
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            println!("{}", output.summary.trim_end());
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn require_spec(cfg: &ExperimentConfig) -> Result<&KernelSpec, Failure> {
    cfg.spec
        .as_ref()
        .ok_or_else(|| Failure::Usage("no kernel spec: pass --family and --n, or --config".into()))
}

fn quad(cfg: &ExperimentConfig) -> Result<QuadConfig, Failure> {
    let tol = cfg.tol.expect("resolve fills the tolerance");
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Failure::Usage(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    Ok(QuadConfig::with_tol(tol))
}

fn grid(cfg: &mut ExperimentConfig) -> Result<Vec<f64>, Failure> {
    let text = cfg.r_grid.get_or_insert_with(|| DEFAULT_GRID.to_string());
    parse_grid(text)
}

fn value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result types serialize")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt_f64(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

fn check(cfg: &ExperimentConfig) -> Result<Output, Failure> {
    let spec = require_spec(cfg)?;
    let limit = max_param(spec).ok();
    let header = "valid,effective_scale,bound,max_param,detail\n";
    Ok(match validate(spec) {
        Ok(v) => Output::ok(
            format!(
                "{header}true,{},{},{},{}\n",
                fmt_f64(v.effective_scale),
                fmt_f64(v.bound),
                opt_f64(limit),
                csv_field(&v.notes.join("; "))
            ),
            json!({ "valid": true, "validation": value(&v), "max_param": limit }),
            format!(
                "{} n={}: valid, scale {} within bound {}",
                spec.family, spec.n, v.effective_scale, v.bound
            ),
        ),
        Err(violation) => Output {
            csv: format!(
                "{header}false,,{},{},{}\n",
                fmt_f64(violation.limit),
                opt_f64(limit),
                csv_field(&violation.constraint)
            ),
            result: json!({ "valid": false, "violation": value(&violation), "max_param": limit }),
            summary: format!("{} n={}: invalid, {violation}", spec.family, spec.n),
            status: Err(Failure::InvalidSpec(format!("invalid kernel spec: {violation}"))),
        },
    })
}

fn eta(cfg: &mut ExperimentConfig) -> Result<Output, Failure> {
    let rs = grid(cfg)?;
    let q = quad(cfg)?;
    let spec = require_spec(cfg)?;
    let report = eta_report(spec, &rs, &q)?;
    let mut summary = format!("{} n={}: ln E[eta(R^n)] = {}\n", spec.family, spec.n, report.log_total);
    for (r, v) in &report.ratio_curve {
        summary.push_str(&format!("  R={r:<10} ratio={v:.6e}\n"));
    }
    Ok(Output::ok(report.to_csv(), value(&report), summary))
}

fn reach_cmd(cfg: &ExperimentConfig) -> Result<Output, Failure> {
    let spec = require_spec(cfg)?;
    let r_star = reach(spec)?;
    let threshold = nn_threshold(spec.rho);
    let certificate = match r_star {
        Some(_) => Some(reach_exceeds_nn(spec)?),
        None => None,
    };
    let rms = if spec.family == Family::WhittleMatern {
        Some(whittle_matern_rms_scale(spec)?)
    } else {
        None
    };
    let window = certificate.as_ref().and_then(|c| c.alpha_window);
    let csv = format!(
        "family,n,reach,threshold,exceeds,alpha_lo,alpha_hi,rms_scale\n{},{},{},{},{},{},{},{}\n",
        spec.family,
        spec.n,
        opt_f64(r_star),
        fmt_f64(threshold),
        certificate.as_ref().map(|c| c.exceeds.to_string()).unwrap_or_default(),
        opt_f64(window.map(|w| w.0)),
        opt_f64(window.map(|w| w.1)),
        opt_f64(rms),
    );
    let mut summary = match (r_star, &certificate) {
        (Some(r), Some(c)) => format!(
            "{}: R* = {r}, R~ = {threshold}, {} ({})",
            spec.family,
            if c.exceeds {
                "reach exceeds the threshold"
            } else {
                "reach does not exceed the threshold"
            },
            c.condition
        ),
        _ => format!(
            "{}: no concentration radius on the sqrt(n) scale; R~ = {threshold}",
            spec.family
        ),
    };
    if let Some(s) = rms {
        summary.push_str(&format!("\nrms |X|/sqrt(n) at n={}: {s}", spec.n));
    }
    let result = json!({
        "family": spec.family,
        "n": spec.n,
        "reach": r_star,
        "threshold": threshold,
        "certificate": certificate.as_ref().map(value),
        "rms_scale": rms,
    });
    Ok(Output::ok(csv, result, summary))
}

fn rate(cfg: &mut ExperimentConfig) -> Result<Output, Failure> {
    let rs = grid(cfg)?;
    let q = quad(cfg)?;
    let quantity: RateQuantity = (*cfg.quantity.get_or_insert(QuantityArg::EtaBall)).into();
    let spec = require_spec(cfg)?;
    if spec.family != Family::LaguerreGauss {
        return Err(Failure::Unsupported(format!(
            "rate curves have a closed form only for LaguerreGauss, not {}",
            spec.family
        )));
    }
    validate(spec).map_err(dpp_reach::Error::InvalidSpec)?;
    let (m, alpha) = (spec.m_param()?, spec.alpha_param()?);
    let mut curve = RateCurve::laguerre(quantity, &rs, m, alpha, spec.rho)?;
    if let Some(ns) = cfg.n_list.as_deref().filter(|ns| !ns.is_empty()) {
        for &r in &rs {
            curve.empirical.extend(empirical_rate(spec, r, ns, quantity, &q)?);
        }
    }
    let mut summary = format!("{} m={m} alpha={alpha} rho={}: {quantity:?}\n", spec.family, spec.rho);
    for (r, v) in &curve.analytic {
        summary.push_str(&format!("  R={r:<10} rate={v:.6e}\n"));
    }
    if !curve.empirical.is_empty() {
        summary.push_str(&format!("  plus {} finite-n rows\n", curve.empirical.len()));
    }
    Ok(Output::ok(curve.to_csv(), value(&curve), summary))
}

fn table(cfg: &mut ExperimentConfig) -> Result<Output, Failure> {
    let specs = match &cfg.spec {
        Some(s) => vec![s.clone()],
        None => example_specs(*cfg.n.get_or_insert(DEFAULT_TABLE_N)),
    };
    let t = summary_table(&specs)?;
    Ok(Output::ok(t.to_csv(), value(&t), t.to_markdown()))
}

fn moments(cfg: &mut ExperimentConfig) -> Result<Output, Failure> {
    let ks = cfg.k.get_or_insert_with(|| vec![1, 2]).clone();
    let spec = require_spec(cfg)?;
    let mut csv = String::from("k,log_moment,moment,scaled\n");
    let mut rows = Vec::new();
    let mut summary = format!("{} n={}\n", spec.family, spec.n);
    for k in ks {
        let log_m = radial_moment_log(spec, k)?;
        // (E|X|^k / n^{k/2})^{1/k}, comparable with R on the sqrt(n) scale
        let scaled = if k == 0 {
            f64::NAN
        } else {
            (log_m / f64::from(k) - 0.5 * spec.nf().ln()).exp()
        };
        csv.push_str(&format!(
            "{k},{},{},{}\n",
            fmt_f64(log_m),
            fmt_f64(log_m.exp()),
            fmt_f64(scaled)
        ));
        summary.push_str(&format!(
            "  E|X|^{k} = {:.10e}  (k-th root / sqrt(n) = {scaled:.6})\n",
            log_m.exp()
        ));
        rows.push(json!({ "k": k, "log_moment": log_m, "moment": log_m.exp(), "scaled": scaled }));
    }
    Ok(Output::ok(csv, Value::Array(rows), summary))
}

fn sample(cfg: &mut ExperimentConfig) -> Result<Output, Failure> {
    let count = *cfg.samples.get_or_insert(DEFAULT_SAMPLES);
    let seed = *cfg.seed.get_or_insert(DEFAULT_SEED);
    let spec = require_spec(cfg)?;
    let radii = sample_radius(spec, count, seed)?;
    let ball = match cfg.big_r {
        Some(r) => Some(mc_ball_ratio(spec, r, count, seed)?),
        None => None,
    };
    let mut csv = String::new();
    if let Some(b) = &ball {
        csv.push_str(&format!(
            "# ball_ratio={},std_error={}\n",
            fmt_f64(b.value),
            fmt_f64(b.std_error)
        ));
    }
    csv.push_str("radius\n");
    for r in &radii {
        csv.push_str(&fmt_f64(*r));
        csv.push('\n');
    }
    let mean_sq = radii.iter().map(|r| r * r).sum::<f64>() / radii.len() as f64;
    let mut summary = format!(
        "{} n={}: {count} radii (seed {seed}), rms |X|/sqrt(n) = {:.6}",
        spec.family,
        spec.n,
        (mean_sq / spec.nf()).sqrt()
    );
    if let (Some(b), Some(r)) = (&ball, cfg.big_r) {
        summary.push_str(&format!(
            "\nP(|X| < sqrt(n) {r}) = {:.6} +- {:.2e}",
            b.value, b.std_error
        ));
    }
    let result = json!({ "radii": radii, "ball_ratio": ball.as_ref().map(value) });
    Ok(Output::ok(csv, result, summary))
}
