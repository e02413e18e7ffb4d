//! Log-domain adaptive Gauss–Kronrod quadrature for non-negative integrands.
//!
//! Integrands are supplied as ln f(r). Each G7/K15 panel is evaluated after
//! shifting by its own maximum, so integrals like ∫ r^{n−1} e^{−r²} dr with n
//! in the thousands never overflow. A semi-infinite range is mapped to [0, 1)
//! through r = a + s·u/(1 − u), where s is the distance from a to the
//! integrand's mode plus a few widths.

use crate::error::{Error, Result};
use crate::special_functions::{log_sum_exp, LogValue};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Tolerance for cross-checks against closed forms.
pub const CHECK_TOL: f64 = 1e-10;
/// Tolerance for production curves.
pub const CURVE_TOL: f64 = 1e-8;

/// Tunables shared by every routine in this module.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadConfig {
    pub rel_tol: f64,
    /// Maximum bisection depth of a single panel.
    pub max_depth: u32,
    pub max_panels: usize,
    /// Node count of a [`RadialCdf`] grid.
    pub cdf_nodes: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: CHECK_TOL,
            max_depth: 60,
            max_panels: 400_000,
            cdf_nodes: 4096,
        }
    }
}

impl QuadConfig {
    pub fn with_tol(rel_tol: f64) -> Self {
        QuadConfig {
            rel_tol,
            ..Self::default()
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.rel_tol > 1e-14 && self.rel_tol < 1e-2) {
            return Err(Error::Domain(format!(
                "rel_tol must lie in (1e-14, 1e-2), got {}",
                self.rel_tol
            )));
        }
        Ok(())
    }
}

/// Shape of the integrand away from its peak.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Decay {
    /// Unimodal or nearly so.
    Smooth,
    /// Zeros roughly every `period`; panels start on that lattice.
    Oscillatory { period: f64 },
}

/// ln of a non-negative integrand on `[lo, hi]` (`hi` may be +∞).
///
/// `eval` returns −∞ at zeros of the integrand. NaN is reported as a numeric
/// failure by the integrators.
pub struct LogIntegrand<'a> {
    eval: Box<dyn Fn(f64) -> f64 + Sync + 'a>,
    pub lo: f64,
    pub hi: f64,
    pub decay: Decay,
}

impl<'a> LogIntegrand<'a> {
    pub fn new(lo: f64, hi: f64, eval: impl Fn(f64) -> f64 + Sync + 'a) -> Self {
        LogIntegrand {
            eval: Box::new(eval),
            lo,
            hi,
            decay: Decay::Smooth,
        }
    }

    pub fn oscillatory(mut self, period: f64) -> Self {
        self.decay = Decay::Oscillatory { period };
        self
    }

    pub fn eval(&self, r: f64) -> f64 {
        (self.eval)(r)
    }

    /// Same integrand times r^power (moment weights).
    pub fn weighted(&self, power: f64) -> LogIntegrand<'_> {
        LogIntegrand {
            eval: Box::new(move |r: f64| {
                let v = (self.eval)(r);
                if power == 0.0 {
                    v
                } else if r == 0.0 {
                    if power > 0.0 {
                        f64::NEG_INFINITY
                    } else {
                        f64::INFINITY
                    }
                } else {
                    v + power * r.ln()
                }
            }),
            lo: self.lo,
            hi: self.hi,
            decay: self.decay,
        }
    }
}

/// Location and width of the integrand's largest peak.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Peak {
    pub r: f64,
    pub width: f64,
    pub log_value: f64,
}

fn eval_finite(f: &LogIntegrand, r: f64) -> f64 {
    let v = f.eval(r);
    if v.is_nan() {
        f64::NEG_INFINITY
    } else {
        v
    }
}

fn golden_max(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if (b - a) <= 1e-15 * (a.abs() + b.abs()) + f64::MIN_POSITIVE {
            break;
        }
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN * (b - a);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        x1
    } else {
        x2
    }
}

/// Scans `[a, b]` for the largest value of the integrand, refines it by
/// golden-section search and measures where ln f has dropped by 1/2.
///
/// On a semi-infinite range, mass that keeps growing at r ~ 10^18 is reported
/// as [`Error::InfiniteMass`].
pub fn locate_peak(f: &LogIntegrand, a: f64, b: f64) -> Result<Peak> {
    let mut grid: Vec<f64> = Vec::new();
    if b.is_infinite() {
        let base = if a > 0.0 { a } else { 1.0 };
        grid.extend((-200..=240).map(|k| a + base * 2f64.powf(f64::from(k) / 4.0)));
    } else {
        let span = b - a;
        grid.extend((0..=200).rev().map(|k| a + span * 2f64.powf(-f64::from(k) / 4.0)));
        grid.extend((1..128).map(|k| a + span * f64::from(k) / 128.0));
        grid.sort_by(f64::total_cmp);
        grid.dedup();
    }
    let values: Vec<f64> = grid.iter().map(|&r| eval_finite(f, r)).collect();
    let Some((best, &peak_value)) = values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.is_finite() || **v == f64::INFINITY)
        .max_by(|x, y| x.1.total_cmp(y.1))
    else {
        let mid = if b.is_infinite() { a + 1.0 } else { 0.5 * (a + b) };
        return Ok(Peak {
            r: mid,
            width: if b.is_infinite() { 1.0 } else { 0.5 * (b - a) },
            log_value: f64::NEG_INFINITY,
        });
    };
    if peak_value == f64::INFINITY {
        return Err(Error::Numeric(format!("integrand is infinite at r = {}", grid[best])));
    }
    if b.is_infinite() {
        // mass per unit ln r must eventually fall; compare envelopes so that
        // zeros of an oscillating integrand do not matter
        let mass = |i: usize| values[i] + (grid[i] - a).ln();
        let len = grid.len();
        let envelope = |range: std::ops::Range<usize>| range.map(mass).fold(f64::NEG_INFINITY, f64::max);
        let late = envelope(len - 8..len);
        if late.is_finite() && late >= envelope(len - 16..len - 8) {
            return Err(Error::InfiniteMass);
        }
    }
    let left = if best == 0 { a } else { grid[best - 1] };
    let right = if best + 1 < grid.len() { grid[best + 1] } else { b };
    let g = |r: f64| eval_finite(f, r);
    let r = golden_max(&g, left, right);
    let log_value = g(r).max(peak_value);
    // distance at which ln f has dropped by 1/2 on either side
    let drop = |dir: f64, limit: f64| -> Option<f64> {
        let target = log_value - 0.5;
        let mut d = 1e-6 * (right - left).max(f64::MIN_POSITIVE);
        while g(r + dir * d) >= target {
            d *= 2.0;
            if d >= limit || !d.is_finite() {
                return None;
            }
        }
        let (mut lo, mut hi) = (0.5 * d, d);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if g(r + dir * mid) < target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(hi)
    };
    let width = match (drop(-1.0, r - a), drop(1.0, b - r)) {
        (Some(x), Some(y)) => x.max(y),
        (Some(x), None) | (None, Some(x)) => x,
        (None, None) => (right - left).max(f64::MIN_POSITIVE),
    };
    Ok(Peak { r, width, log_value })
}

#[derive(Clone, Copy, Debug)]
enum Map {
    Identity,
    SemiInfinite { a: f64, s: f64 },
}

impl Map {
    fn to_r(self, u: f64) -> f64 {
        match self {
            Map::Identity => u,
            Map::SemiInfinite { a, s } => a + s * u / (1.0 - u),
        }
    }

    fn to_u(self, r: f64) -> f64 {
        match self {
            Map::Identity => r,
            Map::SemiInfinite { a, s } => {
                if r.is_infinite() {
                    1.0
                } else {
                    (r - a) / (r - a + s)
                }
            }
        }
    }

    fn log_jacobian(self, u: f64) -> f64 {
        match self {
            Map::Identity => 0.0,
            Map::SemiInfinite { s, .. } => s.ln() - 2.0 * (1.0 - u).ln(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Panel {
    lo: f64,
    hi: f64,
    cell: usize,
    depth: u32,
    log_value: f64,
    log_error: f64,
}

fn gk15(f: &LogIntegrand, map: Map, lo: f64, hi: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let mut g = [f64::NEG_INFINITY; 15];
    for (i, slot) in g.iter_mut().enumerate() {
        let x = if i < 7 {
            center - half * XGK[i]
        } else if i == 7 {
            center
        } else {
            center + half * XGK[14 - i]
        };
        let r = map.to_r(x);
        if !r.is_finite() {
            continue;
        }
        let v = f.eval(r);
        if v.is_nan() {
            return Err(Error::Numeric(format!("integrand is NaN at r = {r}")));
        }
        *slot = v + map.log_jacobian(x);
    }
    let shift = g.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if shift == f64::NEG_INFINITY {
        return Ok((f64::NEG_INFINITY, f64::NEG_INFINITY));
    }
    if shift == f64::INFINITY {
        return Err(Error::Numeric(format!(
            "integrand is infinite on [{}, {}]",
            map.to_r(lo),
            map.to_r(hi)
        )));
    }
    let e = g.map(|v| (v - shift).exp());
    let mut kronrod = WGK[7] * e[7];
    let mut gauss = WG[3] * e[7];
    for j in 0..7 {
        let pair = e[j] + e[14 - j];
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    let value = shift + (kronrod * half).ln();
    let err = (kronrod - gauss).abs() * half;
    // floor at roundoff of the largest sample
    let err = err.max(f64::EPSILON * 50.0 * kronrod * half);
    Ok((value, shift + err.ln()))
}

/// Seeds and cuts for one adaptive run over `[a, b]`.
fn initial_points(f: &LogIntegrand, a: f64, b: f64, peak: &Peak) -> Vec<f64> {
    let mut points = vec![peak.r];
    for k in [0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0] {
        points.push(peak.r - k * peak.width);
        points.push(peak.r + k * peak.width);
    }
    if let Decay::Oscillatory { period } = f.decay {
        if period > 0.0 && b.is_finite() {
            let count = ((b - a) / period).ceil().min(100_000.0) as usize;
            points.extend((1..count).map(|i| a + i as f64 * period));
        }
    }
    points
}

/// Integrates e^{f} over the cells `[a, c₁], [c₁, c₂], …, [c_k, b]` and
/// returns ln of each cell's integral. Every cell is refined until its own
/// relative error estimate is below `cfg.rel_tol`, so tiny cells keep full
/// relative accuracy.
pub fn integrate_log_cells(f: &LogIntegrand, a: f64, b: f64, cuts: &[f64], cfg: &QuadConfig) -> Result<Vec<f64>> {
    cfg.check()?;
    if !(a >= 0.0 && a < b) || a.is_infinite() {
        return Err(Error::Domain(format!("need 0 ≤ a < b, got [{a}, {b}]")));
    }
    if cuts.windows(2).any(|w| !(w[0] < w[1])) || cuts.iter().any(|&c| !(c > a && c < b)) {
        return Err(Error::Domain("cuts must be increasing and inside (a, b)".into()));
    }
    let peak = locate_peak(f, a, b)?;
    let map = if b.is_infinite() {
        Map::SemiInfinite {
            a,
            s: (peak.r - a).max(0.0) + 4.0 * peak.width,
        }
    } else {
        Map::Identity
    };
    let (u_lo, u_hi) = (map.to_u(a), map.to_u(b));
    let cut_u: Vec<f64> = cuts.iter().map(|&c| map.to_u(c)).collect();
    let mut bounds: Vec<f64> = initial_points(f, a, b, &peak)
        .into_iter()
        .filter(|&r| r > a && r < b)
        .map(|r| map.to_u(r))
        .collect();
    bounds.extend((1..8).map(|i| u_lo + (u_hi - u_lo) * f64::from(i) / 8.0));
    bounds.extend_from_slice(&cut_u);
    bounds.push(u_lo);
    bounds.push(u_hi);
    bounds.retain(|&u| u >= u_lo && u <= u_hi);
    bounds.sort_by(f64::total_cmp);
    bounds.dedup_by(|x, y| (*x - *y).abs() <= 4.0 * f64::EPSILON * x.abs().max(y.abs()));
    let cell_of = |u: f64| cut_u.partition_point(|&c| c <= u);

    let mut panels = Vec::with_capacity(bounds.len());
    for w in bounds.windows(2) {
        let (v, e) = gk15(f, map, w[0], w[1])?;
        panels.push(Panel {
            lo: w[0],
            hi: w[1],
            cell: cell_of(0.5 * (w[0] + w[1])),
            depth: 0,
            log_value: v,
            log_error: e,
        });
    }
    let ncell = cuts.len() + 1;
    let ln_tol = cfg.rel_tol.ln();
    loop {
        let mut vals = vec![Vec::new(); ncell];
        let mut errs = vec![Vec::new(); ncell];
        for p in &panels {
            vals[p.cell].push(p.log_value);
            errs[p.cell].push(p.log_error);
        }
        let cell_val: Vec<f64> = vals.iter().map(|v| log_sum_exp(v)).collect();
        let cell_err: Vec<f64> = errs.iter().map(|v| log_sum_exp(v)).collect();
        let open: Vec<bool> = (0..ncell)
            .map(|c| cell_err[c] > f64::NEG_INFINITY && cell_err[c] > cell_val[c] + ln_tol)
            .collect();
        if !open.iter().any(|&o| o) {
            return Ok(cell_val);
        }
        let fail = |c: usize| Error::NotConverged {
            log_estimate: log_sum_exp(&cell_val),
            rel_error: (cell_err[c] - cell_val[c]).exp(),
        };
        if panels.len() > cfg.max_panels {
            let c = (0..ncell).find(|&c| open[c]).unwrap_or(0);
            return Err(fail(c));
        }
        let mut next = Vec::with_capacity(panels.len() + 16);
        for p in panels {
            let budget = cell_val[p.cell] + ln_tol - (vals[p.cell].len() as f64).ln();
            if !open[p.cell] || p.log_error <= budget {
                next.push(p);
                continue;
            }
            if p.depth >= cfg.max_depth {
                return Err(fail(p.cell));
            }
            let mid = 0.5 * (p.lo + p.hi);
            for (lo, hi) in [(p.lo, mid), (mid, p.hi)] {
                let (v, e) = gk15(f, map, lo, hi)?;
                next.push(Panel {
                    lo,
                    hi,
                    cell: p.cell,
                    depth: p.depth + 1,
                    log_value: v,
                    log_error: e,
                });
            }
        }
        panels = next;
    }
}

/// ln ∫ₐᵇ e^{f(r)} dr as a [`LogValue`] (`b` may be +∞).
pub fn integrate_log(f: &LogIntegrand, a: f64, b: f64, rel_tol: f64) -> Result<LogValue> {
    let cells = integrate_log_cells(f, a, b, &[], &QuadConfig::with_tol(rel_tol))?;
    Ok(LogValue::from_log(cells[0]))
}

/// Cumulative integral of a radial integrand on a fixed grid.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialCdf {
    pub nodes: Vec<f64>,
    /// ln ∫_{lo}^{node} e^{f}; the last entry includes the tail beyond the last node.
    pub log_mass: Vec<f64>,
    pub log_total: f64,
    cdf: Vec<f64>,
}

impl RadialCdf {
    /// Builds a CDF from nodes and cumulative log masses.
    pub fn from_parts(nodes: Vec<f64>, log_mass: Vec<f64>) -> Result<Self> {
        if nodes.len() < 2 || nodes.len() != log_mass.len() {
            return Err(Error::Domain("a CDF needs at least two nodes with masses".into()));
        }
        let log_total = *log_mass.last().unwrap_or(&f64::NEG_INFINITY);
        if !log_total.is_finite() {
            return Err(Error::Numeric("total mass is zero or infinite".into()));
        }
        let mut cdf: Vec<f64> = log_mass.iter().map(|m| (m - log_total).exp().min(1.0)).collect();
        for i in 1..cdf.len() {
            cdf[i] = cdf[i].max(cdf[i - 1]);
        }
        Ok(RadialCdf {
            nodes,
            log_mass,
            log_total,
            cdf,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.cdf
    }

    /// Normalized CDF at `r`, linear between nodes.
    pub fn cdf(&self, r: f64) -> f64 {
        let nodes = &self.nodes;
        if r <= nodes[0] {
            return 0.0;
        }
        if r >= nodes[nodes.len() - 1] {
            return 1.0;
        }
        let i = nodes.partition_point(|&x| x <= r);
        let (r0, r1) = (nodes[i - 1], nodes[i]);
        let t = (r - r0) / (r1 - r0);
        self.cdf[i - 1] + t * (self.cdf[i] - self.cdf[i - 1])
    }

    /// Smallest grid-interpolated radius with CDF ≥ `u`.
    pub fn inverse(&self, u: f64) -> f64 {
        let nodes = &self.nodes;
        let last = nodes.len() - 1;
        if u <= 0.0 {
            return nodes[0];
        }
        if u >= 1.0 {
            return nodes[last];
        }
        let i = self.cdf.partition_point(|&c| c < u);
        if i == 0 {
            return nodes[0];
        }
        if i > last {
            return nodes[last];
        }
        let (c0, c1) = (self.cdf[i - 1], self.cdf[i]);
        let t = (u - c0) / (c1 - c0);
        nodes[i - 1] + t * (nodes[i] - nodes[i - 1])
    }
}

/// Inverse of a [`RadialCdf`]; see [`RadialCdf::inverse`].
pub fn inverse_cdf(c: &RadialCdf, u: f64) -> f64 {
    c.inverse(u)
}

fn cdf_grid(f: &LogIntegrand, peak: &Peak, count: usize) -> Vec<f64> {
    let (lo, hi) = (f.lo, f.hi);
    let w = peak.width;
    let lin_lo = (peak.r - 12.0 * w).max(lo);
    let mut lin_hi = peak.r + 12.0 * w;
    if hi.is_finite() {
        lin_hi = lin_hi.min(hi);
    }
    let level = peak.log_value + w.ln() - 50.0;
    let local = |r: f64| eval_finite(f, r) + r.ln();
    let mut far = lin_hi;
    if hi.is_finite() {
        far = hi;
    } else {
        let mut step = 12.0 * w;
        for _ in 0..200 {
            if local(far) < level && local(far * 1.5) < level {
                break;
            }
            far += step;
            step *= 1.5;
        }
    }
    let mut near = lin_lo;
    let has_lower = lin_lo > lo;
    if has_lower {
        for _ in 0..400 {
            let probe = lo + 0.5 * (near - lo);
            if probe <= lo || local(near) < level {
                break;
            }
            near = probe;
        }
    }
    let upper_count = if far > lin_hi { count / 4 } else { 0 };
    let lower_count = if has_lower && near < lin_lo { count / 4 } else { 0 };
    let lin_count = count.saturating_sub(upper_count + lower_count + 1).max(2);

    let mut nodes = Vec::with_capacity(count);
    nodes.push(lo);
    if lower_count > 0 {
        // geometric in the distance from lo
        let (d0, d1) = (near - lo, lin_lo - lo);
        let ratio = (d1 / d0).ln();
        nodes.extend((0..lower_count).map(|i| lo + d0 * (ratio * i as f64 / lower_count as f64).exp()));
    }
    nodes.extend((0..lin_count).map(|i| lin_lo + (lin_hi - lin_lo) * i as f64 / (lin_count - 1) as f64));
    if upper_count > 0 {
        let ratio = (far / lin_hi).ln();
        nodes.extend((1..=upper_count).map(|i| lin_hi * (ratio * i as f64 / upper_count as f64).exp()));
    }
    nodes.sort_by(f64::total_cmp);
    nodes.dedup_by(|x, y| *x <= *y);
    nodes
}

/// Builds the cumulative distribution of e^{f} on `[f.lo, f.hi]` over
/// `cfg.cdf_nodes` nodes: a linear block of ±12 widths around the mode with
/// geometric blocks toward the lower end and into the tail. Mass beyond the
/// last node is lumped into it.
pub fn build_cdf(f: &LogIntegrand, cfg: &QuadConfig) -> Result<RadialCdf> {
    let peak = locate_peak(f, f.lo, f.hi)?;
    if peak.log_value == f64::NEG_INFINITY {
        return Err(Error::Numeric("integrand vanishes on its domain".into()));
    }
    let nodes = cdf_grid(f, &peak, cfg.cdf_nodes.max(8));
    let last = nodes.len() - 1;
    let (cuts, top) = if f.hi.is_finite() && nodes[last] >= f.hi {
        (&nodes[1..last], f.hi)
    } else {
        (&nodes[1..], f.hi)
    };
    let cells = integrate_log_cells(f, f.lo, top, cuts, cfg)?;
    let mut log_mass = Vec::with_capacity(nodes.len());
    let mut acc = f64::NEG_INFINITY;
    log_mass.push(acc);
    for (i, v) in cells.iter().enumerate() {
        acc = log_sum_exp(&[acc, *v]);
        if i < last {
            log_mass.push(acc);
        } else {
            log_mass[last] = acc;
        }
    }
    RadialCdf::from_parts(nodes, log_mass)
}
