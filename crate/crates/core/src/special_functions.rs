//! Scalar special functions that stay finite for arguments of order 10^3.
//!
//! Anything that can overflow is returned in log form. Gamma ratios are always
//! formed as differences of `ln_gamma`, never as quotients of raw Gamma values.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::ops::{Div, Mul, Neg};

use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// A real number stored as sign and natural log of its magnitude.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogValue {
    pub log_magnitude: f64,
    pub sign: i8,
}

impl LogValue {
    pub const ZERO: LogValue = LogValue {
        log_magnitude: f64::NEG_INFINITY,
        sign: 0,
    };
    pub const ONE: LogValue = LogValue {
        log_magnitude: 0.0,
        sign: 1,
    };

    /// Positive value with the given log.
    pub fn from_log(log_magnitude: f64) -> Self {
        if log_magnitude == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            LogValue { log_magnitude, sign: 1 }
        }
    }

    pub fn new(sign: i8, log_magnitude: f64) -> Self {
        if sign == 0 || log_magnitude == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            LogValue {
                log_magnitude,
                sign: sign.signum(),
            }
        }
    }

    pub fn from_f64(v: f64) -> Self {
        match v.partial_cmp(&0.0) {
            Some(Ordering::Greater) => LogValue::new(1, v.ln()),
            Some(Ordering::Less) => LogValue::new(-1, (-v).ln()),
            _ => Self::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn to_f64(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.log_magnitude.exp()
        }
    }

    /// Signed sum, exact zero when equal magnitudes of opposite sign meet.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: LogValue) -> LogValue {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        let (hi, lo) = if self.log_magnitude >= other.log_magnitude {
            (self, other)
        } else {
            (other, self)
        };
        let d = lo.log_magnitude - hi.log_magnitude;
        if hi.sign == lo.sign {
            LogValue::new(hi.sign, hi.log_magnitude + d.exp().ln_1p())
        } else if d == 0.0 {
            Self::ZERO
        } else {
            LogValue::new(hi.sign, hi.log_magnitude + (-d.exp_m1()).ln())
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: LogValue) -> LogValue {
        self.add(-other)
    }
}

impl Mul for LogValue {
    type Output = LogValue;
    fn mul(self, rhs: LogValue) -> LogValue {
        LogValue::new(self.sign * rhs.sign, self.log_magnitude + rhs.log_magnitude)
    }
}

impl Div for LogValue {
    type Output = LogValue;
    fn div(self, rhs: LogValue) -> LogValue {
        LogValue::new(self.sign * rhs.sign, self.log_magnitude - rhs.log_magnitude)
    }
}

impl Neg for LogValue {
    type Output = LogValue;
    fn neg(self) -> LogValue {
        LogValue::new(-self.sign, self.log_magnitude)
    }
}

/// ln Σ exp(v_i), returning −∞ for an empty or all −∞ input.
pub fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY || max.is_nan() {
        return max;
    }
    if max == f64::INFINITY {
        return f64::INFINITY;
    }
    max + values.iter().map(|v| (v - max).exp()).sum::<f64>().ln()
}

/// Sum of signed terms with compensated accumulation after a common shift.
/// Also returns the cancellation ratio Σ|t| / |Σ t|.
pub fn signed_log_sum(terms: &[LogValue]) -> (LogValue, f64) {
    let max = terms
        .iter()
        .filter(|t| !t.is_zero())
        .map(|t| t.log_magnitude)
        .fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return (LogValue::ZERO, 1.0);
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut abs_sum = 0.0f64;
    for t in terms.iter().filter(|t| !t.is_zero()) {
        let v = f64::from(t.sign) * (t.log_magnitude - max).exp();
        abs_sum += v.abs();
        let s = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - s) + v;
        } else {
            comp += (v - s) + sum;
        }
        sum = s;
    }
    let total = sum + comp;
    let ratio = if total == 0.0 {
        f64::INFINITY
    } else {
        abs_sum / total.abs()
    };
    (LogValue::from_f64(total).mul(LogValue::from_log(max)), ratio)
}

/// Remainder of the Stirling series for ln Γ(x), valid for x ≥ 10.
fn stirling_tail(x: f64) -> f64 {
    const C: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
        -3617.0 / 122_400.0,
    ];
    let x2 = 1.0 / (x * x);
    let mut acc = 0.0;
    for c in C.iter().rev() {
        acc = acc * x2 + c;
    }
    acc / x
}

fn lgamma_large(x: f64) -> f64 {
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + stirling_tail(x)
}

/// ln Γ(x) for x > 0 without domain checks; NaN outside the domain.
pub(crate) fn lgamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x == f64::INFINITY {
        return f64::INFINITY;
    }
    if x >= 10.0 {
        return lgamma_large(x);
    }
    let mut y = x;
    let mut prod = 1.0;
    while y < 10.0 {
        prod *= y;
        y += 1.0;
    }
    lgamma_large(y) - prod.ln()
}

/// Natural log of the Gamma function.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_nan() {
        return Err(Error::Domain(format!("ln_gamma needs x > 0, got {x}")));
    }
    Ok(lgamma(x))
}

/// ln Γ(x + d) − ln Γ(x) without forming either term when that loses digits.
pub fn ln_gamma_ratio(x: f64, d: f64) -> f64 {
    if d == 0.0 {
        return 0.0;
    }
    if d.fract() == 0.0 && d.abs() <= 64.0 && x > 0.0 && x + d > 0.0 {
        let steps = d.abs() as usize;
        let base = if d > 0.0 { x } else { x + d };
        let s: f64 = (0..steps).map(|i| (base + i as f64).ln()).sum();
        return if d > 0.0 { s } else { -s };
    }
    let y = x + d;
    if x >= 10.0 && y >= 10.0 {
        return (x - 0.5) * (d / x).ln_1p() + d * y.ln() - d + stirling_tail(y) - stirling_tail(x);
    }
    lgamma(y) - lgamma(x)
}

/// ln B(a, b).
pub fn ln_beta(a: f64, b: f64) -> f64 {
    if a >= b {
        lgamma(b) - ln_gamma_ratio(a, b)
    } else {
        lgamma(a) - ln_gamma_ratio(b, a)
    }
}

/// ln of the generalized binomial coefficient C(top, k) for top > k − 1.
pub fn ln_binomial(top: f64, k: u32) -> f64 {
    let k = f64::from(k);
    ln_gamma_ratio(top - k + 1.0, k) - lgamma(k + 1.0)
}

/// ln Vol(B_n(r)).
pub fn ln_ball_volume(n: u32, r: f64) -> f64 {
    let h = 0.5 * f64::from(n);
    h * LN_PI + f64::from(n) * r.ln() - lgamma(h + 1.0)
}

/// Generalized Laguerre polynomial L_m^β(x) by upward three-term recurrence.
pub fn laguerre(m: u32, beta: f64, x: f64) -> f64 {
    laguerre_log(m, beta, x).to_f64()
}

/// Same recurrence with periodic rescaling, so the result never overflows.
pub fn laguerre_log(m: u32, beta: f64, x: f64) -> LogValue {
    if m == 0 {
        return LogValue::ONE;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + beta - x;
    let mut log_scale = 0.0;
    for k in 1..m {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + beta - x) * cur - (k + beta) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
        let big = cur.abs().max(prev.abs());
        if big > 1e200 {
            cur /= big;
            prev /= big;
            log_scale += big.ln();
        }
    }
    LogValue::from_f64(cur).mul(LogValue::from_log(log_scale))
}

const BESSEL_EPS: f64 = 1e-16;
const BESSEL_FPMIN: f64 = 1e-300;

/// Power series for J_ν(x)·Γ(ν+1)(2/x)^ν.
fn normalized_j_series(nu: f64, x: f64) -> f64 {
    let z = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut comp = 0.0;
    for k in 1..10_000 {
        let k = f64::from(k);
        term *= z / (k * (nu + k));
        let s = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - s) + term;
        } else {
            comp += (term - s) + sum;
        }
        sum = s;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum + comp
}

fn use_series(nu: f64, x: f64) -> bool {
    x < 2.0 || 0.25 * x * x <= 0.5 * (nu + 1.0)
}

fn use_hankel(nu: f64, x: f64) -> bool {
    x >= 25.0_f64.max(nu * nu)
}

/// Oscillatory region ν ≤ x with x ≥ 25: Hankel at the fractional order, then
/// upward recurrence, which is stable while the order stays below x.
fn j_upward(nu: f64, x: f64) -> f64 {
    let steps = nu.floor();
    let mu = nu - steps;
    let mut lo = j_hankel(mu, x);
    if steps == 0.0 {
        return lo;
    }
    let mut hi = j_hankel(mu + 1.0, x);
    let mut order = mu + 1.0;
    while order < nu - 0.5 {
        let next = 2.0 * order / x * hi - lo;
        lo = hi;
        hi = next;
        order += 1.0;
    }
    hi
}

/// Hankel expansion for x ≥ max(25, ν²).
fn j_hankel(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut t = 1.0f64;
    let mut prev = f64::INFINITY;
    for k in 1..200u32 {
        let kk = f64::from(k);
        let odd = 2.0 * kk - 1.0;
        t *= (mu - odd * odd) / (kk * 8.0 * x);
        if t.abs() > prev {
            break;
        }
        match k % 4 {
            1 => q += t,
            2 => p -= t,
            3 => q -= t,
            _ => p += t,
        }
        prev = t.abs();
        if t.abs() < 1e-17 {
            break;
        }
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// J_ν(x) in log form via CF1, scaled downward recurrence and Steed's CF2.
fn j_steed_log(nu: f64, x: f64) -> Result<LogValue> {
    let nl = (nu - x + 1.5).floor().max(0.0) as usize;
    let mu = nu - nl as f64;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    let maxit = 20 * (x as usize) + 10_000;
    let mut isign = 1.0;
    let mut h = (nu * xi).max(BESSEL_FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..maxit {
        b += xi2;
        d = b - d;
        if d.abs() < BESSEL_FPMIN {
            d = BESSEL_FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < BESSEL_FPMIN {
            c = BESSEL_FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < BESSEL_EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numeric(format!(
            "bessel_j continued fraction did not converge (order {nu}, x {x})"
        )));
    }

    let mut rjl = isign;
    let mut rjpl = h * rjl;
    let mut fact = nu * xi;
    let mut log_scale = 0.0;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > 1e250 {
            rjl *= 1e-250;
            rjpl *= 1e-250;
            log_scale += 250.0 * std::f64::consts::LN_10;
        }
    }
    if rjl == 0.0 {
        rjl = BESSEL_EPS;
    }
    let f = rjpl / rjl;

    let a0 = 0.25 - mu * mu;
    let mut a = a0;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut converged = false;
    for i in 2..100_000u32 {
        a += 2.0 * f64::from(i - 1);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < BESSEL_FPMIN {
            dr = BESSEL_FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < BESSEL_FPMIN {
            cr = BESSEL_FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < BESSEL_EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numeric(format!(
            "bessel_j second continued fraction did not converge (order {nu}, x {x})"
        )));
    }
    let gam = (p - f) / q;
    let jmu = (w / ((p - f) * gam + q)).sqrt();
    let log_mag = jmu.ln() - rjl.abs().ln() - log_scale;
    Ok(LogValue::new(if isign > 0.0 { 1 } else { -1 }, log_mag))
}

fn check_bessel_args(order: f64, x: f64) -> Result<()> {
    if !(order >= 0.0) || !(x >= 0.0) || !order.is_finite() || !x.is_finite() {
        return Err(Error::Domain(format!(
            "bessel_j needs order >= 0 and x >= 0, got order {order}, x {x}"
        )));
    }
    Ok(())
}

/// J_ν(x)·Γ(ν+1)·(2/x)^ν in log form; equals 1 at x = 0.
pub fn normalized_bessel_j_log(order: f64, x: f64) -> Result<LogValue> {
    check_bessel_args(order, x)?;
    if use_series(order, x) {
        return Ok(LogValue::from_f64(normalized_j_series(order, x)));
    }
    let j = bessel_j_log(order, x)?;
    Ok(j.mul(LogValue::from_log(lgamma(order + 1.0) + order * (2.0 / x).ln())))
}

/// J_ν(x) in log form, finite even where the value underflows f64.
pub fn bessel_j_log(order: f64, x: f64) -> Result<LogValue> {
    check_bessel_args(order, x)?;
    if x == 0.0 {
        return Ok(if order == 0.0 { LogValue::ONE } else { LogValue::ZERO });
    }
    if use_series(order, x) {
        let s = LogValue::from_f64(normalized_j_series(order, x));
        return Ok(s.mul(LogValue::from_log(order * (0.5 * x).ln() - lgamma(order + 1.0))));
    }
    if use_hankel(order, x) {
        return Ok(LogValue::from_f64(j_hankel(order, x)));
    }
    if x >= 25.0 && order <= x {
        return Ok(LogValue::from_f64(j_upward(order, x)));
    }
    j_steed_log(order, x)
}

/// Bessel function of the first kind J_ν(x).
pub fn bessel_j(order: f64, x: f64) -> Result<f64> {
    Ok(bessel_j_log(order, x)?.to_f64())
}

fn ln_cosh(y: f64) -> f64 {
    let a = y.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

/// Modified Bessel function of the second kind K_ν(x) in log form.
///
/// Uses K_ν(x) = ∫_0^∞ exp(−x cosh t) cosh(νt) dt with the trapezoidal rule,
/// halving the step until the sum stops moving.
pub fn bessel_k(order: f64, x: f64) -> Result<LogValue> {
    if !(x > 0.0) || !x.is_finite() || !(order >= 0.0) || !order.is_finite() {
        return Err(Error::Domain(format!(
            "bessel_k needs order >= 0 and x > 0, got order {order}, x {x}"
        )));
    }
    // exp(−x cosh t) = exp(−x)·exp(−2x sinh²(t/2)); the split keeps the exponent exact near t = 0.
    let phi = |t: f64| {
        let s = (0.5 * t).sinh();
        -2.0 * x * s * s + ln_cosh(order * t)
    };
    let t_peak = (order / x).asinh();
    let peak = phi(t_peak).max(phi(0.0));
    let mut t_hi = t_peak + 1.0 / (x + order + 1.0).sqrt();
    while phi(t_hi) > peak - 60.0 {
        t_hi *= 1.5;
    }
    let g = |t: f64| (phi(t) - peak).exp();

    let mut panels = 16usize;
    let mut h = t_hi / panels as f64;
    let mut sum = 0.5 * g(0.0) + (1..panels).map(|j| g(j as f64 * h)).sum::<f64>();
    let mut estimate = h * sum;
    let mut stable = 0;
    for _ in 0..18 {
        let fresh: f64 = (0..panels).map(|j| g((j as f64 + 0.5) * h)).sum();
        sum += fresh;
        panels *= 2;
        h *= 0.5;
        let next = h * sum;
        if (next - estimate).abs() <= 1e-14 * next {
            stable += 1;
            if stable >= 2 {
                return Ok(LogValue::from_log(peak - x + next.ln()));
            }
        } else {
            stable = 0;
        }
        estimate = next;
    }
    Err(Error::Numeric(format!(
        "bessel_k quadrature did not settle (order {order}, x {x})"
    )))
}
