use thiserror::Error;

use crate::kernels::{Family, Violation};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid kernel spec: {0}")]
    InvalidSpec(Violation),

    #[error("{family} does not support {operation}{}", hint.map(|h| format!("; {h}")).unwrap_or_default())]
    Unsupported {
        family: Family,
        operation: &'static str,
        hint: Option<&'static str>,
    },

    #[error("moment of order {k} diverges for {family}")]
    MomentDivergence { family: Family, k: u32 },

    #[error("quadrature did not converge (log estimate {log_estimate:.6e}, relative error bound {rel_error:.3e})")]
    NotConverged { log_estimate: f64, rel_error: f64 },

    #[error("integrand has infinite mass")]
    InfiniteMass,

    #[error("distances |x|={x}, |y|={y}, |x-y|={xy} violate the triangle inequality")]
    InfeasibleDistances { x: f64, y: f64, xy: f64 },

    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
