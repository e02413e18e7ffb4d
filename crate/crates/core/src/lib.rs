//! Reach of repulsion for stationary isotropic determinantal point processes.
//!
//! Every family is described by a [`KernelSpec`] with intensity e^{nρ} in
//! dimension n. The repulsion vector X_n has density K_n²/‖K_n‖², and the
//! functions here compute its total mass, ball probabilities, moments and
//! exponential rates on the √n scale.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod kernels;
pub mod oracle;
pub mod quadrature;
pub mod render;
pub mod repulsion;
pub mod special_functions;

pub use error::{Error, Result};
pub use kernels::{AlphaRule, Family, KernelSpec, Validation, Violation};
pub use special_functions::LogValue;
