#![allow(dead_code)]

pub mod reference;

/// Relative difference with an absolute floor.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}
