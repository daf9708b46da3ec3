//! Evaluation of `ζ`, Dirichlet L-functions, their logarithmic derivatives
//! and `log ζ`, plus zero tables.

mod dataset;
mod em;
mod logzeta;
mod rs;
mod rs_coeffs;

pub use dataset::{
    load_zeros, parse_zeros, write_zeros, zeros_path, zeta_zero_count_main, ZeroDataset, FIRST_ZETA_ZERO, ZEROS_ENV,
};
pub use em::{
    dirichlet_logderiv, dirichlet_value, l_logderiv, l_value, zeta_grid, zeta_logderiv, zeta_value,
    zeta_with_derivative,
};
pub use logzeta::{log_zeta_path, log_zeta_tracked, LogPath, ZERO_THRESHOLD};
pub use rs::{generate_zeros, gram_point, hardy_z, siegel_theta, z_euler_maclaurin, z_riemann_siegel};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest supported number of Bernoulli corrections.
pub const MAX_BERNOULLI_DEPTH: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EvalConfig {
    /// Target for the Euler–Maclaurin remainder estimate. Rounding in the
    /// phases `t log n` is not included and dominates once `|t| ≳ 10⁵`.
    pub target_abs_error: f64,
    /// Cap on the total number of direct terms.
    pub max_terms: u64,
    /// Number of Bernoulli correction terms.
    pub bernoulli_depth: usize,
    /// Floor on the number of direct terms per residue.
    pub min_terms: u64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self { target_abs_error: 1e-10, max_terms: 400_000_000, bernoulli_depth: 12, min_terms: 50 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_error > 0.0) {
            return Err(Error::DomainViolation(format!("targetAbsError = {} must be positive", self.target_abs_error)));
        }
        let d = self.bernoulli_depth;
        if d < 2 || d % 2 != 0 || d > MAX_BERNOULLI_DEPTH {
            return Err(Error::DomainViolation(format!(
                "bernoulliDepth = {d} must be even and in [2, {MAX_BERNOULLI_DEPTH}]"
            )));
        }
        Ok(())
    }
}
