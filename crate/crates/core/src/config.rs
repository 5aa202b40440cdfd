use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and budgets for every series and quadrature in the crate.
///
/// The value is immutable once built; pass it by reference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_terms: usize,
    pub quad_rel_tol: f64,
    pub quad_max_subdivisions: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: 1e-12,
            abs_tol: 1e-14,
            max_terms: 500,
            quad_rel_tol: 1e-10,
            quad_max_subdivisions: 2000,
        }
    }
}

impl EvalConfig {
    /// Checks the invariants: positive tolerances, `max_terms >= 8`,
    /// `quad_max_subdivisions >= 16`.
    pub fn validate(&self) -> Result<()> {
        let tols = [
            ("rel_tol", self.rel_tol),
            ("abs_tol", self.abs_tol),
            ("quad_rel_tol", self.quad_rel_tol),
        ];
        for (name, v) in tols {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        if self.max_terms < 8 {
            return Err(Error::Config(format!(
                "max_terms must be at least 8, got {}",
                self.max_terms
            )));
        }
        if self.quad_max_subdivisions < 16 {
            return Err(Error::Config(format!(
                "quad_max_subdivisions must be at least 16, got {}",
                self.quad_max_subdivisions
            )));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn with_quad_rel_tol(mut self, quad_rel_tol: f64) -> Self {
        self.quad_rel_tol = quad_rel_tol;
        self
    }

    pub fn with_quad_max_subdivisions(mut self, n: usize) -> Self {
        self.quad_max_subdivisions = n;
        self
    }

    /// Series stopping threshold for a partial sum of magnitude `scale`.
    pub(crate) fn series_tol(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale.abs())
    }

    /// Quadrature acceptance threshold for an integral of magnitude `scale`.
    pub(crate) fn quad_tol(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.quad_rel_tol * scale.abs())
    }
}
