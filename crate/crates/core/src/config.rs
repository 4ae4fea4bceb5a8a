use crate::error::{Result, XiError};

/// Smallest tolerance that still means something in binary64.
pub const EPSILON_FLOOR: f64 = 1e-13;

/// Precision and truncation knobs shared by every evaluation path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalConfig {
    /// Target absolute accuracy of a ξ value.
    pub epsilon: f64,
    /// Largest n summed in the incomplete gamma series for ξ.
    pub n_max: u32,
    /// Term cap for each incomplete gamma series.
    pub m_cap: usize,
    /// Half-height of the contour window; derived from the decay bound when unset.
    pub quad_t: Option<f64>,
    /// Sample spacing along the contour.
    pub quad_step: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            epsilon: 1e-9,
            n_max: 8,
            m_cap: 400,
            quad_t: None,
            quad_step: 0.01,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon >= EPSILON_FLOOR) || !self.epsilon.is_finite() {
            return Err(XiError::domain(format!(
                "epsilon must be at least {EPSILON_FLOOR:e}, got {}",
                self.epsilon
            )));
        }
        if self.n_max < 1 {
            return Err(XiError::domain("n_max must be at least 1"));
        }
        if self.m_cap < 1 {
            return Err(XiError::domain("m_cap must be at least 1"));
        }
        if !(self.quad_step > 0.0) || !self.quad_step.is_finite() {
            return Err(XiError::domain("quad_step must be positive"));
        }
        if let Some(t) = self.quad_t {
            if !(t > 0.0) || !t.is_finite() {
                return Err(XiError::domain("quad_T must be positive"));
            }
        }
        Ok(())
    }

    /// Tolerance handed to each incomplete gamma series.
    pub fn series_epsilon(&self) -> f64 {
        (self.epsilon * 1e-3).max(1e-15)
    }
}
