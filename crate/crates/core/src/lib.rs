//! Riemann's ξ function in the critical strip, evaluated through series of
//! upper incomplete gamma functions, with independent reference paths
//! (classical ζ, a theta integral and a Cauchy contour) to check it against.
//!
//! Points are given either as `s = σ + it` or in the shifted variable
//! `z₀ = s − 1/2 = x₀ + it₀`. [`evaluate`] is the single place that converts
//! between the two.

// `!(x > 0.0)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod complex;
pub mod config;
pub mod contour;
pub mod error;
pub mod quad;
pub mod special;
pub mod strip;
pub mod zeta;

pub use complex::{cpow, CompensatedSum, Complex};
pub use config::EvalConfig;
pub use contour::{
    cosh_archetype, strip_continuation, tail_bound_T, xi_boundary, xi_via_contour, BoundaryCache, ContourEstimate,
    ContourXi, DecayBound, QuadratureWindow, XiContour, CERTIFIED_K, XI_STRIP_HALF_WIDTH,
};
pub use error::{Result, XiError};
pub use special::{
    crude_bound, gamma, j_max_estimate, ln_gamma, lower_inc_gamma, upper_inc_gamma, IncGammaParams, IncGammaResult,
};
pub use strip::{
    psi, psi_identity_check, psi_prime, real_form_coefficients, terms_needed, xi_critical_line, xi_real_form,
    xi_strip_point, xi_strip_series, xi_theta_form, Method, StripPoint, XiResult, XiSeriesTerm,
};
pub use zeta::{xi_classical, zeta, ZetaConfig};

/// Accuracy claimed for the classical path with the default [`ZetaConfig`].
pub const CLASSICAL_ERROR: f64 = 1e-12;

/// ξ(s) by the chosen method.
///
/// `incgamma` uses the critical-line series when σ = 1/2 and the strip series
/// otherwise; `realform` is only defined on the critical line. All methods
/// except `classical` require `|σ − 1/2| ≤ 1/2`.
pub fn evaluate(method: Method, s: Complex, cfg: &EvalConfig) -> Result<XiResult> {
    cfg.validate()?;
    if !s.is_finite() {
        return Err(XiError::Domain(format!("s = {s} is not finite")));
    }
    let z0 = s - 0.5;
    match method {
        Method::Classical => {
            let value = xi_classical(s, &ZetaConfig::default())?;
            Ok(XiResult {
                value,
                method,
                n_used: 0,
                term_diagnostics: Vec::new(),
                error_estimate: CLASSICAL_ERROR * value.abs().max(1.0),
            })
        }
        Method::IncGamma if z0.re == 0.0 => xi_critical_line(z0.im, cfg),
        Method::RealForm => {
            if z0.re != 0.0 {
                return Err(XiError::Domain(format!(
                    "realform is defined on σ = 1/2 only, got σ = {}",
                    s.re
                )));
            }
            xi_real_form(z0.im, cfg)
        }
        Method::IncGamma | Method::Strip => {
            let mut r = xi_strip_point(StripPoint::new(z0.re, z0.im)?, cfg)?;
            r.method = method;
            Ok(r)
        }
        Method::Theta => xi_theta_form(StripPoint::new(z0.re, z0.im)?, cfg),
        Method::Contour => {
            let p = StripPoint::new(z0.re, z0.im)?;
            let oracle = XiContour::new(ZetaConfig::default(), cfg.quad_step, cfg.epsilon).with_height(cfg.quad_t);
            let c = oracle.eval(p.z())?;
            Ok(XiResult {
                value: c.value,
                method,
                n_used: 0,
                term_diagnostics: Vec::new(),
                error_estimate: c.tail_bound + c.step_error,
            })
        }
    }
}
