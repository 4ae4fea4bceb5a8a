//! Browser bindings for the demo page in `www/`.

use riemann_xi::{evaluate, upper_inc_gamma, xi_critical_line, Complex, EvalConfig, IncGammaParams, Method};
use wasm_bindgen::prelude::*;

const MAX_SAMPLES: usize = 4000;

fn curve(t_from: f64, t_to: f64, samples: usize) -> Result<Vec<f64>, String> {
    if !(t_from.is_finite() && t_to.is_finite() && t_from < t_to) {
        return Err("need a finite range with from < to".into());
    }
    if !(2..=MAX_SAMPLES).contains(&samples) {
        return Err(format!("samples must be in 2..={MAX_SAMPLES}"));
    }
    let cfg = EvalConfig::default();
    let h = (t_to - t_from) / (samples - 1) as f64;
    let mut out = Vec::with_capacity(2 * samples);
    for i in 0..samples {
        let t = t_from + i as f64 * h;
        let v = xi_critical_line(t, &cfg).map(|r| r.value.re).unwrap_or(f64::NAN);
        out.push(t);
        out.push(v);
    }
    Ok(out)
}

fn point(sigma: f64, t: f64, method: &str) -> Result<Vec<f64>, String> {
    let method: Method = method.parse().map_err(|e: riemann_xi::XiError| e.to_string())?;
    let r = evaluate(method, Complex::new(sigma, t), &EvalConfig::default()).map_err(|e| e.to_string())?;
    Ok(vec![r.value.re, r.value.im, r.error_estimate, r.n_used as f64])
}

fn gamma_upper(beta: f64, k: f64, alpha: f64) -> Result<Vec<f64>, String> {
    let r = upper_inc_gamma(&IncGammaParams::new(Complex::new(beta, k), alpha)).map_err(|e| e.to_string())?;
    Ok(vec![r.value.re, r.value.im, r.terms_used as f64, r.remainder_bound])
}

/// Interleaved `[t0, ξ(1/2 + it0), t1, …]` on an even grid. Points where
/// the series fails come back as NaN.
#[wasm_bindgen(js_name = criticalCurve)]
pub fn critical_curve(t_from: f64, t_to: f64, samples: usize) -> Result<Vec<f64>, JsError> {
    curve(t_from, t_to, samples).map_err(|e| JsError::new(&e))
}

/// `[re, im, error_estimate, n_used]` of ξ(σ + it).
#[wasm_bindgen(js_name = xiAt)]
pub fn xi_at(sigma: f64, t: f64, method: &str) -> Result<Vec<f64>, JsError> {
    point(sigma, t, method).map_err(|e| JsError::new(&e))
}

/// `[re, im, terms_used, remainder_bound]` of Γ(β + 1 + ik, α).
#[wasm_bindgen(js_name = upperGamma)]
pub fn upper_gamma(beta: f64, k: f64, alpha: f64) -> Result<Vec<f64>, JsError> {
    gamma_upper(beta, k, alpha).map_err(|e| JsError::new(&e))
}
