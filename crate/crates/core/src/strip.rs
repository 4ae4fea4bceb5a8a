//! ξ inside the critical strip from incomplete gamma series.
//!
//! Points are given in the z-plane, `z₀ = x₀ + it₀ = s − 1/2`. On the
//! critical line
//!
//! ```text
//! ξ(it₀) = 2 Σₙ { 15πn²e^{−πn²}/(25/4 + t₀²)
//!                − c_n Γ(9/4 + it₀/2, πn²) − conj(c_n Γ(9/4 + it₀/2, πn²)) },
//! c_n = (1 − 2it₀)(πn²)^{−it₀/2} / ((5 + 2it₀) π^{1/4} √n),
//! ```
//!
//! and off it the two incomplete gamma terms carry `±z₀/2` in place of
//! `±it₀/2`. The sum over n is cut where the bound `2π²n⁴e^{−πn²}` on the
//! incomplete gamma values falls below ε/10.

use std::f64::consts::PI;

use crate::complex::{cpow, CompensatedSum, Complex};
use crate::config::EvalConfig;
use crate::error::{Result, XiError};
use crate::quad::adaptive_simpson;
use crate::special::{crude_bound, upper_inc_gamma, IncGammaParams, IncGammaResult};

/// Real part of the incomplete gamma exponent on the critical line.
const BETA_CENTER: f64 = 1.25;

/// Integration window length for the real-form λ-integrals.
const REAL_FORM_WINDOW: f64 = 45.0;

/// Truncation threshold for the theta series and its integration range.
const THETA_CUTOFF: f64 = 1e-18;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripPoint {
    pub x0: f64,
    pub t0: f64,
}

impl StripPoint {
    /// A point with `|x0| ≤ 1/2`.
    pub fn new(x0: f64, t0: f64) -> Result<Self> {
        if !x0.is_finite() || !t0.is_finite() {
            return Err(XiError::domain("strip point must be finite"));
        }
        if x0.abs() > 0.5 {
            return Err(XiError::domain(format!(
                "|x0| = {} is outside the strip |x0| ≤ 1/2 (σ = {})",
                x0.abs(),
                x0 + 0.5
            )));
        }
        Ok(StripPoint { x0, t0 })
    }

    pub fn critical(t0: f64) -> Result<Self> {
        StripPoint::new(0.0, t0)
    }

    pub fn z(&self) -> Complex {
        Complex::new(self.x0, self.t0)
    }

    pub fn s(&self) -> Complex {
        self.z() + 0.5
    }

    pub fn neg(&self) -> Self {
        StripPoint {
            x0: -self.x0,
            t0: -self.t0,
        }
    }

    pub fn conj(&self) -> Self {
        StripPoint {
            x0: self.x0,
            t0: -self.t0,
        }
    }
}

/// The three summands of the n-th series term; the term itself is
/// `theta_term − upper_term − conj_term`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XiSeriesTerm {
    pub n: u32,
    pub theta_term: Complex,
    pub upper_term: Complex,
    pub conj_term: Complex,
}

impl XiSeriesTerm {
    pub fn total(&self) -> Complex {
        self.theta_term - self.upper_term - self.conj_term
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Incomplete gamma series on the critical line.
    IncGamma,
    /// Real trigonometric form with λ-quadrature.
    RealForm,
    /// Incomplete gamma series anywhere in the strip.
    Strip,
    /// Theta-function integral form.
    Theta,
    /// s(s−1)/2 · Γ(s/2) π^{−s/2} ζ(s).
    Classical,
    /// Cauchy integral over the lines Re z = ±3/2.
    Contour,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::IncGamma,
        Method::RealForm,
        Method::Strip,
        Method::Theta,
        Method::Classical,
        Method::Contour,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::IncGamma => "incgamma",
            Method::RealForm => "realform",
            Method::Strip => "strip",
            Method::Theta => "theta",
            Method::Classical => "classical",
            Method::Contour => "contour",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = XiError;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| XiError::domain(format!("unknown method '{s}'")))
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct XiResult {
    pub value: Complex,
    pub method: Method,
    pub n_used: u32,
    pub term_diagnostics: Vec<XiSeriesTerm>,
    pub error_estimate: f64,
}

/// Number of n-terms to keep: stop once `crude_bound(5/4, n) < ε/10`.
pub fn terms_needed(cfg: &EvalConfig) -> u32 {
    let mut n = 1;
    while n < cfg.n_max && crude_bound(BETA_CENTER, n + 1) >= cfg.epsilon / 10.0 {
        n += 1;
    }
    n
}

fn inv_norm(n: u32) -> f64 {
    1.0 / (PI.powf(0.25) * (n as f64).sqrt())
}

fn theta_numerator(n: u32) -> f64 {
    let a = PI * (n as f64).powi(2);
    15.0 * a * (-a).exp()
}

fn upper(z: Complex, alpha: f64, cfg: &EvalConfig) -> Result<IncGammaResult> {
    let p = IncGammaParams::new(z, alpha)
        .with_epsilon(cfg.series_epsilon())
        .with_m_cap(cfg.m_cap);
    let r = upper_inc_gamma(&p)?;
    if !r.converged {
        return Err(XiError::no_convergence(
            "incomplete gamma series",
            format!(
                "Γ({}, {alpha}) after {} terms, remainder bound {:e}",
                z + 1.0,
                r.terms_used,
                r.remainder_bound
            ),
        ));
    }
    Ok(r)
}

/// Bound on the dropped terms n_used+1, n_used+2, … given the coefficient
/// magnitudes of the two incomplete gamma summands as functions of n.
fn truncation_tail(n_used: u32, theta_denominator: f64, coef: impl Fn(u32) -> f64) -> f64 {
    (n_used + 1..n_used + 8)
        .map(|m| theta_numerator(m) / theta_denominator + coef(m) * crude_bound(BETA_CENTER, m))
        .sum::<f64>()
        * 2.0
}

/// ξ on the critical line from the conjugate-pair incomplete gamma series.
pub fn xi_critical_line(t0: f64, cfg: &EvalConfig) -> Result<XiResult> {
    cfg.validate()?;
    if !t0.is_finite() {
        return Err(XiError::domain("t0 must be finite"));
    }
    let n_used = terms_needed(cfg);
    let it = Complex::new(0.0, t0);
    let ratio = (1.0 - it * 2.0) / (5.0 + it * 2.0);
    let theta_den = 6.25 + t0 * t0;

    let mut terms = Vec::with_capacity(n_used as usize);
    let mut total = CompensatedSum::new();
    let mut gamma_err = 0.0;
    let mut magnitude = 0.0;
    for n in 1..=n_used {
        let alpha = PI * (n as f64).powi(2);
        let coef = ratio * cpow(alpha, -it * 0.5)? * inv_norm(n);
        let g = upper(Complex::new(BETA_CENTER, 0.5 * t0), alpha, cfg)?;
        let upper_term = coef * g.value;
        let term = XiSeriesTerm {
            n,
            theta_term: Complex::real(theta_numerator(n) / theta_den),
            upper_term,
            conj_term: upper_term.conj(),
        };
        gamma_err += 2.0 * coef.abs() * g.remainder_bound;
        magnitude += term.theta_term.abs() + 2.0 * upper_term.abs();
        total.add(term.total());
        terms.push(term);
    }

    let sum = total.value() * 2.0;
    let coef_mag = 2.0 * ratio.abs();
    let tail = truncation_tail(n_used, theta_den, |m| coef_mag * inv_norm(m));
    let rounding = 2.0 * magnitude * 8.0 * f64::EPSILON;
    Ok(XiResult {
        value: Complex::real(sum.re),
        method: Method::IncGamma,
        n_used,
        term_diagnostics: terms,
        error_estimate: 2.0 * gamma_err + tail + rounding + sum.im.abs(),
    })
}

/// ξ on the critical line from the manifestly real form
/// `2 Σₙ { 60πn²e^{−πn²}/(25 + 4t₀²) − 2/(π^{1/4}√n) ∫_{πn²}^∞ e^{−λ}λ^{5/4}
/// [A cos(t₀β/2) + B sin(t₀β/2)] dλ }`, `β = ln(λ/πn²)`,
/// with each λ-integral done by adaptive Simpson on `[πn², πn² + 45]`.
pub fn xi_real_form(t0: f64, cfg: &EvalConfig) -> Result<XiResult> {
    cfg.validate()?;
    if !t0.is_finite() {
        return Err(XiError::domain("t0 must be finite"));
    }
    let n_used = terms_needed(cfg);
    let den = 25.0 + 4.0 * t0 * t0;
    let (a_coef, b_coef) = real_form_coefficients(t0);
    let tol = cfg.epsilon / 4.0;

    let mut terms = Vec::with_capacity(n_used as usize);
    let mut total = CompensatedSum::new();
    let mut quad_err = 0.0;
    for n in 1..=n_used {
        let alpha = PI * (n as f64).powi(2);
        let integrand = |lambda: f64| {
            let phase = 0.5 * t0 * (lambda / alpha).ln();
            let (s, c) = phase.sin_cos();
            Complex::real((-lambda).exp() * lambda.powf(1.25) * (a_coef * c + b_coef * s))
        };
        let q = adaptive_simpson(integrand, alpha, alpha + REAL_FORM_WINDOW, tol)?;
        let half = Complex::real(q.value.re * inv_norm(n));
        let term = XiSeriesTerm {
            n,
            theta_term: Complex::real(4.0 * theta_numerator(n) / den),
            upper_term: half,
            conj_term: half,
        };
        quad_err += 4.0 * inv_norm(n) * q.error;
        total.add(term.total());
        terms.push(term);
    }

    let sum = total.value().re * 2.0;
    let coef_mag = 2.0 * (a_coef * a_coef + b_coef * b_coef).sqrt();
    let tail = truncation_tail(n_used, den / 4.0, |m| coef_mag * inv_norm(m));
    Ok(XiResult {
        value: Complex::real(sum),
        method: Method::RealForm,
        n_used,
        term_diagnostics: terms,
        error_estimate: quad_err + tail + sum.abs() * 16.0 * f64::EPSILON,
    })
}

/// `(A, B) = ((5 − 4t₀²)/(25 + 4t₀²), 12t₀/(25 + 4t₀²))`.
pub fn real_form_coefficients(t0: f64) -> (f64, f64) {
    let den = 25.0 + 4.0 * t0 * t0;
    ((5.0 - 4.0 * t0 * t0) / den, 12.0 * t0 / den)
}

/// ξ anywhere in `|x0| ≤ 1/2` from the incomplete gamma series; complex in
/// general.
pub fn xi_strip_point(p: StripPoint, cfg: &EvalConfig) -> Result<XiResult> {
    cfg.validate()?;
    xi_strip_series(p, terms_needed(cfg), cfg)
}

/// [`xi_strip_point`] with an explicit number of n-terms.
pub fn xi_strip_series(p: StripPoint, n_used: u32, cfg: &EvalConfig) -> Result<XiResult> {
    if n_used < 1 {
        return Err(XiError::domain("at least one term is needed"));
    }
    let p = StripPoint::new(p.x0, p.t0)?;
    let z0 = p.z();
    let theta_den = 6.25 - z0 * z0;
    let left = (0.5 - z0) / (2.5 + z0);
    let right = (0.5 + z0) / (2.5 - z0);

    let mut terms = Vec::with_capacity(n_used as usize);
    let mut total = CompensatedSum::new();
    let mut gamma_err = 0.0;
    let mut magnitude = 0.0;
    for n in 1..=n_used {
        let alpha = PI * (n as f64).powi(2);
        let c1 = cpow(alpha, -z0 * 0.5)? * left * inv_norm(n);
        let c2 = cpow(alpha, z0 * 0.5)? * right * inv_norm(n);
        let g1 = upper(z0 * 0.5 + BETA_CENTER, alpha, cfg)?;
        let g2 = upper(BETA_CENTER - z0 * 0.5, alpha, cfg)?;
        let term = XiSeriesTerm {
            n,
            theta_term: Complex::real(theta_numerator(n)) / theta_den,
            upper_term: c1 * g1.value,
            conj_term: c2 * g2.value,
        };
        gamma_err += c1.abs() * g1.remainder_bound + c2.abs() * g2.remainder_bound;
        magnitude += term.theta_term.abs() + term.upper_term.abs() + term.conj_term.abs();
        total.add(term.total());
        terms.push(term);
    }

    let value = total.value() * 2.0;
    let (l, r) = (left.abs(), right.abs());
    let x0 = p.x0;
    let tail = truncation_tail(n_used, theta_den.abs(), |m| {
        let a = PI * (m as f64).powi(2);
        (l * a.powf(-0.5 * x0) + r * a.powf(0.5 * x0)) * inv_norm(m)
    });
    let rounding = 2.0 * magnitude * 8.0 * f64::EPSILON;
    Ok(XiResult {
        value,
        method: Method::Strip,
        n_used,
        term_diagnostics: terms,
        error_estimate: 2.0 * gamma_err + tail + rounding,
    })
}

/// Ψ(y) = Σ_{n≥1} e^{−πn²y}.
pub fn psi(y: f64) -> f64 {
    theta_sum(|n2| (-PI * n2 * y).exp())
}

/// Ψ′(y) = −Σ_{n≥1} πn² e^{−πn²y}.
pub fn psi_prime(y: f64) -> f64 {
    -theta_sum(|n2| PI * n2 * (-PI * n2 * y).exp())
}

fn theta_sum(term: impl Fn(f64) -> f64) -> f64 {
    let mut sum = 0.0;
    for n in 1.. {
        let t = term((n as f64).powi(2));
        if t <= f64::EPSILON * 1e-3 * sum || t == 0.0 {
            break;
        }
        sum += t;
    }
    sum
}

/// `|1/2 + Ψ(1) + 4Ψ′(1)|`, which vanishes by Jacobi's theta transformation.
pub fn psi_identity_check() -> f64 {
    (0.5 + psi(1.0) + 4.0 * psi_prime(1.0)).abs()
}

/// ξ(z₀) = −4Ψ′(1) + (1/2 − z₀)∫₁^∞ Ψ′(y) y^{1/4 + z₀/2} dy
///         + (1/2 + z₀)∫₁^∞ Ψ′(y) y^{1/4 − z₀/2} dy.
pub fn xi_theta_form(p: StripPoint, cfg: &EvalConfig) -> Result<XiResult> {
    cfg.validate()?;
    let p = StripPoint::new(p.x0, p.t0)?;
    let z0 = p.z();

    let mut n_terms = 1u32;
    while theta_numerator(n_terms + 1) / 15.0 >= THETA_CUTOFF {
        n_terms += 1;
    }
    let dpsi = |y: f64| -> f64 {
        -(1..=n_terms)
            .map(|n| {
                let a = PI * (n as f64).powi(2);
                a * (-a * y).exp()
            })
            .sum::<f64>()
    };

    let mut upper_y = 1.0;
    while PI * (-PI * upper_y).exp() * upper_y.powf(0.75) >= THETA_CUTOFF {
        upper_y += 0.5;
    }

    let left = 0.5 - z0;
    let right = 0.5 + z0;
    let integrand = |y: f64| -> Complex {
        let ln_y = y.ln();
        let plus = (z0 * 0.5 + 0.25).scale(ln_y).exp();
        let minus = (0.25 - z0 * 0.5).scale(ln_y).exp();
        (left * plus + right * minus) * dpsi(y)
    };
    let q = adaptive_simpson(integrand, 1.0, upper_y, cfg.epsilon / 4.0)?;
    let value = q.value - 4.0 * dpsi(1.0);
    let cutoff_err = (left.abs() + right.abs()) * THETA_CUTOFF * 4.0;
    Ok(XiResult {
        value,
        method: Method::Theta,
        n_used: n_terms,
        term_diagnostics: Vec::new(),
        error_estimate: q.error + cutoff_err + value.abs() * 16.0 * f64::EPSILON,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn strip_point_domain() {
        assert!(StripPoint::new(0.5, 1.0).is_ok());
        assert!(StripPoint::new(-0.5, 1.0).is_ok());
        assert!(StripPoint::new(0.51, 1.0).unwrap_err().is_domain());
        assert!(StripPoint::new(f64::NAN, 1.0).is_err());
        assert!(xi_strip_point(StripPoint { x0: 0.7, t0: 0.0 }, &cfg()).is_err());
        assert!(xi_theta_form(StripPoint { x0: -0.7, t0: 0.0 }, &cfg()).is_err());
    }

    #[test]
    fn default_epsilon_uses_three_terms() {
        assert_eq!(terms_needed(&cfg()), 3);
        let c = EvalConfig { n_max: 2, ..cfg() };
        assert_eq!(terms_needed(&c), 2);
    }

    #[test]
    fn critical_line_values() {
        let r = xi_critical_line(0.0, &cfg()).unwrap();
        assert!((r.value.re - 0.49712080).abs() <= 5e-8);
        assert_eq!(r.n_used, 3);
        let r12 = xi_critical_line(12.0, &cfg()).unwrap();
        assert!((r12.value.re - 0.008823639).abs() <= 5e-8);
        let rm12 = xi_critical_line(-12.0, &cfg()).unwrap();
        assert!((rm12.value.re - r12.value.re).abs() < 1e-13);
    }

    #[test]
    fn critical_line_matches_reference() {
        // 30-digit references for ξ(1/2) and ξ(1/2 + 12i)
        let r = xi_critical_line(0.0, &cfg()).unwrap();
        assert!((r.value.re - 0.497120778188314109912773739685).abs() < 1e-12);
        assert!(r.error_estimate < 1e-9);
        let r = xi_critical_line(12.0, &cfg()).unwrap();
        assert!((r.value.re - 0.00882365071077266278753320547928).abs() < 1e-12);
    }

    #[test]
    fn critical_line_terms_are_conjugate_pairs() {
        let r = xi_critical_line(7.5, &cfg()).unwrap();
        for term in &r.term_diagnostics {
            assert_eq!(term.conj_term, term.upper_term.conj());
            assert_eq!(term.total().im, 0.0);
        }
        assert_eq!(r.value.im, 0.0);
    }

    #[test]
    fn first_summand_partial_sum() {
        let s: f64 = (1..=5).map(|n| 2.0 * theta_numerator(n) / 6.25).sum();
        assert!((s - 0.65186088).abs() <= 1e-7);
    }

    #[test]
    fn real_form_coefficients_at_origin() {
        assert_eq!(real_form_coefficients(0.0), (0.2, 0.0));
    }

    #[test]
    fn real_form_values() {
        let a = xi_real_form(0.0, &cfg()).unwrap().value.re;
        let b = xi_critical_line(0.0, &cfg()).unwrap().value.re;
        assert!((a - b).abs() < 1e-8);
        let r = xi_real_form(12.0, &cfg()).unwrap();
        assert!((r.value.re - 0.008823639).abs() <= 1e-6);
    }

    #[test]
    fn strip_reduces_to_critical_line() {
        let a = xi_strip_point(StripPoint::critical(12.0).unwrap(), &cfg()).unwrap();
        let b = xi_critical_line(12.0, &cfg()).unwrap();
        assert!((a.value - b.value).abs() < 1e-10);
    }

    #[test]
    fn strip_is_even() {
        let a = xi_strip_point(StripPoint::new(0.3, 5.0).unwrap(), &cfg()).unwrap();
        let b = xi_strip_point(StripPoint::new(-0.3, -5.0).unwrap(), &cfg()).unwrap();
        assert!((a.value - b.value).abs() < 1e-10);
        let expected = Complex::new(0.275482632136174394107828512115, 0.0199783060291231907155533132509);
        assert!((a.value - expected).abs() < 1e-12);
    }

    #[test]
    fn strip_at_s_equal_one() {
        let r = xi_strip_point(StripPoint::new(0.5, 0.0).unwrap(), &cfg()).unwrap();
        assert!((r.value - Complex::real(0.5)).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn psi_values() {
        assert!(psi_identity_check() <= 1e-12);
        // Σ e^{−πn²} and Σ πn² e^{−πn²}, 30-digit references
        assert!((psi(1.0) - 0.0432174056066540072876580607551).abs() < 1e-15);
        assert!((-psi_prime(1.0) - 0.135804351401663501821914515189).abs() < 1e-15);
        assert!((-psi_prime(1.0) - 0.65186088 / 4.8).abs() < 1e-6);
    }

    #[test]
    fn theta_form_values() {
        let r = xi_theta_form(StripPoint::critical(0.0).unwrap(), &cfg()).unwrap();
        assert!((r.value.re - 0.49712077).abs() <= 1e-7);
        let r = xi_theta_form(StripPoint::critical(12.0).unwrap(), &cfg()).unwrap();
        assert!((r.value.re - 0.008823639).abs() <= 1e-6);
    }

    #[test]
    fn theta_form_is_even() {
        let p = StripPoint::new(0.25, 3.0).unwrap();
        let a = xi_theta_form(p, &cfg()).unwrap().value;
        let b = xi_theta_form(p.neg(), &cfg()).unwrap().value;
        assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("zeta".parse::<Method>().is_err());
    }
}
