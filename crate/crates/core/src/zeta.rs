//! Reference values of ζ and ξ that do not touch the incomplete gamma route.
//!
//! Right of the strip ζ is a Dirichlet sum closed off with Euler–Maclaurin
//! corrections; inside it, ζ(s) = η(s)/(1 − 2^{1−s}) with η from Borwein's
//! accelerated alternating series.

use std::f64::consts::{LN_2, PI};

use crate::complex::{cpow, CompensatedSum, Complex};
use crate::error::{Result, XiError};
use crate::special::ln_gamma;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZetaConfig {
    /// Terms summed directly before the Euler–Maclaurin tail.
    pub n_terms: usize,
    /// Length of the accelerated alternating series.
    pub eta_terms: usize,
}

impl Default for ZetaConfig {
    fn default() -> Self {
        ZetaConfig {
            n_terms: 256,
            eta_terms: 64,
        }
    }
}

impl ZetaConfig {
    fn validate(&self) -> Result<()> {
        if self.n_terms < 1 {
            return Err(XiError::domain("n_terms must be at least 1"));
        }
        if self.eta_terms < 8 {
            return Err(XiError::domain("eta_terms must be at least 8"));
        }
        Ok(())
    }
}

/// `B_{2k} / (2k)!` for k = 1..6.
const EM_COEFFS: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
];

/// ζ(s) for Re(s) ≥ 2 from `Σ_{n<N} n^{−s}` plus the Euler–Maclaurin tail
/// `N^{1−s}/(s−1) + N^{−s}/2 + Σ_k B_{2k}/(2k)! · s(s+1)…(s+2k−2) N^{−s−2k+1}`.
pub fn zeta_dirichlet(s: Complex, cfg: &ZetaConfig) -> Result<Complex> {
    cfg.validate()?;
    if !s.is_finite() || s.re < 2.0 {
        return Err(XiError::domain(format!(
            "Dirichlet series used with Re(s) = {} < 2; use the strip oracle",
            s.re
        )));
    }
    let big_n = cfg.n_terms.max(2);
    let mut acc = CompensatedSum::new();
    for n in 1..big_n {
        acc.add(cpow(n as f64, -s)?);
    }

    let nf = big_n as f64;
    let n_pow = cpow(nf, -s)?;
    acc.add(n_pow * nf / (s - 1.0));
    acc.add(n_pow * 0.5);

    // rising factorial s(s+1)…(s+2k−2) times N^{−s−2k+1}
    let inv_n = 1.0 / nf;
    let mut rising = s;
    let mut power = n_pow * inv_n;
    for (k, c) in EM_COEFFS.iter().enumerate() {
        acc.add(rising * power * *c);
        let m = 2.0 * k as f64;
        rising = rising * (s + (m + 1.0)) * (s + (m + 2.0));
        power = power * (inv_n * inv_n);
    }
    Ok(acc.value())
}

/// ζ(s) for 0 ≤ Re(s) ≤ 2 via the Dirichlet eta function.
pub fn zeta_strip_oracle(s: Complex, cfg: &ZetaConfig) -> Result<Complex> {
    cfg.validate()?;
    if !s.is_finite() || s.re < 0.0 || s.re > 2.0 {
        return Err(XiError::domain(format!("strip oracle needs 0 ≤ Re(s) ≤ 2, got {s}")));
    }
    // 1 − 2^{1−s} = −expm1((1−s) ln 2)
    let denom = -((1.0 - s) * LN_2).exp_m1();
    if denom.abs() < 1e-12 {
        return Err(XiError::domain(format!(
            "ζ has a pole or 1 − 2^(1−s) vanishes at s = {s}"
        )));
    }
    Ok(eta_borwein(s, cfg.eta_terms)? / denom)
}

/// η(s) = Σ (−1)^{k} (k+1)^{−s}, accelerated with Borwein's weights
/// `d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!)`.
fn eta_borwein(s: Complex, n: usize) -> Result<Complex> {
    let nf = n as f64;
    let mut d = Vec::with_capacity(n + 1);
    let mut e = 1.0;
    let mut total = 1.0;
    d.push(total);
    for i in 0..n {
        let fi = i as f64;
        e *= 4.0 * (nf + fi) * (nf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
        total += e;
        d.push(total);
    }
    let dn = d[n];

    let mut acc = CompensatedSum::new();
    for (k, dk) in d.iter().take(n).enumerate() {
        let w = (dn - dk) / dn;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(cpow((k + 1) as f64, -s)? * (sign * w));
    }
    Ok(acc.value())
}

/// ζ(s), dispatching on Re(s) = 2.
pub fn zeta(s: Complex, cfg: &ZetaConfig) -> Result<Complex> {
    if s.re >= 2.0 {
        zeta_dirichlet(s, cfg)
    } else {
        zeta_strip_oracle(s, cfg)
    }
}

/// Riemann's ξ(s) = s(s−1)/2 · Γ(s/2) π^{−s/2} ζ(s), with Γ(s/2)π^{−s/2}
/// combined in log space. Defined for Re(s) ≥ 0 except the removable points
/// s = 0 and s = 1, which are reported as domain errors.
pub fn xi_classical(s: Complex, cfg: &ZetaConfig) -> Result<Complex> {
    if s.is_zero() || s == Complex::ONE {
        return Err(XiError::domain("ξ at s = 0 or s = 1 is only reachable as a limit"));
    }
    let half = s * 0.5;
    let log_factor = ln_gamma(half)? - half * PI.ln();
    let z = zeta(s, cfg)?;
    Ok(s * (s - 1.0) * 0.5 * log_factor.exp() * z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ZetaConfig {
        ZetaConfig::default()
    }

    #[test]
    fn dirichlet_closed_forms() {
        let z2 = zeta_dirichlet(Complex::real(2.0), &cfg()).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-10 * z2.re);
        let z4 = zeta_dirichlet(Complex::real(4.0), &cfg()).unwrap();
        assert!((z4.re - PI.powi(4) / 90.0).abs() < 1e-10 * z4.re);
    }

    #[test]
    fn dirichlet_large_truncation_is_accurate() {
        let c = ZetaConfig {
            n_terms: 20_000,
            ..cfg()
        };
        let z = zeta_dirichlet(Complex::new(2.0, 5.0), &c).unwrap();
        let expected = Complex::new(0.850962943624262957210878535908, 0.0989969461348313472271774604848);
        assert!((z - expected).abs() < 1e-12 * expected.abs());
    }

    #[test]
    fn dirichlet_bounded_by_zeta_two() {
        let z2 = zeta_dirichlet(Complex::real(2.0), &cfg()).unwrap().re;
        for t in [1.0, 5.0, 12.0] {
            assert!(zeta_dirichlet(Complex::new(2.0, t), &cfg()).unwrap().abs() <= z2);
        }
    }

    #[test]
    fn dirichlet_rejects_strip() {
        assert!(zeta_dirichlet(Complex::new(1.5, 3.0), &cfg()).unwrap_err().is_domain());
    }

    #[test]
    fn oracle_values() {
        let z = zeta_strip_oracle(Complex::real(0.5), &cfg()).unwrap();
        assert!((z.re + 1.4603545).abs() < 1e-6);
        assert!((z.re + 1.46035450880958681288949915252).abs() < 1e-13);

        let z = zeta_strip_oracle(Complex::new(0.5, 12.0), &cfg()).unwrap();
        assert!((z.re - 1.015940).abs() < 1e-5);
        assert!((z.im + 0.745105).abs() < 1e-5);

        let z = zeta_strip_oracle(Complex::new(0.3, 25.0), &cfg()).unwrap();
        let expected = Complex::new(-0.28820166958746124189826701747, -0.12962518049689428641598850221);
        assert!((z - expected).abs() < 1e-10 * expected.abs());
    }

    #[test]
    fn oracle_agrees_with_dirichlet_at_two() {
        let a = zeta_strip_oracle(Complex::real(2.0), &cfg()).unwrap();
        let b = zeta_dirichlet(Complex::real(2.0), &cfg()).unwrap();
        assert!((a - b).abs() < 1e-10);
    }

    #[test]
    fn oracle_poles() {
        assert!(zeta_strip_oracle(Complex::ONE, &cfg()).unwrap_err().is_domain());
        let s = Complex::new(1.0, 2.0 * PI / LN_2);
        assert!(zeta_strip_oracle(s, &cfg()).unwrap_err().is_domain());
        assert!(zeta_strip_oracle(Complex::new(2.5, 0.0), &cfg()).is_err());
    }

    #[test]
    fn config_validation() {
        let bad = ZetaConfig { eta_terms: 4, ..cfg() };
        assert!(zeta_strip_oracle(Complex::real(0.5), &bad).is_err());
        let bad = ZetaConfig { n_terms: 0, ..cfg() };
        assert!(zeta_dirichlet(Complex::real(2.0), &bad).is_err());
    }

    #[test]
    fn classical_xi_values() {
        let x = xi_classical(Complex::real(0.5), &cfg()).unwrap();
        assert!((x.re - 0.49712077).abs() < 5e-8);
        let x = xi_classical(Complex::new(0.5, 12.0), &cfg()).unwrap();
        assert!((x.re - 0.008823638).abs() < 5e-8);
        assert!(x.im.abs() < 1e-7);
        let x = xi_classical(Complex::real(2.0), &cfg()).unwrap();
        assert!((x.re - PI / 6.0).abs() < 1e-9 * PI / 6.0);
    }

    #[test]
    fn classical_xi_references() {
        let cases = [
            (
                Complex::new(0.3, 5.0),
                Complex::new(0.275520166668044729140558058822, -0.0133091981981203131287861617473),
            ),
            (
                Complex::new(0.9, 2.0),
                Complex::new(0.454496395608185211941160033653, 0.0169149019451107106173677973478),
            ),
            (
                Complex::new(2.0, 7.0),
                Complex::new(0.140822771839940163065837506036, 0.0823648515560216414186341197409),
            ),
        ];
        for (s, expected) in cases {
            let x = xi_classical(s, &cfg()).unwrap();
            assert!((x - expected).abs() < 1e-12, "ξ({s}) = {x}");
        }
    }

    #[test]
    fn functional_equation() {
        for s in [Complex::new(0.3, 5.0), Complex::new(0.5, 12.0), Complex::new(0.9, 2.0)] {
            let a = xi_classical(s, &cfg()).unwrap();
            let b = xi_classical(1.0 - s, &cfg()).unwrap();
            assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn real_on_critical_line() {
        for t in [0.0, 6.0, 12.0] {
            let x = xi_classical(Complex::new(0.5, t), &cfg()).unwrap();
            assert!(x.im.abs() <= 1e-7);
        }
    }

    #[test]
    fn removable_points_are_domain_errors() {
        assert!(xi_classical(Complex::ONE, &cfg()).unwrap_err().is_domain());
        assert!(xi_classical(Complex::ZERO, &cfg()).unwrap_err().is_domain());
    }

    #[test]
    fn limit_at_one_is_half() {
        // Richardson on the symmetric pair s = 1 ± h cancels the O(h) term.
        let h = 1e-6;
        let a = xi_classical(Complex::real(1.0 + h), &cfg()).unwrap().re;
        let b = xi_classical(Complex::real(1.0 - h), &cfg()).unwrap().re;
        assert!((0.5 * (a + b) - 0.5).abs() < 1e-9);
    }
}
