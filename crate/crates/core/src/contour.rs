//! ξ in the strip straight from Cauchy's integral formula.
//!
//! For an even entire function that is real on the real axis, integrating
//! over the rectangle `|Re z| ≤ a`, `|Im z| ≤ T` and letting `T → ∞` leaves
//!
//! ```text
//! f(z₀) = 1/2π ∫ [ f(a+it)/(a+it−z₀) + f(a−it)/(a−it+z₀) ] dt,
//! ```
//!
//! which only needs f on the line `Re z = a`. For ξ that line is `s = 2 + it`,
//! where the Dirichlet series converges, so this path shares nothing with the
//! incomplete gamma series.
//!
//! The kernel may be multiplied by `e^{δ(z−z₀)²}`. That factor is entire and
//! equals 1 at `z₀`, so the integral is unchanged, but it adds Gaussian decay
//! in t. This makes truncation harmless for boundary data that only decays
//! slowly, such as cosh.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::RwLock;

use crate::complex::{CompensatedSum, Complex};
use crate::error::{Result, XiError};
use crate::zeta::{xi_classical, ZetaConfig};

/// Half-width of the strip in the z-plane: the line `s = 2 + it`.
pub const XI_STRIP_HALF_WIDTH: f64 = 1.5;

/// Constant in `|ξ(2+it)| < K |t|^{5/2} e^{−r|t|}`, certified by a scan over
/// `t ∈ [1, 60]` in the test suite.
pub const CERTIFIED_K: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureWindow {
    /// Integration runs over `t ∈ [−half_height, half_height]`.
    pub half_height: f64,
    pub step: f64,
    /// Abscissa of the boundary line.
    pub a: f64,
    /// Gaussian damping δ; zero gives the plain Cauchy kernel.
    pub damping: f64,
}

impl QuadratureWindow {
    pub fn new(half_height: f64, step: f64, a: f64) -> Self {
        QuadratureWindow {
            half_height,
            step,
            a,
            damping: 0.0,
        }
    }

    pub fn with_damping(mut self, damping: f64) -> Self {
        self.damping = damping;
        self
    }

    fn validate(&self, z0: Complex) -> Result<()> {
        if !(self.half_height > 0.0) || !(self.step > 0.0) || !(self.a > 0.0) || !(self.damping >= 0.0) {
            return Err(XiError::domain("quadrature window needs positive T, step, a and δ ≥ 0"));
        }
        if self.step > self.half_height / 50.0 {
            return Err(XiError::domain(format!(
                "step {} exceeds T/50 = {}",
                self.step,
                self.half_height / 50.0
            )));
        }
        if !z0.is_finite() || z0.re.abs() >= self.a {
            return Err(XiError::domain(format!(
                "z0 = {z0} is not strictly inside |Re z| < {}",
                self.a
            )));
        }
        Ok(())
    }
}

/// Boundary samples `t ↦ f(a + it)` memoised per `|t|`, using
/// `f(a − it) = conj f(a + it)` for functions real on the real axis.
/// Safe to share between threads; results do not depend on the order in
/// which samples are filled in.
pub struct BoundaryCache<'a> {
    f: Box<dyn Fn(f64) -> Result<Complex> + Send + Sync + 'a>,
    samples: RwLock<HashMap<u64, Complex>>,
}

impl<'a> BoundaryCache<'a> {
    pub fn new(f: impl Fn(f64) -> Result<Complex> + Send + Sync + 'a) -> Self {
        BoundaryCache {
            f: Box::new(f),
            samples: RwLock::new(HashMap::new()),
        }
    }

    pub fn sample(&self, t: f64) -> Result<Complex> {
        let key = t.abs().to_bits();
        let cached = self
            .samples
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(&key)
            .copied();
        let v = match cached {
            Some(v) => v,
            None => {
                let v = (self.f)(t.abs())?;
                self.samples.write().unwrap_or_else(|e| e.into_inner()).insert(key, v);
                v
            }
        };
        Ok(if t < 0.0 { v.conj() } else { v })
    }

    pub fn len(&self) -> usize {
        self.samples.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourEstimate {
    pub value: Complex,
    /// `|S_h − S_{2h}| / 15` from the same samples.
    pub step_error: f64,
    pub samples: usize,
}

/// Composite Simpson on `[−T, T]` of the two-line Cauchy integrand, sampled
/// at the symmetric nodes `t = j·h`.
pub fn strip_continuation(
    f_boundary: impl Fn(f64) -> Result<Complex>,
    z0: Complex,
    w: &QuadratureWindow,
) -> Result<ContourEstimate> {
    w.validate(z0)?;
    // A multiple of four nodes per side so the 2h rule reuses the same samples.
    let half = ((w.half_height / w.step).ceil() as usize).div_ceil(4) * 4;
    let h = w.half_height / half as f64;
    let a = w.a;

    let integrand = |t: f64| -> Result<Complex> {
        let dr = Complex::new(a, t) - z0;
        // a − it + z0 = −((−a + it) − z0)
        let dl = Complex::new(-a, t) - z0;
        let (mut fr, mut fl) = (f_boundary(t)?, f_boundary(-t)?);
        if w.damping > 0.0 {
            fr *= (dr * dr * w.damping).exp();
            fl *= (dl * dl * w.damping).exp();
        }
        Ok(fr / dr - fl / dl)
    };

    let n = 2 * half;
    let mut fine = CompensatedSum::new();
    let mut coarse = CompensatedSum::new();
    for j in 0..=n {
        let t = (j as f64 - half as f64) * h;
        let v = integrand(t)?;
        let wf = if j == 0 || j == n {
            1.0
        } else if j % 2 == 1 {
            4.0
        } else {
            2.0
        };
        fine.add(v * wf);
        if j % 2 == 0 {
            let k = j / 2;
            let wc = if k == 0 || k == n / 2 {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            coarse.add(v * wc);
        }
    }
    let scale = 1.0 / (2.0 * PI);
    let s_fine = fine.value() * (h / 3.0 * scale);
    let s_coarse = coarse.value() * (2.0 * h / 3.0 * scale);
    Ok(ContourEstimate {
        value: s_fine,
        step_error: (s_fine - s_coarse).abs() / 15.0,
        samples: n + 1,
    })
}

/// cosh recovered from its values on `Re z = a`; on the imaginary axis the
/// answer is `cos t₀`.
pub fn cosh_archetype(z0: Complex, w: &QuadratureWindow) -> Result<ContourEstimate> {
    let a = w.a;
    strip_continuation(|t| Ok(Complex::new(a, t).cosh()), z0, w)
}

/// ξ(2 + it) from the Dirichlet series and log-gamma.
pub fn xi_boundary(t: f64, cfg: &ZetaConfig) -> Result<Complex> {
    xi_classical(Complex::new(2.0, t), cfg)
}

/// `|ξ(2+it)| < K |t|^{5/2} e^{−rate·|t|}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecayBound {
    pub k: f64,
    pub rate: f64,
}

impl DecayBound {
    /// `K |t|^{5/2} e^{−π|t|/2}`.
    pub const fn steep(k: f64) -> Self {
        DecayBound { k, rate: PI / 2.0 }
    }

    /// `K |t|^{5/2} e^{−π|t|/4}`: the rate at which |Γ(1 + it/2)| decays,
    /// and therefore the one |ξ(2+it)| actually follows.
    pub const fn gamma_rate(k: f64) -> Self {
        DecayBound { k, rate: PI / 4.0 }
    }

    pub fn at(&self, t: f64) -> f64 {
        let t = t.abs();
        self.k * t.powf(2.5) * (-self.rate * t).exp()
    }

    /// Smallest T on a 0.5-grid, past the maximum of the bound, with
    /// `bound(T) < epsilon`.
    pub fn tail_t(&self, epsilon: f64) -> f64 {
        let peak = 2.5 / self.rate;
        let mut t = (peak * 2.0).ceil() / 2.0;
        while self.at(t) >= epsilon {
            t += 0.5;
        }
        t
    }

    /// Bound on what the two boundary lines contribute beyond `|t| > T` to
    /// the Cauchy integral at a point with `|Re z₀| = x0`.
    pub fn truncation_error(&self, half_height: f64, x0: f64, a: f64) -> f64 {
        let t = half_height;
        let slack = self.rate - 2.5 / t;
        if slack <= 0.0 {
            return f64::INFINITY;
        }
        // (1/2π) · 2 lines · 2 tails · ∫_T^∞ K t^{5/2} e^{−rt} dt / (a − |x0|)
        2.0 / (PI * (a - x0)) * self.at(t) / slack
    }

    /// Smallest T on a 0.5-grid whose [`truncation_error`](Self::truncation_error)
    /// is below `epsilon`.
    pub fn window_height(&self, epsilon: f64, x0: f64, a: f64) -> f64 {
        let mut t = self.tail_t(f64::INFINITY).max(1.0);
        while self.truncation_error(t, x0, a) >= epsilon {
            t += 0.5;
        }
        t
    }
}

/// Smallest T on a 0.5-grid with `K T^{5/2} e^{−πT/2} < epsilon`.
#[allow(non_snake_case)]
pub fn tail_bound_T(epsilon: f64, k: f64) -> f64 {
    DecayBound::steep(k).tail_t(epsilon)
}

/// ξ by contour quadrature, with boundary samples cached across points.
pub struct XiContour<'a> {
    zeta: ZetaConfig,
    step: f64,
    eps_tail: f64,
    fixed_height: Option<f64>,
    bound: DecayBound,
    cache: BoundaryCache<'a>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourXi {
    pub value: Complex,
    pub window: QuadratureWindow,
    pub tail_bound: f64,
    pub step_error: f64,
}

impl XiContour<'static> {
    pub fn new(zeta: ZetaConfig, step: f64, eps_tail: f64) -> Self {
        XiContour {
            zeta,
            step,
            eps_tail,
            fixed_height: None,
            bound: DecayBound::gamma_rate(CERTIFIED_K),
            cache: BoundaryCache::new(move |t| xi_boundary(t, &zeta)),
        }
    }
}

impl XiContour<'_> {
    /// Use a fixed half-height instead of the one derived from the decay bound.
    pub fn with_height(mut self, half_height: Option<f64>) -> Self {
        self.fixed_height = half_height;
        self
    }

    pub fn zeta_config(&self) -> &ZetaConfig {
        &self.zeta
    }

    pub fn window_for(&self, z0: Complex) -> QuadratureWindow {
        let a = XI_STRIP_HALF_WIDTH;
        let height = self
            .fixed_height
            .unwrap_or_else(|| self.bound.window_height(self.eps_tail, z0.re.abs(), a));
        QuadratureWindow::new(height, self.step, a)
    }

    pub fn eval(&self, z0: Complex) -> Result<ContourXi> {
        if z0.re.abs() > 0.5 {
            return Err(XiError::domain(format!(
                "contour path is gated to |x0| ≤ 1/2, got {}",
                z0.re
            )));
        }
        let window = self.window_for(z0);
        let est = strip_continuation(|t| self.cache.sample(t), z0, &window)?;
        Ok(ContourXi {
            value: est.value,
            window,
            tail_bound: self.bound.truncation_error(window.half_height, z0.re.abs(), window.a),
            step_error: est.step_error,
        })
    }

    pub fn cached_samples(&self) -> usize {
        self.cache.len()
    }
}

/// One-shot contour evaluation of ξ at `z0` on an explicit window.
pub fn xi_via_contour(z0: Complex, w: &QuadratureWindow, cfg: &ZetaConfig) -> Result<Complex> {
    if z0.re.abs() > 0.5 {
        return Err(XiError::domain(format!(
            "contour path is gated to |x0| ≤ 1/2, got {}",
            z0.re
        )));
    }
    Ok(strip_continuation(|t| xi_boundary(t, cfg), z0, w)?.value)
}
