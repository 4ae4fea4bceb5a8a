//! Simpson quadrature for complex-valued integrands on finite intervals.

use crate::complex::{CompensatedSum, Complex};
use crate::error::{Result, XiError};

const MAX_DEPTH: u32 = 48;

/// Panels the interval is split into before adaptive refinement starts, so
/// that mildly oscillatory integrands cannot fool the first error estimate.
const INITIAL_PANELS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: Complex,
    /// Sum of the local Richardson error estimates.
    pub error: f64,
    pub evaluations: usize,
}

/// Adaptive Simpson with absolute tolerance `tol` over `[a, b]`.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> Result<Quadrature>
where
    F: Fn(f64) -> Complex,
{
    if !(a.is_finite() && b.is_finite()) || !(tol > 0.0) {
        return Err(XiError::domain("adaptive_simpson needs finite limits and tol > 0"));
    }
    if a == b {
        return Ok(Quadrature {
            value: Complex::ZERO,
            error: 0.0,
            evaluations: 0,
        });
    }

    let mut state = Adaptive {
        f: &f,
        evaluations: 0,
        error: 0.0,
        exhausted: false,
    };
    let mut total = CompensatedSum::new();
    let h = (b - a) / INITIAL_PANELS as f64;
    let panel_tol = tol / INITIAL_PANELS as f64;
    for k in 0..INITIAL_PANELS {
        let lo = a + k as f64 * h;
        let hi = if k + 1 == INITIAL_PANELS { b } else { lo + h };
        let mid = 0.5 * (lo + hi);
        let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
        state.evaluations += 3;
        let whole = simpson(lo, hi, flo, fmid, fhi);
        total.add(state.refine(lo, hi, flo, fmid, fhi, whole, panel_tol, MAX_DEPTH));
    }

    let value = total.value();
    if state.exhausted || !value.is_finite() {
        return Err(XiError::no_convergence(
            "adaptive Simpson quadrature",
            format!("on [{a}, {b}] with tol {tol:e} (estimated error {:e})", state.error),
        ));
    }
    Ok(Quadrature {
        value,
        error: state.error,
        evaluations: state.evaluations,
    })
}

struct Adaptive<'a, F> {
    f: &'a F,
    evaluations: usize,
    error: f64,
    exhausted: bool,
}

impl<F: Fn(f64) -> Complex> Adaptive<'_, F> {
    #[allow(clippy::too_many_arguments)]
    fn refine(
        &mut self,
        a: f64,
        b: f64,
        fa: Complex,
        fm: Complex,
        fb: Complex,
        whole: Complex,
        tol: f64,
        depth: u32,
    ) -> Complex {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = ((self.f)(lm), (self.f)(rm));
        self.evaluations += 2;
        let left = simpson(a, m, fa, flm, fm);
        let right = simpson(m, b, fm, frm, fb);
        let diff = left + right - whole;
        let err = diff.abs() / 15.0;

        if err <= tol || depth == 0 || (b - a) <= 8.0 * f64::EPSILON * m.abs().max(1.0) {
            if err > tol {
                self.exhausted = true;
            }
            self.error += err;
            return left + right + diff / 15.0;
        }
        self.refine(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + self.refine(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

#[inline]
fn simpson(a: f64, b: f64, fa: Complex, fm: Complex, fb: Complex) -> Complex {
    (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
}

/// Composite Simpson over `[a, b]` with spacing at most `step`; the panel
/// count is rounded up to the next even number.
pub fn composite_simpson<F>(f: F, a: f64, b: f64, step: f64) -> Result<Complex>
where
    F: Fn(f64) -> Complex,
{
    if !(step > 0.0) || !(b > a) {
        return Err(XiError::domain("composite_simpson needs step > 0 and b > a"));
    }
    let mut n = ((b - a) / step).ceil() as usize;
    n += n % 2;
    let n = n.max(2);
    let h = (b - a) / n as f64;

    let mut acc = CompensatedSum::new();
    acc.add(f(a));
    acc.add(f(b));
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc.add(f(a + i as f64 * h) * w);
    }
    Ok(acc.value() * (h / 3.0))
}
