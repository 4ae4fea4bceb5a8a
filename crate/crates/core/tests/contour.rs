use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::Arc;
use std::thread;

use riemann_xi::*;

const EPS_TAIL: f64 = 1e-9;

fn oracle() -> XiContour<'static> {
    XiContour::new(ZetaConfig::default(), 0.01, EPS_TAIL)
}

#[test]
fn critical_values_by_contour() {
    let o = oracle();
    let x = o.eval(Complex::ZERO).unwrap().value;
    assert!((x.re - 0.49712077).abs() <= 1e-6);
    let x = o.eval(Complex::new(0.0, 12.0)).unwrap().value;
    assert!((x.re - 0.008823639).abs() <= 1e-6);
}

#[test]
fn contour_is_real_on_the_critical_line() {
    let o = oracle();
    for t0 in [0.0, 6.0, 12.0] {
        assert!(o.eval(Complex::new(0.0, t0)).unwrap().value.im.abs() <= 1e-7);
    }
}

#[test]
fn contour_matches_series_on_grid() {
    let o = oracle();
    let cfg = EvalConfig::default();
    for x0 in [-0.4, 0.0, 0.4] {
        for t0 in [0.0, 5.0, 10.0] {
            let a = o.eval(Complex::new(x0, t0)).unwrap().value;
            let b = xi_strip_point(StripPoint::new(x0, t0).unwrap(), &cfg).unwrap().value;
            assert!((a - b).abs() <= 1e-5, "({x0}, {t0}): {a} vs {b}");
        }
    }
    let a = o.eval(Complex::new(0.3, 2.0)).unwrap().value;
    let b = xi_strip_point(StripPoint::new(0.3, 2.0).unwrap(), &cfg).unwrap().value;
    assert!((a - b).abs() <= 1e-6);
}

#[test]
fn doubling_the_window_changes_little() {
    let zeta = ZetaConfig::default();
    for z0 in [Complex::ZERO, Complex::new(0.4, 7.0), Complex::new(-0.5, 15.0)] {
        let base = oracle().eval(z0).unwrap();
        let h = base.window.half_height;
        let doubled = XiContour::new(zeta, 0.01, EPS_TAIL)
            .with_height(Some(2.0 * h))
            .eval(z0)
            .unwrap();
        assert!((base.value - doubled.value).abs() < EPS_TAIL, "{z0}");
        assert!(base.tail_bound < EPS_TAIL);
    }
}

#[test]
fn one_shot_matches_cached() {
    let z0 = Complex::new(0.1, 3.0);
    let o = oracle();
    let c = o.eval(z0).unwrap();
    let v = xi_via_contour(z0, &c.window, o.zeta_config()).unwrap();
    assert!((c.value - v).abs() < 1e-14);
}

#[test]
fn gamma_rate_bound_is_certified() {
    let zeta = ZetaConfig::default();
    let bound = DecayBound::gamma_rate(CERTIFIED_K);
    let mut t = 1.0;
    while t <= 60.0 {
        let v = xi_boundary(t, &zeta).unwrap().abs();
        assert!(v < bound.at(t), "t = {t}");
        t += 0.25;
    }
}

#[test]
fn cosh_reproduces_cosine() {
    let w = QuadratureWindow::new(40.0, 0.01, 1.5).with_damping(0.05);
    for t0 in [0.0, 1.0, FRAC_PI_2, 3.0] {
        let v = cosh_archetype(Complex::new(0.0, t0), &w).unwrap().value;
        assert!((v - Complex::real(t0.cos())).abs() <= 1e-6, "t0 = {t0}");
    }
}

#[test]
fn cosh_halving_step_gains_fourth_order() {
    for t0 in [0.0, 1.0, FRAC_PI_2, 3.0] {
        let mut prev: Option<f64> = None;
        for step in [0.8, 0.4, 0.2, 0.1] {
            let w = QuadratureWindow::new(60.0, step, 1.5).with_damping(0.05);
            let e = (cosh_archetype(Complex::new(0.0, t0), &w).unwrap().value - Complex::real(t0.cos())).abs();
            if let Some(p) = prev {
                assert!(e <= (p / 8.0).max(1e-12), "t0 = {t0}, step {step}: {e:e} after {p:e}");
            }
            prev = Some(e);
        }
    }
}

#[test]
fn domain_is_gated() {
    let o = oracle();
    assert!(o.eval(Complex::new(0.6, 1.0)).unwrap_err().is_domain());
    let w = QuadratureWindow::new(30.0, 0.01, 1.5);
    assert!(xi_via_contour(Complex::new(-0.7, 0.0), &w, &ZetaConfig::default()).is_err());
}

#[test]
fn shared_cache_is_order_independent() {
    let o = Arc::new(oracle());
    let points: Vec<Complex> = (0..6)
        .map(|k| Complex::new(0.1 * (k as f64 - 2.5), 2.0 * k as f64))
        .collect();
    let serial: Vec<Complex> = points.iter().map(|&z| oracle().eval(z).unwrap().value).collect();
    let handles: Vec<_> = points
        .iter()
        .rev()
        .map(|&z| {
            let o = Arc::clone(&o);
            thread::spawn(move || o.eval(z).unwrap().value)
        })
        .collect();
    let parallel: Vec<Complex> = handles.into_iter().map(|h| h.join().unwrap()).rev().collect();
    assert_eq!(serial, parallel);
    assert!(o.cached_samples() > 0);
}

#[test]
fn steep_bound_heights() {
    let b = DecayBound::steep(10.0);
    assert!(b.at(24.5) < 1e-12 && b.at(24.0) >= 1e-12);
    assert_eq!(tail_bound_T(1e-12, 10.0), 24.5);
    assert!(tail_bound_T(1e-6, 10.0) <= tail_bound_T(1e-12, 10.0));
    assert!((b.rate - PI / 2.0).abs() < 1e-15);
}
