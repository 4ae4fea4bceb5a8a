use std::f64::consts::PI;
use std::fmt::Write as _;

use rayon::prelude::*;
use riemann_xi::{
    crude_bound, evaluate, upper_inc_gamma, xi_classical, xi_critical_line, xi_theta_form, Complex, EvalConfig,
    IncGammaParams, Method, StripPoint, XiError, ZetaConfig,
};
use serde::Serialize;

use crate::args::{Format, GammaArgs, PointArgs, RangeArgs};
use crate::output::{json, sci, JsonComplex};
use crate::CliError;

/// Text for stdout plus whether a numerical failure was seen.
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn required(v: Option<f64>, name: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{name}")))
}

struct Point {
    sigma: f64,
    t: f64,
}

fn point(a: &PointArgs, file: &crate::args::FileConfig) -> Result<Point, CliError> {
    let x0 = file.pick(a.x0, "x0")?;
    let sigma = match x0 {
        Some(x0) => x0 + 0.5,
        None => file.pick(a.sigma, "sigma")?.unwrap_or(0.5),
    };
    let t = match file.pick(a.t0, "t0")? {
        Some(t) => t,
        None => required(file.pick(a.t, "t")?, "t")?,
    };
    if !sigma.is_finite() || !t.is_finite() {
        return Err(CliError::Usage("sigma and t must be finite".into()));
    }
    Ok(Point { sigma, t })
}

fn check_domain(method: Method, sigma: f64) -> Result<(), CliError> {
    let ok = match method {
        Method::Classical => sigma > 0.0 && sigma <= 2.0,
        _ => (0.0..=1.0).contains(&sigma),
    };
    if ok {
        Ok(())
    } else {
        let range = if method == Method::Classical {
            "(0, 2]"
        } else {
            "[0, 1]"
        };
        Err(CliError::Domain(format!(
            "method {method} needs sigma in {range}, got {sigma}"
        )))
    }
}

#[derive(Serialize)]
struct EvalRecord {
    sigma: f64,
    t: f64,
    method: &'static str,
    value: JsonComplex,
    n_used: u32,
    error_estimate: f64,
}

pub fn eval(a: &PointArgs) -> Result<Output, CliError> {
    let r = a.common.resolve()?;
    let p = point(a, &r.file)?;
    let method: Method = r
        .file
        .pick(a.method.clone(), "method")?
        .unwrap_or_else(|| "incgamma".into())
        .parse()?;
    check_domain(method, p.sigma)?;
    let res = evaluate(method, Complex::new(p.sigma, p.t), &r.cfg)?;
    let rec = EvalRecord {
        sigma: p.sigma,
        t: p.t,
        method: method.name(),
        value: res.value.into(),
        n_used: res.n_used,
        error_estimate: res.error_estimate,
    };
    let text = match r.format.unwrap_or(Format::Plain) {
        Format::Json => json(&rec) + "\n",
        Format::Csv => format!(
            "sigma,t,method,value_re,value_im,n_used,error_estimate\n{},{},{},{},{},{},{}\n",
            sci(rec.sigma),
            sci(rec.t),
            rec.method,
            sci(rec.value.re),
            sci(rec.value.im),
            rec.n_used,
            sci(rec.error_estimate)
        ),
        Format::Plain => format!(
            "value {}\nvalue_im {}\nmethod {}\nn_used {}\nerror_estimate {}\n",
            sci(rec.value.re),
            sci(rec.value.im),
            rec.method,
            rec.n_used,
            sci(rec.error_estimate)
        ),
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct CompareEntry {
    method: &'static str,
    value: Option<JsonComplex>,
    n_used: Option<u32>,
    error_estimate: Option<f64>,
    skipped: Option<String>,
}

#[derive(Serialize)]
struct CompareRecord {
    sigma: f64,
    t: f64,
    results: Vec<CompareEntry>,
    max_dev: f64,
}

pub fn compare(a: &PointArgs) -> Result<Output, CliError> {
    let r = a.common.resolve()?;
    let p = point(a, &r.file)?;
    check_domain(Method::Strip, p.sigma)?;
    let s = Complex::new(p.sigma, p.t);
    let outcomes: Vec<_> = Method::ALL.par_iter().map(|&m| (m, evaluate(m, s, &r.cfg))).collect();

    let mut failed = false;
    let mut values = Vec::new();
    let mut results = Vec::new();
    for (m, o) in outcomes {
        match o {
            Ok(x) => {
                values.push(x.value);
                results.push(CompareEntry {
                    method: m.name(),
                    value: Some(x.value.into()),
                    n_used: Some(x.n_used),
                    error_estimate: Some(x.error_estimate),
                    skipped: None,
                });
            }
            Err(e) => {
                failed |= !e.is_domain();
                results.push(CompareEntry {
                    method: m.name(),
                    value: None,
                    n_used: None,
                    error_estimate: None,
                    skipped: Some(e.to_string()),
                });
            }
        }
    }
    let rec = CompareRecord {
        sigma: p.sigma,
        t: p.t,
        results,
        max_dev: max_pairwise(&values),
    };

    let text = match r.format.unwrap_or(Format::Plain) {
        Format::Json => json(&rec) + "\n",
        Format::Csv => {
            let mut out = String::from("method,value_re,value_im,n_used,error_estimate\n");
            for e in &rec.results {
                match e.value {
                    Some(v) => writeln!(
                        out,
                        "{},{},{},{},{}",
                        e.method,
                        sci(v.re),
                        sci(v.im),
                        e.n_used.unwrap_or(0),
                        sci(e.error_estimate.unwrap_or(f64::NAN))
                    ),
                    None => writeln!(out, "{},nan,nan,nan,nan", e.method),
                }
                .expect("write to string");
            }
            writeln!(out, "max_dev,{},,,", sci(rec.max_dev)).expect("write to string");
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for e in &rec.results {
                match (e.value, &e.skipped) {
                    (Some(v), _) => writeln!(
                        out,
                        "{:<10} {} {}i  n_used {}  err {}",
                        e.method,
                        sci(v.re),
                        sci(v.im),
                        e.n_used.unwrap_or(0),
                        sci(e.error_estimate.unwrap_or(f64::NAN))
                    ),
                    (None, Some(why)) => writeln!(out, "{:<10} skipped: {why}", e.method),
                    (None, None) => unreachable!(),
                }
                .expect("write to string");
            }
            writeln!(out, "max_dev {}", sci(rec.max_dev)).expect("write to string");
            out
        }
    };
    Ok(Output { text, failed })
}

fn max_pairwise(values: &[Complex]) -> f64 {
    let mut worst = 0.0f64;
    for (i, a) in values.iter().enumerate() {
        for b in &values[i + 1..] {
            worst = worst.max((*a - *b).abs());
        }
    }
    worst
}

/// `from, from + step, …` up to `to` inclusive (with a little slack for
/// rounding in the step count).
fn grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(CliError::Usage(format!("need from < to, got {from} and {to}")));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(CliError::Usage(format!("step must be positive, got {step}")));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| from + i as f64 * step).collect())
}

#[derive(Serialize, Clone, Copy)]
pub struct ScanRow {
    pub t0: f64,
    pub xi_incgamma: f64,
    pub xi_classical: f64,
    pub xi_theta: f64,
    pub max_dev: f64,
}

pub const SCAN_HEADER: &str = "t0,xi_incgamma,xi_classical,xi_theta,max_dev";

fn scan_row(t0: f64, cfg: &EvalConfig) -> Result<ScanRow, XiError> {
    let inc = xi_critical_line(t0, cfg)?.value.re;
    let cla = xi_classical(Complex::new(0.5, t0), &ZetaConfig::default())?.re;
    let the = xi_theta_form(StripPoint::critical(t0)?, cfg)?.value.re;
    let max_dev = (inc - cla).abs().max((inc - the).abs()).max((cla - the).abs());
    Ok(ScanRow {
        t0,
        xi_incgamma: inc,
        xi_classical: cla,
        xi_theta: the,
        max_dev,
    })
}

pub fn scan(a: &RangeArgs) -> Result<Output, CliError> {
    let r = a.common.resolve()?;
    let from = required(r.file.pick(a.from, "from")?, "from")?;
    let to = required(r.file.pick(a.to, "to")?, "to")?;
    let step = required(r.file.pick(a.step, "step")?, "step")?;
    let ts = grid(from, to, step)?;

    let rows: Vec<Result<ScanRow, XiError>> = ts.par_iter().map(|&t| scan_row(t, &r.cfg)).collect();
    let mut failed = false;
    let mut errors = String::new();
    let rows: Vec<ScanRow> = rows
        .into_iter()
        .zip(&ts)
        .map(|(row, &t0)| {
            row.unwrap_or_else(|e| {
                failed = true;
                let _ = writeln!(errors, "t0 = {t0}: {e}");
                ScanRow {
                    t0,
                    xi_incgamma: f64::NAN,
                    xi_classical: f64::NAN,
                    xi_theta: f64::NAN,
                    max_dev: f64::NAN,
                }
            })
        })
        .collect();
    if !errors.is_empty() {
        eprint!("{errors}");
    }

    let text = match r.format.unwrap_or(Format::Csv) {
        Format::Json => json(&rows) + "\n",
        Format::Csv | Format::Plain => {
            let sep = if r.format == Some(Format::Plain) { " " } else { "," };
            let mut out = SCAN_HEADER.replace(',', sep) + "\n";
            for row in &rows {
                let fields = [row.t0, row.xi_incgamma, row.xi_classical, row.xi_theta, row.max_dev].map(sci);
                out.push_str(&fields.join(sep));
                out.push('\n');
            }
            out
        }
    };
    Ok(Output { text, failed })
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq)]
pub struct Bracket {
    pub t_low: f64,
    pub t_high: f64,
    pub root: f64,
}

pub const ZERO_COARSE_STEP: f64 = 0.25;
pub const ZERO_TOLERANCE: f64 = 1e-6;

fn critical_value(method: Method, t: f64, cfg: &EvalConfig) -> Result<f64, XiError> {
    match method {
        Method::Classical => Ok(xi_classical(Complex::new(0.5, t), &ZetaConfig::default())?.re),
        _ => Ok(xi_critical_line(t, cfg)?.value.re),
    }
}

pub fn find_zeros(method: Method, from: f64, to: f64, step: f64, cfg: &EvalConfig) -> Result<Vec<Bracket>, CliError> {
    let mut ts = grid(from, to, step)?;
    if *ts.last().expect("grid is never empty") < to {
        ts.push(to);
    }
    let values = ts
        .par_iter()
        .map(|&t| critical_value(method, t, cfg))
        .collect::<Result<Vec<f64>, XiError>>()?;

    let mut out = Vec::new();
    for i in 0..ts.len() - 1 {
        let (mut lo, mut hi) = (ts[i], ts[i + 1]);
        let (flo, fhi) = (values[i], values[i + 1]);
        if flo == 0.0 {
            out.push(Bracket {
                t_low: lo,
                t_high: lo,
                root: lo,
            });
            continue;
        }
        if flo.signum() == fhi.signum() || fhi == 0.0 {
            continue;
        }
        let mut slo = flo.signum();
        while hi - lo >= ZERO_TOLERANCE {
            let mid = 0.5 * (lo + hi);
            let fm = critical_value(method, mid, cfg)?;
            if fm == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if fm.signum() == slo {
                lo = mid;
                slo = fm.signum();
            } else {
                hi = mid;
            }
        }
        out.push(Bracket {
            t_low: lo,
            t_high: hi,
            root: 0.5 * (lo + hi),
        });
    }
    if values.last() == Some(&0.0) {
        out.push(Bracket {
            t_low: to,
            t_high: to,
            root: to,
        });
    }
    Ok(out)
}

pub fn zeros(a: &RangeArgs) -> Result<Output, CliError> {
    let r = a.common.resolve()?;
    let from = required(r.file.pick(a.from, "from")?, "from")?;
    let to = required(r.file.pick(a.to, "to")?, "to")?;
    let step = r.file.pick(a.step, "step")?.unwrap_or(ZERO_COARSE_STEP);
    let method: Method = r
        .file
        .pick(a.method.clone(), "method")?
        .unwrap_or_else(|| "incgamma".into())
        .parse()?;
    if !matches!(method, Method::IncGamma | Method::Classical) {
        return Err(CliError::Usage(format!(
            "zeros supports incgamma and classical, not {method}"
        )));
    }
    let roots = find_zeros(method, from, to, step, &r.cfg)?;
    let text = match r.format.unwrap_or(Format::Json) {
        Format::Json => json(&roots) + "\n",
        Format::Csv => {
            let mut out = String::from("t_low,t_high,root\n");
            for b in &roots {
                writeln!(out, "{},{},{}", sci(b.t_low), sci(b.t_high), sci(b.root)).expect("write to string");
            }
            out
        }
        Format::Plain => roots.iter().map(|b| format!("{}\n", sci(b.root))).collect(),
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct GammaRecord {
    beta: f64,
    k: f64,
    alpha: f64,
    value: JsonComplex,
    terms_used: usize,
    remainder_bound: f64,
    converged: bool,
    crude_bound: Option<f64>,
}

/// n with α = πn², when there is one.
fn theta_index(alpha: f64) -> Option<u32> {
    let n = (alpha / PI).sqrt().round();
    (n >= 1.0 && (PI * n * n - alpha).abs() <= 1e-12 * alpha).then_some(n as u32)
}

pub fn gammainc(a: &GammaArgs) -> Result<Output, CliError> {
    let r = a.common.resolve()?;
    let beta = required(r.file.pick(a.beta, "beta")?, "beta")?;
    let k = r.file.pick(a.k, "k")?.unwrap_or(0.0);
    let alpha = required(r.file.pick(a.alpha, "alpha")?, "alpha")?;
    let params = IncGammaParams::new(Complex::new(beta, k), alpha)
        .with_epsilon(r.cfg.series_epsilon())
        .with_m_cap(r.cfg.m_cap);
    let res = upper_inc_gamma(&params)?;
    let crude = match theta_index(alpha) {
        Some(n) if (1.0..=1.5).contains(&beta) => Some(crude_bound(beta, n)),
        _ => None,
    };
    let rec = GammaRecord {
        beta,
        k,
        alpha,
        value: res.value.into(),
        terms_used: res.terms_used,
        remainder_bound: res.remainder_bound,
        converged: res.converged,
        crude_bound: crude,
    };
    let text = match r.format.unwrap_or(Format::Plain) {
        Format::Json => json(&rec) + "\n",
        Format::Csv => format!(
            "beta,k,alpha,value_re,value_im,terms_used,remainder_bound,converged,crude_bound\n{},{},{},{},{},{},{},{},{}\n",
            sci(beta),
            sci(k),
            sci(alpha),
            sci(rec.value.re),
            sci(rec.value.im),
            rec.terms_used,
            sci(rec.remainder_bound),
            rec.converged,
            crude.map(sci).unwrap_or_default()
        ),
        Format::Plain => {
            let mut out = format!(
                "value {}\nvalue_im {}\nterms_used {}\nremainder_bound {}\nconverged {}\n",
                sci(rec.value.re),
                sci(rec.value.im),
                rec.terms_used,
                sci(rec.remainder_bound),
                rec.converged
            );
            if let Some(c) = crude {
                writeln!(out, "crude_bound {}", sci(c)).expect("write to string");
            }
            out
        }
    };
    if !res.converged {
        eprintln!("incomplete gamma series did not reach the requested tolerance");
    }
    Ok(Output {
        text,
        failed: !res.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_includes_endpoint() {
        let g = grid(14.0, 14.5, 0.1).unwrap();
        assert_eq!(g.len(), 6);
        assert!((g[5] - 14.5).abs() < 1e-12);
        assert!(grid(1.0, 1.0, 0.1).is_err());
        assert!(grid(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn theta_index_detection() {
        assert_eq!(theta_index(PI), Some(1));
        assert_eq!(theta_index(4.0 * PI), Some(2));
        assert_eq!(theta_index(3.0), None);
    }

    #[test]
    fn pairwise_deviation() {
        let v = [Complex::real(1.0), Complex::real(1.5), Complex::new(1.0, 1.0)];
        assert!((max_pairwise(&v) - 1.25f64.sqrt()).abs() < 1e-15);
        assert_eq!(max_pairwise(&[]), 0.0);
    }
}
