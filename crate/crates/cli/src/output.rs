use riemann_xi::Complex;
use serde::Serialize;

/// C-style `%.11e`: 12 significant digits, signed exponent of at least two
/// digits. Non-finite values print as `nan`, `inf`, `-inf`.
pub fn sci(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.11e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for JsonComplex {
    fn from(c: Complex) -> Self {
        JsonComplex { re: c.re, im: c.im }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable output")
}
