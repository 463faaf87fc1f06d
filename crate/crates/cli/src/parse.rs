//! Value parsers for flags and config entries. Decimal point only, no locale.

use polarix::{Alpha, Complex64};

/// `45deg`, `45°`, `0.785rad` or a bare number in radians.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let (body, scale) = if let Some(b) = t.strip_suffix("deg").or_else(|| t.strip_suffix('°')) {
        (b, std::f64::consts::PI / 180.0)
    } else if let Some(b) = t.strip_suffix("rad") {
        (b, 1.0)
    } else {
        (t, 1.0)
    };
    let v: f64 = body.trim().parse().map_err(|_| format!("invalid angle `{s}` (use e.g. 45deg or 0.785rad)"))?;
    if !v.is_finite() {
        return Err(format!("invalid angle `{s}`"));
    }
    Ok(v * scale)
}

pub fn parse_alpha(s: &str) -> Result<Alpha, String> {
    s.parse()
}

/// `re` or `re,im`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|_| format!("invalid complex number `{s}` (use re or re,im)"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("invalid complex number `{s}` (use re or re,im)")),
    }
}
