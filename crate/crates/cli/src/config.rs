//! Config-file overlay. Every key is optional; command-line flags take
//! precedence over the file, the file over the built-in defaults.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use crate::args::PhysicsArgs;
use crate::parse::parse_angle;
use polarix::analysis::{Distance, Scenario};
use polarix::{Alpha, Complex64};

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum ComplexValue {
    Real(f64),
    Pair([f64; 2]),
}

impl From<ComplexValue> for Complex64 {
    fn from(v: ComplexValue) -> Self {
        match v {
            ComplexValue::Real(re) => Complex64::new(re, 0.0),
            ComplexValue::Pair([re, im]) => Complex64::new(re, im),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum AngleValue {
    Radians(f64),
    Text(String),
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometryTable {
    a: Option<f64>,
    b: Option<f64>,
    x: Option<f64>,
    y: Option<f64>,
    d: Option<f64>,
    d_over_lambda: Option<f64>,
    r_am: Option<ComplexValue>,
    r_bm: Option<ComplexValue>,
    k: Option<f64>,
    group_velocity_correction: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct EmitterTable {
    theta: Option<AngleValue>,
    gamma_e: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct DriveTable {
    alpha: Option<Alpha>,
    omega_rabi: Option<f64>,
    delta_ge: Option<f64>,
    delta_es: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    #[serde(default)]
    geometry: GeometryTable,
    #[serde(default)]
    emitter: EmitterTable,
    #[serde(default)]
    drive: DriveTable,
}

/// Reads a config file into the same shape as the command-line flags.
pub fn load(path: &Path) -> Result<PhysicsArgs> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    let file: ConfigFile = toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
    let g = file.geometry;
    if g.d.is_some() && g.d_over_lambda.is_some() {
        bail!("config {}: set either d or d_over_lambda, not both", path.display());
    }
    let theta = match file.emitter.theta {
        Some(AngleValue::Radians(v)) => Some(v),
        Some(AngleValue::Text(t)) => Some(parse_angle(&t).map_err(anyhow::Error::msg)?),
        None => None,
    };
    Ok(PhysicsArgs {
        a: g.a,
        b: g.b,
        x: g.x,
        y: g.y,
        d: g.d,
        d_over_lambda: g.d_over_lambda,
        r_am: g.r_am.map(Into::into),
        r_bm: g.r_bm.map(Into::into),
        k: g.k,
        group_velocity_correction: g.group_velocity_correction.unwrap_or(false),
        theta,
        gamma_e: file.emitter.gamma_e,
        alpha: file.drive.alpha,
        omega: file.drive.omega_rabi,
        delta_ge: file.drive.delta_ge,
        delta_es: file.drive.delta_es,
    })
}

impl PhysicsArgs {
    /// `self` (flags) over `base` (file).
    pub fn over(self, base: PhysicsArgs) -> PhysicsArgs {
        let (mut d, mut d_over_lambda) = (self.d, self.d_over_lambda);
        if d.is_none() && d_over_lambda.is_none() {
            d = base.d;
            d_over_lambda = base.d_over_lambda;
        }
        PhysicsArgs {
            a: self.a.or(base.a),
            b: self.b.or(base.b),
            x: self.x.or(base.x),
            y: self.y.or(base.y),
            d,
            d_over_lambda,
            r_am: self.r_am.or(base.r_am),
            r_bm: self.r_bm.or(base.r_bm),
            k: self.k.or(base.k),
            group_velocity_correction: self.group_velocity_correction || base.group_velocity_correction,
            theta: self.theta.or(base.theta),
            gamma_e: self.gamma_e.or(base.gamma_e),
            alpha: self.alpha.or(base.alpha),
            omega: self.omega.or(base.omega),
            delta_ge: self.delta_ge.or(base.delta_ge),
            delta_es: self.delta_es.or(base.delta_es),
        }
    }

    /// Writes every value that was set into `s`; positions become fractions
    /// of the (possibly updated) cross-section.
    pub fn apply(&self, s: &mut Scenario) {
        if let Some(a) = self.a {
            s.a = a;
        }
        if let Some(b) = self.b {
            s.b = b;
        }
        if let Some(x) = self.x {
            s.x_over_a = x / s.a;
        }
        if let Some(y) = self.y {
            s.y_over_b = y / s.b;
        }
        if let Some(d) = self.d {
            s.d = Distance::Absolute(d);
        }
        if let Some(f) = self.d_over_lambda {
            s.d = Distance::LambdaBz(f);
        }
        if let Some(r) = self.r_am {
            s.r_am = r;
        }
        if let Some(r) = self.r_bm {
            s.r_bm = r;
        }
        if let Some(k) = self.k {
            s.k = k;
        }
        if self.group_velocity_correction {
            s.group_velocity_correction = true;
        }
        if let Some(t) = self.theta {
            s.theta = t;
        }
        if let Some(g) = self.gamma_e {
            s.gamma_e = g;
        }
        if let Some(a) = self.alpha {
            s.alpha = a;
        }
        if self.omega.is_some() {
            s.omega_rabi = self.omega;
        }
        if self.delta_ge.is_some() {
            s.delta_ge = self.delta_ge;
        }
        if self.delta_es.is_some() {
            s.delta_es = self.delta_es;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn reads_all_tables() {
        let f = file(
            "[geometry]\nb = 1.02\ny = 0.51\nd_over_lambda = 0.74\nr_am = -0.99\nr_bm = [-0.9, 0.1]\n\
             [emitter]\ntheta = \"30deg\"\ngamma_e = 0.05\n[drive]\nalpha = \"inf\"\n",
        );
        let p = load(f.path()).unwrap();
        assert_eq!(p.b, Some(1.02));
        assert_eq!(p.r_am, Some(Complex64::new(-0.99, 0.0)));
        assert_eq!(p.r_bm, Some(Complex64::new(-0.9, 0.1)));
        assert!((p.theta.unwrap() - 30f64.to_radians()).abs() < 1e-15);
        assert_eq!(p.alpha, Some(Alpha::Infinite));
        let mut s = Scenario::default();
        p.apply(&mut s);
        assert!((s.y_over_b - 0.5).abs() < 1e-15);
        assert_eq!(s.d, Distance::LambdaBz(0.74));
    }

    #[test]
    fn flags_override_file() {
        let f = file("[emitter]\ngamma_e = 0.1\ntheta = 0.2\n[geometry]\nd = 1.7\n");
        let base = load(f.path()).unwrap();
        let flags = PhysicsArgs { gamma_e: Some(0.0), d_over_lambda: Some(0.75), ..Default::default() };
        let merged = flags.over(base);
        assert_eq!(merged.gamma_e, Some(0.0));
        assert_eq!(merged.theta, Some(0.2));
        assert_eq!((merged.d, merged.d_over_lambda), (None, Some(0.75)));
    }

    #[test]
    fn rejects_unknown_keys_and_conflicts() {
        assert!(load(file("[geometry]\nwidth = 2\n").path()).is_err());
        assert!(load(file("[geometry]\nd = 1\nd_over_lambda = 0.75\n").path()).is_err());
        assert!(load(file("[emitter]\ntheta = \"45 degrees\"\n").path()).is_err());
    }
}
