//! Rectangular-waveguide geometry: TE01/TE10 dispersion, transverse profiles,
//! emitter emission rates and the cross-section polarization map.
//!
//! Units: lengths in units of the width `a`, rates in units of `Gamma0`.
//! `GeometryConfig::k` is stored in units of `pi/a`; [`kz`] works on absolute
//! wavenumbers (radians per unit length).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polarization::{ellipse_angles, stokes_from_jones, EllipseAngles, JonesState};

/// Reference single-mode emission rate; the unit of every rate and detuning.
pub const GAMMA0: f64 = 1.0;

/// Free wavenumber used throughout the robustness studies, in units of `pi/a`.
pub const DEFAULT_K: f64 = 1.3;

/// Separation that puts the emitter on the standing-wave antinode of mode B.
pub const ANTINODE_D_OVER_LAMBDA: f64 = 0.75;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    /// TE01, field along x, profile `sin(pi y / b)`.
    A,
    /// TE10, field along y, profile `sin(pi x / a)`.
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeometryConfig {
    pub a: f64,
    pub b: f64,
    pub x: f64,
    pub y: f64,
    /// Emitter to mirror separation.
    pub d: f64,
    pub r_am: Complex64,
    pub r_bm: Complex64,
    /// Free wavenumber in units of `pi/a`.
    pub k: f64,
    /// Rescale `Gamma_A` by the group-velocity ratio of the two modes when
    /// `a != b`. Off by default.
    #[serde(default)]
    pub group_velocity_correction: bool,
}

impl Default for GeometryConfig {
    fn default() -> Self {
        Self::ideal()
    }
}

impl GeometryConfig {
    /// Square guide, centred emitter on the antinode, perfect `-1` mirror.
    pub fn ideal() -> Self {
        let mut g = Self {
            a: 1.0,
            b: 1.0,
            x: 0.5,
            y: 0.5,
            d: 1.0,
            r_am: Complex64::new(-1.0, 0.0),
            r_bm: Complex64::new(-1.0, 0.0),
            k: DEFAULT_K,
            group_velocity_correction: false,
        };
        g.d = ANTINODE_D_OVER_LAMBDA * g.lambda_bz().expect("default k propagates");
        g
    }

    /// Absolute free wavenumber.
    pub fn wavenumber(&self) -> f64 {
        self.k * PI / self.a
    }

    /// Propagation constant of mode A (cut off by the height `b`).
    pub fn k_a(&self) -> Result<f64> {
        kz(self.wavenumber(), self.b)
    }

    /// Propagation constant of mode B (cut off by the width `a`).
    pub fn k_b(&self) -> Result<f64> {
        kz(self.wavenumber(), self.a)
    }

    /// Guided wavelength of mode B, the length reference for `d`.
    pub fn lambda_bz(&self) -> Result<f64> {
        Ok(2.0 * PI / self.k_b()?)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGeometry(msg));
        if !(self.a > 0.0 && self.b > 0.0) || !self.a.is_finite() || !self.b.is_finite() {
            return bad(format!("dimensions must be positive (a = {}, b = {})", self.a, self.b));
        }
        if !(0.0..=self.a).contains(&self.x) || !(0.0..=self.b).contains(&self.y) {
            return Err(Error::OutOfBounds { x: self.x, y: self.y, a: self.a, b: self.b });
        }
        if !(self.d > 0.0) || !self.d.is_finite() {
            return bad(format!("emitter-mirror separation must be positive (d = {})", self.d));
        }
        for (name, r) in [("r_am", self.r_am), ("r_bm", self.r_bm)] {
            if !(r.norm() <= 1.0 + 1e-12) {
                return bad(format!("|{name}| = {} exceeds 1", r.norm()));
            }
        }
        self.k_a()?;
        self.k_b()?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EmitterConfig {
    /// Dipole angle from the x axis.
    pub theta: f64,
    /// External (non-waveguide) dissipation rate.
    pub gamma_e: f64,
}

impl EmitterConfig {
    pub fn new(theta: f64, gamma_e: f64) -> Self {
        Self { theta, gamma_e }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.theta.is_finite() {
            return Err(Error::InvalidEmitter(format!("theta = {}", self.theta)));
        }
        if !(self.gamma_e >= 0.0) || !self.gamma_e.is_finite() {
            return Err(Error::InvalidEmitter(format!("gamma_e = {} must be >= 0", self.gamma_e)));
        }
        Ok(())
    }
}

/// `sqrt(k^2 - (pi/dim)^2)`; errors at or below cutoff.
pub fn kz(k: f64, transverse_dim: f64) -> Result<f64> {
    let cutoff = PI / transverse_dim;
    if !(k > cutoff) {
        return Err(Error::Evanescent { k, dim: transverse_dim, cutoff });
    }
    Ok(((k - cutoff) * (k + cutoff)).sqrt())
}

/// Transverse field factor of a mode at `(x, y)`.
pub fn mode_profile(mode: Mode, x: f64, y: f64, geom: &GeometryConfig) -> Result<f64> {
    if !(0.0..=geom.a).contains(&x) || !(0.0..=geom.b).contains(&y) {
        return Err(Error::OutOfBounds { x, y, a: geom.a, b: geom.b });
    }
    Ok(match mode {
        Mode::A => (PI * y / geom.b).sin(),
        Mode::B => (PI * x / geom.a).sin(),
    })
}

/// Group-velocity rescaling of mode A relative to mode B.
fn rate_scale_a(geom: &GeometryConfig) -> Result<f64> {
    if geom.group_velocity_correction {
        Ok(geom.k_b()? / geom.k_a()?)
    } else {
        Ok(1.0)
    }
}

/// Signed, flux-normalised coupling amplitudes `(u_A, u_B)` with
/// `Gamma_X = 2 u_X^2`. The sign follows `V_X ∝ -cos(theta)`, `-sin(theta)`.
pub fn coupling_amplitudes(geom: &GeometryConfig, em: &EmitterConfig) -> Result<(f64, f64)> {
    geom.validate()?;
    em.validate()?;
    let pa = mode_profile(Mode::A, geom.x, geom.y, geom)?;
    let pb = mode_profile(Mode::B, geom.x, geom.y, geom)?;
    let u_a = -pa * em.theta.cos() * (GAMMA0 * rate_scale_a(geom)?).sqrt();
    let u_b = -pb * em.theta.sin() * GAMMA0.sqrt();
    Ok((u_a, u_b))
}

/// `(Gamma_A, Gamma_B)` in units of `Gamma0`.
pub fn emission_rates(geom: &GeometryConfig, em: &EmitterConfig) -> Result<(f64, f64)> {
    let (u_a, u_b) = coupling_amplitudes(geom, em)?;
    Ok((2.0 * u_a * u_a, 2.0 * u_b * u_b))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldPoint {
    pub x: f64,
    pub y: f64,
    pub angles: EllipseAngles,
    pub amplitude: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossSectionMap {
    pub nx: usize,
    pub ny: usize,
    pub phase_diff: f64,
    /// Row-major with `x` varying fastest.
    pub points: Vec<FieldPoint>,
}

/// Local polarization of `E_A + e^{i phase_diff} E_B` over an `nx` by `ny`
/// grid spanning the closed cross-section.
pub fn cross_section_map(geom: &GeometryConfig, phase_diff: f64, nx: usize, ny: usize) -> Result<CrossSectionMap> {
    if nx < 2 || ny < 2 {
        return Err(Error::InvalidSweep(format!("cross-section grid needs >= 2 points per axis, got {nx} x {ny}")));
    }
    if !(geom.a > 0.0 && geom.b > 0.0) {
        return Err(Error::InvalidGeometry(format!("a = {}, b = {}", geom.a, geom.b)));
    }
    let shift = Complex64::from_polar(1.0, phase_diff);
    let mut points = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        let y = geom.b * j as f64 / (ny - 1) as f64;
        for i in 0..nx {
            let x = geom.a * i as f64 / (nx - 1) as f64;
            points.push(field_point(geom, x, y, shift)?);
        }
    }
    Ok(CrossSectionMap { nx, ny, phase_diff, points })
}

fn field_point(geom: &GeometryConfig, x: f64, y: f64, shift: Complex64) -> Result<FieldPoint> {
    let ea = mode_profile(Mode::A, x, y, geom)?;
    let eb = mode_profile(Mode::B, x, y, geom)?;
    let local = JonesState::new(Complex64::new(ea, 0.0), shift * eb);
    Ok(FieldPoint { x, y, angles: ellipse_angles(&stokes_from_jones(&local)), amplitude: local.norm() })
}

/// Single-point version of [`cross_section_map`].
pub fn local_polarization(geom: &GeometryConfig, x: f64, y: f64, phase_diff: f64) -> Result<FieldPoint> {
    field_point(geom, x, y, Complex64::from_polar(1.0, phase_diff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    #[test]
    fn kz_examples() {
        let k = 1.3 * PI;
        let kb = kz(k, 1.0).unwrap();
        assert!((kb / PI - (1.69f64 - 1.0).sqrt()).abs() < 1e-14);
        assert!((kb / PI - 0.83066).abs() < 5e-6);
        // 0.75 of the guided wavelength is the 1.806 a quoted for the antinode.
        assert!((0.75 * 2.0 * PI / kb - 1.806).abs() < 5e-4);
        assert!((kz(SQRT_2 * PI, 1.0).unwrap() - PI).abs() < 1e-14);
        assert!(matches!(kz(PI, 1.0), Err(Error::Evanescent { .. })));
    }

    #[test]
    fn kz_shrinks_with_transverse_dim() {
        let k = 1.6 * PI;
        let mut last = f64::INFINITY;
        for dim in [2.0, 1.5, 1.0, 0.8, 0.7] {
            let v = kz(k, dim).unwrap();
            assert!(v < last);
            last = v;
        }
    }

    #[test]
    fn profiles() {
        let g = GeometryConfig::ideal();
        assert!((mode_profile(Mode::A, 0.5, 0.5, &g).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(mode_profile(Mode::B, 0.0, 0.5, &g).unwrap(), 0.0);
        assert!((mode_profile(Mode::B, 0.4, 0.5, &g).unwrap() - 0.951_056_516_295_153_5).abs() < 1e-15);
        assert!(matches!(mode_profile(Mode::A, 1.2, 0.5, &g), Err(Error::OutOfBounds { .. })));
    }

    #[test]
    fn rates_examples() {
        let g = GeometryConfig::ideal();
        let (ga, gb) = emission_rates(&g, &EmitterConfig::new(FRAC_PI_4, 0.0)).unwrap();
        assert!((ga - 1.0).abs() < 1e-15 && (gb - 1.0).abs() < 1e-15);
        let (ga, gb) = emission_rates(&g, &EmitterConfig::new(0.0, 0.0)).unwrap();
        assert!((ga - 2.0).abs() < 1e-15 && gb == 0.0);
        let wall = GeometryConfig { x: 0.0, ..g };
        for theta in [0.1, 0.7, 2.0] {
            assert_eq!(emission_rates(&wall, &EmitterConfig::new(theta, 0.0)).unwrap().1, 0.0);
        }
    }

    #[test]
    fn geometry_validation() {
        let g = GeometryConfig::ideal();
        assert!(g.validate().is_ok());
        assert!((g.d - 1.805_787_796_286_538).abs() < 1e-12);
        assert!(GeometryConfig { b: -1.0, ..g }.validate().is_err());
        assert!(GeometryConfig { d: 0.0, ..g }.validate().is_err());
        assert!(GeometryConfig { r_am: Complex64::new(1.1, 0.0), ..g }.validate().is_err());
        assert!(matches!(GeometryConfig { x: 1.5, ..g }.validate(), Err(Error::OutOfBounds { .. })));
        assert!(matches!(GeometryConfig { k: 0.9, ..g }.validate(), Err(Error::Evanescent { .. })));
        // Mode A is cut off first when b shrinks.
        assert!(matches!(GeometryConfig { b: 0.7, y: 0.35, ..g }.validate(), Err(Error::Evanescent { .. })));
        assert!(EmitterConfig::new(0.0, -0.1).validate().is_err());
    }

    #[test]
    fn group_velocity_flag() {
        let g = GeometryConfig { b: 1.05, y: 0.525, ..GeometryConfig::ideal() };
        let em = EmitterConfig::new(FRAC_PI_4, 0.0);
        let (ga0, gb0) = emission_rates(&g, &em).unwrap();
        let gc = GeometryConfig { group_velocity_correction: true, ..g };
        let (ga1, gb1) = emission_rates(&gc, &em).unwrap();
        assert_eq!(gb0, gb1);
        let ratio = g.k_b().unwrap() / g.k_a().unwrap();
        assert!((ga1 / ga0 - ratio).abs() < 1e-14);
        // No effect on a square guide.
        let sq = GeometryConfig { group_velocity_correction: true, ..GeometryConfig::ideal() };
        assert_eq!(emission_rates(&sq, &em).unwrap(), emission_rates(&GeometryConfig::ideal(), &em).unwrap());
    }

    #[test]
    fn cross_section_examples() {
        let g = GeometryConfig::ideal();
        let centre = local_polarization(&g, 0.5, 0.5, FRAC_PI_2).unwrap();
        assert!((centre.angles.chi.abs() - FRAC_PI_4).abs() < 1e-12);
        // Left-handed under the repo-wide convention.
        assert!(centre.angles.chi < 0.0);
        for t in [0.1, 0.3, 0.45] {
            let p = local_polarization(&g, t, t, FRAC_PI_2).unwrap();
            assert!((p.angles.chi.abs() - FRAC_PI_4).abs() < 1e-12);
            let q = local_polarization(&g, t, 1.0 - t, FRAC_PI_2).unwrap();
            assert!((q.angles.chi.abs() - FRAC_PI_4).abs() < 1e-12);
        }
        let p = local_polarization(&g, 0.5, 0.25, FRAC_PI_2).unwrap();
        assert!((p.angles.axis_ratio() - (PI / 4.0).sin()).abs() < 1e-12);

        let map = cross_section_map(&g, FRAC_PI_2, 5, 5).unwrap();
        assert_eq!(map.points.len(), 25);
        assert_eq!((map.points[12].x, map.points[12].y), (0.5, 0.5));
        assert_eq!(map.points[0].amplitude, 0.0);
        assert!(cross_section_map(&g, FRAC_PI_2, 1, 5).is_err());
    }

    proptest! {
        #[test]
        fn rates_mirror_symmetric(x in 0.0f64..1.0, y in 0.0f64..1.0, theta in 0.0f64..PI) {
            let g = GeometryConfig { x, y, ..GeometryConfig::ideal() };
            let m = GeometryConfig { x: 1.0 - x, y: 1.0 - y, ..g };
            let em = EmitterConfig::new(theta, 0.0);
            let (a0, b0) = emission_rates(&g, &em).unwrap();
            let (a1, b1) = emission_rates(&m, &em).unwrap();
            prop_assert!((a0 - a1).abs() < 1e-12 && (b0 - b1).abs() < 1e-12);
            prop_assert!((0.0..=2.0).contains(&a0) && (0.0..=2.0).contains(&b0));
        }

        #[test]
        fn centred_rates_sum_to_two(theta in -PI..PI) {
            let (ga, gb) = emission_rates(&GeometryConfig::ideal(), &EmitterConfig::new(theta, 0.0)).unwrap();
            prop_assert!((ga + gb - 2.0 * GAMMA0).abs() < 1e-12);
        }
    }
}
