//! Jones vectors and Stokes/Poincaré algebra on the two degenerate waveguide
//! modes.
//!
//! Mode A (TE01) carries the horizontal field component and mode B (TE10) the
//! vertical one, so a Jones state is the pair `(c_a, c_b)`.
//!
//! Handedness convention, used everywhere in this crate: the relative phase is
//! `phi = arg(c_a) - arg(c_b)` and `s3 = 2 |c_a| |c_b| sin(phi)`. With it the
//! vector `R = [e^{i pi/4}, e^{-i pi/4}] / sqrt(2)` sits at the north pole
//! `s3 = +1` and `L` at the south pole. The labels are vector-level only;
//! the relabeling of handedness between counter-propagating input and output
//! photons is not modelled.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on the norm of an input state.
pub const INPUT_NORM_TOL: f64 = 1e-12;
/// Largest norm excess accepted for an output state.
pub const OUTPUT_NORM_TOL: f64 = 1e-9;

/// Two complex amplitudes on the (A, B) = (TE01, TE10) mode basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JonesState {
    pub c_a: Complex64,
    pub c_b: Complex64,
}

impl JonesState {
    pub const fn new(c_a: Complex64, c_b: Complex64) -> Self {
        Self { c_a, c_b }
    }

    pub fn from_parts(re_a: f64, im_a: f64, re_b: f64, im_b: f64) -> Self {
        Self::new(Complex64::new(re_a, im_a), Complex64::new(re_b, im_b))
    }

    /// Horizontal, pure mode A.
    pub fn h() -> Self {
        Self::from_parts(1.0, 0.0, 0.0, 0.0)
    }

    /// Vertical, pure mode B.
    pub fn v() -> Self {
        Self::from_parts(0.0, 0.0, 1.0, 0.0)
    }

    /// Right-handed circular, `[e^{i pi/4}, e^{-i pi/4}] / sqrt(2)`.
    pub fn r() -> Self {
        Self::new(Complex64::from_polar(FRAC_1_SQRT_2, FRAC_PI_4), Complex64::from_polar(FRAC_1_SQRT_2, -FRAC_PI_4))
    }

    /// Left-handed circular, `[e^{-i pi/4}, e^{i pi/4}] / sqrt(2)`.
    pub fn l() -> Self {
        Self::new(Complex64::from_polar(FRAC_1_SQRT_2, -FRAC_PI_4), Complex64::from_polar(FRAC_1_SQRT_2, FRAC_PI_4))
    }

    /// Linear polarization at angle `zeta` from the x axis, `zeta` in `[0, pi)`.
    pub fn linear(zeta: f64) -> Result<Self> {
        if !(0.0..PI).contains(&zeta) {
            return Err(Error::AngleOutOfRange(zeta));
        }
        Ok(Self::from_parts(zeta.cos(), 0.0, zeta.sin(), 0.0))
    }

    /// Squared norm `|c_a|^2 + |c_b|^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.c_a.norm_sqr() + self.c_b.norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `<self|other>`, antilinear in `self`.
    pub fn inner(&self, other: &JonesState) -> Complex64 {
        self.c_a.conj() * other.c_a + self.c_b.conj() * other.c_b
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.c_a * factor, self.c_b * factor)
    }

    pub fn with_global_phase(&self, phase: f64) -> Self {
        self.scale(Complex64::from_polar(1.0, phase))
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized(self.norm_sqr()));
        }
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    /// Checks the input-state invariant.
    pub fn ensure_normalized(&self) -> Result<()> {
        let n2 = self.norm_sqr();
        if (n2 - 1.0).abs() > INPUT_NORM_TOL {
            return Err(Error::NotNormalized(n2));
        }
        Ok(())
    }

    /// Checks the output-state invariant (norm at most one).
    pub fn is_valid_output(&self) -> bool {
        self.norm_sqr() <= 1.0 + OUTPUT_NORM_TOL
    }

    pub fn stokes(&self) -> StokesVector {
        stokes_from_jones(self)
    }
}

impl fmt::Display for JonesState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:+.12} {:+.12}i, {:+.12} {:+.12}i]", self.c_a.re, self.c_a.im, self.c_b.re, self.c_b.im)
    }
}

/// Textual state syntax: `H`, `V`, `L`, `R`, `D`, `linear:<deg>` or
/// `jones:<reA>,<imA>,<reB>,<imB>`. Explicit Jones vectors are normalized.
impl FromStr for JonesState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(deg) = t.strip_prefix("linear:") {
            let deg: f64 = deg.trim().parse().map_err(|_| Error::UnknownState(s.to_string()))?;
            return named_state(NamedState::Linear(deg.to_radians()));
        }
        if let Some(body) = t.strip_prefix("jones:") {
            let parts: Vec<f64> = body
                .split(',')
                .map(|p| p.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::UnknownState(s.to_string()))?;
            if parts.len() != 4 || parts.iter().any(|v| !v.is_finite()) {
                return Err(Error::UnknownState(s.to_string()));
            }
            return Self::from_parts(parts[0], parts[1], parts[2], parts[3]).normalized();
        }
        let named = match t {
            "H" | "h" => NamedState::H,
            "V" | "v" => NamedState::V,
            "L" | "l" => NamedState::L,
            "R" | "r" => NamedState::R,
            "D" | "d" => NamedState::D,
            _ => return Err(Error::UnknownState(s.to_string())),
        };
        named_state(named)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedState {
    H,
    V,
    L,
    R,
    D,
    /// Linear polarization at the given angle in radians.
    Linear(f64),
}

pub fn named_state(name: NamedState) -> Result<JonesState> {
    match name {
        NamedState::H => Ok(JonesState::h()),
        NamedState::V => Ok(JonesState::v()),
        NamedState::L => Ok(JonesState::l()),
        NamedState::R => Ok(JonesState::r()),
        NamedState::D => JonesState::linear(FRAC_PI_4),
        NamedState::Linear(zeta) => JonesState::linear(zeta),
    }
}

/// Stokes components `(s1, s2, s3)`; they scale with the squared norm of the
/// state they were computed from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StokesVector {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl StokesVector {
    pub const fn new(s1: f64, s2: f64, s3: f64) -> Self {
        Self { s1, s2, s3 }
    }

    pub fn norm(&self) -> f64 {
        (self.s1 * self.s1 + self.s2 * self.s2 + self.s3 * self.s3).sqrt()
    }

    pub fn distance(&self, other: &StokesVector) -> f64 {
        StokesVector::new(self.s1 - other.s1, self.s2 - other.s2, self.s3 - other.s3).norm()
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.s1, self.s2, self.s3]
    }
}

pub fn stokes_from_jones(j: &JonesState) -> StokesVector {
    let (ma, mb) = (j.c_a.norm(), j.c_b.norm());
    // arg(c_a) - arg(c_b) without forming the angles: c_a * conj(c_b).
    let cross = j.c_a * j.c_b.conj();
    let s1 = ma * ma - mb * mb;
    // 2|c_a||c_b| cos(phi) = 2 Re(c_a conj(c_b)), likewise for sin.
    StokesVector::new(s1, 2.0 * cross.re, 2.0 * cross.im)
}

/// Orientation `eta` of the major axis in `[0, pi)` and ellipticity angle
/// `chi` in `[-pi/4, pi/4]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipseAngles {
    pub eta: f64,
    pub chi: f64,
}

impl EllipseAngles {
    /// Minor-to-major axis ratio.
    pub fn axis_ratio(&self) -> f64 {
        self.chi.abs().tan()
    }
}

/// For circular states the major axis is undefined and `eta` is 0.
pub fn ellipse_angles(s: &StokesVector) -> EllipseAngles {
    let planar = s.s1.hypot(s.s2);
    let eta = if planar == 0.0 { 0.0 } else { wrap_half_turn(0.5 * s.s2.atan2(s.s1)) };
    let chi = 0.5 * s.s3.atan2(planar);
    EllipseAngles { eta, chi }
}

/// Maps an angle into `[0, pi)`.
pub fn wrap_half_turn(angle: f64) -> f64 {
    let mut a = angle.rem_euclid(PI);
    if a >= PI {
        a = 0.0;
    }
    a
}

/// Loss-inclusive fidelity `|<target|result>|^2`.
pub fn fidelity(result: &JonesState, target: &JonesState) -> f64 {
    target.inner(result).norm_sqr()
}

/// Weight lost from the waveguide modes, `1 - |result|^2`.
pub fn dissipation_probability(result: &JonesState) -> f64 {
    1.0 - result.norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn assert_stokes(s: StokesVector, e: [f64; 3], tol: f64) {
        for (got, want) in s.as_array().iter().zip(e) {
            assert!(close(*got, want, tol), "{s:?} vs {e:?}");
        }
    }

    #[test]
    fn named_states() {
        assert_eq!(named_state(NamedState::H).unwrap(), JonesState::from_parts(1.0, 0.0, 0.0, 0.0));
        let r = named_state(NamedState::R).unwrap();
        assert!(close(r.c_a.re, 0.5, 1e-15) && close(r.c_a.im, 0.5, 1e-15));
        assert!(close(r.c_b.re, 0.5, 1e-15) && close(r.c_b.im, -0.5, 1e-15));
        let d = named_state(NamedState::Linear(FRAC_PI_4)).unwrap();
        assert!(close(d.c_a.re, FRAC_1_SQRT_2, 1e-15) && close(d.c_b.re, FRAC_1_SQRT_2, 1e-15));
        assert_eq!(named_state(NamedState::D).unwrap(), d);
    }

    #[test]
    fn linear_angle_range() {
        assert!(matches!(JonesState::linear(PI), Err(Error::AngleOutOfRange(_))));
        assert!(matches!(JonesState::linear(-0.1), Err(Error::AngleOutOfRange(_))));
        assert!(JonesState::linear(0.0).is_ok());
    }

    #[test]
    fn parse_syntax() {
        assert_eq!("H".parse::<JonesState>().unwrap(), JonesState::h());
        assert_eq!("R".parse::<JonesState>().unwrap(), JonesState::r());
        let lin: JonesState = "linear:30".parse().unwrap();
        assert!(close(lin.c_a.re, 30f64.to_radians().cos(), 1e-15));
        let j: JonesState = "jones:1,0,0,1".parse().unwrap();
        assert!(close(j.c_a.re, FRAC_1_SQRT_2, 1e-15) && close(j.c_b.im, FRAC_1_SQRT_2, 1e-15));
        assert!(matches!("Q".parse::<JonesState>(), Err(Error::UnknownState(_))));
        assert!(matches!("jones:1,2".parse::<JonesState>(), Err(Error::UnknownState(_))));
        assert!(matches!("jones:0,0,0,0".parse::<JonesState>(), Err(Error::NotNormalized(_))));
        assert!(matches!("linear:180".parse::<JonesState>(), Err(Error::AngleOutOfRange(_))));
    }

    #[test]
    fn stokes_examples() {
        assert_stokes(stokes_from_jones(&JonesState::h()), [1.0, 0.0, 0.0], 1e-15);
        assert_stokes(stokes_from_jones(&JonesState::r()), [0.0, 0.0, 1.0], 1e-15);
        assert_stokes(stokes_from_jones(&JonesState::l()), [0.0, 0.0, -1.0], 1e-15);
        let d = JonesState::linear(FRAC_PI_4).unwrap();
        assert_stokes(stokes_from_jones(&d), [0.0, 1.0, 0.0], 1e-15);
    }

    #[test]
    fn stokes_scales_with_norm() {
        let half = JonesState::h().scale(Complex64::new(0.5, 0.0));
        assert_stokes(stokes_from_jones(&half), [0.25, 0.0, 0.0], 1e-15);
    }

    #[test]
    fn ellipse_examples() {
        let e = ellipse_angles(&StokesVector::new(1.0, 0.0, 0.0));
        assert_eq!((e.eta, e.chi), (0.0, 0.0));
        let e = ellipse_angles(&StokesVector::new(0.0, 1.0, 0.0));
        assert!(close(e.eta, FRAC_PI_4, 1e-15) && e.chi == 0.0);
        let e = ellipse_angles(&StokesVector::new(0.0, 0.0, 1.0));
        assert!(e.eta == 0.0 && close(e.chi, FRAC_PI_4, 1e-15));
        // The limit of chi = atan(s3/rho)/2 as rho -> 0 is pi/4.
        for rho in [1e-3, 1e-6, 1e-9] {
            let lim = ellipse_angles(&StokesVector::new(rho, 0.0, 1.0)).chi;
            assert!(close(lim, 0.5 * (1.0 / rho).atan(), 1e-15));
            assert!(close(lim, FRAC_PI_4, rho));
        }
        let e = ellipse_angles(&StokesVector::new(-1.0, 0.0, 0.0));
        assert!(close(e.eta, FRAC_PI_2, 1e-15));
    }

    #[test]
    fn wrap_stays_below_pi() {
        assert_eq!(wrap_half_turn(-1e-17), 0.0);
        assert!(wrap_half_turn(-1e-12) < PI);
        assert!(close(wrap_half_turn(PI + 0.25), 0.25, 1e-15));
    }

    #[test]
    fn fidelity_and_dissipation() {
        assert!(close(fidelity(&JonesState::r(), &JonesState::r()), 1.0, 1e-15));
        assert!(close(fidelity(&JonesState::r(), &JonesState::l()), 0.0, 1e-15));
        assert_eq!(fidelity(&JonesState::h(), &JonesState::v()), 0.0);
        assert_eq!(dissipation_probability(&JonesState::h()), 0.0);
        let lossy = JonesState::h().scale(Complex64::new(0.9, 0.0));
        assert!(close(dissipation_probability(&lossy), 0.19, 1e-15));
        assert!(close(fidelity(&lossy, &JonesState::h()), 0.81, 1e-15));
    }

    #[test]
    fn output_norm_check() {
        assert!(JonesState::h().is_valid_output());
        assert!(!JonesState::h().scale(Complex64::new(1.0 + 1e-6, 0.0)).is_valid_output());
        assert!(JonesState::h().ensure_normalized().is_ok());
        assert!(JonesState::from_parts(1.0, 0.0, 0.1, 0.0).ensure_normalized().is_err());
    }

    fn arb_state() -> impl Strategy<Value = JonesState> {
        (-1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0, -1.0f64..1.0)
            .prop_filter("nonzero", |(a, b, c, d)| a * a + b * b + c * c + d * d > 1e-6)
            .prop_map(|(a, b, c, d)| JonesState::from_parts(a, b, c, d).normalized().unwrap())
    }

    proptest! {
        #[test]
        fn pure_states_lie_on_the_sphere(j in arb_state()) {
            prop_assert!((stokes_from_jones(&j).norm() - 1.0).abs() < 1e-9);
        }

        #[test]
        fn fidelity_ignores_global_phase(j in arb_state(), t in arb_state(), phi in -10.0f64..10.0) {
            let f0 = fidelity(&j, &t);
            prop_assert!((fidelity(&j.with_global_phase(phi), &t) - f0).abs() < 1e-12);
            prop_assert!((fidelity(&j, &t.with_global_phase(phi)) - f0).abs() < 1e-12);
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&f0));
        }

        #[test]
        fn linear_states_round_trip_their_angle(zeta in 0.0f64..PI) {
            let e = ellipse_angles(&stokes_from_jones(&JonesState::linear(zeta).unwrap()));
            let diff = (e.eta - zeta).abs();
            prop_assert!(diff.min(PI - diff) < 1e-10, "{} vs {}", e.eta, zeta);
            prop_assert!(e.chi.abs() < 1e-10);
        }

        #[test]
        fn ellipse_angles_in_range(s1 in -1.0f64..1.0, s2 in -1.0f64..1.0, s3 in -1.0f64..1.0) {
            let e = ellipse_angles(&StokesVector::new(s1, s2, s3));
            prop_assert!((0.0..PI).contains(&e.eta));
            prop_assert!(e.chi.abs() <= FRAC_PI_4 + 1e-15);
            prop_assert!(e.axis_ratio() <= 1.0 + 1e-12);
        }
    }
}
