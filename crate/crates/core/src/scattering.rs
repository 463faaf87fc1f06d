//! Single-photon scattering off the driven Λ emitter in front of the mirror.
//!
//! Two independent code paths live here:
//!
//! * [`ideal_scattering_matrix`]: the closed-form 2x2 matrix for a centred
//!   emitter on the antinode of a square guide with a perfect mirror, with
//!   `Gamma_A = 2 cos^2(theta)`, `Gamma_B = 2 sin^2(theta)`.
//! * [`full_scattering`]: every stationary-state amplitude of the general
//!   emitter + mirror problem (unequal `a`, `b`, off-centre emitter, arbitrary
//!   `d`, lossy or phase-shifted mirrors).
//!
//! Gauge: the mirror sits at `z_M = 0` and the emitter at `z_0 = d`, so the
//! propagation factors `e^{-2 i k z_M}` are 1 and the cross-mode factors are
//! `e^{±i (k_B - k_A) d}`. At the ideal geometry the full matrix equals
//! `-1` times the ideal one; fidelities are global-phase blind, so the two
//! kernels agree on every reported quantity.
//!
//! The drive enters only through
//! `alpha = Omega^2 / [4 (Delta_ge - Delta_es)] - Delta_ge`, with an explicit
//! [`Alpha::Infinite`] for two-photon resonance (EIT), where the emitter is
//! transparent and the matrix is the identity.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polarization::{JonesState, StokesVector};
use crate::waveguide::{coupling_amplitudes, EmitterConfig, GeometryConfig, GAMMA0};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Drive parameter in units of `Gamma0`, extended with `+-infinity`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Alpha {
    Finite(f64),
    /// Two-photon resonance, `Delta_ge = Delta_es`.
    Infinite,
}

impl Alpha {
    pub fn finite(self) -> Option<f64> {
        match self {
            Alpha::Finite(a) => Some(a),
            Alpha::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Alpha::Infinite)
    }

    /// `f64::INFINITY` for the sentinel; convenient for tabulation.
    pub fn as_f64(self) -> f64 {
        self.finite().unwrap_or(f64::INFINITY)
    }

    pub fn approx_eq(self, other: Alpha, tol: f64) -> bool {
        match (self, other) {
            (Alpha::Infinite, Alpha::Infinite) => true,
            (Alpha::Finite(a), Alpha::Finite(b)) => (a - b).abs() <= tol * b.abs().max(1.0),
            _ => false,
        }
    }
}

impl From<f64> for Alpha {
    fn from(v: f64) -> Self {
        if v.is_infinite() {
            Alpha::Infinite
        } else {
            Alpha::Finite(v)
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Finite(a) => write!(f, "{a}"),
            Alpha::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Alpha {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "-inf" | "infinity" | "eit" => Ok(Alpha::Infinite),
            t => t.parse::<f64>().map_err(|_| format!("invalid alpha `{s}`")).and_then(|v| {
                if v.is_nan() {
                    Err(format!("invalid alpha `{s}`"))
                } else {
                    Ok(Alpha::from(v))
                }
            }),
        }
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Alpha::Finite(a) => s.serialize_f64(*a),
            Alpha::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Alpha {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Alpha::from(v)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// External control field: Rabi frequency and the two detunings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveTriple {
    pub omega_rabi: f64,
    pub delta_ge: f64,
    pub delta_es: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DriveConfig {
    pub alpha: Alpha,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<DriveTriple>,
}

impl DriveConfig {
    pub fn from_alpha(alpha: impl Into<Alpha>) -> Self {
        Self { alpha: alpha.into(), triple: None }
    }

    pub fn from_triple(omega_rabi: f64, delta_ge: f64, delta_es: f64) -> Result<Self> {
        let alpha = alpha_of_drive(omega_rabi, delta_ge, delta_es)?;
        Ok(Self { alpha, triple: Some(DriveTriple { omega_rabi, delta_ge, delta_es }) })
    }

    pub fn validate(&self) -> Result<()> {
        if let Alpha::Finite(a) = self.alpha {
            if !a.is_finite() {
                return Err(Error::InconsistentDrive { alpha: a.to_string(), expected: "finite".into() });
            }
        }
        if let Some(t) = self.triple {
            let expected = alpha_of_drive(t.omega_rabi, t.delta_ge, t.delta_es)?;
            if !self.alpha.approx_eq(expected, 1e-10) {
                return Err(Error::InconsistentDrive { alpha: self.alpha.to_string(), expected: expected.to_string() });
            }
        }
        Ok(())
    }
}

/// `alpha = Omega^2 / [4 (Delta_ge - Delta_es)] - Delta_ge`.
///
/// Two-photon resonance gives [`Alpha::Infinite`] whenever the drive is on;
/// with `Omega = 0` the level `|s>` decouples and `alpha = -Delta_ge`.
pub fn alpha_of_drive(omega_rabi: f64, delta_ge: f64, delta_es: f64) -> Result<Alpha> {
    if !(omega_rabi >= 0.0) {
        return Err(Error::NegativeRabi(omega_rabi));
    }
    if omega_rabi == 0.0 {
        return Ok(Alpha::Finite(-delta_ge));
    }
    let gap = delta_ge - delta_es;
    if gap == 0.0 {
        return Ok(Alpha::Infinite);
    }
    Ok(Alpha::Finite(omega_rabi * omega_rabi / (4.0 * gap) - delta_ge))
}

/// Rabi frequency `2 sqrt((Delta_ge - Delta_es)(Delta_ge + alpha))` realizing
/// `alpha` at the given detunings.
pub fn drive_for_alpha(alpha: f64, delta_ge: f64, delta_es: f64) -> Result<f64> {
    let gap = delta_ge - delta_es;
    let shifted = delta_ge + alpha;
    if gap == 0.0 {
        return if shifted == 0.0 { Ok(0.0) } else { Err(Error::TwoPhotonResonance { delta: delta_ge }) };
    }
    let product = gap * shifted;
    if product < 0.0 {
        return Err(Error::InfeasibleDrive { product });
    }
    Ok(2.0 * product.sqrt())
}

/// Output amplitudes `[[r_AA, r_AB], [r_BA, r_BB]]`, columns indexed by the
/// input mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringMatrix {
    pub r_aa: Complex64,
    pub r_ab: Complex64,
    pub r_ba: Complex64,
    pub r_bb: Complex64,
}

impl ScatteringMatrix {
    pub const fn new(r_aa: Complex64, r_ab: Complex64, r_ba: Complex64, r_bb: Complex64) -> Self {
        Self { r_aa, r_ab, r_ba, r_bb }
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self::new(one, zero, zero, one)
    }

    pub fn apply(&self, input: &JonesState) -> JonesState {
        JonesState::new(self.r_aa * input.c_a + self.r_ab * input.c_b, self.r_ba * input.c_a + self.r_bb * input.c_b)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.r_aa * c, self.r_ab * c, self.r_ba * c, self.r_bb * c)
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.r_aa, self.r_ab, self.r_ba, self.r_bb]
    }

    pub fn det(&self) -> Complex64 {
        self.r_aa * self.r_bb - self.r_ab * self.r_ba
    }

    /// Largest entrywise modulus of the difference.
    pub fn max_abs_diff(&self, other: &ScatteringMatrix) -> f64 {
        self.entries().iter().zip(other.entries()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest entry of `|S^dagger S - 1|`.
    pub fn unitarity_defect(&self) -> f64 {
        let n_a = self.r_aa.norm_sqr() + self.r_ba.norm_sqr();
        let n_b = self.r_ab.norm_sqr() + self.r_bb.norm_sqr();
        let cross = self.r_aa.conj() * self.r_ab + self.r_ba.conj() * self.r_bb;
        (n_a - 1.0).abs().max((n_b - 1.0).abs()).max(cross.norm())
    }
}

/// `|psi_out> = S |psi_in>`.
pub fn scatter(s: &ScatteringMatrix, input: &JonesState) -> JonesState {
    s.apply(input)
}

/// Closed-form matrix for the centred emitter on the antinode of a square
/// guide with a perfect mirror.
pub fn ideal_scattering_matrix(em: &EmitterConfig, alpha: Alpha) -> ScatteringMatrix {
    let alpha = match alpha {
        Alpha::Infinite => return ScatteringMatrix::identity(),
        Alpha::Finite(a) => a,
    };
    let two_theta = 2.0 * em.theta;
    let loss = Complex64::new(em.gamma_e / 2.0, -alpha);
    let den = 2.0 * GAMMA0 + loss;
    let off = Complex64::new(-2.0 * GAMMA0 * two_theta.sin(), 0.0) / den;
    ScatteringMatrix::new(
        (-2.0 * GAMMA0 * two_theta.cos() + loss) / den,
        off,
        off,
        (2.0 * GAMMA0 * two_theta.cos() + loss) / den,
    )
}

/// Stokes vector of the lossless output for an `|H>` input, in closed form.
pub fn stokes_of_output(theta: f64, alpha: Alpha) -> StokesVector {
    let a = match alpha {
        Alpha::Infinite => return StokesVector::new(1.0, 0.0, 0.0),
        Alpha::Finite(a) => a,
    };
    let q = a * a / (4.0 * GAMMA0 * GAMMA0);
    let den = 1.0 + q;
    StokesVector::new(
        ((4.0 * theta).cos() + q) / den,
        (4.0 * theta).sin() / den,
        (a / GAMMA0) * (2.0 * theta).sin() / den,
    )
}

/// Amplitudes of the stationary state for one input mode. Mode-X amplitudes
/// between emitter and mirror are `t_x e^{-i k_X z}` (toward the mirror) and
/// `r_x e^{i k_X z}` (reflected back); amplitudes are flux-normalised.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeResponse {
    pub t_a: Complex64,
    pub r_a: Complex64,
    pub t_b: Complex64,
    pub r_b: Complex64,
    /// Excited-state amplitude.
    pub c_e: Complex64,
    /// Metastable-state amplitude; needs the full drive triple.
    pub c_s: Option<Complex64>,
}

/// Complete stationary solution for A and B inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FullScattering {
    pub matrix: ScatteringMatrix,
    pub a_input: ModeResponse,
    pub b_input: ModeResponse,
    /// `k_A`, `k_B` used, absolute units.
    pub k_a: f64,
    pub k_b: f64,
    pub gamma_a: f64,
    pub gamma_b: f64,
}

impl FullScattering {
    /// Largest mirror boundary-condition residual over both inputs:
    /// `f_XR(z_M) - r_XM f_XL(z_M)` at `z_M = 0`.
    pub fn boundary_residual(&self, geom: &GeometryConfig) -> f64 {
        [self.a_input, self.b_input]
            .iter()
            .flat_map(|m| [(m.r_a - geom.r_am * m.t_a).norm(), (m.r_b - geom.r_bm * m.t_b).norm()])
            .fold(0.0, f64::max)
    }
}

/// Solves the general emitter + mirror problem.
pub fn full_scattering(geom: &GeometryConfig, em: &EmitterConfig, drive: &DriveConfig) -> Result<FullScattering> {
    geom.validate()?;
    em.validate()?;
    drive.validate()?;
    let k_a = geom.k_a()?;
    let k_b = geom.k_b()?;
    let (u_a, u_b) = coupling_amplitudes(geom, em)?;
    let gamma_a = 2.0 * u_a * u_a;
    let gamma_b = 2.0 * u_b * u_b;
    let d = geom.d;

    let (r_am, r_bm) = (geom.r_am, geom.r_bm);
    let phase_a = Complex64::from_polar(1.0, 2.0 * k_a * d);
    let phase_b = Complex64::from_polar(1.0, 2.0 * k_b * d);
    let standing_a = 1.0 + r_am * phase_a;
    let standing_b = 1.0 + r_bm * phase_b;
    let cross_ab = Complex64::from_polar(1.0, (k_b - k_a) * d);
    let norm = 1.0 / (2.0 * PI).sqrt();

    let alpha = match drive.alpha {
        Alpha::Finite(a) => a,
        Alpha::Infinite => {
            // The emitter is transparent; only the mirror acts.
            let zero = Complex64::new(0.0, 0.0);
            let one = Complex64::new(1.0, 0.0);
            let c_s_limit = |standing: Complex64, u: f64, k: f64| {
                drive.triple.and_then(|t| {
                    (t.omega_rabi > 0.0)
                        .then(|| -2.0 * Complex64::from_polar(1.0, -k * d) * standing * u * norm / t.omega_rabi)
                })
            };
            return Ok(FullScattering {
                matrix: ScatteringMatrix::new(r_am, zero, zero, r_bm),
                a_input: ModeResponse {
                    t_a: one,
                    r_a: r_am,
                    t_b: zero,
                    r_b: zero,
                    c_e: zero,
                    c_s: c_s_limit(standing_a, u_a, k_a),
                },
                b_input: ModeResponse {
                    t_a: zero,
                    r_a: zero,
                    t_b: one,
                    r_b: r_bm,
                    c_e: zero,
                    c_s: c_s_limit(standing_b, u_b, k_b),
                },
                k_a,
                k_b,
                gamma_a,
                gamma_b,
            });
        }
    };

    let base = Complex64::new(alpha, em.gamma_e / 2.0);
    let dressed_a = I * standing_a * gamma_a / 2.0;
    let dressed_b = I * standing_b * gamma_b / 2.0;
    let den = base + dressed_a + dressed_b;
    if den.norm() <= 1e-14 {
        return Err(Error::Degenerate(format!(
            "emitter decoupled (Gamma_A = {gamma_a}, Gamma_B = {gamma_b}, standing-wave factors {standing_a}, {standing_b}) \
             with alpha = {alpha} and gamma_e = {}",
            em.gamma_e
        )));
    }
    let coupling = u_a * u_b;

    let c_s_of = |c_e: Complex64| -> Option<Complex64> {
        drive.triple.map(|t| {
            if t.omega_rabi == 0.0 {
                Complex64::new(0.0, 0.0)
            } else {
                c_e * t.omega_rabi / (2.0 * (t.delta_es - t.delta_ge))
            }
        })
    };

    // Input in mode A.
    let t_aa = (base + dressed_b) / den;
    let r_aa = ((base + dressed_b - I * gamma_a / 2.0) * r_am - I * phase_a.conj() * gamma_a / 2.0) / den;
    let t_ba = -I * standing_a * coupling / den * cross_ab;
    let r_ba = -I * standing_a * (r_bm + phase_b.conj()) * coupling / den * cross_ab;
    let c_e_a = Complex64::from_polar(1.0, -k_a * d) * standing_a * u_a * norm / den;

    // Input in mode B.
    let t_bb = (base + dressed_a) / den;
    let r_bb = ((base + dressed_a - I * gamma_b / 2.0) * r_bm - I * phase_b.conj() * gamma_b / 2.0) / den;
    let t_ab = -I * standing_b * coupling / den * cross_ab.conj();
    let r_ab = -I * standing_b * (r_am + phase_a.conj()) * coupling / den * cross_ab.conj();
    let c_e_b = Complex64::from_polar(1.0, -k_b * d) * standing_b * u_b * norm / den;

    Ok(FullScattering {
        matrix: ScatteringMatrix::new(r_aa, r_ab, r_ba, r_bb),
        a_input: ModeResponse {
            t_a: t_aa,
            r_a: r_am * t_aa,
            t_b: t_ba,
            r_b: r_bm * t_ba,
            c_e: c_e_a,
            c_s: c_s_of(c_e_a),
        },
        b_input: ModeResponse {
            t_a: t_ab,
            r_a: r_am * t_ab,
            t_b: t_bb,
            r_b: r_bm * t_bb,
            c_e: c_e_b,
            c_s: c_s_of(c_e_b),
        },
        k_a,
        k_b,
        gamma_a,
        gamma_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarization::{fidelity, stokes_from_jones};
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Term-by-term transcription of the reduced matrix S+ used as a reference.
    fn s_plus() -> ScatteringMatrix {
        let pre = c(0.0, -FRAC_1_SQRT_2);
        let p = Complex64::from_polar(1.0, FRAC_PI_4);
        let m = Complex64::from_polar(1.0, -FRAC_PI_4);
        ScatteringMatrix::new(pre * p, pre * m, pre * m, pre * p)
    }

    #[test]
    fn alpha_of_drive_examples() {
        let (dge, des) = (1.0, -1.0);
        let omega = 2.0 * ((dge - des) * (dge + 2.0f64)).sqrt();
        let a = alpha_of_drive(omega, dge, des).unwrap().finite().unwrap();
        assert!((a - 2.0).abs() < 1e-14);
        assert_eq!(alpha_of_drive(0.0, 3.0, 0.0).unwrap(), Alpha::Finite(-3.0));
        assert_eq!(alpha_of_drive(1.7, 0.5, 0.5).unwrap(), Alpha::Infinite);
        assert_eq!(alpha_of_drive(0.0, 0.5, 0.5).unwrap(), Alpha::Finite(-0.5));
        assert!(matches!(alpha_of_drive(-1.0, 0.0, 1.0), Err(Error::NegativeRabi(_))));
    }

    #[test]
    fn drive_for_alpha_examples() {
        let om = drive_for_alpha(2.0, 0.0, -2.0).unwrap();
        assert!((om - 4.0).abs() < 1e-14);
        let back = alpha_of_drive(om, 0.0, -2.0).unwrap().finite().unwrap();
        assert!((back - 2.0).abs() < 1e-12);
        assert!((drive_for_alpha(0.0, 1.0, 0.5).unwrap() - 2.0 * 0.5f64.sqrt()).abs() < 1e-15);
        assert!(matches!(drive_for_alpha(2.0, 0.0, 1.0), Err(Error::InfeasibleDrive { .. })));
        assert!(matches!(drive_for_alpha(2.0, 0.3, 0.3), Err(Error::TwoPhotonResonance { .. })));
        assert_eq!(drive_for_alpha(-0.3, 0.3, 0.3).unwrap(), 0.0);
    }

    #[test]
    fn drive_config_consistency() {
        let d = DriveConfig::from_triple(4.0, 0.0, -2.0).unwrap();
        assert!(d.alpha.approx_eq(Alpha::Finite(2.0), 1e-14));
        assert!(d.validate().is_ok());
        let bad = DriveConfig { alpha: Alpha::Finite(1.0), ..d };
        assert!(matches!(bad.validate(), Err(Error::InconsistentDrive { .. })));
        let eit = DriveConfig::from_triple(1.0, 0.5, 0.5).unwrap();
        assert_eq!(eit.alpha, Alpha::Infinite);
    }

    #[test]
    fn alpha_text_and_serde() {
        assert_eq!("inf".parse::<Alpha>().unwrap(), Alpha::Infinite);
        assert_eq!("-2.5".parse::<Alpha>().unwrap(), Alpha::Finite(-2.5));
        assert!("nan".parse::<Alpha>().is_err());
        assert_eq!(serde_json::to_string(&Alpha::Infinite).unwrap(), "\"inf\"");
        let back: Alpha = serde_json::from_str("2.0").unwrap();
        assert_eq!(back, Alpha::Finite(2.0));
        let back: Alpha = serde_json::from_str("\"eit\"").unwrap();
        assert_eq!(back, Alpha::Infinite);
    }

    #[test]
    fn ideal_reduces_to_s_plus() {
        let s = ideal_scattering_matrix(&EmitterConfig::new(FRAC_PI_4, 0.0), Alpha::Finite(2.0));
        assert!(s.max_abs_diff(&s_plus()) < 1e-12);
    }

    #[test]
    fn ideal_eit_and_rotation() {
        let em = EmitterConfig::new(0.37, 0.08);
        assert_eq!(ideal_scattering_matrix(&em, Alpha::Infinite), ScatteringMatrix::identity());
        let drive = DriveConfig::from_triple(1.3, 0.4, 0.4).unwrap();
        assert_eq!(ideal_scattering_matrix(&em, drive.alpha), ScatteringMatrix::identity());
        for theta in [0.0, 0.3, 1.1, 2.9] {
            let s = ideal_scattering_matrix(&EmitterConfig::new(theta, 0.0), Alpha::Finite(0.0));
            let (c2, s2) = ((2.0 * theta).cos(), (2.0 * theta).sin());
            let expect = ScatteringMatrix::new(c(-c2, 0.0), c(-s2, 0.0), c(-s2, 0.0), c(c2, 0.0));
            assert!(s.max_abs_diff(&expect) < 1e-15);
        }
    }

    #[test]
    fn ideal_lossy_entry() {
        let s = ideal_scattering_matrix(&EmitterConfig::new(FRAC_PI_4, 0.05), Alpha::Finite(2.0));
        let expect = c(0.025, -2.0) / c(2.025, -2.0);
        assert!((s.r_aa - expect).norm() < 1e-15);
    }

    #[test]
    fn v_to_l_lossy_fidelity() {
        // |<L|S V>|^2 with r_AB = -2/(2.025-2i), r_BB = (0.025-2i)/(2.025-2i),
        // evaluated independently in double precision.
        let s = ideal_scattering_matrix(&EmitterConfig::new(FRAC_PI_4, 0.05), Alpha::Finite(2.0));
        let f = fidelity(&scatter(&s, &JonesState::v()), &JonesState::l());
        assert!((f - 0.987_616_696_242_573_4).abs() < 1e-13, "{f}");
    }

    #[test]
    fn h_dissipation_at_gamma_tenth() {
        let s = ideal_scattering_matrix(&EmitterConfig::new(FRAC_PI_4, 0.1), Alpha::Finite(2.0));
        let out = scatter(&s, &JonesState::h());
        // |D|^2 = 2.05^2 + 4 = 8.2025, surviving weight 0.05^2 + 4 + 4 = 8.0025.
        assert!((1.0 - out.norm_sqr() - 0.2 / 8.2025).abs() < 1e-15);
        assert!(1.0 - out.norm_sqr() < 0.025);
    }

    #[test]
    fn scatter_examples() {
        let id = ScatteringMatrix::identity();
        assert_eq!(scatter(&id, &JonesState::r()), JonesState::r());
        let out = scatter(&s_plus(), &JonesState::h());
        assert!((fidelity(&out, &JonesState::r()) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn stokes_closed_form_examples() {
        let s = stokes_of_output(FRAC_PI_4, Alpha::Finite(2.0));
        assert!(s.distance(&StokesVector::new(0.0, 0.0, 1.0)) < 1e-15);
        let t = 0.3;
        let s = stokes_of_output(t, Alpha::Finite(0.0));
        assert!(s.distance(&StokesVector::new((4.0 * t).cos(), (4.0 * t).sin(), 0.0)) < 1e-15);
        for a in [-7.0, 0.0, 3.0] {
            assert!(stokes_of_output(0.0, Alpha::Finite(a)).distance(&StokesVector::new(1.0, 0.0, 0.0)) < 1e-15);
        }
        assert_eq!(stokes_of_output(0.9, Alpha::Infinite), StokesVector::new(1.0, 0.0, 0.0));
    }

    #[test]
    fn full_reduces_to_ideal() {
        let g = GeometryConfig::ideal();
        for (theta, gamma_e, alpha) in [(FRAC_PI_4, 0.0, 2.0), (0.3, 0.05, 1.2), (2.2, 0.1, -3.0)] {
            let em = EmitterConfig::new(theta, gamma_e);
            let full = full_scattering(&g, &em, &DriveConfig::from_alpha(alpha)).unwrap();
            let ideal = ideal_scattering_matrix(&em, Alpha::Finite(alpha)).scale(c(-1.0, 0.0));
            assert!(full.matrix.max_abs_diff(&ideal) < 1e-12);
        }
    }

    #[test]
    fn full_eit_limit_is_the_bare_mirror() {
        let g = GeometryConfig { r_am: c(-0.9, 0.1), x: 0.4, ..GeometryConfig::ideal() };
        let em = EmitterConfig::new(0.6, 0.05);
        let eit = full_scattering(&g, &em, &DriveConfig::from_alpha(Alpha::Infinite)).unwrap();
        assert_eq!(eit.matrix, ScatteringMatrix::new(g.r_am, c(0.0, 0.0), c(0.0, 0.0), g.r_bm));
        let near = full_scattering(&g, &em, &DriveConfig::from_alpha(1e9)).unwrap();
        assert!(near.matrix.max_abs_diff(&eit.matrix) < 1e-8);
        // c_s approaches -2 N / Omega on the resonance line.
        let drive = DriveConfig::from_triple(1.5, 0.2, 0.2).unwrap();
        let on = full_scattering(&g, &em, &drive).unwrap();
        let off = full_scattering(&g, &em, &DriveConfig::from_triple(1.5, 0.2, 0.2 - 1e-9).unwrap()).unwrap();
        let (a, b) = (on.a_input.c_s.unwrap(), off.a_input.c_s.unwrap());
        assert!((a - b).norm() < 1e-7 * a.norm().max(1.0));
    }

    #[test]
    fn full_boundary_conditions_hold() {
        let g = GeometryConfig {
            b: 1.03,
            y: 0.4,
            x: 0.6,
            d: 1.7,
            r_am: c(-0.97, 0.05),
            r_bm: c(0.2, -0.9),
            ..GeometryConfig::ideal()
        };
        let full = full_scattering(&g, &EmitterConfig::new(0.8, 0.02), &DriveConfig::from_alpha(0.7)).unwrap();
        assert!(full.boundary_residual(&g) < 1e-14);
    }

    #[test]
    fn full_handles_absorbing_mirror() {
        let g = GeometryConfig { r_am: c(0.0, 0.0), r_bm: c(0.0, 0.0), ..GeometryConfig::ideal() };
        let full = full_scattering(&g, &EmitterConfig::new(FRAC_PI_4, 0.0), &DriveConfig::from_alpha(1.0)).unwrap();
        for z in full.matrix.entries() {
            assert!(z.is_finite());
        }
        assert!(scatter(&full.matrix, &JonesState::h()).norm_sqr() <= 1.0);
    }

    #[test]
    fn full_rejects_degenerate_configuration() {
        // Emitter on a node of both standing waves with no loss and alpha = 0.
        let g = GeometryConfig::ideal();
        let lambda = g.lambda_bz().unwrap();
        let node = GeometryConfig { d: 0.5 * lambda, ..g };
        let err = full_scattering(&node, &EmitterConfig::new(FRAC_PI_4, 0.0), &DriveConfig::from_alpha(0.0));
        assert!(matches!(err, Err(Error::Degenerate(_))));
        // Rates vanish when the dipole points at a wall node.
        let wall = GeometryConfig { x: 0.0, y: 0.0, ..g };
        let err = full_scattering(&wall, &EmitterConfig::new(0.4, 0.0), &DriveConfig::from_alpha(0.0));
        assert!(matches!(err, Err(Error::Degenerate(_))));
        assert!(full_scattering(&wall, &EmitterConfig::new(0.4, 0.1), &DriveConfig::from_alpha(0.0)).is_ok());
    }

    #[test]
    fn full_rejects_evanescent_mode() {
        let g = GeometryConfig { k: 0.95, ..GeometryConfig::ideal() };
        let err = full_scattering(&g, &EmitterConfig::new(0.1, 0.0), &DriveConfig::from_alpha(1.0));
        assert!(matches!(err, Err(Error::Evanescent { .. })));
    }

    proptest! {
        #[test]
        fn closed_form_stokes_matches_matrix_route(theta in 0.0f64..PI, alpha in -50.0f64..50.0) {
            let s = ideal_scattering_matrix(&EmitterConfig::new(theta, 0.0), Alpha::Finite(alpha));
            let numeric = stokes_from_jones(&scatter(&s, &JonesState::h()));
            prop_assert!(numeric.distance(&stokes_of_output(theta, Alpha::Finite(alpha))) < 1e-12);
        }

        #[test]
        fn ideal_lossless_is_unitary(theta in -PI..PI, alpha in -100.0f64..100.0) {
            let s = ideal_scattering_matrix(&EmitterConfig::new(theta, 0.0), Alpha::Finite(alpha));
            prop_assert!(s.unitarity_defect() < 1e-10);
            prop_assert!((s.det().norm() - 1.0).abs() < 1e-10);
        }

        #[test]
        fn ideal_is_reciprocal(theta in -PI..PI, alpha in -100.0f64..100.0, g in 0.0f64..1.0) {
            let s = ideal_scattering_matrix(&EmitterConfig::new(theta, g), Alpha::Finite(alpha));
            prop_assert_eq!(s.r_ab, s.r_ba);
        }

        #[test]
        fn full_lossless_is_unitary(
            db in -0.15f64..0.15, xf in 0.02f64..0.98, yf in 0.02f64..0.98, d in 0.3f64..4.0,
            pa in 0.0f64..6.3, pb in 0.0f64..6.3, k in 1.2f64..2.0, theta in 0.0f64..PI,
            alpha in -5.0f64..5.0, gv in any::<bool>(),
        ) {
            let b = 1.0 + db;
            let g = GeometryConfig {
                a: 1.0, b, x: xf, y: yf * b, d,
                r_am: Complex64::from_polar(1.0, pa), r_bm: Complex64::from_polar(1.0, pb),
                k, group_velocity_correction: gv,
            };
            let full = full_scattering(&g, &EmitterConfig::new(theta, 0.0), &DriveConfig::from_alpha(alpha)).unwrap();
            prop_assert!(full.matrix.unitarity_defect() < 1e-10);
            prop_assert!(full.boundary_residual(&g) < 1e-12);
        }

        #[test]
        fn full_lossy_never_amplifies(
            xf in 0.05f64..0.95, d in 0.3f64..4.0, rm in 0.0f64..1.0, theta in 0.0f64..PI,
            alpha in -5.0f64..5.0, gamma in 0.0f64..0.5,
        ) {
            let g = GeometryConfig { x: xf, d, r_am: c(-rm, 0.0), r_bm: c(-rm, 0.0), ..GeometryConfig::ideal() };
            let full = full_scattering(&g, &EmitterConfig::new(theta, gamma), &DriveConfig::from_alpha(alpha)).unwrap();
            for input in [JonesState::h(), JonesState::v(), JonesState::r(), JonesState::l()] {
                prop_assert!(scatter(&full.matrix, &input).is_valid_output());
            }
        }
    }
}
