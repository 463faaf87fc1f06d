//! Inverse design: the `(alpha, theta)` that turn one polarization into
//! another in the ideal lossless converter, the drive fields that realize a
//! given `alpha`, and the linear-rotation angle map.
//!
//! States are first brought to the form `[I_A e^{i xi_I}, I_B]` with `I_B >= 0`
//! by a global phase. Each conversion then has two closed-form branches with
//! `alpha2 = -alpha1` and `theta2 = theta1 -+ pi/2`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::polarization::{ellipse_angles, wrap_half_turn, JonesState};
use crate::scattering::{alpha_of_drive, drive_for_alpha, Alpha};
use crate::waveguide::GAMMA0;

/// Below this the branch formulas are 0/0 and the special cases take over.
pub const DEGENERATE_DEN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ControlSolution {
    pub alpha: Alpha,
    /// Dipole angle, in `[0, pi)`.
    pub theta: f64,
    /// Phase of the produced output relative to the phase-normalised target,
    /// in `[-pi, pi)`.
    pub xi_co: f64,
    /// 1 or 2.
    pub branch: u8,
}

/// `[I_A e^{i xi}, I_B]` with `I_B` real and non-negative.
#[derive(Debug, Clone, Copy)]
struct Canonical {
    amp_a: f64,
    amp_b: f64,
    xi: f64,
    state: JonesState,
}

fn canonical(s: &JonesState) -> Canonical {
    let state = if s.c_b.norm() > 0.0 { s.with_global_phase(-s.c_b.arg()) } else { *s };
    let amp_a = state.c_a.norm();
    let xi = if amp_a > 0.0 { state.c_a.arg() } else { 0.0 };
    Canonical { amp_a, amp_b: state.c_b.re.max(0.0), xi, state }
}

/// Wraps into `[-pi, pi)`.
pub fn wrap_phase(x: f64) -> f64 {
    let w = (x + PI).rem_euclid(2.0 * PI) - PI;
    if w >= PI {
        -PI
    } else {
        w
    }
}

/// Both control branches converting `input` into `target` (up to a global
/// phase) with the ideal lossless converter.
///
/// Special cases where the closed form is 0/0:
/// * equivalent states: the EIT identity, `alpha = inf`, `theta = 0`;
/// * complex-conjugate states (mirror images through the equator of the
///   sphere, e.g. `R -> L`): `alpha = 0` with `theta` on the input's ellipse
///   axis, which is a pi rotation about that axis.
pub fn solve_controls(input: &JonesState, target: &JonesState) -> Result<(ControlSolution, ControlSolution)> {
    input.ensure_normalized()?;
    target.ensure_normalized()?;
    let i = canonical(input);
    let o = canonical(target);

    let den = ((i.amp_a.powi(2) - o.amp_a.powi(2)).powi(2)
        + (i.amp_a * i.amp_b * i.xi.cos() - o.amp_a * o.amp_b * o.xi.cos()).powi(2))
    .sqrt();

    if den < DEGENERATE_DEN {
        return Ok(degenerate(&i, &o));
    }

    let num = i.amp_a * i.amp_b * i.xi.sin() + o.amp_a * o.amp_b * o.xi.sin();
    let branch = |sg: f64, id: u8| {
        let alpha = sg * 2.0 * GAMMA0 * num / den;
        let sin2 = sg * (i.amp_a.powi(2) - o.amp_a.powi(2)) / den;
        let cos2 = sg * (-i.amp_a * i.amp_b * i.xi.cos() + o.amp_a * o.amp_b * o.xi.cos()) / den;
        let theta = wrap_half_turn(sin2.atan2(cos2) / 2.0);
        let phase = sg
            * (-i.amp_a * o.amp_b * Complex64::from_polar(1.0, i.xi)
                + i.amp_b * o.amp_a * Complex64::from_polar(1.0, -o.xi))
            / Complex64::new(den, -sg * num);
        ControlSolution { alpha: Alpha::Finite(alpha), theta, xi_co: wrap_phase(phase.arg()), branch: id }
    };
    Ok((branch(1.0, 1), branch(-1.0, 2)))
}

fn degenerate(i: &Canonical, o: &Canonical) -> (ControlSolution, ControlSolution) {
    let overlap = o.state.inner(&i.state);
    if overlap.norm() >= 1.0 - DEGENERATE_DEN {
        let xi_co = wrap_phase(overlap.arg());
        let sol = |branch| ControlSolution { alpha: Alpha::Infinite, theta: 0.0, xi_co, branch };
        return (sol(1), sol(2));
    }
    // alpha = 0 reflects the Jones vector about the linear axis at theta.
    let eta = ellipse_angles(&i.state.stokes()).eta;
    let sol = |theta: f64, branch| {
        let (c2, s2) = ((2.0 * theta).cos(), (2.0 * theta).sin());
        let out = JonesState::new(-c2 * i.state.c_a - s2 * i.state.c_b, -s2 * i.state.c_a + c2 * i.state.c_b);
        ControlSolution { alpha: Alpha::Finite(0.0), theta, xi_co: wrap_phase(o.state.inner(&out).arg()), branch }
    };
    (sol(eta, 1), sol(wrap_half_turn(eta + FRAC_PI_2), 2))
}

/// Drive settings realizing a control solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DriveRealization {
    /// `Omega` at the requested detunings, with `alpha` recomputed from it.
    Finite { omega_rabi: f64, alpha_check: Alpha },
    /// Two-photon resonance: set `Delta_es = Delta_ge`, any `Omega > 0`.
    Eit { delta_es: f64 },
}

pub fn realize_drive(sol: &ControlSolution, delta_ge: f64, delta_es: f64) -> Result<DriveRealization> {
    match sol.alpha {
        Alpha::Infinite => Ok(DriveRealization::Eit { delta_es: delta_ge }),
        Alpha::Finite(alpha) => {
            let omega_rabi = drive_for_alpha(alpha, delta_ge, delta_es)?;
            let alpha_check = alpha_of_drive(omega_rabi, delta_ge, delta_es)?;
            Ok(DriveRealization::Finite { omega_rabi, alpha_check })
        }
    }
}

/// Output polarization angle when `S_rot(theta)` acts on `linear(zeta)`:
/// `2 theta - zeta` folded into `[0, pi)`.
pub fn rotation_angle(theta: f64, zeta: f64) -> f64 {
    let eta = 2.0 * theta - zeta;
    if (0.0..PI).contains(&eta) {
        eta
    } else if (-PI..0.0).contains(&eta) {
        eta + PI
    } else if (PI..2.0 * PI).contains(&eta) {
        eta - PI
    } else {
        wrap_half_turn(eta)
    }
}
