//! Single-photon polarization converter built from a driven Λ emitter in a
//! rectangular waveguide terminated by a mirror.
//!
//! Units throughout: rates and detunings in `Gamma0`, lengths in the guide
//! width `a`, free wavenumber in `pi/a`.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod control;
pub mod error;
pub mod polarization;
pub mod scattering;
pub mod waveguide;

pub use control::{realize_drive, rotation_angle, solve_controls, ControlSolution, DriveRealization};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use polarization::{
    dissipation_probability, ellipse_angles, fidelity, named_state, stokes_from_jones, EllipseAngles, JonesState,
    NamedState, StokesVector,
};
pub use scattering::{
    alpha_of_drive, drive_for_alpha, full_scattering, ideal_scattering_matrix, scatter, stokes_of_output, Alpha,
    DriveConfig, DriveTriple, FullScattering, ModeResponse, ScatteringMatrix,
};
pub use waveguide::{
    coupling_amplitudes, cross_section_map, emission_rates, kz, local_polarization, mode_profile, CrossSectionMap,
    EmitterConfig, FieldPoint, GeometryConfig, Mode, GAMMA0,
};
