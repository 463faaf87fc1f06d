//! Shared fixtures for the criterion benches.

use polarix::analysis::{preset, SweepSpec};
use polarix::{DriveConfig, EmitterConfig, GeometryConfig, JonesState};

/// Ideal geometry, S+ emitter, lossy, alpha = 2.
pub fn lossy_point() -> (GeometryConfig, EmitterConfig, DriveConfig) {
    (GeometryConfig::ideal(), EmitterConfig::new(std::f64::consts::FRAC_PI_4, 0.05), DriveConfig::from_alpha(2.0))
}

/// A spread of (input, target) pairs covering every solver branch.
pub fn solver_pairs() -> Vec<(JonesState, JonesState)> {
    let names = ["H", "V", "L", "R", "D", "linear:30", "jones:0.6,0.0,0.0,0.8"];
    let states: Vec<JonesState> = names.iter().map(|n| n.parse().expect("valid state")).collect();
    states.iter().flat_map(|a| states.iter().map(move |b| (*a, *b))).collect()
}

/// The 101 x 101 fidelity map used as the sweep workload.
pub fn fig3a() -> SweepSpec {
    preset("fig3a").expect("preset exists").remove(0)
}
