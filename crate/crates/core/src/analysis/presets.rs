//! One preset per figure id. Ranges follow the reference plots;
//! the grid densities are our own choice (201 nodes for 1D, 101 x 101 for 2D)
//! and are picked so the quoted thresholds fall on grid nodes.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use super::{Axis, Metric, Model, Scenario, SweepParam, SweepSpec};
use crate::control::solve_controls;
use crate::error::{Error, Result};
use crate::polarization::JonesState;
use crate::scattering::Alpha;

pub const PRESETS: &[&str] =
    &["fig2c", "fig2d", "fig3a", "fig3b", "fig3c", "figS2", "figS3", "figS4", "figS5", "figS6", "figS7", "figS8"];

/// The three conversions used in every robustness study.
const ROBUSTNESS: [(&str, &str); 3] = [("H", "V"), ("V", "L"), ("R", "V")];
const GAMMAS: [f64; 3] = [0.0, 0.05, 0.1];

/// `(alpha, theta)` of the ideal lossless converter for a conversion, taking
/// the solver branch with `theta` in `[0, pi/2)`.
pub fn ideal_controls(input: &str, target: &str) -> Result<(Alpha, f64)> {
    let input: JonesState = input.parse()?;
    let target: JonesState = target.parse()?;
    let (b1, b2) = solve_controls(&input, &target)?;
    let pick = if b1.theta < FRAC_PI_2 { b1 } else { b2 };
    Ok((pick.alpha, pick.theta))
}

fn spec(preset: &str, panel: String, model: Model, scenario: Scenario, axes: Vec<Axis>) -> SweepSpec {
    SweepSpec {
        preset: preset.into(),
        panel,
        model,
        scenario,
        axes,
        input: "H".into(),
        target: None,
        metrics: Vec::new(),
    }
}

fn conversion(preset: &str, input: &str, target: &str, scenario: Scenario, axes: Vec<Axis>) -> Result<SweepSpec> {
    let (alpha, theta) = ideal_controls(input, target)?;
    Ok(SweepSpec {
        input: input.into(),
        target: Some(target.into()),
        metrics: vec![Metric::Fidelity, Metric::Dissipation],
        ..spec(preset, format!("{input}->{target}"), Model::Full, Scenario { alpha, theta, ..scenario }, axes)
    })
}

fn robustness(preset: &str, scenario: Scenario, axes: impl Fn() -> Vec<Axis>) -> Result<Vec<SweepSpec>> {
    ROBUSTNESS.iter().map(|(i, t)| conversion(preset, i, t, scenario.clone(), axes())).collect()
}

fn stokes(preset: &str, panel: &str, scenario: Scenario, axis: Axis) -> SweepSpec {
    SweepSpec {
        metrics: vec![Metric::S1, Metric::S2, Metric::S3],
        ..spec(preset, panel.into(), Model::Ideal, scenario, vec![axis])
    }
}

/// Sweep specifications of a preset, one per panel.
pub fn preset(name: &str) -> Result<Vec<SweepSpec>> {
    let base = Scenario::default();
    let lossy = Scenario { gamma_e: 0.05, ..base.clone() };
    Ok(match name {
        "fig2c" => vec![stokes(
            name,
            "alpha=0",
            Scenario { alpha: Alpha::Finite(0.0), ..base },
            Axis::range(SweepParam::Theta, 0.0, FRAC_PI_2, 201),
        )],
        "fig2d" => vec![stokes(
            name,
            "theta=pi/4",
            Scenario { theta: FRAC_PI_4, ..base },
            Axis::range(SweepParam::Alpha, -10.0, 10.0, 201),
        )],
        "fig3a" => vec![conversion(
            name,
            "V",
            "L",
            lossy,
            vec![Axis::range(SweepParam::DeltaBa, -0.05, 0.05, 101), Axis::range(SweepParam::XOverA, 0.25, 0.75, 101)],
        )?],
        "fig3b" => vec![conversion(
            name,
            "V",
            "L",
            lossy,
            vec![Axis::range(SweepParam::DOverLambda, 0.70, 0.80, 101), Axis::range(SweepParam::RM, -1.0, -0.95, 101)],
        )?],
        "fig3c" => vec![SweepSpec {
            input: "H".into(),
            target: Some("ideal_lossless".into()),
            metrics: vec![Metric::Fidelity, Metric::Dissipation],
            ..spec(
                name,
                "H".into(),
                Model::Full,
                lossy,
                vec![
                    Axis::range(SweepParam::Alpha, -10.0, 10.0, 101),
                    Axis::range(SweepParam::Theta, 0.0, FRAC_PI_2, 101),
                ],
            )
        }],
        "figS2" => vec![SweepSpec {
            metrics: vec![Metric::CaRe, Metric::CbRe, Metric::Eta, Metric::Chi],
            ..spec(
                name,
                "H,alpha=0".into(),
                Model::Ideal,
                Scenario { alpha: Alpha::Finite(0.0), ..base },
                vec![Axis::range(SweepParam::Theta, 0.0, PI, 181)],
            )
        }],
        "figS3" => [
            ("alpha=+2", 2.0, [-1.7, -1.0, 0.0, 1.0, -2.3, -3.0, -4.0, -5.0]),
            ("alpha=-2", -2.0, [2.3, 3.0, 4.0, 5.0, 1.7, 1.0, 0.0, -1.0]),
            ("alpha=0", 0.0, [0.3, 1.0, 2.0, 3.0, -0.3, -1.0, -2.0, -3.0]),
        ]
        .into_iter()
        .map(|(panel, alpha, ge)| SweepSpec {
            metrics: vec![Metric::Omega],
            ..spec(
                name,
                panel.into(),
                Model::Ideal,
                Scenario { alpha: Alpha::Finite(alpha), ..base.clone() },
                vec![Axis::list(SweepParam::DeltaGe, &ge), Axis::range(SweepParam::DeltaEs, -10.0, 10.0, 201)],
            )
        })
        .collect(),
        "figS4" => robustness(name, base, || {
            vec![Axis::list(SweepParam::GammaE, &GAMMAS), Axis::range(SweepParam::DeltaBa, -0.05, 0.05, 201)]
        })?,
        "figS5" => robustness(name, lossy, || {
            vec![Axis::range(SweepParam::XOverA, 0.4, 0.6, 101), Axis::range(SweepParam::YOverB, 0.4, 0.6, 101)]
        })?,
        "figS6" => robustness(name, base, || {
            vec![Axis::list(SweepParam::GammaE, &GAMMAS), Axis::range(SweepParam::DOverLambda, 0.6, 0.9, 201)]
        })?,
        "figS7" => robustness(name, base, || {
            vec![Axis::list(SweepParam::GammaE, &GAMMAS), Axis::range(SweepParam::RM, -1.0, -0.95, 201)]
        })?,
        "figS8" => {
            let mut panels: Vec<SweepSpec> = [("H", "R"), ("R", "H"), ("H", "V")]
                .iter()
                .map(|(i, t)| {
                    conversion(name, i, t, base.clone(), vec![Axis::range(SweepParam::GammaE, 0.0, 0.1, 201)])
                })
                .collect::<Result<_>>()?;
            panels.push(SweepSpec {
                metrics: vec![Metric::Dissipation],
                ..spec(
                    name,
                    "H,gamma_e=0.1".into(),
                    Model::Full,
                    Scenario { gamma_e: 0.1, ..base },
                    vec![
                        Axis::range(SweepParam::Alpha, -10.0, 10.0, 101),
                        Axis::range(SweepParam::Theta, 0.0, FRAC_PI_2, 101),
                    ],
                )
            });
            panels
        }
        _ => {
            return Err(Error::InvalidSweep(format!("unknown preset `{name}` (known: {})", PRESETS.join(", "))));
        }
    })
}
