use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::parse::{parse_alpha, parse_angle, parse_complex};
use polarix::{Alpha, Complex64};

#[derive(Debug, Parser)]
#[command(
    name = "polarix",
    version,
    about = "Single-photon polarization converter: scattering, inverse design and sweeps"
)]
pub struct Cli {
    /// TOML file with [geometry], [emitter] and [drive] tables; flags win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Directory for data files.
    #[arg(long, global = true, default_value = ".", value_name = "DIR")]
    pub out_dir: PathBuf,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Worker threads for sweeps (falls back to POLARIX_THREADS).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Record the generation time in output metadata.
    #[arg(long, global = true)]
    pub stamp: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Ideal,
    Full,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scatter one input state and report the output.
    Scatter(ScatterArgs),
    /// Control parameters converting one state into another.
    Solve(SolveArgs),
    /// Rabi frequency curves realizing a given alpha.
    Drive(DriveArgs),
    /// Poincaré-sphere trajectory of an H input as alpha varies.
    Poincare(PoincareArgs),
    /// Run a figure preset or a custom TOML sweep file.
    Sweep(SweepArgs),
    /// Polarization map of the mode superposition over the cross-section.
    Modes(ModesArgs),
}

/// Geometry, emitter and drive flags shared by `scatter` and `sweep`.
#[derive(Debug, Clone, Default, Args)]
pub struct PhysicsArgs {
    /// Waveguide width.
    #[arg(long)]
    pub a: Option<f64>,
    /// Waveguide height.
    #[arg(long)]
    pub b: Option<f64>,
    /// Emitter x position (absolute).
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,
    /// Emitter y position (absolute).
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<f64>,
    /// Emitter-mirror separation in units of a.
    #[arg(long, conflicts_with = "d_over_lambda", allow_hyphen_values = true)]
    pub d: Option<f64>,
    /// Emitter-mirror separation in guided wavelengths of mode B.
    #[arg(long, allow_hyphen_values = true)]
    pub d_over_lambda: Option<f64>,
    /// Mirror reflection for mode A: `re` or `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub r_am: Option<Complex64>,
    /// Mirror reflection for mode B: `re` or `re,im`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub r_bm: Option<Complex64>,
    /// Free wavenumber in units of pi/a.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<f64>,
    /// Rescale Gamma_A by the group-velocity ratio when a != b.
    #[arg(long)]
    pub group_velocity_correction: bool,
    /// Dipole angle; accepts `deg`/`rad` suffixes (radians by default).
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Non-waveguide decay rate in Gamma0.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_e: Option<f64>,
    /// Drive parameter in Gamma0, or `inf` for two-photon resonance.
    #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
    pub alpha: Option<Alpha>,
    /// Rabi frequency; requires both detunings and overrides --alpha.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta_ge: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta_es: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ScatterArgs {
    #[command(flatten)]
    pub physics: PhysicsArgs,
    /// Input state: H, V, L, R, D, linear:<deg> or jones:<reA>,<imA>,<reB>,<imB>.
    #[arg(long, default_value = "H")]
    pub input: String,
    /// Optional target state for the fidelity.
    #[arg(long)]
    pub target: Option<String>,
    /// Kernel: closed-form ideal converter or the full emitter + mirror model.
    #[arg(long, value_enum, default_value_t = ModelArg::Ideal)]
    pub model: ModelArg,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: String,
    /// Target state.
    #[arg(long, alias = "target")]
    pub output: String,
    /// With --delta-es, also report the Rabi frequency of each branch.
    #[arg(long, requires = "delta_es", allow_hyphen_values = true)]
    pub delta_ge: Option<f64>,
    #[arg(long, requires = "delta_ge", allow_hyphen_values = true)]
    pub delta_es: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DriveArgs {
    /// Drive condition; without it the figS3 preset is written.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Comma-separated Delta_ge values.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "alpha")]
    pub delta_ge: Option<Vec<f64>>,
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    pub delta_es_min: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    pub delta_es_max: f64,
    #[arg(long, default_value_t = 201)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct PoincareArgs {
    /// Dipole angle; accepts `deg`/`rad` suffixes.
    #[arg(long, value_parser = parse_angle, default_value = "45deg", allow_hyphen_values = true)]
    pub theta: f64,
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 201)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Preset name (fig2c, fig2d, fig3a, fig3b, fig3c, figS2..figS8) or a
    /// path to a TOML sweep specification.
    pub target: String,
    /// Fixed-parameter overrides applied to every panel.
    #[command(flatten)]
    pub physics: PhysicsArgs,
}

#[derive(Debug, Args)]
pub struct ModesArgs {
    /// Phase of mode B relative to mode A; accepts `deg`/`rad` suffixes.
    #[arg(long, value_parser = parse_angle, default_value = "90deg", allow_hyphen_values = true)]
    pub phase_diff: f64,
    #[arg(long, default_value_t = 41)]
    pub nx: usize,
    #[arg(long, default_value_t = 41)]
    pub ny: usize,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn angles_and_negative_values() {
        let cli =
            Cli::try_parse_from(["polarix", "scatter", "--theta", "45deg", "--alpha", "-2", "--r-am", "-0.9,0.1"])
                .unwrap();
        let Command::Scatter(s) = cli.command else { panic!() };
        assert!((s.physics.theta.unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert_eq!(s.physics.alpha, Some(Alpha::Finite(-2.0)));
        assert_eq!(s.physics.r_am, Some(Complex64::new(-0.9, 0.1)));
    }
}
