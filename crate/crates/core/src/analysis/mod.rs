//! Parameter sweeps over the converter: Poincaré trajectories, fidelity and
//! dissipation maps under non-ideal geometry, and drive-field curves.
//!
//! A sweep is a [`Scenario`] (the fixed configuration) plus one or two
//! [`Axis`] that overwrite a named parameter at each grid point. Grid points
//! are evaluated in parallel and stored by index, so results do not depend
//! on the worker count.

mod output;
mod presets;

pub use output::{modes_csv, write_csv, write_json, CSV_SCHEMA_VERSION};
pub use presets::{ideal_controls, preset, PRESETS};

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polarization::{ellipse_angles, fidelity, JonesState, StokesVector};
use crate::scattering::{
    alpha_of_drive, drive_for_alpha, full_scattering, ideal_scattering_matrix, stokes_of_output, Alpha, DriveConfig,
    DriveTriple, ScatteringMatrix,
};
use crate::waveguide::{EmitterConfig, GeometryConfig, DEFAULT_K};

/// Emitter-mirror separation, absolute or in guided wavelengths of mode B.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Absolute(f64),
    LambdaBz(f64),
}

/// Fixed part of a sweep. Positions are fractions of the cross-section so a
/// swept `b` keeps the emitter at the same relative height.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Scenario {
    pub a: f64,
    pub b: f64,
    pub x_over_a: f64,
    pub y_over_b: f64,
    pub d: Distance,
    pub r_am: Complex64,
    pub r_bm: Complex64,
    /// Free wavenumber in units of `pi/a`.
    pub k: f64,
    pub group_velocity_correction: bool,
    pub theta: f64,
    pub gamma_e: f64,
    /// Ignored when `omega_rabi` is set; then the drive triple decides.
    pub alpha: Alpha,
    pub omega_rabi: Option<f64>,
    pub delta_ge: Option<f64>,
    pub delta_es: Option<f64>,
}

impl Default for Scenario {
    /// The ideal converter configured as `S+`.
    fn default() -> Self {
        Self {
            a: 1.0,
            b: 1.0,
            x_over_a: 0.5,
            y_over_b: 0.5,
            d: Distance::LambdaBz(0.75),
            r_am: Complex64::new(-1.0, 0.0),
            r_bm: Complex64::new(-1.0, 0.0),
            k: DEFAULT_K,
            group_velocity_correction: false,
            theta: FRAC_PI_4,
            gamma_e: 0.0,
            alpha: Alpha::Finite(2.0),
            omega_rabi: None,
            delta_ge: None,
            delta_es: None,
        }
    }
}

/// A scenario turned into the kernel inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resolved {
    pub geometry: GeometryConfig,
    pub emitter: EmitterConfig,
    pub drive: DriveConfig,
    /// Rabi frequency realizing `alpha` at the given detunings; `None` when
    /// the detunings are not set, `alpha` is infinite or the sign is wrong.
    pub omega: Option<f64>,
}

impl Scenario {
    pub fn geometry(&self) -> Result<GeometryConfig> {
        let mut g = GeometryConfig {
            a: self.a,
            b: self.b,
            x: self.x_over_a * self.a,
            y: self.y_over_b * self.b,
            d: 1.0,
            r_am: self.r_am,
            r_bm: self.r_bm,
            k: self.k,
            group_velocity_correction: self.group_velocity_correction,
        };
        g.d = match self.d {
            Distance::Absolute(d) => d,
            Distance::LambdaBz(f) => f * g.lambda_bz()?,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn drive(&self) -> Result<DriveConfig> {
        match (self.omega_rabi, self.delta_ge, self.delta_es) {
            (Some(om), Some(ge), Some(es)) => DriveConfig::from_triple(om, ge, es),
            (Some(_), _, _) => Err(Error::InvalidSweep("omega_rabi needs both delta_ge and delta_es".into())),
            (None, Some(ge), Some(es)) => {
                // Attach the realizing drive when there is one so c_s is available.
                let triple = self
                    .alpha
                    .finite()
                    .and_then(|a| drive_for_alpha(a, ge, es).ok())
                    .map(|omega_rabi| DriveTriple { omega_rabi, delta_ge: ge, delta_es: es })
                    .filter(|t| alpha_of_drive(t.omega_rabi, ge, es).is_ok_and(|a| a.approx_eq(self.alpha, 1e-10)));
                Ok(DriveConfig { alpha: self.alpha, triple })
            }
            _ => Ok(DriveConfig::from_alpha(self.alpha)),
        }
    }

    pub fn resolve(&self) -> Result<Resolved> {
        let geometry = self.geometry()?;
        let emitter = EmitterConfig::new(self.theta, self.gamma_e);
        emitter.validate()?;
        let drive = self.drive()?;
        let omega = match (self.omega_rabi, self.delta_ge, self.delta_es, drive.alpha) {
            (Some(om), ..) => Some(om),
            (None, Some(ge), Some(es), Alpha::Finite(a)) => drive_for_alpha(a, ge, es).ok(),
            _ => None,
        };
        Ok(Resolved { geometry, emitter, drive, omega })
    }
}

/// Scenario fields a sweep axis can drive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    /// `b - a`.
    DeltaBa,
    XOverA,
    YOverB,
    /// `d` in units of `lambda_Bz`.
    DOverLambda,
    /// `d` in units of `a`.
    D,
    /// Real reflection coefficient applied to both modes.
    RM,
    K,
    Theta,
    Alpha,
    GammaE,
    OmegaRabi,
    DeltaGe,
    DeltaEs,
    /// Input replaced by `linear(zeta)`.
    Zeta,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::DeltaBa => "delta_ba",
            SweepParam::XOverA => "x_over_a",
            SweepParam::YOverB => "y_over_b",
            SweepParam::DOverLambda => "d_over_lambda",
            SweepParam::D => "d",
            SweepParam::RM => "r_m",
            SweepParam::K => "k",
            SweepParam::Theta => "theta",
            SweepParam::Alpha => "alpha",
            SweepParam::GammaE => "gamma_e",
            SweepParam::OmegaRabi => "omega_rabi",
            SweepParam::DeltaGe => "delta_ge",
            SweepParam::DeltaEs => "delta_es",
            SweepParam::Zeta => "zeta",
        }
    }

    fn apply(self, s: &mut Scenario, input: &mut JonesState, v: f64) {
        match self {
            SweepParam::DeltaBa => s.b = s.a + v,
            SweepParam::XOverA => s.x_over_a = v,
            SweepParam::YOverB => s.y_over_b = v,
            SweepParam::DOverLambda => s.d = Distance::LambdaBz(v),
            SweepParam::D => s.d = Distance::Absolute(v),
            SweepParam::RM => {
                s.r_am = Complex64::new(v, 0.0);
                s.r_bm = Complex64::new(v, 0.0);
            }
            SweepParam::K => s.k = v,
            SweepParam::Theta => s.theta = v,
            SweepParam::Alpha => s.alpha = Alpha::from(v),
            SweepParam::GammaE => s.gamma_e = v,
            SweepParam::OmegaRabi => s.omega_rabi = Some(v),
            SweepParam::DeltaGe => s.delta_ge = Some(v),
            SweepParam::DeltaEs => s.delta_es = Some(v),
            SweepParam::Zeta => *input = JonesState::new(Complex64::new(v.cos(), 0.0), Complex64::new(v.sin(), 0.0)),
        }
    }
}

/// Grid values: an inclusive linear range or an explicit list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AxisValues {
    Range { min: f64, max: f64, count: usize },
    List { values: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub param: SweepParam,
    #[serde(flatten)]
    pub values: AxisValues,
}

impl Axis {
    pub fn range(param: SweepParam, min: f64, max: f64, count: usize) -> Self {
        Self { param, values: AxisValues::Range { min, max, count } }
    }

    pub fn list(param: SweepParam, values: &[f64]) -> Self {
        Self { param, values: AxisValues::List { values: values.to_vec() } }
    }

    /// Grid nodes; the last node of a range is exactly `max`.
    pub fn grid(&self) -> Vec<f64> {
        match &self.values {
            AxisValues::Range { min, max, count } => linspace(*min, *max, *count),
            AxisValues::List { values } => values.clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSweep(format!("axis {}: {m}", self.param.name())));
        match &self.values {
            AxisValues::Range { min, max, count } => {
                if *count < 2 {
                    return bad(format!("count must be >= 2, got {count}"));
                }
                if !(min.is_finite() && max.is_finite() && min < max) {
                    return bad(format!("need finite min < max, got [{min}, {max}]"));
                }
            }
            AxisValues::List { values } => {
                if values.is_empty() {
                    return bad("empty value list".into());
                }
                if values.iter().any(|v| v.is_nan()) {
                    return bad("NaN in value list".into());
                }
            }
        }
        let grid = self.grid();
        let (lo, hi) = grid.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &v| (l.min(v), h.max(v)));
        let in_domain = match self.param {
            SweepParam::XOverA | SweepParam::YOverB => lo >= 0.0 && hi <= 1.0,
            SweepParam::DOverLambda | SweepParam::D | SweepParam::K => lo > 0.0,
            SweepParam::RM => lo >= -1.0 && hi <= 1.0,
            SweepParam::GammaE | SweepParam::OmegaRabi => lo >= 0.0,
            SweepParam::Alpha => true,
            _ => lo.is_finite() && hi.is_finite(),
        };
        if !in_domain {
            return bad(format!("values [{lo}, {hi}] outside the parameter's domain"));
        }
        Ok(())
    }
}

pub fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![min];
    }
    let step = (max - min) / (count - 1) as f64;
    (0..count).map(|i| if i + 1 == count { max } else { min + step * i as f64 }).collect()
}

/// Output quantities a sweep can tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Metric {
    #[serde(rename = "fidelity")]
    Fidelity,
    #[serde(rename = "dissipation")]
    Dissipation,
    #[serde(rename = "s1")]
    S1,
    #[serde(rename = "s2")]
    S2,
    #[serde(rename = "s3")]
    S3,
    #[serde(rename = "eta")]
    Eta,
    #[serde(rename = "chi")]
    Chi,
    #[serde(rename = "omega")]
    Omega,
    #[serde(rename = "c_a_re")]
    CaRe,
    #[serde(rename = "c_a_im")]
    CaIm,
    #[serde(rename = "c_b_re")]
    CbRe,
    #[serde(rename = "c_b_im")]
    CbIm,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Fidelity => "fidelity",
            Metric::Dissipation => "dissipation",
            Metric::S1 => "s1",
            Metric::S2 => "s2",
            Metric::S3 => "s3",
            Metric::Eta => "eta",
            Metric::Chi => "chi",
            Metric::Omega => "omega",
            Metric::CaRe => "c_a_re",
            Metric::CaIm => "c_a_im",
            Metric::CbRe => "c_b_re",
            Metric::CbIm => "c_b_im",
        }
    }

    fn needs_output(self) -> bool {
        !matches!(self, Metric::Omega)
    }
}

/// Which kernel produces the scattering matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    /// Full emitter + mirror model; uses every geometry field.
    #[default]
    Full,
    /// Closed-form ideal matrix; geometry is ignored.
    Ideal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    #[serde(default)]
    pub preset: String,
    #[serde(default)]
    pub panel: String,
    #[serde(default)]
    pub model: Model,
    #[serde(default)]
    pub scenario: Scenario,
    pub axes: Vec<Axis>,
    /// State syntax as accepted by `JonesState::from_str`.
    #[serde(default = "default_input")]
    pub input: String,
    /// A state, or `ideal_lossless` for the lossless output of the same
    /// controls at every grid point.
    #[serde(default)]
    pub target: Option<String>,
    pub metrics: Vec<Metric>,
}

fn default_input() -> String {
    "H".into()
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Target {
    State(JonesState),
    IdealLossless,
}

fn parse_target(t: &str) -> Result<Target> {
    match t.trim().to_ascii_lowercase().as_str() {
        "ideal" | "ideal_lossless" => Ok(Target::IdealLossless),
        _ => Ok(Target::State(t.parse()?)),
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(Error::InvalidSweep(format!("expected one or two axes, got {}", self.axes.len())));
        }
        if self.axes.len() == 2 && self.axes[0].param == self.axes[1].param {
            return Err(Error::InvalidSweep(format!("axis {} swept twice", self.axes[0].param.name())));
        }
        for a in &self.axes {
            a.validate()?;
        }
        if self.metrics.is_empty() {
            return Err(Error::InvalidSweep("no output metrics requested".into()));
        }
        for (i, m) in self.metrics.iter().enumerate() {
            if self.metrics[..i].contains(m) {
                return Err(Error::InvalidSweep(format!("metric {} listed twice", m.name())));
            }
        }
        self.input.parse::<JonesState>()?;
        match &self.target {
            Some(t) => {
                parse_target(t)?;
            }
            None if self.metrics.contains(&Metric::Fidelity) => {
                return Err(Error::InvalidSweep("fidelity needs a target state".into()));
            }
            None => {}
        }
        Ok(())
    }
}

/// One named grid axis of a result.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxisGrid {
    pub name: String,
    pub values: Vec<f64>,
}

/// Values of one metric, flattened with the first axis slowest. `None` marks
/// points where the quantity does not exist (e.g. an infeasible drive).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricGrid {
    pub name: String,
    pub values: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub preset: String,
    pub panel: String,
    pub axes: Vec<AxisGrid>,
    pub metrics: Vec<MetricGrid>,
    /// Resolved configuration echoed into every output.
    pub config: serde_json::Value,
}

impl SweepResult {
    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.values.len()).collect()
    }

    pub fn len(&self) -> usize {
        self.shape().iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn axis(&self, name: &str) -> Option<&AxisGrid> {
        self.axes.iter().find(|a| a.name == name)
    }

    pub fn metric(&self, name: &str) -> Option<&MetricGrid> {
        self.metrics.iter().find(|m| m.name == name)
    }

    /// Axis indices of a flat index.
    pub fn unravel(&self, mut flat: usize) -> Vec<usize> {
        let shape = self.shape();
        let mut idx = vec![0; shape.len()];
        for (k, n) in shape.iter().enumerate().rev() {
            idx[k] = flat % n;
            flat /= n;
        }
        idx
    }

    pub fn ravel(&self, idx: &[usize]) -> usize {
        self.shape().iter().zip(idx).fold(0, |acc, (n, i)| acc * n + i)
    }

    pub fn value(&self, metric: &str, idx: &[usize]) -> Option<f64> {
        self.metric(metric)?.values[self.ravel(idx)]
    }

    /// Index of the nearest axis node to `v`.
    pub fn nearest(&self, axis: &str, v: f64) -> Option<usize> {
        let a = self.axis(axis)?;
        a.values.iter().enumerate().min_by(|x, y| (x.1 - v).abs().total_cmp(&(y.1 - v).abs())).map(|(i, _)| i)
    }

    /// Flat index and value of the largest present value of a metric.
    pub fn argmax(&self, metric: &str) -> Option<(usize, f64)> {
        self.metric(metric)?
            .values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|v| (i, v)))
            .max_by(|a, b| a.1.total_cmp(&b.1))
    }
}

fn grid_error(spec: &SweepSpec, idx: &[usize], grids: &[Vec<f64>], e: Error) -> Error {
    Error::GridPoint {
        coords: spec.axes.iter().zip(idx).zip(grids).map(|((a, &i), g)| (a.param.name().to_string(), g[i])).collect(),
        source: Box::new(e),
    }
}

fn matrix_for(model: Model, r: &Resolved) -> Result<ScatteringMatrix> {
    match model {
        Model::Full => Ok(full_scattering(&r.geometry, &r.emitter, &r.drive)?.matrix),
        Model::Ideal => Ok(ideal_scattering_matrix(&r.emitter, r.drive.alpha)),
    }
}

fn eval_point(spec: &SweepSpec, input: JonesState, target: Option<Target>, coords: &[f64]) -> Result<Vec<Option<f64>>> {
    let mut scenario = spec.scenario.clone();
    let mut input = input;
    for (axis, &v) in spec.axes.iter().zip(coords) {
        axis.param.apply(&mut scenario, &mut input, v);
    }
    let resolved = scenario.resolve()?;
    let output = if spec.metrics.iter().any(|m| m.needs_output()) {
        Some(matrix_for(spec.model, &resolved)?.apply(&input))
    } else {
        None
    };
    let target_state = match target {
        Some(Target::State(s)) => Some(s),
        Some(Target::IdealLossless) => {
            let lossless = EmitterConfig::new(resolved.emitter.theta, 0.0);
            Some(ideal_scattering_matrix(&lossless, resolved.drive.alpha).apply(&input))
        }
        None => None,
    };
    let stokes = output.map(|o| {
        let n = o.norm_sqr();
        let s = o.stokes();
        if n > 0.0 {
            StokesVector::new(s.s1 / n, s.s2 / n, s.s3 / n)
        } else {
            s
        }
    });
    let angles = stokes.map(|s| ellipse_angles(&s));
    Ok(spec
        .metrics
        .iter()
        .map(|m| match m {
            Metric::Fidelity => output.zip(target_state).map(|(o, t)| fidelity(&o, &t)),
            Metric::Dissipation => output.map(|o| 1.0 - o.norm_sqr()),
            Metric::S1 => stokes.map(|s| s.s1),
            Metric::S2 => stokes.map(|s| s.s2),
            Metric::S3 => stokes.map(|s| s.s3),
            Metric::Eta => angles.map(|a| a.eta),
            Metric::Chi => angles.map(|a| a.chi),
            Metric::Omega => resolved.omega,
            Metric::CaRe => output.map(|o| o.c_a.re),
            Metric::CaIm => output.map(|o| o.c_a.im),
            Metric::CbRe => output.map(|o| o.c_b.re),
            Metric::CbIm => output.map(|o| o.c_b.im),
        })
        .collect())
}

/// Evaluates every grid point; the first failing point in grid order aborts
/// the sweep with its coordinates.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let input: JonesState = spec.input.parse()?;
    let target = spec.target.as_deref().map(parse_target).transpose()?;
    let grids: Vec<Vec<f64>> = spec.axes.iter().map(Axis::grid).collect();
    let shape: Vec<usize> = grids.iter().map(Vec::len).collect();
    let total: usize = shape.iter().product();

    let unravel = |mut flat: usize| {
        let mut idx = vec![0; shape.len()];
        for (k, n) in shape.iter().enumerate().rev() {
            idx[k] = flat % n;
            flat /= n;
        }
        idx
    };

    let rows: Vec<Result<Vec<Option<f64>>>> = (0..total)
        .into_par_iter()
        .map(|flat| {
            let idx = unravel(flat);
            let coords: Vec<f64> = idx.iter().zip(&grids).map(|(&i, g)| g[i]).collect();
            eval_point(spec, input, target, &coords).map_err(|e| grid_error(spec, &idx, &grids, e))
        })
        .collect();

    let mut metrics: Vec<MetricGrid> = spec
        .metrics
        .iter()
        .map(|m| MetricGrid { name: m.name().to_string(), values: Vec::with_capacity(total) })
        .collect();
    for row in rows {
        for (grid, v) in metrics.iter_mut().zip(row?) {
            if v.is_some_and(|x| !x.is_finite()) {
                return Err(Error::InvalidSweep(format!("non-finite {} value", grid.name)));
            }
            grid.values.push(v);
        }
    }

    Ok(SweepResult {
        preset: spec.preset.clone(),
        panel: spec.panel.clone(),
        axes: spec
            .axes
            .iter()
            .zip(grids)
            .map(|(a, values)| AxisGrid { name: a.param.name().to_string(), values })
            .collect(),
        metrics,
        config: serde_json::to_value(spec)?,
    })
}

/// Fidelity sweep; `spec` must name a target.
pub fn fidelity_map(spec: &SweepSpec) -> Result<SweepResult> {
    let mut spec = spec.clone();
    if !spec.metrics.contains(&Metric::Fidelity) {
        spec.metrics.insert(0, Metric::Fidelity);
    }
    run_sweep(&spec)
}

pub fn dissipation_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    let mut spec = spec.clone();
    if !spec.metrics.contains(&Metric::Dissipation) {
        spec.metrics.insert(0, Metric::Dissipation);
    }
    run_sweep(&spec)
}

/// Lossless Stokes trajectory of an `|H>` input at fixed `theta` as `alpha`
/// runs over `alpha_grid`, from the closed form.
pub fn poincare_trajectory(theta: f64, alpha_grid: &[f64]) -> Result<SweepResult> {
    if alpha_grid.is_empty() {
        return Err(Error::InvalidSweep("empty alpha grid".into()));
    }
    let points: Vec<StokesVector> = alpha_grid.iter().map(|&a| stokes_of_output(theta, Alpha::from(a))).collect();
    let column = |f: fn(&StokesVector) -> f64, name: &str| MetricGrid {
        name: name.to_string(),
        values: points.iter().map(|p| Some(f(p))).collect(),
    };
    Ok(SweepResult {
        preset: "poincare".into(),
        panel: format!("theta={theta}"),
        axes: vec![AxisGrid { name: "alpha".into(), values: alpha_grid.to_vec() }],
        metrics: vec![column(|p| p.s1, "s1"), column(|p| p.s2, "s2"), column(|p| p.s3, "s3")],
        config: serde_json::json!({ "theta": theta, "gamma_e": 0.0, "input": "H", "model": "ideal" }),
    })
}

/// Centre and radius of the circle traced by [`poincare_trajectory`].
pub fn poincare_circle(theta: f64) -> (StokesVector, f64) {
    let c = StokesVector::new((4.0 * theta).cos() / 2.0 + 0.5, (4.0 * theta).sin() / 2.0, 0.0);
    (c, (2.0 * theta).sin().abs())
}

/// Rabi frequency that realizes `alpha` over a `(Delta_ge, Delta_es)` grid;
/// infeasible points are missing values.
pub fn drive_curves(alpha: f64, delta_ge: &[f64], delta_es: Axis) -> Result<SweepResult> {
    if delta_es.param != SweepParam::DeltaEs {
        return Err(Error::InvalidSweep("drive curves sweep delta_es".into()));
    }
    run_sweep(&SweepSpec {
        preset: "drive".into(),
        panel: format!("alpha={alpha}"),
        model: Model::Ideal,
        scenario: Scenario { alpha: Alpha::Finite(alpha), ..Scenario::default() },
        axes: vec![Axis::list(SweepParam::DeltaGe, delta_ge), delta_es],
        input: default_input(),
        target: None,
        metrics: vec![Metric::Omega],
    })
}
