use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(
        "unknown polarization state `{0}` (expected H, V, L, R, D, linear:<deg> or jones:<reA>,<imA>,<reB>,<imB>)"
    )]
    UnknownState(String),

    #[error("linear polarization angle {0} rad is outside [0, pi)")]
    AngleOutOfRange(f64),

    #[error("state is not normalized: |c_a|^2 + |c_b|^2 = {0}")]
    NotNormalized(f64),

    #[error("mode is evanescent: k = {k} does not exceed the cutoff pi/{dim} = {cutoff}")]
    Evanescent { k: f64, dim: f64, cutoff: f64 },

    #[error("position ({x}, {y}) lies outside the {a} x {b} cross-section")]
    OutOfBounds { x: f64, y: f64, a: f64, b: f64 },

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid emitter: {0}")]
    InvalidEmitter(String),

    #[error(
        "infeasible drive: (delta_ge - delta_es)(delta_ge + alpha) = {product} < 0; \
         move delta_es to the other side of delta_ge"
    )]
    InfeasibleDrive { product: f64 },

    #[error(
        "two-photon resonance (delta_ge = delta_es = {delta}) only realizes alpha = infinity or alpha = -delta_ge"
    )]
    TwoPhotonResonance { delta: f64 },

    #[error("negative Rabi frequency {0}")]
    NegativeRabi(f64),

    #[error("inconsistent drive: alpha {alpha} does not match the drive triple (expected {expected})")]
    InconsistentDrive { alpha: String, expected: String },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("grid point {coords:?} failed: {source}")]
    GridPoint {
        coords: Vec<(String, f64)>,
        #[source]
        source: Box<Error>,
    },

    #[error("output error: {0}")]
    Output(String),
}

impl Error {
    /// True for errors that describe a physically infeasible or degenerate
    /// request rather than malformed input.
    pub fn is_physics(&self) -> bool {
        match self {
            Error::Evanescent { .. }
            | Error::InfeasibleDrive { .. }
            | Error::TwoPhotonResonance { .. }
            | Error::Degenerate(_) => true,
            Error::GridPoint { source, .. } => source.is_physics(),
            _ => false,
        }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Output(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Output(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Output(e.to_string())
    }
}
