use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("site index {site} out of range for torus with {count} sites")]
    SiteOutOfRange { site: usize, count: usize },

    #[error("window of rescaled radius {radius} does not fit a torus of side {side} at scale n={n}")]
    WindowTooLarge { radius: f64, side: usize, n: usize },

    #[error("profile support exceeds the torus at scale n={n}")]
    SupportExceedsTorus { n: usize },

    #[error("constant-speed mode undefined: site {site} has no incident positive bond weight")]
    SpeedUndefined { site: usize },

    #[error("walk horizon {horizon} exceeded by query time {t}")]
    HorizonExceeded { t: f64, horizon: f64 },

    #[error("grid with {m} points per axis too coarse for the profile (needs at least {required})")]
    GridTooCoarse { m: usize, required: usize },

    #[error("instance with {sites} sites too large for {what} (cap {cap})")]
    InstanceTooLarge {
        sites: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("all requested start sites are frozen (no positive exit rate)")]
    AllStartsFrozen,

    #[error("start site {site} is outside the giant cluster")]
    StartNotInCluster { site: usize },

    #[error("sub-diffusive law passed to a diffusive estimator; fit the fractional exponent instead")]
    SubdiffusiveLaw,

    #[error("quadrature failed to reach tolerance {tol} (best error estimate {best})")]
    QuadratureFailure { tol: f64, best: f64 },

    #[error("operation requires a conductance environment, got site-weight (trap) mode")]
    NotConductance,

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Serde(#[from] serde_json::Error),

    #[error("malformed environment file: {0}")]
    BadEnvironmentFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
