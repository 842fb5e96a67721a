use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("x0 out of (0,1)")]
    X0OutOfRange(f64),
    #[error("r out of [3.57,4]")]
    ROutOfRange(f64),
    #[error("x0 is the fixed point 1-1/r")]
    FixedPointSeed,
    #[error("{name} out of domain: {value}")]
    Domain { name: &'static str, value: f64 },
    #[error("sequence length must be at least 1")]
    EmptyLength,
    #[error("orbit collapsed to {value} at iterate {step}")]
    DegenerateOrbit { step: usize, value: f64 },
    #[error("entropy source unavailable: {0}")]
    EntropyUnavailable(String),
    #[error("no valid perturbed seed after {0} attempts")]
    PerturbationExhausted(usize),
    #[error("invalid decimal {field}: {text:?}")]
    Parse { field: &'static str, text: String },
    #[error("grid {width}x{height} is invalid (need width, height >= 1 and at least 2 cells)")]
    GridShape { width: usize, height: usize },
    #[error("grid {width}x{height} exceeds the {max_cells} cell limit")]
    GridTooLarge {
        width: usize,
        height: usize,
        max_cells: usize,
    },
    #[error("cell index {index} out of range for {cells} cells")]
    IndexOutOfRange { index: usize, cells: usize },
    #[error("input sequence is empty")]
    EmptyInput,
    #[error("need at least {needed} samples, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("sequence has zero variance")]
    ZeroVariance,
    #[error("bin count must be at least 1")]
    ZeroBins,
    #[error("invalid bifurcation range: {0}")]
    BifurcationRange(String),
    #[error("csv output failed: {0}")]
    Csv(String),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
