use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("number of samples {0} is not a power of two (>= 8)")]
    NonPowerOfTwo(usize),
    #[error("degenerate interval [{x_min}, {x_max}]: need finite x_max > x_min")]
    DegenerateInterval { x_min: f64, x_max: f64 },
    #[error("expected {expected} samples, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("function evaluation failed (non-finite value) at x = {x}")]
    EvaluationFailure { x: f64 },
    #[error("alpha must be >= 0, got {0}")]
    NegativeAlpha(f64),
    #[error("signals live on different grids")]
    GridMismatch,
    #[error("grid has {n} samples; the product rule is limited to {max}")]
    GridTooLarge { n: usize, max: usize },
    #[error("Gamma has a pole at non-positive integer {0}")]
    PoleAtNonPositiveInteger(f64),
    #[error("1F1 parameter b = {0} is a non-positive integer")]
    BParameterPole(f64),
    #[error("1F1 argument |z| = {0} exceeds the supported range 400")]
    ArgumentOutOfRange(f64),
    #[error("exponential rule needs k > 0, got {0}")]
    NonPositiveK(f64),
    #[error("adaptive quadrature stopped with error estimate {estimate:e} above tolerance {tolerance:e}")]
    ToleranceNotReached { estimate: f64, tolerance: f64 },
    #[error("plane-wave frequency {q} is not on the grid's frequency set")]
    FrequencyOffGrid { q: f64 },
    #[error("no plane-wave eigenstate for alpha = {alpha}, eigenvalue {eigenvalue}")]
    UnsupportedEigenstate { alpha: f64, eigenvalue: f64 },
    #[error(
        "alpha = {0} lies in (0, 1), where the commutator [D^alpha, x] = alpha D^(alpha-1) \
         is not well defined; it holds for alpha = 0 and alpha >= 1"
    )]
    AlphaInForbiddenRange(f64),
    #[error("boundary decay {boundary_decay:e} is above the threshold {threshold:e}")]
    InsufficientDecay { boundary_decay: f64, threshold: f64 },
    #[error("the uncertainty bound needs alpha >= 1, got {0}")]
    OrderBelowOne(f64),
    #[error("state is not normalized (norm = {0})")]
    NotNormalized(f64),
}
