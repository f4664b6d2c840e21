use thiserror::Error;

/// Errors raised by frame construction, mass validation and the combination rules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame must contain at least one singleton")]
    EmptyFrame,
    #[error("frame has {0} singletons, at most 64 are supported")]
    FrameTooLarge(usize),
    #[error("duplicate singleton label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid singleton label `{0}`")]
    InvalidLabel(String),
    #[error("unknown singleton `{0}`")]
    UnknownLabel(String),
    #[error("syntax error in focal set expression `{expr}`: {message}")]
    Syntax { expr: String, message: String },
    #[error("focal set {0:#x} does not belong to the frame")]
    SetOutsideFrame(u64),

    #[error("negative mass {mass} on `{set}`")]
    NegativeMass { set: String, mass: f64 },
    #[error("masses sum to {0}, expected 1")]
    NotNormalized(f64),
    #[error("mass on the empty set is only allowed in an open world")]
    EmptySetMassInClosedWorld,
    #[error("focal set `{0}` assigned twice")]
    DuplicateFocalSet(String),
    #[error("operation requires closed-world mass functions")]
    OpenWorldInput,
    #[error("total conflict: the combined mass on the empty set is 1")]
    TotalConflict,
    #[error("rule output drifted from normalization: sum = {0}")]
    NormalizationDrift(f64),

    #[error("discounting factor {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),
    #[error("mass functions are defined on different frames")]
    FrameMismatch,
    #[error("{rule} needs {expected} experts, got {got}")]
    ExpertCount {
        rule: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("auto-conflict order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("conflict weights must be non-negative, zero on the empty set and sum to 1 (sum = {0})")]
    WeightsNotNormalized(f64),
    #[error("index {index} out of range for {len} experts")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dissimilarity is undefined on the empty set")]
    EmptyFocalSetInput,
    #[error("every per-expert discounting weight is zero")]
    AllAlphasZero,
    #[error("invalid shaping function: {0}")]
    InvalidShapingFunction(String),
    #[error("dissimilarity constant {0} is outside [0, 1]")]
    DeltaOutOfRange(f64),
    #[error("group size {k} out of range for {m} experts")]
    KOutOfRange { k: usize, m: usize },
    #[error("operation count exceeds 2^62")]
    Overflow,
    #[error("{0} has no closed-form definition")]
    NotSpecified(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
