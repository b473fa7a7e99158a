use thiserror::Error;

/// Errors raised by frame construction, mass validation and evidence operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvidenceError {
    #[error("frame must contain at least one label")]
    EmptyFrame,
    #[error("frame has {0} labels, at most 64 are supported")]
    FrameTooLarge(usize),
    #[error("frame labels must be non-empty strings")]
    EmptyLabel,
    #[error("duplicate frame label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("bit pattern {0:#x} has members outside the frame")]
    BitsOutOfRange(u64),
    #[error("operands belong to different frames")]
    FrameMismatch,
    #[error("negative or non-finite mass {mass} on focal set {focal}")]
    InvalidMass { focal: String, mass: f64 },
    #[error("focal set {0} assigned more than once")]
    DuplicateFocalSet(String),
    #[error("masses sum to {0}, expected 1")]
    MassSum(f64),
    #[error("cannot renormalize masses summing to {0}")]
    DegenerateMass(f64),
    #[error("Dempster's rule needs closed-world evidence, found m(∅) = {0}")]
    NonClassical(f64),
    #[error("total conflict (K = 1): Dempster's rule is undefined")]
    TotalConflict,
    #[error("pignistic transform undefined when m(∅) = 1")]
    EmptySetCertain,
    #[error("conflict threshold {0} outside [0, 1]")]
    EpsilonOutOfRange(f64),
    #[error("combination needs at least two bodies of evidence, got {0}")]
    TooFewBodies(usize),
    #[error("sweep step {0} must lie in (0, 0.5] and divide 1 evenly")]
    InvalidStep(f64),
}

pub type Result<T, E = EvidenceError> = std::result::Result<T, E>;
