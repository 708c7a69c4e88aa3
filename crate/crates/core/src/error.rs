use num::BigRational;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("eigenvalue of modulus {modulus} lies within {tol} of the unit circle and cannot be placed exactly; refine the tolerance")]
    AmbiguousClassification { modulus: f64, tol: f64 },

    #[error("exterior power {degree} out of range for dimension {dim}")]
    ExteriorPowerOutOfRange { degree: usize, dim: usize },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("recurrence of order {order} needs {needed} terms, only {supplied} supplied")]
    InsufficientTerms {
        order: usize,
        needed: usize,
        supplied: usize,
    },

    #[error("sequence is not the log-expansion of a rational function within degree bound {bound} (first disagreement at coefficient {index})")]
    NotRational { bound: usize, index: usize },

    #[error("evaluation point is a pole")]
    PoleAtPoint,

    #[error("holonomy is not a group: {0}")]
    NotAGroup(String),

    #[error("holonomy element {label} has infinite order")]
    InfiniteOrderElement { label: String },

    #[error("holonomy element {label} does not preserve the expanding subspace (residual {residual:.3e})")]
    NonInvariantSubspace { label: String, residual: f64 },

    #[error("averaged Lefschetz number L(f^{n}) = {value} is not an integer")]
    NonIntegralLefschetz { n: u64, value: BigRational },

    #[error("averaged Nielsen number N(f^{n}) = {value} is not a non-negative integer")]
    NonIntegralNielsen { n: u64, value: BigRational },

    #[error("Nielsen cross-formula mismatch: {0}")]
    DeDuMismatch(String),

    #[error("holonomy group is not cyclic")]
    NotCyclic,

    #[error("maps are not block-compatible with the holonomy decomposition: {0}")]
    NotBlockCompatible(String),

    #[error("trichotomy predicted N(f,g) = {predicted}, averaging gives {actual}")]
    TrichotomyMismatch {
        predicted: Box<BigRational>,
        actual: Box<BigRational>,
    },

    #[error("fixed set of f^{n} is not isolated: det(I - D^{n}) = 0")]
    DegenerateFixedSet { n: u64 },

    #[error("Reidemeister zeta function undefined: R(f^{n}) = inf (witness {label})")]
    ZetaUndefined { n: u64, label: String },

    #[error("Reidemeister zeta definedness unknown: D has a root-of-unity eigenvalue but no vanishing determinant up to n = {n_max}")]
    ZetaUnknown { n_max: u64 },

    #[error("manifold is not orientable")]
    NotOrientable,

    #[error("degree det(D) is zero")]
    DegreeZero,

    #[error("functional equation fails: ratio is not constant")]
    NotConstantRatio,

    #[error("radius of convergence {radius} disagrees with 1/N_inf = {expected}")]
    RadiusMismatch { radius: f64, expected: f64 },

    #[error("bundle is not acyclic: {0} is a zero or pole")]
    NonAcyclicBundle(String),

    #[error("point {0} is not on the unit circle")]
    NotUnitModulus(String),

    #[error("sequence term {index} is infinite")]
    InfinityInSequence { index: u64 },

    #[error("matrix must have integer entries")]
    NonIntegralMatrix,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable short name of the variant, used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::AmbiguousClassification { .. } => "AmbiguousClassification",
            Error::ExteriorPowerOutOfRange { .. } => "ExteriorPowerOutOfRange",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InsufficientTerms { .. } => "InsufficientTerms",
            Error::NotRational { .. } => "NotRational",
            Error::PoleAtPoint => "PoleAtPoint",
            Error::NotAGroup(_) => "NotAGroup",
            Error::InfiniteOrderElement { .. } => "InfiniteOrderElement",
            Error::NonInvariantSubspace { .. } => "NonInvariantSubspace",
            Error::NonIntegralLefschetz { .. } => "NonIntegralLefschetz",
            Error::NonIntegralNielsen { .. } => "NonIntegralNielsen",
            Error::DeDuMismatch(_) => "DeDuMismatch",
            Error::NotCyclic => "NotCyclic",
            Error::NotBlockCompatible(_) => "NotBlockCompatible",
            Error::TrichotomyMismatch { .. } => "TrichotomyMismatch",
            Error::DegenerateFixedSet { .. } => "DegenerateFixedSet",
            Error::ZetaUndefined { .. } => "ZetaUndefined",
            Error::ZetaUnknown { .. } => "ZetaUnknown",
            Error::NotOrientable => "NotOrientable",
            Error::DegreeZero => "DegreeZero",
            Error::NotConstantRatio => "NotConstantRatio",
            Error::RadiusMismatch { .. } => "RadiusMismatch",
            Error::NonAcyclicBundle(_) => "NonAcyclicBundle",
            Error::NotUnitModulus(_) => "NotUnitModulus",
            Error::InfinityInSequence { .. } => "InfinityInSequence",
            Error::NonIntegralMatrix => "NonIntegralMatrix",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }

    /// True for failed internal cross-checks between two independent routes.
    pub fn is_cross_check_failure(&self) -> bool {
        matches!(
            self,
            Error::DeDuMismatch(_)
                | Error::TrichotomyMismatch { .. }
                | Error::RadiusMismatch { .. }
        )
    }
}
