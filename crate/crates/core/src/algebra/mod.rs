//! Exact rational scalars, matrices and polynomials, plus eigenvalue classification.

pub mod eigen;
pub mod matrix;
pub mod poly;
pub mod roots;

pub use eigen::{
    classify_eigenvalues, has_root_of_unity_eigenvalue, EigenClassification, Eigenvalue,
    DEFAULT_TOLERANCE,
};
pub use matrix::RationalMatrix;
pub use poly::Polynomial;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num::BigRational;

/// Integer-valued rational shorthand.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
