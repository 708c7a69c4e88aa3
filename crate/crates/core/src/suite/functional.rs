use num::{One, Signed, Zero};

use super::{Construction, PlusCase, ZetaKind, ZetaResult};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::manifold::{AffineMapSpec, ManifoldSpec};

/// Outcome of the functional-equation check `ζ(1/(dz)) = ε' ζ(z)^{(-1)^m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalEquationReport {
    pub holds: bool,
    /// The constant `ε`, recovered from `ε'` by the exponent dictated by the case.
    pub epsilon: Rational,
    /// `ζ(1/(dz)) ζ(z)^{-(-1)^m}`, which equals `ε'`.
    pub ratio: Rational,
    /// The degree, taken as `det D`.
    pub degree_d: Rational,
    pub dimension: usize,
    /// `None` for Lefschetz zeta functions, where `ε' = ε`.
    pub case: Option<PlusCase>,
}

impl FunctionalEquationReport {
    /// The consequence `|d| = 1 ⇒ |ε| = 1`.
    pub fn unit_degree_consistent(&self) -> bool {
        !self.degree_d.abs().is_one() || self.epsilon.abs().is_one()
    }
}

/// Check that `zeta(1/(dz)) · zeta(z)^{-(-1)^m}` is a constant, with `d = det D`
/// and `m = dim`. For Nielsen-type zeta functions the constant is `ε^{(-1)^{p+n}}`
/// when `Φ₊ = Φ` and `ε^{-1}` otherwise.
pub fn verify_functional_equation(
    spec: &ManifoldSpec,
    map: &AffineMapSpec,
    zeta: &ZetaResult,
) -> Result<FunctionalEquationReport> {
    spec.check_map(map)?;
    if !spec.orientable() {
        return Err(Error::NotOrientable);
    }
    let d = map.d.det();
    if d.is_zero() {
        return Err(Error::DegreeZero);
    }
    let m = spec.dimension();
    let f = &zeta.function;
    let flipped = f.substitute_reciprocal_scale(&d)?;
    let q = if m.is_multiple_of(2) { flipped.div(f)? } else { flipped.mul(f) };
    let ratio = q.as_constant().ok_or(Error::NotConstantRatio)?;
    if ratio.is_zero() {
        return Err(Error::NotConstantRatio);
    }

    let (case, inverted) = match (zeta.which, zeta.construction) {
        (ZetaKind::Lefschetz, _) => (None, false),
        (_, Construction::DeDuFormula { case, p, n }) => {
            let inverted = match case {
                PlusCase::PiEqual => (p + n) % 2 == 1,
                PlusCase::PiProper => true,
            };
            (Some(case), inverted)
        }
        (_, Construction::DirectReconstruction) => {
            return Err(Error::InvalidInput(
                "functional equation needs the plus-split case of a Nielsen-type zeta function".into(),
            ))
        }
    };
    let epsilon = if inverted { ratio.recip() } else { ratio.clone() };
    Ok(FunctionalEquationReport {
        holds: true,
        epsilon,
        ratio,
        degree_d: d,
        dimension: m,
        case,
    })
}
