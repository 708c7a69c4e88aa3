use num::complex::Complex64;
use num::Zero;

use super::ZetaResult;
use crate::algebra::{classify_eigenvalues, rat};
use crate::error::{Error, Result};
use crate::manifold::AffineMapSpec;
use crate::zeta::POLE_EPS;

/// Agreement required between the radius of convergence and `1/N∞`.
pub const RADIUS_TOLERANCE: f64 = 1e-6;

/// How far from the unit circle a torsion evaluation point may lie.
pub const UNIT_CIRCLE_TOLERANCE: f64 = 1e-9;

/// Whether 1 is an eigenvalue of `D`, decided exactly.
pub fn one_in_spectrum(map: &AffineMapSpec) -> bool {
    map.d.char_poly().eval(&rat(1)).is_zero()
}

/// `N∞(f) = max(1, ∏_{|λ|>1} |λ|)`.
pub fn asymptotic_nielsen(map: &AffineMapSpec, tol: f64) -> Result<f64> {
    let c = classify_eigenvalues(&map.d, tol)?;
    Ok(c.expanding_product().max(1.0))
}

/// `log N∞(f)`: the entropy of the affine representative and a lower bound for
/// every map in its homotopy class.
pub fn entropy_lower_bound(map: &AffineMapSpec, tol: f64) -> Result<f64> {
    Ok(asymptotic_nielsen(map, tol)?.ln())
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadiusReport {
    pub radius: f64,
    pub n_infinity: f64,
    /// Whether the radius was compared against `1/N∞`; skipped when `1 ∈ spec(D)`.
    pub checked: bool,
}

/// Radius of convergence of `zeta`, cross-checked against `1/N∞` when 1 is not
/// an eigenvalue of `D`.
///
/// A zeta function without poles is accepted when `N∞ = 1`, since the growth rate
/// is clamped below at 1.
pub fn radius_report(map: &AffineMapSpec, zeta: &ZetaResult, tol: f64) -> Result<RadiusReport> {
    let radius = zeta.function.radius_of_convergence();
    let n_infinity = asymptotic_nielsen(map, tol)?;
    let checked = !one_in_spectrum(map);
    if checked {
        let consistent = if radius.is_infinite() {
            (n_infinity - 1.0).abs() <= RADIUS_TOLERANCE
        } else {
            (radius * n_infinity - 1.0).abs() <= RADIUS_TOLERANCE
        };
        if !consistent {
            return Err(Error::RadiusMismatch {
                radius,
                expected: 1.0 / n_infinity,
            });
        }
    }
    Ok(RadiusReport {
        radius,
        n_infinity,
        checked,
    })
}

fn evaluate_on_circle(zeta: &ZetaResult, lambda: Complex64) -> Result<Complex64> {
    if (lambda.norm() - 1.0).abs() > UNIT_CIRCLE_TOLERANCE {
        return Err(Error::NotUnitModulus(lambda.to_string()));
    }
    let value = zeta
        .function
        .eval(lambda)
        .map_err(|_| Error::NonAcyclicBundle(lambda.to_string()))?;
    if value.norm() < POLE_EPS {
        return Err(Error::NonAcyclicBundle(lambda.to_string()));
    }
    Ok(value)
}

/// `τ = 1 / |L_f(λ)|` for `|λ| = 1`.
pub fn torsion_special_value(zeta: &ZetaResult, lambda: Complex64) -> Result<f64> {
    Ok(1.0 / evaluate_on_circle(zeta, lambda)?.norm())
}

/// `|L_{f₊}(λ) / L_f(λ)|`, the torsion ratio on the double cover.
pub fn torsion_pair_value(plus: &ZetaResult, base: &ZetaResult, lambda: Complex64) -> Result<f64> {
    let p = evaluate_on_circle(plus, lambda)?;
    let b = evaluate_on_circle(base, lambda)?;
    Ok((p / b).norm())
}
