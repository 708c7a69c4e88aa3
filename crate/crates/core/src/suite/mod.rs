//! Zeta functions of affine-induced maps and the quantities read off from them.

mod functional;
mod growth;

pub use functional::{verify_functional_equation, FunctionalEquationReport};
pub use growth::{
    asymptotic_nielsen, entropy_lower_bound, one_in_spectrum, radius_report, torsion_pair_value,
    torsion_special_value, RadiusReport, RADIUS_TOLERANCE, UNIT_CIRCLE_TOLERANCE,
};

use num::{BigInt, One};

use crate::algebra::{Rational, RationalMatrix, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};
use crate::invariants::{lefschetz_sequence, numbers_table};
use crate::manifold::{
    compute_plus_split, reidemeister_zeta_defined, AffineMapSpec, Definedness, ManifoldSpec,
    PlusSplit, DEFAULT_N_MAX,
};
use crate::zeta::{terms_needed, zeta_from_slice, zeta_from_terms, RationalFunction, SequenceOracle};

/// Tunables shared by the suite.
#[derive(Clone, Debug, PartialEq)]
pub struct Settings {
    pub tol: f64,
    /// Scan length for Reidemeister definedness.
    pub n_max: u64,
    /// Replaces the default degree bound `|Φ| 2^m` when set.
    pub degree_bound_override: Option<usize>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            tol: DEFAULT_TOLERANCE,
            n_max: DEFAULT_N_MAX,
            degree_bound_override: None,
        }
    }
}

impl Settings {
    /// Degree bound for a zeta function averaged over `order` holonomy elements.
    pub fn degree_bound(&self, order: usize, dimension: usize) -> usize {
        self.degree_bound_override
            .unwrap_or(order << dimension)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZetaKind {
    Lefschetz,
    Nielsen,
    Reidemeister,
    ArtinMazur,
}

impl ZetaKind {
    pub fn symbol(&self) -> &'static str {
        match self {
            ZetaKind::Lefschetz => "L",
            ZetaKind::Nielsen => "N",
            ZetaKind::Reidemeister => "R",
            ZetaKind::ArtinMazur => "AM",
        }
    }
}

/// Whether `Φ₊ = Φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlusCase {
    PiEqual,
    PiProper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    DirectReconstruction,
    /// Assembled from Lefschetz zeta functions of `f` and `f₊`.
    DeDuFormula { case: PlusCase, p: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaResult {
    pub which: ZetaKind,
    pub function: RationalFunction,
    pub construction: Construction,
    pub defined: bool,
    /// Total degree bound `B` used for reconstruction.
    pub degree_bound: usize,
}

fn reconstruct_lefschetz(group: &[&RationalMatrix], map: &AffineMapSpec, b: usize) -> Result<RationalFunction> {
    let terms: Vec<Rational> = lefschetz_sequence(group, &map.d, terms_needed(b) as u64)?
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    zeta_from_slice(&terms, b)
}

/// `L_f(z) = exp(Σ L(fⁿ) zⁿ / n)`.
pub fn lefschetz_zeta(spec: &ManifoldSpec, map: &AffineMapSpec, settings: &Settings) -> Result<ZetaResult> {
    spec.check_map(map)?;
    let b = settings.degree_bound(spec.order(), spec.dimension());
    let group: Vec<&RationalMatrix> = spec.matrices().collect();
    Ok(ZetaResult {
        which: ZetaKind::Lefschetz,
        function: reconstruct_lefschetz(&group, map, b)?,
        construction: Construction::DirectReconstruction,
        defined: true,
        degree_bound: b,
    })
}

/// `L_{f₊}(z)`, the Lefschetz zeta function of the lift with holonomy `Φ₊`.
pub fn lefschetz_plus_zeta(
    spec: &ManifoldSpec,
    map: &AffineMapSpec,
    split: &PlusSplit,
    settings: &Settings,
) -> Result<ZetaResult> {
    spec.check_map(map)?;
    let group = split.plus_group(spec);
    let b = settings.degree_bound(group.len(), spec.dimension());
    Ok(ZetaResult {
        which: ZetaKind::Lefschetz,
        function: reconstruct_lefschetz(&group, map, b)?,
        construction: Construction::DirectReconstruction,
        defined: true,
        degree_bound: b,
    })
}

/// `exp(Σ N(fⁿ) zⁿ / n)` reconstructed straight from the Nielsen numbers.
pub fn nielsen_zeta_direct(spec: &ManifoldSpec, map: &AffineMapSpec, settings: &Settings) -> Result<ZetaResult> {
    spec.check_map(map)?;
    let b = settings.degree_bound(spec.order(), spec.dimension());
    let terms: Vec<Rational> = numbers_table(spec, map, terms_needed(b) as u64)?
        .into_iter()
        .map(|row| Rational::from_integer(row.nielsen))
        .collect();
    Ok(ZetaResult {
        which: ZetaKind::Nielsen,
        function: zeta_from_slice(&terms, b)?,
        construction: Construction::DirectReconstruction,
        defined: true,
        degree_bound: b,
    })
}

/// `N_f(z)` in closed form: `L_f(σz)^{(-1)^{p+n}}` when `Φ₊ = Φ`, otherwise
/// `(L_{f₊}(σz) / L_f(σz))^{(-1)^{p+n}}`, with `σ = (-1)^n`.
pub fn nielsen_zeta_closed_form(
    spec: &ManifoldSpec,
    map: &AffineMapSpec,
    split: &PlusSplit,
    settings: &Settings,
) -> Result<ZetaResult> {
    let sigma = if split.n.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let exponent = if (split.p + split.n).is_multiple_of(2) { 1 } else { -1 };
    let l = lefschetz_zeta(spec, map, settings)?.function.scale_variable(&sigma);
    let (base, case) = if split.is_proper {
        let lp = lefschetz_plus_zeta(spec, map, split, settings)?
            .function
            .scale_variable(&sigma);
        (lp.div(&l)?, PlusCase::PiProper)
    } else {
        (l, PlusCase::PiEqual)
    };
    Ok(ZetaResult {
        which: ZetaKind::Nielsen,
        function: base.powi(exponent)?,
        construction: Construction::DeDuFormula {
            case,
            p: split.p,
            n: split.n,
        },
        defined: true,
        degree_bound: settings.degree_bound(spec.order(), spec.dimension()),
    })
}

/// `N_f(z)`, computed both directly and in closed form; the two must agree.
pub fn nielsen_zeta(spec: &ManifoldSpec, map: &AffineMapSpec, settings: &Settings) -> Result<ZetaResult> {
    let split = compute_plus_split(spec, map, settings.tol)?;
    let direct = nielsen_zeta_direct(spec, map, settings)?;
    let closed = nielsen_zeta_closed_form(spec, map, &split, settings)?;
    if direct.function != closed.function {
        return Err(Error::DeDuMismatch(format!(
            "direct reconstruction {} differs from closed form {}",
            direct.function, closed.function
        )));
    }
    Ok(closed)
}

/// `R_f(z)`; equal to `N_f(z)` whenever every `R(fⁿ)` is finite.
pub fn reidemeister_zeta(spec: &ManifoldSpec, map: &AffineMapSpec, settings: &Settings) -> Result<ZetaResult> {
    match reidemeister_zeta_defined(spec, map, settings.n_max) {
        Definedness::Defined => {}
        Definedness::Undefined { n, label } => return Err(Error::ZetaUndefined { n, label }),
        Definedness::Unknown { n_max } => return Err(Error::ZetaUnknown { n_max }),
    }
    Ok(ZetaResult {
        which: ZetaKind::Reidemeister,
        ..nielsen_zeta(spec, map, settings)?
    })
}

/// `AM_f(z)`; for affine-induced maps this is `N_f(z)`.
pub fn artin_mazur_zeta(spec: &ManifoldSpec, map: &AffineMapSpec, settings: &Settings) -> Result<ZetaResult> {
    Ok(ZetaResult {
        which: ZetaKind::ArtinMazur,
        ..nielsen_zeta(spec, map, settings)?
    })
}

pub fn zeta(kind: ZetaKind, spec: &ManifoldSpec, map: &AffineMapSpec, settings: &Settings) -> Result<ZetaResult> {
    match kind {
        ZetaKind::Lefschetz => lefschetz_zeta(spec, map, settings),
        ZetaKind::Nielsen => nielsen_zeta(spec, map, settings),
        ZetaKind::Reidemeister => reidemeister_zeta(spec, map, settings),
        ZetaKind::ArtinMazur => artin_mazur_zeta(spec, map, settings),
    }
}

/// Zeta function of a raw integer sequence, such as a tabulated Reidemeister sequence.
pub fn sequence_zeta(which: ZetaKind, seq: &dyn SequenceOracle) -> Result<ZetaResult> {
    Ok(ZetaResult {
        which,
        function: zeta_from_terms(seq)?,
        construction: Construction::DirectReconstruction,
        defined: true,
        degree_bound: seq.degree_bound(),
    })
}

/// Integer `n`-th term helper for closures passed to [`crate::zeta::FnSequence`].
pub fn integer_term(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::FnSequence;

    fn klein_ex1() -> (ManifoldSpec, AffineMapSpec) {
        let spec = ManifoldSpec::new(
            "klein",
            2,
            vec![
                ("I".into(), RationalMatrix::identity(2)),
                ("A".into(), RationalMatrix::diagonal_ints(&[1, -1])),
            ],
        )
        .unwrap();
        (spec, AffineMapSpec::new("f", RationalMatrix::diagonal_ints(&[-1, 2])))
    }

    fn heisenberg_ex3() -> (ManifoldSpec, AffineMapSpec) {
        let spec = ManifoldSpec::new(
            "heisenberg",
            3,
            vec![
                ("I".into(), RationalMatrix::identity(3)),
                ("A".into(), RationalMatrix::diagonal_ints(&[1, -1, -1])),
            ],
        )
        .unwrap();
        let d = RationalMatrix::from_ints([[-2, 0, 0], [0, -4, -1], [0, 6, 2]]);
        (spec, AffineMapSpec::new("f", d))
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_ints(n, d).unwrap()
    }

    #[test]
    fn klein_zetas() {
        let (spec, map) = klein_ex1();
        let s = Settings::default();
        assert_eq!(lefschetz_zeta(&spec, &map, &s).unwrap().function, rf(&[1, 1], &[1, -1]));
        let n = nielsen_zeta(&spec, &map, &s).unwrap();
        assert_eq!(n.function, rf(&[1, 2], &[1, -2]));
        assert_eq!(
            n.construction,
            Construction::DeDuFormula {
                case: PlusCase::PiProper,
                p: 1,
                n: 0
            }
        );
        assert_eq!(
            reidemeister_zeta(&spec, &map, &s).unwrap_err(),
            Error::ZetaUndefined {
                n: 2,
                label: "I".into()
            }
        );
        assert_eq!(artin_mazur_zeta(&spec, &map, &s).unwrap().function, n.function);
    }

    #[test]
    fn heisenberg_zetas() {
        let (spec, map) = heisenberg_ex3();
        let s = Settings::default();
        let expected = rf(&[1, 2, -2], &[1, -4, -8]);
        assert_eq!(nielsen_zeta(&spec, &map, &s).unwrap().function, expected);
        let r = reidemeister_zeta(&spec, &map, &s).unwrap();
        assert_eq!(r.function, expected);
        assert_eq!(r.which, ZetaKind::Reidemeister);
    }

    #[test]
    fn identity_zetas() {
        let spec = ManifoldSpec::trivial("T2", 2);
        let id = AffineMapSpec::identity(2);
        let s = Settings::default();
        assert!(lefschetz_zeta(&spec, &id, &s).unwrap().function.is_one());
        assert!(nielsen_zeta(&spec, &id, &s).unwrap().function.is_one());
        assert!(artin_mazur_zeta(&spec, &id, &s).unwrap().function.is_one());
    }

    #[test]
    fn sol_sequence() {
        let seq = FnSequence::new(4, |n| Ok(integer_term(BigInt::from(2).pow(n as u32) - 1)));
        let z = sequence_zeta(ZetaKind::Reidemeister, &seq).unwrap();
        assert_eq!(z.function, rf(&[1, -1], &[1, -2]));
    }

    #[test]
    fn override_too_small_is_not_rational() {
        let (spec, map) = heisenberg_ex3();
        let s = Settings {
            degree_bound_override: Some(1),
            ..Settings::default()
        };
        assert!(matches!(
            nielsen_zeta(&spec, &map, &s),
            Err(Error::NotRational { .. })
        ));
    }
}
