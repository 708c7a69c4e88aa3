//! Averaging formulas for Lefschetz, Nielsen and Reidemeister numbers.
//!
//! Every number is an average over the holonomy group of `det(Eⁿ - A Dⁿ)`,
//! its absolute value, or `σ` of it (with `σ(0) = ∞`). Fixed points are the
//! coincidence case `E = I`.

mod coincidence;
mod cyclic;
mod torus;

pub use coincidence::{coincidence_numbers, CoincidenceNumbers};
pub use cyclic::{
    coincidence_trichotomy, cyclic_decomposition, CyclicDecomposition, Rotation, TrichotomyCase,
    TrichotomyReport,
};
pub use torus::{smith_normal_form, torus_periodic_point_oracle};

use std::fmt;

use num::{BigInt, Signed, Zero};

use crate::algebra::{Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::manifold::{AffineMapSpec, ManifoldSpec, PlusSplit};

/// A value that may be infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended<T> {
    Finite(T),
    Infinite,
}

impl<T> Extended<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    L,
    N,
    R,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    pub n: u64,
    pub value: Extended<BigInt>,
}

/// `L(fⁿ)`, `N(fⁿ)`, `R(fⁿ)` for one iterate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointNumbers {
    pub n: u64,
    pub lefschetz: BigInt,
    pub nielsen: BigInt,
    pub reidemeister: Extended<BigInt>,
}

impl FixedPointNumbers {
    pub fn values(&self) -> [InvariantValue; 3] {
        [
            InvariantValue {
                kind: InvariantKind::L,
                n: self.n,
                value: Extended::Finite(self.lefschetz.clone()),
            },
            InvariantValue {
                kind: InvariantKind::N,
                n: self.n,
                value: Extended::Finite(self.nielsen.clone()),
            },
            InvariantValue {
                kind: InvariantKind::R,
                n: self.n,
                value: self.reidemeister.clone(),
            },
        ]
    }
}

/// `det(E - A D)` for every `A` in `group`.
pub(crate) fn twisted_determinants<'a>(
    group: impl IntoIterator<Item = &'a RationalMatrix>,
    e: &RationalMatrix,
    d: &RationalMatrix,
) -> Vec<Rational> {
    group.into_iter().map(|a| (e - &(a * d)).det()).collect()
}

pub(crate) fn average(values: impl IntoIterator<Item = Rational>, order: usize) -> Rational {
    let sum = values.into_iter().fold(Rational::zero(), |acc, v| acc + v);
    sum / Rational::from_integer(BigInt::from(order))
}

fn integral_lefschetz(value: Rational, n: u64) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegralLefschetz { n, value })
    }
}

fn integral_nielsen(value: Rational, n: u64) -> Result<BigInt> {
    if value.is_integer() && !value.is_negative() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegralNielsen { n, value })
    }
}

fn numbers_from_determinants(dets: &[Rational], order: usize, n: u64) -> Result<FixedPointNumbers> {
    let lefschetz = integral_lefschetz(average(dets.iter().cloned(), order), n)?;
    let nielsen = integral_nielsen(average(dets.iter().map(|d| d.abs()), order), n)?;
    let reidemeister = if dets.iter().any(|d| d.is_zero()) {
        Extended::Infinite
    } else {
        Extended::Finite(nielsen.clone())
    };
    Ok(FixedPointNumbers {
        n,
        lefschetz,
        nielsen,
        reidemeister,
    })
}

fn check_iterate(spec: &ManifoldSpec, map: &AffineMapSpec, n: u64) -> Result<()> {
    spec.check_map(map)?;
    if n == 0 {
        return Err(Error::InvalidInput("iterate index must be at least 1".into()));
    }
    Ok(())
}

/// All three numbers for `fⁿ`.
pub fn fixed_point_numbers(spec: &ManifoldSpec, map: &AffineMapSpec, n: u64) -> Result<FixedPointNumbers> {
    check_iterate(spec, map, n)?;
    let id = RationalMatrix::identity(spec.dimension());
    let dets = twisted_determinants(spec.matrices(), &id, &map.d.pow(n));
    numbers_from_determinants(&dets, spec.order(), n)
}

/// `L(fⁿ), N(fⁿ), R(fⁿ)` for `n = 1 ..= n_max`, sharing the powers of `D`.
pub fn numbers_table(spec: &ManifoldSpec, map: &AffineMapSpec, n_max: u64) -> Result<Vec<FixedPointNumbers>> {
    spec.check_map(map)?;
    let id = RationalMatrix::identity(spec.dimension());
    let mut dn = id.clone();
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        dn = &dn * &map.d;
        let dets = twisted_determinants(spec.matrices(), &id, &dn);
        out.push(numbers_from_determinants(&dets, spec.order(), n)?);
    }
    Ok(out)
}

/// `L(fⁿ)` averaged over `group` (all of `Φ`, or a subgroup such as `Φ₊`), `n = 1 ..= n_max`.
pub fn lefschetz_sequence(
    group: &[&RationalMatrix],
    d: &RationalMatrix,
    n_max: u64,
) -> Result<Vec<BigInt>> {
    let id = RationalMatrix::identity(d.dim());
    let mut dn = id.clone();
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        dn = &dn * d;
        let dets = twisted_determinants(group.iter().copied(), &id, &dn);
        out.push(integral_lefschetz(average(dets, group.len()), n)?);
    }
    Ok(out)
}

/// `L(fⁿ) = (1/|Φ|) Σ_A det(I - A Dⁿ)`.
pub fn lefschetz(spec: &ManifoldSpec, map: &AffineMapSpec, n: u64) -> Result<BigInt> {
    check_iterate(spec, map, n)?;
    let id = RationalMatrix::identity(spec.dimension());
    let dets = twisted_determinants(spec.matrices(), &id, &map.d.pow(n));
    integral_lefschetz(average(dets, spec.order()), n)
}

/// `N(fⁿ) = (1/|Φ|) Σ_A |det(I - A Dⁿ)|`.
pub fn nielsen(spec: &ManifoldSpec, map: &AffineMapSpec, n: u64) -> Result<BigInt> {
    check_iterate(spec, map, n)?;
    let id = RationalMatrix::identity(spec.dimension());
    let dets = twisted_determinants(spec.matrices(), &id, &map.d.pow(n));
    integral_nielsen(average(dets.into_iter().map(|d| d.abs()), spec.order()), n)
}

/// `R(fⁿ)`: infinite when some `det(I - A Dⁿ)` vanishes, otherwise `N(fⁿ)`.
pub fn reidemeister(spec: &ManifoldSpec, map: &AffineMapSpec, n: u64) -> Result<Extended<BigInt>> {
    Ok(fixed_point_numbers(spec, map, n)?.reidemeister)
}

/// `L(f₊ⁿ)`, the Lefschetz number of the lift to the cover with holonomy `Φ₊`.
pub fn lefschetz_plus(spec: &ManifoldSpec, map: &AffineMapSpec, split: &PlusSplit, n: u64) -> Result<BigInt> {
    check_iterate(spec, map, n)?;
    let id = RationalMatrix::identity(spec.dimension());
    let plus = split.plus_group(spec);
    let dets = twisted_determinants(plus.iter().copied(), &id, &map.d.pow(n));
    integral_lefschetz(average(dets, plus.len()), n)
}

/// Sign `(-1)^{p + (k+1) n}` of the Nielsen-from-Lefschetz formula.
pub fn dedu_sign(split: &PlusSplit, k: u64) -> i32 {
    let exponent = split.p as u64 + (k + 1) * split.n as u64;
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `N(fᵏ)` from Lefschetz numbers alone:
/// `(-1)^{p+(k+1)n} L(fᵏ)` when `Φ₊ = Φ`, else `(-1)^{p+(k+1)n} (L(f₊ᵏ) - L(fᵏ))`.
///
/// The result is cross-checked against the averaging formula.
pub fn nielsen_via_dedu(spec: &ManifoldSpec, map: &AffineMapSpec, split: &PlusSplit, k: u64) -> Result<BigInt> {
    let l = lefschetz(spec, map, k)?;
    let base = if split.is_proper {
        lefschetz_plus(spec, map, split, k)? - &l
    } else {
        l
    };
    let value = base * dedu_sign(split, k);
    let direct = nielsen(spec, map, k)?;
    if value != direct {
        return Err(Error::DeDuMismatch(format!(
            "k = {k}: Lefschetz formula gives {value}, averaging gives {direct}"
        )));
    }
    Ok(value)
}
