use num::{Signed, Zero};

use super::{average, twisted_determinants, Extended};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::manifold::{AffineMapSpec, ManifoldSpec};

/// `L(fⁿ, gⁿ)`, `N(fⁿ, gⁿ)` and `R(fⁿ, gⁿ)` for a self-pair on one manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceNumbers {
    pub n: u64,
    pub lefschetz: Rational,
    /// `None` on non-orientable manifolds.
    pub nielsen: Option<Rational>,
    pub reidemeister: Extended<Rational>,
}

/// Averages of `det(Eⁿ - A Dⁿ)` over `Φ`, where `f` has linearization `D` and `g`
/// has linearization `E`.
pub fn coincidence_numbers(
    spec: &ManifoldSpec,
    f: &AffineMapSpec,
    g: &AffineMapSpec,
    n: u64,
) -> Result<CoincidenceNumbers> {
    spec.check_map(f)?;
    spec.check_map(g)?;
    if n == 0 {
        return Err(Error::InvalidInput("iterate index must be at least 1".into()));
    }
    let dets = twisted_determinants(spec.matrices(), &g.d.pow(n), &f.d.pow(n));
    let abs = average(dets.iter().map(|d| d.abs()), spec.order());
    let reidemeister = if dets.iter().any(|d| d.is_zero()) {
        Extended::Infinite
    } else {
        Extended::Finite(abs.clone())
    };
    Ok(CoincidenceNumbers {
        n,
        lefschetz: average(dets, spec.order()),
        nielsen: spec.orientable().then_some(abs),
        reidemeister,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, RationalMatrix};
    use crate::invariants::nielsen;

    #[test]
    fn circle_pair() {
        let spec = ManifoldSpec::trivial("S1", 1);
        let f = AffineMapSpec::new("f", RationalMatrix::diagonal_ints(&[2]));
        let g = AffineMapSpec::new("g", RationalMatrix::diagonal_ints(&[3]));
        let c = coincidence_numbers(&spec, &f, &g, 1).unwrap();
        assert_eq!(c.lefschetz, rat(1));
        assert_eq!(c.nielsen, Some(rat(1)));
        assert_eq!(c.reidemeister, Extended::Finite(rat(1)));
        let same = coincidence_numbers(&spec, &f, &f, 1).unwrap();
        assert_eq!(same.lefschetz, rat(0));
        assert_eq!(same.reidemeister, Extended::Infinite);
    }

    #[test]
    fn fixed_points_are_coincidences_with_identity() {
        let spec = ManifoldSpec::new(
            "z2",
            2,
            vec![
                ("I".into(), RationalMatrix::identity(2)),
                ("-I".into(), RationalMatrix::diagonal_ints(&[-1, -1])),
            ],
        )
        .unwrap();
        let f = AffineMapSpec::new("f", RationalMatrix::from_ints([[2, 1], [1, 1]]));
        let id = AffineMapSpec::identity(2);
        for n in 1..=5 {
            let c = coincidence_numbers(&spec, &f, &id, n).unwrap();
            assert_eq!(
                c.nielsen.unwrap(),
                Rational::from_integer(nielsen(&spec, &f, n).unwrap())
            );
        }
    }

    #[test]
    fn non_orientable_has_no_nielsen() {
        let spec = ManifoldSpec::new(
            "klein",
            2,
            vec![
                ("I".into(), RationalMatrix::identity(2)),
                ("A".into(), RationalMatrix::diagonal_ints(&[1, -1])),
            ],
        )
        .unwrap();
        let f = AffineMapSpec::new("f", RationalMatrix::diagonal_ints(&[-1, 2]));
        let c = coincidence_numbers(&spec, &f, &AffineMapSpec::identity(2), 1).unwrap();
        assert_eq!(c.nielsen, None);
        assert_eq!(c.lefschetz, rat(2));
    }
}
