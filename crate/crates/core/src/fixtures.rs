//! Built-in manifolds and maps used by the test suites and the command-line tool.

use num::{BigInt, Signed};

use crate::algebra::{Polynomial, Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::manifold::{AffineMapSpec, ManifoldSpec};
use crate::zeta::{FnSequence, SequenceOracle};

/// A manifold with one map, or two for coincidence fixtures.
#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub spec: ManifoldSpec,
    pub map: AffineMapSpec,
    pub map2: Option<AffineMapSpec>,
}

fn klein_holonomy() -> Vec<(String, RationalMatrix)> {
    vec![
        ("I".into(), RationalMatrix::identity(2)),
        ("A".into(), RationalMatrix::diagonal_ints(&[1, -1])),
    ]
}

/// Anosov-type map on the Klein bottle, `D = diag(-1, 2)`.
pub fn klein_bottle_ex1() -> (ManifoldSpec, AffineMapSpec) {
    let spec = ManifoldSpec::new("klein_bottle", 2, klein_holonomy()).expect("valid holonomy");
    (spec, AffineMapSpec::new("f", RationalMatrix::diagonal_ints(&[-1, 2])))
}

/// Infra-nilmanifold modelled on the Heisenberg group with `Φ = {I, diag(1,-1,-1)}`.
pub fn heisenberg_ex3() -> (ManifoldSpec, AffineMapSpec) {
    let spec = ManifoldSpec::new(
        "heisenberg_z2",
        3,
        vec![
            ("I".into(), RationalMatrix::identity(3)),
            ("A".into(), RationalMatrix::diagonal_ints(&[1, -1, -1])),
        ],
    )
    .expect("valid holonomy");
    let d = RationalMatrix::from_ints([[-2, 0, 0], [0, -4, -1], [0, 6, 2]]);
    (spec, AffineMapSpec::new("f", d))
}

/// Klein-bottle map of type `(r, ℓ, q)`: `D = diag(r, q)` when `q ≠ 0` (then `r`
/// must be odd) and `D = [[r, 0], [2ℓ, 0]]` when `q = 0`.
pub fn klein_type(r: i64, l: i64, q: i64) -> Result<(ManifoldSpec, AffineMapSpec)> {
    let d = if q == 0 {
        RationalMatrix::from_ints([[r, 0], [2 * l, 0]])
    } else if r % 2 != 0 {
        RationalMatrix::diagonal_ints(&[r, q])
    } else {
        return Err(Error::InvalidInput(format!(
            "type ({r}, {l}, {q}) needs r odd or q = 0"
        )));
    };
    let spec = ManifoldSpec::new(format!("klein_type_{r}_{l}_{q}"), 2, klein_holonomy())?;
    spec.check_map(&AffineMapSpec::new("f", d.clone()))?;
    Ok((spec, AffineMapSpec::new("f", d)))
}

/// Closed form of `N(fⁿ)` for [`klein_type`].
pub fn klein_type_nielsen(r: i64, q: i64, n: u32) -> BigInt {
    let base = (BigInt::from(1) - BigInt::from(r).pow(n)).abs();
    if q == 0 {
        base
    } else {
        BigInt::from(q).pow(n).abs() * base
    }
}

pub fn torus_cat_map() -> (ManifoldSpec, AffineMapSpec) {
    (
        ManifoldSpec::trivial("torus", 2),
        AffineMapSpec::new("cat", RationalMatrix::from_ints([[2, 1], [1, 1]])),
    )
}

pub fn torus_identity(dim: usize) -> (ManifoldSpec, AffineMapSpec) {
    (ManifoldSpec::trivial(format!("torus_{dim}"), dim), AffineMapSpec::identity(dim))
}

/// The map `z ↦ z^degree` on the circle.
pub fn circle_map(degree: i64) -> (ManifoldSpec, AffineMapSpec) {
    (
        ManifoldSpec::trivial("circle", 1),
        AffineMapSpec::new(format!("deg_{degree}"), RationalMatrix::diagonal_ints(&[degree])),
    )
}

/// Flat 3-manifold with holonomy generated by a quarter turn about the last axis.
pub fn quarter_turn_manifold() -> (ManifoldSpec, AffineMapSpec) {
    let r = RationalMatrix::from_ints([[0, -1, 0], [1, 0, 0], [0, 0, 1]]);
    let mut elements = vec![("I".to_string(), RationalMatrix::identity(3))];
    let mut p = r.clone();
    for i in 1..4 {
        elements.push((format!("R{i}"), p.clone()));
        p = &p * &r;
    }
    let spec = ManifoldSpec::new("quarter_turn", 3, elements).expect("valid holonomy");
    (spec, AffineMapSpec::new("f", RationalMatrix::diagonal_ints(&[2, 2, 3])))
}

/// Companion matrix of `1 + x + x² + x³ + x⁴` on the 4-torus: every eigenvalue is
/// a primitive fifth root of unity.
pub fn torus_fifth_root_map() -> (ManifoldSpec, AffineMapSpec) {
    let p = Polynomial::cyclotomic(5);
    let mut d = RationalMatrix::zero(4);
    for i in 1..4 {
        d.set(i, i - 1, Rational::from_integer(1.into()));
    }
    for i in 0..4 {
        d.set(i, 3, -p.coeff(i));
    }
    (ManifoldSpec::trivial("torus_4", 4), AffineMapSpec::new("c5", d))
}

/// `⟨-I⟩` acting on the 2-torus.
pub fn minus_identity_manifold() -> ManifoldSpec {
    ManifoldSpec::new(
        "torus_mod_minus_identity",
        2,
        vec![
            ("I".into(), RationalMatrix::identity(2)),
            ("-I".into(), RationalMatrix::diagonal_ints(&[-1, -1])),
        ],
    )
    .expect("valid holonomy")
}

/// The pair `f = diag(2,2)` with `g = diag(3,3)` (`N(f,g) = 13`), or with
/// `g = diag(3,1)` (`N(f,g) = 8`).
pub fn minus_identity_coincidence(second: bool) -> (ManifoldSpec, AffineMapSpec, AffineMapSpec) {
    let g = if second { [3, 1] } else { [3, 3] };
    (
        minus_identity_manifold(),
        AffineMapSpec::new("f", RationalMatrix::diagonal_ints(&[2, 2])),
        AffineMapSpec::new("g", RationalMatrix::diagonal_ints(&g)),
    )
}

/// Reidemeister numbers `|1 - rⁿ|` of a type-III automorphism of a Sol lattice.
pub fn sol_type_three(r: i64) -> impl SequenceOracle {
    FnSequence::new(2, move |n| {
        let e = u32::try_from(n).map_err(|_| Error::InvalidInput(format!("exponent {n} too large")))?;
        Ok(Rational::from_integer(
            (BigInt::from(1) - BigInt::from(r).pow(e)).abs(),
        ))
    })
}

fn single(name: &'static str, description: &'static str, pair: (ManifoldSpec, AffineMapSpec)) -> Fixture {
    Fixture {
        name,
        description,
        spec: pair.0,
        map: pair.1,
        map2: None,
    }
}

/// All built-in fixtures, in a fixed order.
pub fn builtin_fixtures() -> Vec<Fixture> {
    let (c_spec, c_f, c_g) = minus_identity_coincidence(false);
    let (c2_spec, c2_f, c2_g) = minus_identity_coincidence(true);
    vec![
        single("klein_bottle_ex1", "Klein bottle, D = diag(-1, 2)", klein_bottle_ex1()),
        single("heisenberg_ex3", "Heisenberg infra-nilmanifold with holonomy Z2", heisenberg_ex3()),
        single(
            "klein_type_3_0_5",
            "Klein bottle map of type (3, 0, 5)",
            klein_type(3, 0, 5).expect("r odd"),
        ),
        single(
            "klein_type_3_0_0",
            "Klein bottle map of type (3, 0, 0)",
            klein_type(3, 0, 0).expect("q = 0"),
        ),
        single("torus_cat_map", "Anosov cat map on the 2-torus", torus_cat_map()),
        single("torus_identity", "identity on the 2-torus", torus_identity(2)),
        single("circle_degree_2", "doubling map on the circle", circle_map(2)),
        single("circle_degree_minus_1", "reflection of the circle", circle_map(-1)),
        single("quarter_turn", "flat 3-manifold with Z4 holonomy", quarter_turn_manifold()),
        single(
            "torus_fifth_root",
            "finite-order map of the 4-torus with fifth-root-of-unity spectrum",
            torus_fifth_root_map(),
        ),
        Fixture {
            name: "coincidence_13",
            description: "coincidences of diag(2,2) and diag(3,3) on T2/<-I>",
            spec: c_spec,
            map: c_f,
            map2: Some(c_g),
        },
        Fixture {
            name: "coincidence_8",
            description: "coincidences of diag(2,2) and diag(3,1) on T2/<-I>",
            spec: c2_spec,
            map: c2_f,
            map2: Some(c2_g),
        },
    ]
}
