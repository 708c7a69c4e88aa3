//! Cyclic holonomy: isotypic decomposition and the coincidence trichotomy.

use num::{Signed, Zero};

use super::{average, coincidence_numbers, twisted_determinants};
use crate::algebra::eigen::{cyclotomic_orders, root_of_unity_order_bound, rotation_numerators};
use crate::algebra::matrix::sign;
use crate::algebra::{Polynomial, Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::manifold::{AffineMapSpec, ManifoldSpec};

/// Rotation by `2π numerator / order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    pub numerator: usize,
    pub order: usize,
}

impl Rotation {
    pub fn angle(&self) -> f64 {
        std::f64::consts::TAU * self.numerator as f64 / self.order as f64
    }
}

/// `ρ(A₀) ~ m ρ_triv ⊕ k τ ⊕ ρ_1 ⊕ .. ⊕ ρ_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub generator: String,
    pub m_triv: usize,
    pub k_tau: usize,
    pub rotations: Vec<Rotation>,
    /// Columns: a basis of the `+1` eigenspace, then the `-1` eigenspace, then the
    /// sum of the rotation planes. Conjugating by it makes `A₀` block diagonal.
    pub basis_change: RationalMatrix,
}

impl CyclicDecomposition {
    fn tau_range(&self) -> std::ops::Range<usize> {
        self.m_triv..self.m_triv + self.k_tau
    }
}

/// Decompose the holonomy representation of a cyclic `Φ = ⟨A₀⟩`.
pub fn cyclic_decomposition(spec: &ManifoldSpec) -> Result<CyclicDecomposition> {
    let report = spec.validation_report();
    let gen = report
        .element_orders
        .iter()
        .position(|&k| k == spec.order())
        .ok_or(Error::NotCyclic)?;
    let a0 = &spec.holonomy()[gen].matrix;
    let m = spec.dimension();
    let id = RationalMatrix::identity(m);

    let triv = (a0 - &id).kernel();
    let tau = (a0 + &id).kernel();
    let mut rotations = Vec::new();
    let mut rotation_poly = Polynomial::one();
    let mut seen = Vec::new();
    for k in cyclotomic_orders(&a0.char_poly(), root_of_unity_order_bound(m)) {
        if k < 3 {
            continue;
        }
        rotations.extend(
            rotation_numerators(k)
                .into_iter()
                .map(|j| Rotation { numerator: j, order: k }),
        );
        if !seen.contains(&k) {
            seen.push(k);
            rotation_poly = &rotation_poly * &Polynomial::cyclotomic(k);
        }
    }
    let planes = if rotations.is_empty() {
        Vec::new()
    } else {
        a0.eval_poly(&rotation_poly).kernel()
    };
    let columns: Vec<Vec<Rational>> = triv.iter().chain(&tau).chain(&planes).cloned().collect();
    let basis_change = RationalMatrix::from_columns(&columns)?;
    debug_assert_eq!(triv.len() + tau.len() + 2 * rotations.len(), m);
    Ok(CyclicDecomposition {
        generator: spec.holonomy()[gen].label.clone(),
        m_triv: triv.len(),
        k_tau: tau.len(),
        rotations,
        basis_change,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrichotomyCase {
    /// No `τ` summand: `N(f,g) = |L(f,g)|`.
    Case1,
    /// `det(E_τ - D_τ) det(E_τ + D_τ) >= 0`: `N(f,g) = |L(f,g)|`.
    Case2,
    /// Otherwise `N(f,g) = |L(f₀,g₀) - L(f,g)|` on the double cover with holonomy `⟨A₀²⟩`.
    Case3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrichotomyReport {
    pub case: TrichotomyCase,
    pub predicted_nielsen: Rational,
    pub lefschetz: Rational,
    /// `L(f₀, g₀)`, only in case 3.
    pub lefschetz_double_cover: Option<Rational>,
    /// `sign det(E_τ - D_τ)`, zero when there is no `τ` summand.
    pub epsilon_o: i32,
    /// `sign det(E_τ + D_τ)`, zero when there is no `τ` summand.
    pub epsilon_e: i32,
    pub decomposition: CyclicDecomposition,
}

/// Predict `N(f, g)` from Lefschetz numbers on an orientable manifold with cyclic
/// holonomy, and check the prediction against the averaging formula.
pub fn coincidence_trichotomy(
    spec: &ManifoldSpec,
    f: &AffineMapSpec,
    g: &AffineMapSpec,
) -> Result<TrichotomyReport> {
    if !spec.orientable() {
        return Err(Error::NotOrientable);
    }
    let dec = cyclic_decomposition(spec)?;
    let d = block_form(&dec, f)?;
    let e = block_form(&dec, g)?;
    let numbers = coincidence_numbers(spec, f, g, 1)?;
    let actual = numbers.nielsen.expect("orientable spec has Nielsen numbers");
    let l = numbers.lefschetz;

    let (case, predicted, l0, eo, ee) = if dec.k_tau == 0 {
        (TrichotomyCase::Case1, l.abs(), None, 0, 0)
    } else {
        let idx: Vec<usize> = dec.tau_range().collect();
        let (dt, et) = (d.block(&idx), e.block(&idx));
        let eo = sign(&(&et - &dt).det());
        let ee = sign(&(&et + &dt).det());
        if eo * ee >= 0 {
            (TrichotomyCase::Case2, l.abs(), None, eo, ee)
        } else {
            let a0 = spec
                .holonomy()
                .iter()
                .find(|h| h.label == dec.generator)
                .map(|h| &h.matrix)
                .expect("generator is a holonomy element");
            let sq = a0 * a0;
            let mut sub = vec![RationalMatrix::identity(spec.dimension())];
            loop {
                let next = sub.last().unwrap() * &sq;
                if next.is_identity() {
                    break;
                }
                sub.push(next);
            }
            let l0 = average(twisted_determinants(&sub, &g.d, &f.d), sub.len());
            (TrichotomyCase::Case3, (&l0 - &l).abs(), Some(l0), eo, ee)
        }
    };
    if predicted != actual {
        return Err(Error::TrichotomyMismatch {
            predicted: Box::new(predicted),
            actual: Box::new(actual),
        });
    }
    Ok(TrichotomyReport {
        case,
        predicted_nielsen: predicted,
        lefschetz: l,
        lefschetz_double_cover: l0,
        epsilon_o: eo,
        epsilon_e: ee,
        decomposition: dec,
    })
}

/// `P⁻¹ D P`, checked to have the block shape `[[D_triv,0,0],[0,D_τ,0],[*,*,D̂]]`.
fn block_form(dec: &CyclicDecomposition, map: &AffineMapSpec) -> Result<RationalMatrix> {
    let m = dec.basis_change.dim();
    if map.d.dim() != m {
        return Err(Error::DimensionMismatch {
            context: format!("linearization of {}", map.label),
            expected: m,
            found: map.d.dim(),
        });
    }
    let c = map
        .d
        .conjugate_by(&dec.basis_change)
        .expect("basis change is invertible");
    let part = |i: usize| {
        if i < dec.m_triv {
            0
        } else if i < dec.m_triv + dec.k_tau {
            1
        } else {
            2
        }
    };
    for i in 0..dec.m_triv + dec.k_tau {
        for j in 0..m {
            if part(i) != part(j) && !c.get(i, j).is_zero() {
                return Err(Error::NotBlockCompatible(format!(
                    "{}: entry ({i}, {j}) is {} in the adapted basis",
                    map.label,
                    c.get(i, j)
                )));
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::invariants::coincidence_numbers;

    fn minus_identity() -> ManifoldSpec {
        ManifoldSpec::new(
            "z2",
            2,
            vec![
                ("I".into(), RationalMatrix::identity(2)),
                ("-I".into(), RationalMatrix::diagonal_ints(&[-1, -1])),
            ],
        )
        .unwrap()
    }

    fn map(label: &str, diag: &[i64]) -> AffineMapSpec {
        AffineMapSpec::new(label, RationalMatrix::diagonal_ints(diag))
    }

    #[test]
    fn decompositions() {
        let t = cyclic_decomposition(&ManifoldSpec::trivial("T3", 3)).unwrap();
        assert_eq!((t.m_triv, t.k_tau, t.rotations.len()), (3, 0, 0));
        let k = ManifoldSpec::new(
            "klein",
            2,
            vec![
                ("I".into(), RationalMatrix::identity(2)),
                ("A".into(), RationalMatrix::diagonal_ints(&[1, -1])),
            ],
        )
        .unwrap();
        let c = cyclic_decomposition(&k).unwrap();
        assert_eq!((c.m_triv, c.k_tau), (1, 1));
        let c = cyclic_decomposition(&minus_identity()).unwrap();
        assert_eq!((c.m_triv, c.k_tau, c.generator.as_str()), (0, 2, "-I"));
    }

    #[test]
    fn quarter_turn() {
        let r = RationalMatrix::from_ints([[0, -1, 0], [1, 0, 0], [0, 0, 1]]);
        let mut elems = vec![("I".to_string(), RationalMatrix::identity(3))];
        let mut p = r.clone();
        for i in 1..4 {
            elems.push((format!("R{i}"), p.clone()));
            p = &p * &r;
        }
        let spec = ManifoldSpec::new("q", 3, elems).unwrap();
        let c = cyclic_decomposition(&spec).unwrap();
        assert_eq!((c.m_triv, c.k_tau), (1, 0));
        assert_eq!(c.rotations, vec![Rotation { numerator: 1, order: 4 }]);
        assert!((c.rotations[0].angle() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn klein_four_is_not_cyclic() {
        let spec = ManifoldSpec::new(
            "v4",
            2,
            vec![
                ("I".into(), RationalMatrix::identity(2)),
                ("A".into(), RationalMatrix::diagonal_ints(&[1, -1])),
                ("B".into(), RationalMatrix::diagonal_ints(&[-1, 1])),
                ("C".into(), RationalMatrix::diagonal_ints(&[-1, -1])),
            ],
        )
        .unwrap();
        assert_eq!(cyclic_decomposition(&spec), Err(Error::NotCyclic));
    }

    #[test]
    fn worked_examples() {
        let spec = minus_identity();
        let r = coincidence_trichotomy(&spec, &map("f", &[2, 2]), &map("g", &[3, 3])).unwrap();
        assert_eq!(r.case, TrichotomyCase::Case2);
        assert_eq!(r.predicted_nielsen, rat(13));

        let r = coincidence_trichotomy(&spec, &map("f", &[2, 2]), &map("g", &[3, 1])).unwrap();
        assert_eq!(r.case, TrichotomyCase::Case3);
        assert_eq!(r.lefschetz, rat(7));
        assert_eq!(r.lefschetz_double_cover, Some(rat(-1)));
        assert_eq!(r.predicted_nielsen, rat(8));
        assert_eq!((r.epsilon_o, r.epsilon_e), (-1, 1));
        let n = coincidence_numbers(&spec, &map("f", &[2, 2]), &map("g", &[3, 1]), 1).unwrap();
        assert_eq!(n.nielsen, Some(rat(8)));
    }

    #[test]
    fn trivial_holonomy_is_case_one() {
        let spec = ManifoldSpec::trivial("T2", 2);
        let f = AffineMapSpec::new("f", RationalMatrix::from_ints([[2, 1], [1, 1]]));
        let r = coincidence_trichotomy(&spec, &f, &map("g", &[1, -1])).unwrap();
        assert_eq!(r.case, TrichotomyCase::Case1);
        assert_eq!(r.predicted_nielsen, r.lefschetz.abs());
    }

    #[test]
    fn incompatible_blocks_are_rejected() {
        let spec = ManifoldSpec::new(
            "z2",
            3,
            vec![
                ("I".into(), RationalMatrix::identity(3)),
                ("A".into(), RationalMatrix::diagonal_ints(&[1, -1, -1])),
            ],
        )
        .unwrap();
        let f = AffineMapSpec::new("f", RationalMatrix::from_ints([[1, 1, 0], [0, 2, 0], [0, 0, 2]]));
        let err = coincidence_trichotomy(&spec, &f, &AffineMapSpec::identity(3)).unwrap_err();
        assert!(matches!(err, Error::NotBlockCompatible(_)));
        let k = ManifoldSpec::new(
            "klein",
            2,
            vec![
                ("I".into(), RationalMatrix::identity(2)),
                ("A".into(), RationalMatrix::diagonal_ints(&[1, -1])),
            ],
        )
        .unwrap();
        assert_eq!(
            coincidence_trichotomy(&k, &map("f", &[2, 2]), &map("g", &[3, 3])).unwrap_err(),
            Error::NotOrientable
        );
    }
}
