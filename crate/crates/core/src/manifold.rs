//! Holonomy groups, affine maps and the expanding-determinant split.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num::integer::lcm;
use num::{One, Zero};

use crate::algebra::eigen::{root_of_unity_order_bound, totient};
use crate::algebra::{
    classify_eigenvalues, has_root_of_unity_eigenvalue, EigenClassification, Rational,
    RationalMatrix,
};
use crate::error::{Error, Result};

/// Default scan length for vanishing determinants.
pub const DEFAULT_N_MAX: u64 = 64;

/// Residual threshold for the expanding-subspace projection.
pub const SPLIT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyElement {
    pub label: String,
    pub matrix: RationalMatrix,
}

/// A validated holonomy group `Φ` acting on an `m`-dimensional Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldSpec {
    name: String,
    dimension: usize,
    holonomy: Vec<HolonomyElement>,
    orientable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub dimension: usize,
    pub order: usize,
    pub orientable: bool,
    /// Multiplicative order of each element, in input order.
    pub element_orders: Vec<usize>,
}

impl ManifoldSpec {
    /// Validate and build. Checks square matrices of the right size, invertibility,
    /// finite order, identity, and closure under products.
    pub fn new(
        name: impl Into<String>,
        dimension: usize,
        holonomy: Vec<(String, RationalMatrix)>,
    ) -> Result<Self> {
        let spec = ManifoldSpec {
            name: name.into(),
            dimension,
            holonomy: holonomy
                .into_iter()
                .map(|(label, matrix)| HolonomyElement { label, matrix })
                .collect(),
            orientable: false,
        };
        let report = validate_elements(dimension, &spec.holonomy)?;
        Ok(ManifoldSpec {
            orientable: report.orientable,
            ..spec
        })
    }

    /// `Φ = {I}`: a nilmanifold or solvmanifold.
    pub fn trivial(name: impl Into<String>, dimension: usize) -> Self {
        Self::new(
            name,
            dimension,
            vec![("I".to_string(), RationalMatrix::identity(dimension))],
        )
        .expect("trivial group is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn holonomy(&self) -> &[HolonomyElement] {
        &self.holonomy
    }

    pub fn matrices(&self) -> impl Iterator<Item = &RationalMatrix> {
        self.holonomy.iter().map(|h| &h.matrix)
    }

    pub fn order(&self) -> usize {
        self.holonomy.len()
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn validation_report(&self) -> ValidationReport {
        validate_elements(self.dimension, &self.holonomy).expect("spec was validated on construction")
    }

    pub fn label_of(&self, m: &RationalMatrix) -> Option<&str> {
        self.holonomy
            .iter()
            .find(|h| &h.matrix == m)
            .map(|h| h.label.as_str())
    }

    pub fn check_map(&self, map: &AffineMapSpec) -> Result<()> {
        if map.d.dim() != self.dimension {
            return Err(Error::DimensionMismatch {
                context: format!("linearization of {}", map.label),
                expected: self.dimension,
                found: map.d.dim(),
            });
        }
        if let Some(t) = &map.translation {
            if t.len() != self.dimension {
                return Err(Error::DimensionMismatch {
                    context: format!("translation of {}", map.label),
                    expected: self.dimension,
                    found: t.len(),
                });
            }
        }
        Ok(())
    }
}

fn validate_elements(dimension: usize, elements: &[HolonomyElement]) -> Result<ValidationReport> {
    if dimension == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if elements.is_empty() {
        return Err(Error::NotAGroup("holonomy list is empty".into()));
    }
    let mut index: HashMap<&RationalMatrix, usize> = HashMap::new();
    for (i, h) in elements.iter().enumerate() {
        if h.matrix.dim() != dimension {
            return Err(Error::DimensionMismatch {
                context: format!("holonomy element {}", h.label),
                expected: dimension,
                found: h.matrix.dim(),
            });
        }
        if elements[..i].iter().any(|g| g.label == h.label) {
            return Err(Error::InvalidInput(format!("duplicate holonomy label {}", h.label)));
        }
        if let Some(&j) = index.get(&h.matrix) {
            return Err(Error::NotAGroup(format!(
                "{} and {} are the same matrix",
                elements[j].label, h.label
            )));
        }
        if h.matrix.det().is_zero() {
            return Err(Error::NotAGroup(format!("{} is singular", h.label)));
        }
        index.insert(&h.matrix, i);
    }

    // A finite-order rational matrix has order dividing lcm{k : φ(k) <= m}.
    let exponent = (1..=root_of_unity_order_bound(dimension))
        .filter(|&k| totient(k) <= dimension)
        .fold(1u64, |acc, k| lcm(acc, k as u64));
    let mut element_orders = Vec::with_capacity(elements.len());
    for h in elements {
        if !h.matrix.pow(exponent).is_identity() {
            return Err(Error::InfiniteOrderElement {
                label: h.label.clone(),
            });
        }
        let mut power = h.matrix.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = &power * &h.matrix;
            k += 1;
        }
        element_orders.push(k);
    }

    if !elements.iter().any(|h| h.matrix.is_identity()) {
        return Err(Error::NotAGroup("identity is missing".into()));
    }
    for a in elements {
        for b in elements {
            let prod = &a.matrix * &b.matrix;
            if !index.contains_key(&prod) {
                return Err(Error::NotAGroup(format!(
                    "product {}*{} = {} is missing",
                    a.label, b.label, prod
                )));
            }
        }
    }
    // closure plus finite order gives inverses
    let orientable = elements.iter().all(|h| h.matrix.det().is_one());
    Ok(ValidationReport {
        dimension,
        order: elements.len(),
        orientable,
        element_orders,
    })
}

/// An affine map `(d, D)`; only the linearization `D` enters any formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMapSpec {
    pub label: String,
    pub d: RationalMatrix,
    pub translation: Option<Vec<Rational>>,
}

impl AffineMapSpec {
    pub fn new(label: impl Into<String>, d: RationalMatrix) -> Self {
        AffineMapSpec {
            label: label.into(),
            d,
            translation: None,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new("id", RationalMatrix::identity(dim))
    }

    pub fn with_translation(mut self, t: Vec<Rational>) -> Self {
        self.translation = Some(t);
        self
    }
}

/// Which holonomy elements act with determinant `+1` on the expanding subspace.
#[derive(Clone, Debug, PartialEq)]
pub struct PlusSplit {
    /// `(label, A ∈ Φ₊)` in holonomy order.
    pub plus_membership: Vec<(String, bool)>,
    pub is_proper: bool,
    pub p: usize,
    pub n: usize,
    pub expanding_dim: usize,
    pub classification: EigenClassification,
}

impl PlusSplit {
    /// Matrices of `Φ₊`, in holonomy order.
    pub fn plus_group<'a>(&self, spec: &'a ManifoldSpec) -> Vec<&'a RationalMatrix> {
        spec.holonomy()
            .iter()
            .zip(&self.plus_membership)
            .filter(|(_, (_, plus))| *plus)
            .map(|(h, _)| &h.matrix)
            .collect()
    }

    pub fn plus_order(&self) -> usize {
        self.plus_membership.iter().filter(|(_, plus)| *plus).count()
    }
}

/// Split `Φ` by the sign of `det A₂`, where `A₂` is the restriction of `A` to the
/// generalized eigenspace of `D` for eigenvalues of modulus `> 1`.
///
/// The subspace is found numerically as the column space of `q(D)`, where `q` has
/// the non-expanding eigenvalues as roots with full algebraic multiplicity. The
/// determinants are exactly `±1`; they are rounded after checking the residual.
pub fn compute_plus_split(spec: &ManifoldSpec, map: &AffineMapSpec, tol: f64) -> Result<PlusSplit> {
    spec.check_map(map)?;
    let classification = classify_eigenvalues(&map.d, tol)?;
    let m = spec.dimension();
    let r = classification.expanding_dim;

    let plus_membership: Vec<(String, bool)> = if r == 0 {
        spec.holonomy().iter().map(|h| (h.label.clone(), true)).collect()
    } else {
        let basis = expanding_basis(&map.d, &classification, r);
        let mut out = Vec::with_capacity(spec.order());
        for h in spec.holonomy() {
            let a = h.matrix.to_f64();
            let au = &a * &basis;
            let a2 = basis.transpose() * &au;
            let residual = (&au - &basis * &a2).norm();
            let det = a2.determinant();
            let rounded = if det >= 0.0 { 1.0 } else { -1.0 };
            let miss = residual.max((det - rounded).abs());
            if miss > SPLIT_TOLERANCE {
                return Err(Error::NonInvariantSubspace {
                    label: h.label.clone(),
                    residual: miss,
                });
            }
            out.push((h.label.clone(), rounded > 0.0));
        }
        debug_assert_eq!(basis.nrows(), m);
        out
    };
    let is_proper = plus_membership.iter().any(|(_, plus)| !plus);
    Ok(PlusSplit {
        plus_membership,
        is_proper,
        p: classification.p,
        n: classification.n,
        expanding_dim: r,
        classification,
    })
}

/// Orthonormal basis (as columns) of the expanding generalized eigenspace of `d`.
fn expanding_basis(d: &RationalMatrix, c: &EigenClassification, r: usize) -> DMatrix<f64> {
    let m = d.dim();
    // real coefficients of prod (z - λ)^mult over non-expanding λ
    let mut q: Vec<num::complex::Complex64> = vec![num::complex::Complex64::new(1.0, 0.0)];
    for ev in c.eigenvalues.iter().filter(|ev| !ev.is_expanding()) {
        let lambda = num::complex::Complex64::new(ev.re, ev.im);
        for _ in 0..ev.multiplicity {
            let mut next = vec![num::complex::Complex64::new(0.0, 0.0); q.len() + 1];
            for (i, c) in q.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * lambda;
            }
            q = next;
        }
    }
    let df = d.to_f64();
    let id = DMatrix::<f64>::identity(m, m);
    let qd = q
        .iter()
        .rev()
        .fold(DMatrix::<f64>::zeros(m, m), |acc, c| &acc * &df + &id * c.re);
    let svd = qd.svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].partial_cmp(&svd.singular_values[i]).unwrap());
    DMatrix::from_fn(m, r, |i, j| u[(i, order[j])])
}

/// True iff every eigenvalue of `D` has modulus 1.
pub fn is_virtually_unipotent(map: &AffineMapSpec, tol: f64) -> Result<bool> {
    let c = classify_eigenvalues(&map.d, tol)?;
    Ok(c.unit_modulus_count == map.d.dim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definedness {
    Defined,
    /// `det(I - A Dⁿ) = 0` for the named `A`.
    Undefined { n: u64, label: String },
    Unknown { n_max: u64 },
}

/// Whether every `R(fⁿ)` is finite.
///
/// `Defined` is certified by the absence of root-of-unity eigenvalues of `D`;
/// otherwise `n = 1 ..= n_max` is scanned for a vanishing determinant.
pub fn reidemeister_zeta_defined(spec: &ManifoldSpec, map: &AffineMapSpec, n_max: u64) -> Definedness {
    if !has_root_of_unity_eigenvalue(&map.d) {
        return Definedness::Defined;
    }
    let id = RationalMatrix::identity(spec.dimension());
    let mut dn = id.clone();
    for n in 1..=n_max {
        dn = &dn * &map.d;
        for h in spec.holonomy() {
            if (&id - &(&h.matrix * &dn)).det().is_zero() {
                return Definedness::Undefined {
                    n,
                    label: h.label.clone(),
                };
            }
        }
    }
    Definedness::Unknown { n_max }
}
