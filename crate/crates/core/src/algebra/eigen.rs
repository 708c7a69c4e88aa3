//! Eigenvalue classification of rational matrices.
//!
//! The characteristic polynomial is computed exactly and split into square-free
//! parts. Roots of unity are separated exactly (gcd with `z^k - 1`), the remaining
//! roots are isolated numerically. Membership of a root in the unit circle is
//! never decided by a floating-point modulus alone.

use num::complex::Complex64;
use num::integer::gcd;

use super::matrix::RationalMatrix;
use super::poly::Polynomial;
use super::roots::polynomial_roots;
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenvalue {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    pub on_unit_circle: bool,
}

impl Eigenvalue {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }

    pub fn is_expanding(&self) -> bool {
        !self.on_unit_circle && self.modulus() > 1.0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenClassification {
    /// Real eigenvalues greater than 1, with multiplicity.
    pub p: usize,
    /// Real eigenvalues less than -1, with multiplicity.
    pub n: usize,
    pub unit_modulus_count: usize,
    /// Sum of `log|λ|` over eigenvalues with `|λ| > 1`, with multiplicity.
    pub expanding_log_product: f64,
    /// Total multiplicity of eigenvalues with `|λ| > 1`.
    pub expanding_dim: usize,
    pub eigenvalues: Vec<Eigenvalue>,
}

impl EigenClassification {
    /// `prod_{|λ|>1} |λ|`, the spectral radius of the full exterior algebra.
    pub fn expanding_product(&self) -> f64 {
        self.expanding_log_product.exp()
    }
}

/// Euler's totient.
pub fn totient(mut k: usize) -> usize {
    let mut result = k;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            while k.is_multiple_of(p) {
                k /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if k > 1 {
        result -= result / k;
    }
    result
}

/// Largest `k` with `φ(k) <= dim`: every root of unity that can be an eigenvalue
/// of a rational `dim x dim` matrix has order at most this.
pub fn root_of_unity_order_bound(dim: usize) -> usize {
    if dim == 0 {
        return 0;
    }
    // φ(k) >= sqrt(k/2), so k <= 2 dim^2 covers every candidate
    (1..=2 * dim * dim + 2)
        .filter(|&k| totient(k) <= dim)
        .max()
        .unwrap_or(1)
}

/// Split off the factor of `s` whose roots are roots of unity of order `<= bound`.
fn cyclotomic_split(s: &Polynomial, bound: usize) -> (Polynomial, Polynomial) {
    let mut cyc = Polynomial::one();
    let mut rest = s.clone();
    for k in 1..=bound {
        if rest.is_constant() {
            break;
        }
        let g = rest.gcd(&Polynomial::x_pow_minus_one(k));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.exact_div(&g);
            cyc = &cyc * &g;
        }
    }
    (cyc, rest)
}

/// True iff `char_poly(m)` shares a nontrivial factor with `z^k - 1` for some
/// admissible `k`. Exact; no floating point involved.
pub fn has_root_of_unity_eigenvalue(m: &RationalMatrix) -> bool {
    let cp = m.char_poly();
    (1..=root_of_unity_order_bound(m.dim()))
        .any(|k| cp.gcd(&Polynomial::x_pow_minus_one(k)).degree().unwrap_or(0) > 0)
}

/// Classify the spectrum of `m` relative to the unit circle.
pub fn classify_eigenvalues(m: &RationalMatrix, tol: f64) -> Result<EigenClassification> {
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let cp = m.char_poly();
    let bound = root_of_unity_order_bound(m.dim());
    let mut eigenvalues = Vec::new();

    for (factor, mult) in cp.squarefree_decomposition() {
        let (cyc, rest) = cyclotomic_split(&factor, bound);
        for z in polynomial_roots(&cyc) {
            eigenvalues.push(make_eigen(z, mult, true, tol));
        }
        if rest.is_constant() {
            continue;
        }
        let recip = rest.gcd(&rest.reversed());
        let other = rest.exact_div(&recip);

        let recip_roots = polynomial_roots(&recip);
        for (i, z) in recip_roots.iter().enumerate() {
            let near = (z.norm() - 1.0).abs() < tol;
            let on_circle = if near {
                // an off-circle root of a reciprocal factor has its mirror 1/conj(z)
                // as a distinct nearby root
                let crowded = recip_roots
                    .iter()
                    .enumerate()
                    .any(|(j, w)| j != i && (w - z).norm() < 4.0 * tol);
                if crowded {
                    return Err(Error::AmbiguousClassification {
                        modulus: z.norm(),
                        tol,
                    });
                }
                true
            } else {
                false
            };
            eigenvalues.push(make_eigen(*z, mult, on_circle, tol));
        }
        for z in polynomial_roots(&other) {
            if (z.norm() - 1.0).abs() < tol {
                return Err(Error::AmbiguousClassification {
                    modulus: z.norm(),
                    tol,
                });
            }
            eigenvalues.push(make_eigen(z, mult, false, tol));
        }
    }

    eigenvalues.sort_by(|a, b| {
        b.modulus()
            .partial_cmp(&a.modulus())
            .unwrap()
            .then(a.re.partial_cmp(&b.re).unwrap())
            .then(a.im.partial_cmp(&b.im).unwrap())
    });

    let mut out = EigenClassification {
        p: 0,
        n: 0,
        unit_modulus_count: 0,
        expanding_log_product: 0.0,
        expanding_dim: 0,
        eigenvalues,
    };
    for ev in &out.eigenvalues {
        if ev.on_unit_circle {
            out.unit_modulus_count += ev.multiplicity;
            continue;
        }
        if ev.is_real() && ev.re > 1.0 {
            out.p += ev.multiplicity;
        }
        if ev.is_real() && ev.re < -1.0 {
            out.n += ev.multiplicity;
        }
        if ev.modulus() > 1.0 {
            out.expanding_dim += ev.multiplicity;
            out.expanding_log_product += ev.multiplicity as f64 * ev.modulus().ln();
        }
    }
    Ok(out)
}

fn make_eigen(z: Complex64, multiplicity: usize, on_unit_circle: bool, tol: f64) -> Eigenvalue {
    let im = if z.im.abs() < tol { 0.0 } else { z.im };
    Eigenvalue {
        re: z.re,
        im,
        multiplicity,
        on_unit_circle,
    }
}

/// Orders `k` (`3 <= k <= bound`) of the rotation blocks of a finite-order matrix,
/// one entry per cyclotomic factor `Φ_k` of its characteristic polynomial.
pub(crate) fn cyclotomic_orders(cp: &Polynomial, bound: usize) -> Vec<usize> {
    let mut rest = cp.clone();
    let mut orders = Vec::new();
    for k in 1..=bound {
        let phi = Polynomial::cyclotomic(k);
        while !rest.is_constant() && phi.divides(&rest) {
            rest = rest.exact_div(&phi);
            orders.push(k);
        }
    }
    orders
}

/// Residues `j` in `1..k/2` coprime to `k`: the rotation angles `2πj/k`
/// carried by one `Φ_k` factor.
pub(crate) fn rotation_numerators(k: usize) -> Vec<usize> {
    (1..k).filter(|&j| 2 * j < k && gcd(j, k) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn totients_and_bounds() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(root_of_unity_order_bound(1), 2);
        assert_eq!(root_of_unity_order_bound(2), 6);
        assert_eq!(root_of_unity_order_bound(3), 6);
        assert_eq!(root_of_unity_order_bound(4), 12);
    }

    #[test]
    fn classify_identity() {
        let c = classify_eigenvalues(&RationalMatrix::identity(3), DEFAULT_TOLERANCE).unwrap();
        assert_eq!((c.p, c.n, c.unit_modulus_count), (0, 0, 3));
        assert_eq!(c.expanding_log_product, 0.0);
    }

    #[test]
    fn classify_diag() {
        let c = classify_eigenvalues(&RationalMatrix::diagonal_ints(&[-1, 2]), DEFAULT_TOLERANCE)
            .unwrap();
        assert_eq!((c.p, c.n, c.unit_modulus_count), (1, 0, 1));
        assert!((c.expanding_log_product - 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn classify_heisenberg_linearization() {
        let d = RationalMatrix::from_ints([[-2, 0, 0], [0, -4, -1], [0, 6, 2]]);
        let c = classify_eigenvalues(&d, DEFAULT_TOLERANCE).unwrap();
        assert_eq!((c.p, c.n, c.unit_modulus_count), (0, 2, 0));
        // eigenvalues -2 and -1-sqrt(3) are the expanding ones
        let expected = (2.0 * (1.0 + 3f64.sqrt())).ln();
        assert!((c.expanding_log_product - expected).abs() < 1e-12);
        assert_eq!(c.expanding_dim, 2);
    }

    #[test]
    fn salem_type_roots_are_on_circle() {
        // Lehmer's polynomial: one real root > 1, its reciprocal, eight unit roots
        // that are not roots of unity
        let lehmer = Polynomial::from_ints(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let mut companion = RationalMatrix::zero(10);
        for i in 1..10 {
            companion.set(i, i - 1, rat(1));
        }
        for i in 0..10 {
            companion.set(i, 9, -lehmer.coeff(i));
        }
        assert_eq!(companion.char_poly(), lehmer);
        let c = classify_eigenvalues(&companion, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(c.unit_modulus_count, 8);
        assert_eq!(c.p, 1);
        assert!(!has_root_of_unity_eigenvalue(&companion));
    }

    #[test]
    fn near_circle_off_roots_are_ambiguous() {
        // roots 1 + 1e-12 and 1/(1 + 1e-12) are too close to the circle
        let d = RationalMatrix::diagonal(&[
            num::BigRational::new(
                num::BigInt::from(1_000_000_000_001i64),
                num::BigInt::from(1_000_000_000_000i64),
            ),
            rat(2),
        ]);
        assert!(matches!(
            classify_eigenvalues(&d, DEFAULT_TOLERANCE),
            Err(Error::AmbiguousClassification { .. })
        ));
        // a coarser tolerance resolves it
        let c = classify_eigenvalues(&d, 1e-13).unwrap();
        assert_eq!(c.p, 2);
    }

    #[test]
    fn root_of_unity_detection() {
        assert!(has_root_of_unity_eigenvalue(&RationalMatrix::identity(2)));
        assert!(has_root_of_unity_eigenvalue(&RationalMatrix::diagonal_ints(&[-1, 2])));
        let d = RationalMatrix::from_ints([[-2, 0, 0], [0, -4, -1], [0, 6, 2]]);
        assert!(!has_root_of_unity_eigenvalue(&d));
        let rot = RationalMatrix::from_ints([[0, -1], [1, -1]]);
        assert!(has_root_of_unity_eigenvalue(&rot));
    }

    #[test]
    fn rotation_bookkeeping() {
        assert_eq!(rotation_numerators(5), vec![1, 2]);
        assert_eq!(rotation_numerators(4), vec![1]);
        assert_eq!(rotation_numerators(6), vec![1]);
        let cp = &Polynomial::cyclotomic(4) * &Polynomial::cyclotomic(1);
        assert_eq!(cyclotomic_orders(&cp, 12), vec![1, 4]);
    }
}
