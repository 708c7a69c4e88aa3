//! Numerical root isolation for exact polynomials.

use num::complex::Complex64;
use num::Zero;

use super::poly::Polynomial;

const MAX_ITER: usize = 2000;

/// All complex roots of `p` (with multiplicity as a root list), double precision.
///
/// Uses Aberth-Ehrlich simultaneous iteration followed by two Newton steps.
/// Accuracy is best for square-free input; callers wanting multiplicities
/// should split with [`Polynomial::squarefree_decomposition`] first.
pub fn polynomial_roots(p: &Polynomial) -> Vec<Complex64> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let val = p.valuation().unwrap_or(0);
    let mut roots = vec![Complex64::zero(); val];
    if deg == val {
        return roots;
    }
    let shifted = Polynomial::new(p.coeffs()[val..].to_vec()).monic();
    let c = shifted.to_f64_coeffs();
    let d = c.len() - 1;
    match d {
        1 => roots.push(Complex64::new(-c[0], 0.0)),
        2 => roots.extend(quadratic(c[1], c[0])),
        _ => roots.extend(aberth(&c)),
    }
    roots
}

fn quadratic(b: f64, c: f64) -> [Complex64; 2] {
    // z^2 + b z + c, cancellation-free form
    let disc = b * b - 4.0 * c;
    if disc >= 0.0 {
        let s = disc.sqrt();
        let q = -0.5 * (b + b.signum() * s);
        if q == 0.0 {
            return [Complex64::zero(), Complex64::zero()];
        }
        [Complex64::new(q, 0.0), Complex64::new(c / q, 0.0)]
    } else {
        let s = (-disc).sqrt();
        [
            Complex64::new(-0.5 * b, 0.5 * s),
            Complex64::new(-0.5 * b, -0.5 * s),
        ]
    }
}

fn eval_with_derivative(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn aberth(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    // geometric mean of root moduli as the initial radius
    let radius = c[0].abs().powf(1.0 / d as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for _ in 0..MAX_ITER {
        let mut max_step: f64 = 0.0;
        for k in 0..d {
            let (p, dp) = eval_with_derivative(c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for root in z.iter_mut() {
        for _ in 0..2 {
            let (p, dp) = eval_with_derivative(c, *root);
            if dp.norm() > 0.0 {
                let step = p / dp;
                if step.is_finite() {
                    *root -= step;
                }
            }
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_re(mut v: Vec<Complex64>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        v.iter().map(|z| z.re).collect()
    }

    #[test]
    fn real_roots() {
        // (z-1)(z+2)(z-3)
        let p = Polynomial::from_ints(&[6, -5, -2, 1]);
        let r = sorted_re(polynomial_roots(&p));
        assert!((r[0] + 2.0).abs() < 1e-12);
        assert!((r[1] - 1.0).abs() < 1e-12);
        assert!((r[2] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn unit_circle_roots() {
        let r = polynomial_roots(&Polynomial::cyclotomic(5));
        assert_eq!(r.len(), 4);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_roots_are_exact() {
        let p = Polynomial::from_ints(&[0, 0, -2, 1]);
        let mut r = polynomial_roots(&p);
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert_eq!(r[0], Complex64::zero());
        assert_eq!(r[1], Complex64::zero());
        assert!((r[2].re - 2.0).abs() < 1e-14);
    }
}
