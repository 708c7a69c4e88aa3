use std::fmt;

use num::complex::Complex64;
use num::{One, Zero};

use crate::algebra::roots::polynomial_roots;
use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Values of the denominator below this modulus count as poles.
pub const POLE_EPS: f64 = 1e-12;

/// Exact quotient of coprime polynomials.
///
/// Normalized so that the lowest-order nonzero coefficient of the denominator is 1;
/// for every zeta function (which is holomorphic and nonzero at the origin) this is
/// the constant term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        if numerator.is_zero() {
            return Ok(RationalFunction {
                numerator,
                denominator: Polynomial::one(),
            });
        }
        let g = numerator.gcd(&denominator);
        let num = numerator.exact_div(&g);
        let den = denominator.exact_div(&g);
        let low = den.coeff(den.valuation().unwrap_or(0));
        let inv = low.recip();
        Ok(RationalFunction {
            numerator: num.scale(&inv),
            denominator: den.scale(&inv),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            numerator: p,
            denominator: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    /// `(1 + a z) / (1 + b z)` style constructor from integer coefficient lists.
    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(Polynomial::from_ints(num), Polynomial::from_ints(den))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// `deg numerator + deg denominator`
    pub fn total_degree(&self) -> usize {
        self.numerator.degree().unwrap_or(0) + self.denominator.degree().unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.numerator.is_constant() && self.denominator.is_constant())
            .then(|| self.numerator.coeff(0) / self.denominator.coeff(0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
        .expect("product of nonzero denominators")
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// `self^e` for `e = ±1, ±2, ..`
    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Self::new(base.numerator.pow(k), base.denominator.pow(k))
    }

    /// `f(c z)`
    pub fn scale_variable(&self, c: &Rational) -> Self {
        Self::new(
            self.numerator.scale_variable(c),
            self.denominator.scale_variable(c),
        )
        .expect("scaling keeps the denominator nonzero")
    }

    /// `f(1/(d z))`, cleared of negative powers of `z`.
    pub fn substitute_reciprocal_scale(&self, d: &Rational) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InvalidInput("reciprocal scale d must be nonzero".into()));
        }
        let k = self
            .numerator
            .degree()
            .unwrap_or(0)
            .max(self.denominator.degree().unwrap_or(0));
        let dinv = d.recip();
        let transform = |p: &Polynomial| p.scale_variable(&dinv).reversed_with_degree(k);
        Self::new(transform(&self.numerator), transform(&self.denominator))
    }

    /// Power-series coefficients `c_0 .. c_{len-1}` about the origin.
    pub fn series(&self, len: usize) -> Result<Vec<Rational>> {
        let q0 = self.denominator.coeff(0);
        if q0.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        let q: Vec<Rational> = self.denominator.coeffs().iter().map(|c| c / &q0).collect();
        let mut s: Vec<Rational> = Vec::with_capacity(len);
        for k in 0..len {
            let mut v = self.numerator.coeff(k) / &q0;
            for i in 1..q.len().min(k + 1) {
                if !q[i].is_zero() {
                    v -= &q[i] * &s[k - i];
                }
            }
            s.push(v);
        }
        Ok(s)
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let den = self.denominator.eval_complex(z);
        if den.norm() < POLE_EPS {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.numerator.eval_complex(z) / den)
    }

    /// Smallest modulus of a pole; infinite for polynomials.
    pub fn radius_of_convergence(&self) -> f64 {
        if self.denominator.is_constant() {
            return f64::INFINITY;
        }
        polynomial_roots(&self.denominator.squarefree_part())
            .iter()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn is_one(&self) -> bool {
        self.numerator.is_one_poly() && self.denominator.is_one_poly()
    }
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl IsOnePoly for Polynomial {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one_poly() {
            if self.numerator.is_constant() {
                return write!(f, "{}", self.numerator);
            }
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}
