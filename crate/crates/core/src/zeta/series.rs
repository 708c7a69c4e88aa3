//! Truncated power series over the rationals.

use num::{BigInt, One, Zero};

use crate::algebra::Rational;

/// Coefficients `c_0 .. c_{len-1}` of `exp(Σ_{n>=1} a_n z^n / n)`, where
/// `terms[n-1] = a_n`.
///
/// Uses `k c_k = Σ_{j=1}^{k} a_j c_{k-j}`, which follows from differentiating
/// `log Z = Σ a_n z^n / n`.
pub fn exp_of_log_series(terms: &[Rational], len: usize) -> Vec<Rational> {
    assert!(
        len == 0 || terms.len() + 1 >= len,
        "need {} terms for {len} coefficients",
        len.saturating_sub(1)
    );
    let mut c = Vec::with_capacity(len);
    if len == 0 {
        return c;
    }
    c.push(Rational::one());
    for k in 1..len {
        let mut acc = Rational::zero();
        for j in 1..=k {
            if !terms[j - 1].is_zero() && !c[k - j].is_zero() {
                acc += &terms[j - 1] * &c[k - j];
            }
        }
        c.push(acc / Rational::from_integer(BigInt::from(k)));
    }
    c
}

/// Inverse of [`exp_of_log_series`]: given `c_0 = 1, c_1, ..`, recover `a_1 ..`.
pub fn log_terms_of_series(c: &[Rational]) -> Vec<Rational> {
    assert!(c.first().is_some_and(|c0| c0.is_one()), "series must start with 1");
    let mut a: Vec<Rational> = Vec::with_capacity(c.len().saturating_sub(1));
    for n in 1..c.len() {
        let mut v = &c[n] * Rational::from_integer(BigInt::from(n));
        for j in 1..n {
            v -= &a[j - 1] * &c[n - j];
        }
        a.push(v);
    }
    a
}
