//! Berlekamp-Massey over the rationals.

use num::{One, Zero};

use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Shortest linear feedback relation for a sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct Connection {
    /// `C(z) = 1 + c_1 z + .. + c_L z^L` with `Σ_{i=0}^{L} c_i s_{k-i} = 0` for `k >= L`.
    pub polynomial: Polynomial,
    /// Linear complexity `L`.
    pub length: usize,
}

/// Berlekamp-Massey: the minimal connection polynomial of `s`.
pub fn berlekamp_massey(s: &[Rational]) -> Connection {
    let mut c = vec![Rational::one()];
    let mut b = vec![Rational::one()];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last_disc = Rational::one();

    for k in 0..s.len() {
        let mut d = s[k].clone();
        for i in 1..=len.min(c.len() - 1) {
            if !c[i].is_zero() {
                d += &c[i] * &s[k - i];
            }
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = &d / &last_disc;
        let mut next = c.clone();
        if next.len() < b.len() + shift {
            next.resize(b.len() + shift, Rational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            next[i + shift] -= &coef * bi;
        }
        if 2 * len <= k {
            b = std::mem::replace(&mut c, next);
            len = k + 1 - len;
            last_disc = d;
            shift = 1;
        } else {
            c = next;
            shift += 1;
        }
    }
    c.truncate(len + 1);
    Connection {
        polynomial: Polynomial::new(c),
        length: len,
    }
}

/// Monic characteristic polynomial of the minimal linear recurrence of `terms`.
///
/// Fails with [`Error::InsufficientTerms`] when fewer than twice the recurrence
/// order were supplied, since the recurrence is then not determined.
pub fn min_linear_recurrence(terms: &[Rational]) -> Result<Polynomial> {
    let conn = berlekamp_massey(terms);
    if 2 * conn.length > terms.len() {
        return Err(Error::InsufficientTerms {
            order: conn.length,
            needed: 2 * conn.length,
            supplied: terms.len(),
        });
    }
    Ok(conn.polynomial.reversed_with_degree(conn.length))
}
