//! Exact reconstruction of `exp(Σ a_n z^n / n)` as a rational function.

mod rational_function;
pub mod recurrence;
pub mod series;

pub use rational_function::{RationalFunction, POLE_EPS};
pub use recurrence::{berlekamp_massey, min_linear_recurrence, Connection};
pub use series::{exp_of_log_series, log_terms_of_series};

use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};

/// A deterministic sequence `a_1, a_2, ..` together with a bound on the total
/// degree of its zeta function.
pub trait SequenceOracle {
    /// `a_n` for `n >= 1`.
    fn term(&self, n: u64) -> Result<Rational>;
    fn degree_bound(&self) -> usize;
}

/// Sequence backed by a closure.
pub struct FnSequence<F> {
    f: F,
    bound: usize,
}

impl<F: Fn(u64) -> Result<Rational>> FnSequence<F> {
    pub fn new(bound: usize, f: F) -> Self {
        FnSequence { f, bound }
    }
}

impl<F: Fn(u64) -> Result<Rational>> SequenceOracle for FnSequence<F> {
    fn term(&self, n: u64) -> Result<Rational> {
        (self.f)(n)
    }

    fn degree_bound(&self) -> usize {
        self.bound
    }
}

/// Number of terms `a_1 ..` consumed by [`zeta_from_terms`] for bound `b`.
pub fn terms_needed(b: usize) -> usize {
    3 * b + 3
}

/// `exp(Σ a_n z^n / n)` as an exact rational function.
///
/// With `B = seq.degree_bound()`, the series is expanded to `2B + 4` terms, a
/// Padé approximant of total degree at most `B` is extracted by Berlekamp-Massey,
/// and the candidate is checked against series terms `2B + 5 ..= 3B + 4`.
pub fn zeta_from_terms(seq: &dyn SequenceOracle) -> Result<RationalFunction> {
    let b = seq.degree_bound();
    let terms = (1..=terms_needed(b) as u64)
        .map(|n| seq.term(n))
        .collect::<Result<Vec<_>>>()?;
    zeta_from_slice(&terms, b)
}

/// As [`zeta_from_terms`] for precomputed `a_1 .. a_{3B+3}`.
pub fn zeta_from_slice(terms: &[Rational], b: usize) -> Result<RationalFunction> {
    let total = terms_needed(b) + 1;
    if terms.len() + 1 < total {
        return Err(Error::InvalidInput(format!(
            "degree bound {b} needs {} terms, got {}",
            total - 1,
            terms.len()
        )));
    }
    let series = exp_of_log_series(terms, total);
    let fit_len = 2 * b + 4;
    let window = &series[..fit_len];
    let conn = berlekamp_massey(window);
    let numerator = (&conn.polynomial * &Polynomial::new(window.to_vec())).truncate(conn.length.max(1));
    let rf = RationalFunction::new(numerator, conn.polynomial)?;
    if rf.total_degree() > b || 2 * conn.length > fit_len {
        return Err(Error::NotRational {
            bound: b,
            index: fit_len,
        });
    }
    let check = rf.series(total)?;
    if let Some(index) = (0..total).find(|&k| check[k] != series[k]) {
        return Err(Error::NotRational { bound: b, index });
    }
    Ok(rf)
}
