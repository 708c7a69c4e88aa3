//! Periodic points of linear torus maps, counted by lattice index.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::algebra::RationalMatrix;
use crate::error::{Error, Result};

/// Invariant factors `d_1 | d_2 | ..` of an integer matrix, all non-negative.
pub fn smith_normal_form(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    for t in 0..n {
        loop {
            let Some((pi, pj)) = pivot(&a, t) else {
                return finish(a);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..n {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..n {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and go again
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
    }
    finish(a)
}

fn pivot(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let n = a.len();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn finish(a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    (0..a.len()).map(|i| a[i][i].abs()).collect()
}

/// Number of fixed points of `x ↦ Dⁿ x` on `ℝᵐ/ℤᵐ`, i.e. the index of
/// `(I - Dⁿ) ℤᵐ` in `ℤᵐ`.
pub fn torus_periodic_point_oracle(d: &RationalMatrix, n: u64) -> Result<BigInt> {
    if !d.is_integral() {
        return Err(Error::NonIntegralMatrix);
    }
    let m = &RationalMatrix::identity(d.dim()) - &d.pow(n);
    let rows: Vec<Vec<BigInt>> = m
        .rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.to_integer()).collect())
        .collect();
    let factors = smith_normal_form(&rows);
    if factors.iter().any(|f| f.is_zero()) {
        return Err(Error::DegenerateFixedSet { n });
    }
    Ok(factors.iter().fold(BigInt::one(), |acc, f| acc * f))
}
