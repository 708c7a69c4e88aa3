//! Gauss, Euler and Dold congruences for integer sequences.

use num::{BigInt, Integer, Zero};

use crate::error::{Error, Result};
use crate::invariants::{lefschetz_sequence, Extended};
use crate::manifold::{AffineMapSpec, ManifoldSpec};

/// Möbius function by trial division.
pub fn mobius(mut n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut result = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CongruenceKind {
    Gauss,
    Euler,
    Dold,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// The modulus: `n` for Gauss/Dold, `p^r` for Euler.
    pub modulus: u64,
    /// The quantity that should vanish modulo `modulus`.
    pub sum: BigInt,
    /// `sum mod modulus`, in `[0, modulus)`.
    pub residue: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub kind: CongruenceKind,
    /// Moduli that were checked.
    pub checked: Vec<u64>,
    /// Moduli skipped because a needed term is infinite.
    pub skipped: Vec<u64>,
    pub violations: Vec<Violation>,
    /// The prime for Euler checks.
    pub prime: Option<u64>,
}

impl CongruenceReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `Σ_{d|n} μ(d) a_{n/d}`, or `None` if a needed term is infinite.
pub fn mobius_sum(seq: &[Extended<BigInt>], n: u64) -> Option<BigInt> {
    let mut sum = BigInt::zero();
    for d in divisors(n) {
        let mu = mobius(d);
        let term = seq[(n / d - 1) as usize].finite()?;
        if mu != 0 {
            sum += term * BigInt::from(mu);
        }
    }
    Some(sum)
}

/// Check `Σ_{d|n} μ(d) a_{n/d} ≡ 0 (mod n)` for `n = 1 ..= n_max`, where
/// `seq[i] = a_{i+1}`. Moduli whose sums involve an infinite term are skipped.
pub fn check_gauss(seq: &[Extended<BigInt>], n_max: u64) -> Result<CongruenceReport> {
    check_length(seq, n_max)?;
    let mut report = CongruenceReport {
        kind: CongruenceKind::Gauss,
        checked: Vec::new(),
        skipped: Vec::new(),
        violations: Vec::new(),
        prime: None,
    };
    for n in 1..=n_max {
        let Some(sum) = mobius_sum(seq, n) else {
            report.skipped.push(n);
            continue;
        };
        report.checked.push(n);
        let residue = sum.mod_floor(&BigInt::from(n));
        if !residue.is_zero() {
            report.violations.push(Violation {
                modulus: n,
                sum,
                residue,
            });
        }
    }
    Ok(report)
}

/// Check `a_{p^r} ≡ a_{p^{r-1}} (mod p^r)` for `r = 1 ..= r_max`.
pub fn check_euler(seq: &[Extended<BigInt>], p: u64, r_max: u32) -> Result<CongruenceReport> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let top = p
        .checked_pow(r_max)
        .ok_or_else(|| Error::InvalidInput(format!("{p}^{r_max} overflows")))?;
    check_length(seq, top)?;
    let term = |index: u64| -> Result<&BigInt> {
        seq[(index - 1) as usize]
            .finite()
            .ok_or(Error::InfinityInSequence { index })
    };
    let mut report = CongruenceReport {
        kind: CongruenceKind::Euler,
        checked: Vec::new(),
        skipped: Vec::new(),
        violations: Vec::new(),
        prime: Some(p),
    };
    for r in 1..=r_max {
        let modulus = p.pow(r);
        let sum = term(modulus)? - term(modulus / p)?;
        report.checked.push(modulus);
        let residue = sum.mod_floor(&BigInt::from(modulus));
        if !residue.is_zero() {
            report.violations.push(Violation {
                modulus,
                sum,
                residue,
            });
        }
    }
    Ok(report)
}

/// The Gauss check applied to `L(fⁿ)`, which holds unconditionally.
pub fn check_dold_lefschetz(spec: &ManifoldSpec, map: &AffineMapSpec, n_max: u64) -> Result<CongruenceReport> {
    spec.check_map(map)?;
    let group: Vec<_> = spec.matrices().collect();
    let seq: Vec<Extended<BigInt>> = lefschetz_sequence(&group, &map.d, n_max)?
        .into_iter()
        .map(Extended::Finite)
        .collect();
    Ok(CongruenceReport {
        kind: CongruenceKind::Dold,
        ..check_gauss(&seq, n_max)?
    })
}

fn check_length(seq: &[Extended<BigInt>], needed: u64) -> Result<()> {
    if (seq.len() as u64) < needed {
        return Err(Error::InsufficientTerms {
            order: needed as usize,
            needed: needed as usize,
            supplied: seq.len(),
        });
    }
    Ok(())
}
