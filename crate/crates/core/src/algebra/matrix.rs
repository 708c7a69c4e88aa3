use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num::{BigInt, Integer, One, Signed, Zero};

use super::poly::{to_f64, Polynomial};
use super::Rational;
use crate::error::{Error, Result};

/// Square matrix of exact rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(dim: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                context: "matrix entries".into(),
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(RationalMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "matrix row".into(),
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix { dim, entries })
    }

    pub fn from_ints<const N: usize>(rows: [[i64; N]; N]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Rational::from_integer(x.into())))
            .collect();
        RationalMatrix { dim: N, entries }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn zero(dim: usize) -> Self {
        RationalMatrix {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let dim = diag.len();
        let mut m = Self::zero(dim);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * dim + i] = d.clone();
        }
        m
    }

    pub fn diagonal_ints(diag: &[i64]) -> Self {
        Self::diagonal(
            &diag
                .iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect::<Vec<_>>(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.dim.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[j * n + i] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first scaled by the lcm of its denominators so the
    /// elimination runs over the integers; every intermediate quotient is exact.
    pub fn det(&self) -> Rational {
        let n = self.dim;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for row in self.entries.chunks(n) {
            let l = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
            a.push(row.iter().map(|e| e.numer() * (&l / e.denom())).collect());
            scale *= l;
        }
        let det = bareiss_det(a);
        Rational::new(det, scale)
    }

    /// Characteristic polynomial `det(zI - M)` by the Faddeev-LeVerrier recurrence.
    pub fn char_poly(&self) -> Polynomial {
        let n = self.dim;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut aux = Self::zero(n);
        for k in 1..=n {
            aux = &(self * &aux) + &Self::identity(n).scale(&coeffs[n - k + 1]);
            let t = (self * &aux).trace();
            coeffs[n - k] = -t / Rational::from_integer(BigInt::from(k));
        }
        Polynomial::new(coeffs)
    }

    /// The `i`-th compound matrix: all `i x i` minors, rows and columns indexed by
    /// lexicographically ordered `i`-subsets.
    pub fn exterior_power(&self, i: usize) -> Result<Self> {
        let n = self.dim;
        if i > n {
            return Err(Error::ExteriorPowerOutOfRange { degree: i, dim: n });
        }
        let subsets = combinations(n, i);
        let k = subsets.len();
        let mut entries = Vec::with_capacity(k * k);
        for rows in &subsets {
            for cols in &subsets {
                entries.push(self.minor(rows, cols));
            }
        }
        Ok(RationalMatrix { dim: k, entries })
    }

    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Rational {
        let sub: Vec<Rational> = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        RationalMatrix {
            dim: rows.len(),
            entries: sub,
        }
        .det()
    }

    /// Square sub-block on the given index set.
    pub fn block(&self, idx: &[usize]) -> Self {
        let entries = idx
            .iter()
            .flat_map(|&r| idx.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        RationalMatrix {
            dim: idx.len(),
            entries,
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = self.entries[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, piv);
            let inv = aug[col][col].recip();
            for v in aug[col].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c in 0..2 * n {
                        let t = &f * &aug[col][c];
                        aug[r][c] -= t;
                    }
                }
            }
        }
        let entries = aug.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Some(RationalMatrix { dim: n, entries })
    }

    /// `P^{-1} M P`; `None` when `P` is singular.
    pub fn conjugate_by(&self, p: &Self) -> Option<Self> {
        let pinv = p.inverse()?;
        Some(&(&pinv * self) * p)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j) * &v[j])
                    .sum::<Rational>()
            })
            .collect()
    }

    /// Basis of the right kernel, via reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let n = self.dim;
        let mut rows = self.rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for v in rows[r].iter_mut() {
                *v *= &inv;
            }
            for i in 0..n {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    for j in 0..n {
                        let t = &f * &rows[r][j];
                        rows[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == n {
                break;
            }
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rational::zero(); n];
                v[fc] = Rational::one();
                for (pr, &pc) in pivots.iter().enumerate() {
                    v[pc] = -rows[pr][fc].clone();
                }
                v
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.dim - self.kernel().len()
    }

    /// Matrix with the given column vectors.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Result<Self> {
        let n = cols.len();
        if let Some(bad) = cols.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                context: "column vector".into(),
                expected: n,
                found: bad.len(),
            });
        }
        let mut m = Self::zero(n);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| to_f64(self.get(i, j)))
    }

    /// Evaluate a polynomial at this matrix by Horner's rule.
    pub fn eval_poly(&self, p: &Polynomial) -> Self {
        let id = Self::identity(self.dim);
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(self.dim), |acc, c| &(&acc * self) + &id.scale(c))
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Lexicographically ordered `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * &rhs.entries[k * n + j];
                }
            }
        }
        RationalMatrix { dim: n, entries }
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        RationalMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        RationalMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
