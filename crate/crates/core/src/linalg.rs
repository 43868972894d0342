//! Dense matrices over the Gaussian rationals with exact elimination.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>, // row-major
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> GaussianRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// True if every entry with `|i - j| > width` vanishes.
    pub fn is_banded(&self, width: usize) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i.abs_diff(j) <= width || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<GaussianRational> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn apply(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(GaussianRational::zero(), |mut acc, (a, b)| {
                        if !a.is_zero() && !b.is_zero() {
                            acc += &(a * b);
                        }
                        acc
                    })
            })
            .collect()
    }

    pub fn trace(&self) -> GaussianRational {
        self.diagonal()
            .iter()
            .fold(GaussianRational::zero(), |acc, x| &acc + x)
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Rank by Gaussian elimination over the field.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let (n, m) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..m {
            let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            let inv = a[rank][col].inv().expect("nonzero pivot");
            for r in rank + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &inv;
                for c in col..m {
                    if a[rank][c].is_zero() {
                        continue;
                    }
                    let t = &factor * &a[rank][c];
                    a[r][c] -= &t;
                }
            }
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    /// Characteristic polynomial `det(x I - A)` via Faddeev-LeVerrier.
    /// Coefficients are returned lowest degree first; the leading one is 1.
    pub fn characteristic_polynomial(&self) -> Result<Vec<GaussianRational>> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut coeffs = vec![GaussianRational::zero(); n + 1];
        coeffs[n] = GaussianRational::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self * &m;
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            m = next;
            let am = self * &m;
            let c = am.trace().scale(&Rational::new(-1, k as i64));
            coeffs[n - k] = c;
        }
        Ok(coeffs)
    }

    /// Largest Gershgorin row radius, using `|re| + |im|` as an upper bound of
    /// the modulus of each entry.
    pub fn gershgorin_bound(&self) -> Rational {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .fold(Rational::zero(), |acc, z| acc + z.re.abs() + z.im.abs())
            })
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// One eigenvalue found by [`integer_spectrum`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueCount {
    pub value: BigInt,
    pub algebraic: usize,
    pub geometric: usize,
}

/// Exact eigen-analysis of a square matrix whose eigenvalues are expected to
/// be integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSpectrum {
    pub dimension: usize,
    pub eigenvalues: Vec<EigenvalueCount>,
}

impl IntegerSpectrum {
    /// All eigenvalues are integers (algebraic multiplicities add up to the
    /// dimension).
    pub fn is_complete(&self) -> bool {
        self.eigenvalues.iter().map(|e| e.algebraic).sum::<usize>() == self.dimension
    }

    pub fn is_diagonalizable(&self) -> bool {
        self.is_complete() && self.eigenvalues.iter().all(|e| e.algebraic == e.geometric)
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        let v = BigInt::from(value);
        self.eigenvalues
            .iter()
            .find(|e| e.value == v)
            .map_or(0, |e| e.geometric)
    }
}

fn horner(coeffs: &[GaussianRational], x: &GaussianRational) -> GaussianRational {
    coeffs
        .iter()
        .rev()
        .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
}

/// Synthetic division by `(x - root)`; returns the quotient and remainder.
fn deflate(
    coeffs: &[GaussianRational],
    root: &GaussianRational,
) -> (Vec<GaussianRational>, GaussianRational) {
    let n = coeffs.len() - 1;
    let mut quotient = vec![GaussianRational::zero(); n];
    let mut carry = GaussianRational::zero();
    for i in (0..=n).rev() {
        let v = &coeffs[i] + &(&carry * root);
        if i == 0 {
            return (quotient, v);
        }
        quotient[i - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

/// Finds every integer eigenvalue of `a` by scanning the Gershgorin disc and
/// testing roots of the exact characteristic polynomial, then measures the
/// geometric multiplicity as `n - rank(a - lambda I)`.
pub fn integer_spectrum(a: &Matrix) -> Result<IntegerSpectrum> {
    let charpoly = a.characteristic_polynomial()?;
    let n = a.rows();
    let bound = a.gershgorin_bound();
    let bound = (bound.numer() / bound.denom())
        .abs()
        .to_i64()
        .unwrap_or(i64::MAX)
        .saturating_add(1);
    let mut eigenvalues = Vec::new();
    let mut remaining = charpoly;
    for candidate in -bound..=bound {
        let z = GaussianRational::from(candidate);
        let mut algebraic = 0;
        loop {
            if remaining.len() <= 1 || !horner(&remaining, &z).is_zero() {
                break;
            }
            let (q, _) = deflate(&remaining, &z);
            remaining = q;
            algebraic += 1;
        }
        if algebraic > 0 {
            let mut shifted = a.clone();
            for i in 0..n {
                let v = shifted.get(i, i) - &z;
                shifted.set(i, i, v);
            }
            eigenvalues.push(EigenvalueCount {
                value: BigInt::from(candidate),
                algebraic,
                geometric: n - shifted.rank(),
            });
        }
    }
    Ok(IntegerSpectrum {
        dimension: n,
        eigenvalues,
    })
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * rhs.cols + j] += &(a * b);
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
