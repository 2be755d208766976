use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{QidError, Result};
use crate::exactcore::Scalar;

/// Determinant algorithm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DetBackend {
    /// Gaussian elimination over the rationals.
    #[default]
    Rational,
    /// Bareiss elimination over the integers after clearing row denominators.
    FractionFree,
}

impl DetBackend {
    pub fn name(self) -> &'static str {
        match self {
            DetBackend::Rational => "rational",
            DetBackend::FractionFree => "fraction-free",
        }
    }
}

impl fmt::Display for DetBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DetBackend {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "rational" => Ok(DetBackend::Rational),
            "fraction-free" => Ok(DetBackend::FractionFree),
            other => Err(format!("unknown determinant backend {other:?}")),
        }
    }
}

/// Dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(QidError::Shape { rows: r, cols: c });
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `rows x cols` matrix from `f(i, j)` with 0-based indices.
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<Scalar>,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j)?);
            }
        }
        if rows == 0 || cols == 0 {
            return Err(QidError::Shape { rows, cols });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix::from_fn(n, n, |i, j| {
            Ok(if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            })
        })
        .expect("n >= 1")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, i: usize, k: usize) {
        for j in 0..self.cols {
            self.entries.swap(i * self.cols + j, k * self.cols + j);
        }
    }

    /// The matrix with row `i` and column `j` removed (0-based); `None` for 1x1.
    pub fn minor(&self, i: usize, j: usize) -> Option<ExactMatrix> {
        if self.rows < 2 || self.cols < 2 {
            return None;
        }
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != i) {
            for c in (0..self.cols).filter(|&c| c != j) {
                entries.push(self.get(r, c).clone());
            }
        }
        Some(ExactMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        })
    }

    /// Signed cofactor `(-1)^{i+j} det(minor(i, j))`.
    pub fn cofactor(&self, i: usize, j: usize, backend: DetBackend) -> Result<Scalar> {
        self.check_square()?;
        let m = match self.minor(i, j) {
            Some(m) => det_with(&m, backend)?,
            None => Scalar::one(),
        };
        Ok(if (i + j).is_multiple_of(2) { m } else { -m })
    }

    fn check_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(QidError::Shape {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }
}

/// Exact determinant by rational Gaussian elimination, pivoting on the first
/// nonzero entry of each column.
pub fn det_exact(m: &ExactMatrix) -> Result<Scalar> {
    m.check_square()?;
    let n = m.rows;
    let mut a = m.clone();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
            return Ok(Scalar::zero());
        };
        if p != col {
            a.swap_rows(p, col);
            det = -det;
        }
        let pivot = a.get(col, col).clone();
        det *= &pivot;
        let inv = pivot.recip()?;
        for r in col + 1..n {
            if a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col) * &inv;
            for c in col + 1..n {
                let v = a.get(r, c) - &factor * a.get(col, c);
                a.set(r, c, v);
            }
            a.set(r, col, Scalar::zero());
        }
    }
    Ok(det)
}

/// Exact determinant by Bareiss elimination over the integers. Each row is
/// scaled by the lcm of its denominators first; the result is divided back.
pub fn det_fraction_free(m: &ExactMatrix) -> Result<Scalar> {
    m.check_square()?;
    let n = m.rows;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
        scale *= l;
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Scalar::zero());
            };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if sign_flip {
        det = -det;
    }
    Ok(Scalar::from_big(BigRational::new(det, scale)))
}

pub fn det_with(m: &ExactMatrix, backend: DetBackend) -> Result<Scalar> {
    match backend {
        DetBackend::Rational => det_exact(m),
        DetBackend::FractionFree => det_fraction_free(m),
    }
}
