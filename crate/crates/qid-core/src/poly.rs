//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::Result;
use crate::exactcore::Scalar;

/// Coefficients in ascending order of degree, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    /// `y - root`
    pub fn linear(root: &Scalar) -> Self {
        Poly::new(vec![-root, Scalar::one()])
    }

    /// `prod (y - r)` over `roots`.
    pub fn from_roots<'a, I: IntoIterator<Item = &'a Scalar>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Poly::one(), |acc, r| &acc * &Poly::linear(r))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `y^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, y: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * y + c)
    }

    pub fn scale(&self, k: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`.
    pub fn div_scalar(&self, k: &Scalar) -> Result<Poly> {
        let inv = k.recip()?;
        Ok(self.scale(&inv))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}
