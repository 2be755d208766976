//! Two determinant evaluations with BC-symmetric rows.
//!
//! The Cauchy-polynomial determinant (size `n + 1`), column `j = 1..n+1`:
//!
//! ```text
//! det[ P_{n-j+1}(x_i, a q^{j-n}) P_{n-j+1}(x_i, c/a) P_{j-1}(x_i, b q^{1-n}) P_{j-1}(x_i, c q^{n-j+1}/b) ]
//!   = prod_{i<j} (x_i - x_j)(c - x_i x_j) * b^{C(n+1,2)} q^{-(n+1)n(n-1)/3}
//!     * prod_{i=1}^{n+1} (a/b, c q^{2n+2-2i}/(ab); q)_{i-1}
//! ```
//!
//! and the ratio-of-shifted-factorials determinant (size `n`):
//!
//! ```text
//! det[ (a x_i, ac/x_i; q)_{n-j} / (b x_i, bc/x_i; q)_{n-j} ]
//!   = prod_{i<j} (x_j - x_i)(1 - c/(x_i x_j)) a^{C(n,2)} q^{C(n,3)}
//!     * prod_i (b/a, abc q^{2n-2i}; q)_{i-1} / (b x_i, bc/x_i; q)_{n-1}
//! ```

use super::{binom2, det_with, div, exact_quotient, DetBackend, DetParams, ExactMatrix};
use crate::error::{QidError, Result};
use crate::exactcore::{cauchy_poly, qpochhammer, qpochhammer_product, Scalar};
use crate::mutation::ExponentShift;
use crate::sides::Sides;

/// Entry of the Cauchy-polynomial matrix at point `x`, column `j` (1-based, `1..=n+1`).
pub fn kara_entry(n: usize, j: usize, x: &Scalar, p: &DetParams) -> Result<Scalar> {
    assert!((1..=n + 1).contains(&j));
    let (ni, ji) = (n as i64, j as i64);
    let DetParams { a, b, c, q } = p;
    let left = n + 1 - j;
    Ok(cauchy_poly(x, &(a * q.pow(ji - ni)?), q, left)
        * cauchy_poly(x, &div(c, a, "a")?, q, left)
        * cauchy_poly(x, &(b * q.pow(1 - ni)?), q, j - 1)
        * cauchy_poly(x, &div(&(c * q.pow(ni - ji + 1)?), b, "b")?, q, j - 1))
}

/// The `(n+1) x (n+1)` matrix with rows indexed by `x` (`|x| = n + 1`).
pub fn kara_matrix(x: &[Scalar], p: &DetParams) -> Result<ExactMatrix> {
    let m = x.len();
    if m == 0 {
        return Err(QidError::Shape { rows: 0, cols: 0 });
    }
    ExactMatrix::from_fn(m, m, |i, j| kara_entry(m - 1, j + 1, &x[i], p))
}

pub fn kara_sides(x: &[Scalar], p: &DetParams, backend: DetBackend) -> Result<Sides> {
    kara_sides_shifted(x, p, backend, ExponentShift::NONE)
}

/// Fault injection: shifts the exponent `-(n+1)n(n-1)/3` of `q`.
#[doc(hidden)]
pub fn kara_sides_shifted(
    x: &[Scalar],
    p: &DetParams,
    backend: DetBackend,
    shift: ExponentShift,
) -> Result<Sides> {
    p.check_nonzero()?;
    let lhs = det_with(&kara_matrix(x, p)?, backend)?;
    let n = x.len() as i64 - 1;
    let DetParams { a, b, c, q } = p;
    let mut rhs = Scalar::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            rhs *= (&x[i] - &x[j]) * (c - &x[i] * &x[j]);
        }
    }
    rhs *= b.pow(binom2(n + 1))?;
    rhs *= q.pow(-exact_quotient((n + 1) * n * (n - 1), 3) + shift.get())?;
    let a_over_b = div(a, b, "b")?;
    let c_over_ab = div(c, &(a * b), "a b")?;
    for i in 1..=n + 1 {
        let bases = [a_over_b.clone(), &c_over_ab * q.pow(2 * n + 2 - 2 * i)?];
        rhs *= qpochhammer_product(&bases, q, (i - 1) as usize);
    }
    Ok(Sides::new(lhs, rhs))
}

pub fn kratt_sides(x: &[Scalar], p: &DetParams, backend: DetBackend) -> Result<Sides> {
    kratt_sides_shifted(x, p, backend, ExponentShift::NONE)
}

/// Fault injection: shifts the exponent `C(n,3)` of `q`.
#[doc(hidden)]
pub fn kratt_sides_shifted(
    x: &[Scalar],
    p: &DetParams,
    backend: DetBackend,
    shift: ExponentShift,
) -> Result<Sides> {
    p.check_nonzero()?;
    let n = x.len();
    if let Some(i) = x.iter().position(Scalar::is_zero) {
        return Err(QidError::DegenerateParameters(format!("x_{} = 0", i + 1)));
    }
    let DetParams { a, b, c, q } = p;
    let m = ExactMatrix::from_fn(n, n, |i, j| {
        let xi = &x[i];
        let len = n - 1 - j;
        let num = qpochhammer(&(a * xi), q, len) * qpochhammer(&(a * c / xi), q, len);
        let den = qpochhammer(&(b * xi), q, len) * qpochhammer(&(b * c / xi), q, len);
        div(&num, &den, "(b x_i, bc/x_i; q)")
    })
    .map_err(|e| match e {
        QidError::Shape { .. } => QidError::DegenerateParameters("need at least one point".into()),
        e => e,
    })?;
    let lhs = det_with(&m, backend)?;
    let ni = n as i64;
    let mut rhs = Scalar::one();
    for i in 0..n {
        for j in i + 1..n {
            rhs *= (&x[j] - &x[i]) * (Scalar::one() - c / (&x[i] * &x[j]));
        }
    }
    rhs *= a.pow(binom2(ni))?;
    rhs *= q.pow(exact_quotient(ni * (ni - 1) * (ni - 2), 6) + shift.get())?;
    let b_over_a = b / a;
    for i in 1..=ni {
        let num = qpochhammer(&b_over_a, q, (i - 1) as usize)
            * qpochhammer(&(a * b * c * q.pow(2 * ni - 2 * i)?), q, (i - 1) as usize);
        let xi = &x[(i - 1) as usize];
        let den = qpochhammer(&(b * xi), q, n - 1) * qpochhammer(&(b * c / xi), q, n - 1);
        rhs *= div(&num, &den, "(b x_i, bc/x_i; q)_{n-1}")?;
    }
    Ok(Sides::new(lhs, rhs))
}
