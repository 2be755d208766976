//! The `c = 0` degeneration: a 2n-point Newton-type formula for polynomials
//! of degree at most `n`,
//!
//! ```text
//! f(y) = f(b_1)/prod(b_1 - a_i) * prod (y - a_i) + f(a_1)/prod(a_1 - b_i) * prod (y - b_i)
//!      + sum_{j=1}^{n-1} [f(y)/prod_{i<=n-j+1}(y - a_i)] d_1..d_j |_{b_1..b_{j+1}} (b_{j+1} - a_{n-j+1})
//!        * prod_{i<=j} (y - b_i) * prod_{i<=n-j} (y - a_i)
//! ```
//!
//! with classical divided differences.

use crate::divop::eval_table;
use crate::error::{QidError, Result};
use crate::exactcore::Scalar;
use crate::mutation::ExponentShift;
use crate::poly::Poly;

/// Coefficients of `f` on the basis `prod_{i<=j}(y - b_i) prod_{i<=n-j}(y - a_i)`, `j = 0..n`.
pub fn newton_coefficients_c0(f: &Poly, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
    newton_coefficients_c0_shifted(f, a, b, ExponentShift::NONE)
}

/// Fault injection: raises the closing factor `(b_{j+1} - a_{n-j+1})` to `1 + shift`.
#[doc(hidden)]
pub fn newton_coefficients_c0_shifted(
    f: &Poly,
    a: &[Scalar],
    b: &[Scalar],
    shift: ExponentShift,
) -> Result<Vec<Scalar>> {
    let n = a.len();
    check_nodes(f, a, b)?;
    let zero = Scalar::zero();
    let mut out = Vec::with_capacity(n + 1);
    let den0: Scalar = a.iter().map(|ai| &b[0] - ai).product();
    out.push(f.eval(&b[0]) / den0);
    for j in 1..n {
        let head = &a[..n - j + 1];
        let h = |y: &Scalar| -> Result<Scalar> {
            let den: Scalar = head.iter().map(|ai| y - ai).product();
            f.eval(y).checked_div(&den)
        };
        let dd = eval_table(h, &zero, &b[..=j])?;
        out.push(dd * (&b[j] - &a[n - j]).pow(1 + shift.get())?);
    }
    let den_n: Scalar = b.iter().map(|bi| &a[0] - bi).product();
    out.push(f.eval(&a[0]) / den_n);
    Ok(out)
}

fn check_nodes(f: &Poly, a: &[Scalar], b: &[Scalar]) -> Result<()> {
    let n = a.len();
    if n == 0 || b.len() != n {
        return Err(QidError::DegenerateNodes(format!(
            "need n >= 1 with |a| = |b|, got {} and {}",
            n,
            b.len()
        )));
    }
    if f.degree().is_some_and(|d| d > n) {
        return Err(QidError::DegenerateParameters(format!(
            "degree {} exceeds n = {n}",
            f.degree().unwrap_or(0)
        )));
    }
    let all: Vec<&Scalar> = a.iter().chain(b).collect();
    for i in 0..all.len() {
        for k in i + 1..all.len() {
            if all[i] == all[k] {
                return Err(QidError::DegenerateNodes(format!(
                    "repeated node {}",
                    all[i]
                )));
            }
        }
    }
    Ok(())
}

/// `j`-th basis polynomial `prod_{i<=j}(y - b_i) prod_{i<=n-j}(y - a_i)`.
pub fn newton_basis_c0(j: usize, a: &[Scalar], b: &[Scalar]) -> Poly {
    let n = a.len();
    Poly::from_roots(b[..j].iter().chain(&a[..n - j]))
}

/// Rebuilds `f` (degree at most `n = |a| = |b|`) from the 2n-point formula.
pub fn newton_reconstruct_c0(f: &Poly, a: &[Scalar], b: &[Scalar]) -> Result<Poly> {
    newton_reconstruct_c0_shifted(f, a, b, ExponentShift::NONE)
}

#[doc(hidden)]
pub fn newton_reconstruct_c0_shifted(
    f: &Poly,
    a: &[Scalar],
    b: &[Scalar],
    shift: ExponentShift,
) -> Result<Poly> {
    let cs = newton_coefficients_c0_shifted(f, a, b, shift)?;
    Ok(cs.iter().enumerate().fold(Poly::zero(), |acc, (j, cj)| {
        &acc + &newton_basis_c0(j, a, b).scale(cj)
    }))
}
