//! The determinants `F_{n,k}(u)` built from supersymmetric complete functions
//! over the sets `Y_{j,k}`, their closed form, the `u = 0` evaluation in terms
//! of elementary symmetric functions, and the cofactor expansion of the
//! Cauchy-polynomial determinant along its last row.
//!
//! With `U = {u, uq, ..., uq^{n-1}}`,
//!
//! ```text
//! F_{n,k}(u) = sigma * det_{i,j=1..n} h_{2n-i+1}(U - Y_{j,k}),  sigma = (-1)^{C(n,2)+n-k+1}
//! ```
//!
//! and the closed form is
//!
//! ```text
//! [n, k-1]_q q^{-n(n-1)(2n-1)/6} b^{C(n,2)} prod_{i<j<=n} (c - u^2 q^{i+j-2})
//!   * P_{n-k+1}(b, u q^{n-1}) P_{k-1}(a, u q^{n-k+1}) P_{n-k+1}(u, c/b) P_{k-1}(c/a, u)
//!   * prod_{i=1}^{n-1} (1 - a q^{i-1}/b)^{n-i}
//!   * prod_{0<=j<i<=n, i,j != n-k+1} (1 - c q^{i+j-1}/(ab))
//! ```

use super::{
    binom2, det_with, div, exact_quotient, kara_entry, kara_matrix, DetBackend, DetParams,
    ExactMatrix,
};
use crate::error::{QidError, Result};
use crate::exactcore::{
    cauchy_poly, elem_sym, gauss_binomial, qpochhammer_product, supersym_complete, Scalar,
    VariableSet,
};
use crate::interp::jackson::corollary_terms;
use crate::interp::GeometricSpec;
use crate::mutation::ExponentShift;
use crate::sides::Sides;

/// `Y_{j,k}`: `n - j + 1` a-pairs and `j - 1` b-pairs when `j < k`, otherwise
/// `n - j` a-pairs and `j` b-pairs. The a-pairs are `(a q^{-t}, c q^t/a)` and
/// the b-pairs `(b q^{1-n+t}, c q^{n-1-t}/b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YjkSet {
    pub n: usize,
    pub j: usize,
    pub k: usize,
    pub a_pairs: usize,
    pub b_pairs: usize,
    pub values: VariableSet,
}

pub fn build_yjk(n: usize, j: usize, k: usize, p: &DetParams) -> Result<YjkSet> {
    if !(1..=n).contains(&j) || !(1..=n + 1).contains(&k) {
        return Err(QidError::Index(format!("Y_{{{j},{k}}} with n = {n}")));
    }
    p.check_nonzero()?;
    let DetParams { a, b, c, q } = p;
    let (a_pairs, b_pairs) = if j < k {
        (n - j + 1, j - 1)
    } else {
        (n - j, j)
    };
    let ni = n as i64;
    let mut values = VariableSet::new(Vec::with_capacity(2 * n));
    for t in 0..a_pairs as i64 {
        values.push(a * q.pow(-t)?);
        values.push(c * q.pow(t)? / a);
    }
    for t in 0..b_pairs as i64 {
        values.push(b * q.pow(1 - ni + t)?);
        values.push(c * q.pow(ni - 1 - t)? / b);
    }
    Ok(YjkSet {
        n,
        j,
        k,
        a_pairs,
        b_pairs,
        values,
    })
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n == 0 || !(1..=n + 1).contains(&k) {
        return Err(QidError::Index(format!("F_{{{n},{k}}}")));
    }
    Ok(())
}

fn geometric_points(u: &Scalar, q: &Scalar, n: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n);
    let mut x = u.clone();
    for _ in 0..n {
        out.push(x.clone());
        x *= q;
    }
    out
}

/// `(-1)^{C(n,2)+n-k+1}`.
pub fn fnk_sign(n: usize, k: usize) -> Scalar {
    Scalar::sign_power(binom2(n as i64) + n as i64 - k as i64 + 1)
}

/// `det_{i,j=1..n} h_{2n-i+1}(U - Y_{j,k})` without the sign normalization.
pub fn fnk_det_raw(
    n: usize,
    k: usize,
    u: &Scalar,
    p: &DetParams,
    backend: DetBackend,
) -> Result<Scalar> {
    check_nk(n, k)?;
    let points = VariableSet::new(geometric_points(u, &p.q, n));
    let ys = (1..=n)
        .map(|j| build_yjk(n, j, k, p))
        .collect::<Result<Vec<_>>>()?;
    let m = ExactMatrix::from_fn(n, n, |i, j| {
        Ok(supersym_complete(
            &points,
            &ys[j].values,
            (2 * n - i) as i64,
        ))
    })?;
    det_with(&m, backend)
}

/// `F_{n,k}(u)`, the sign-normalized determinant; equals [`fnk_closed`].
pub fn fnk_det(
    n: usize,
    k: usize,
    u: &Scalar,
    p: &DetParams,
    backend: DetBackend,
) -> Result<Scalar> {
    Ok(fnk_sign(n, k) * fnk_det_raw(n, k, u, p, backend)?)
}

/// The restricted double product `prod_{0<=j<i<=n, i,j != n-k+1} (1 - c q^{i+j-1}/(ab))`.
fn restricted_product(n: usize, k: usize, p: &DetParams) -> Result<Scalar> {
    let DetParams { a, b, c, q } = p;
    let skip = (n + 1 - k) as i64;
    let c_over_ab = div(c, &(a * b), "a b")?;
    let mut acc = Scalar::one();
    for j in 0..n as i64 {
        if j == skip {
            continue;
        }
        for i in j + 1..=n as i64 {
            if i != skip {
                acc *= Scalar::one() - &c_over_ab * q.pow(i + j - 1)?;
            }
        }
    }
    Ok(acc)
}

fn sum_of_squares_exponent(n: i64) -> i64 {
    exact_quotient(n * (n - 1) * (2 * n - 1), 6)
}

pub fn fnk_closed(n: usize, k: usize, u: &Scalar, p: &DetParams) -> Result<Scalar> {
    fnk_closed_shifted(n, k, u, p, ExponentShift::NONE)
}

/// Fault injection: shifts the exponent `-n(n-1)(2n-1)/6` of `q`.
#[doc(hidden)]
pub fn fnk_closed_shifted(
    n: usize,
    k: usize,
    u: &Scalar,
    p: &DetParams,
    shift: ExponentShift,
) -> Result<Scalar> {
    check_nk(n, k)?;
    p.check_nonzero()?;
    let DetParams { a, b, c, q } = p;
    let (ni, ki) = (n as i64, k as i64);
    let mut r = gauss_binomial(n, ki - 1, q)?;
    r *= q.pow(-sum_of_squares_exponent(ni) + shift.get())?;
    r *= b.pow(binom2(ni))?;
    for i in 1..=ni {
        for j in i + 1..=ni {
            r *= c - u * u * q.pow(i + j - 2)?;
        }
    }
    r *= cauchy_poly(b, &(u * q.pow(ni - 1)?), q, n + 1 - k);
    r *= cauchy_poly(a, &(u * q.pow(ni - ki + 1)?), q, k - 1);
    r *= cauchy_poly(u, &(c / b), q, n + 1 - k);
    r *= cauchy_poly(&(c / a), u, q, k - 1);
    for i in 1..ni {
        r *= (Scalar::one() - a * q.pow(i - 1)? / b).pow(ni - i)?;
    }
    Ok(r * restricted_product(n, k, p)?)
}

/// `det_{i,j=1..n} e_{2n-i+1}(Y_{j,k})` against
/// `[n, k-1] c^{C(n+1,2)} q^{C(n-k+1,2) - n(n-1)(2n-1)/6} prod_{i<n} (b - a q^{i-1})^{n-i}`
/// times the restricted double product.
pub fn lemma33_sides(n: usize, k: usize, p: &DetParams, backend: DetBackend) -> Result<Sides> {
    lemma33_sides_shifted(n, k, p, backend, ExponentShift::NONE)
}

/// Fault injection: shifts the exponent of `q` on the right-hand side.
#[doc(hidden)]
pub fn lemma33_sides_shifted(
    n: usize,
    k: usize,
    p: &DetParams,
    backend: DetBackend,
    shift: ExponentShift,
) -> Result<Sides> {
    check_nk(n, k)?;
    let ys = (1..=n)
        .map(|j| build_yjk(n, j, k, p))
        .collect::<Result<Vec<_>>>()?;
    let m = ExactMatrix::from_fn(n, n, |i, j| Ok(elem_sym(&ys[j].values, (2 * n - i) as i64)))?;
    let lhs = det_with(&m, backend)?;
    let DetParams { a, b, c, q } = p;
    let (ni, ki) = (n as i64, k as i64);
    let mut rhs = gauss_binomial(n, ki - 1, q)?;
    rhs *= c.pow(binom2(ni + 1))?;
    rhs *= q.pow(binom2(ni - ki + 1) - sum_of_squares_exponent(ni) + shift.get())?;
    for i in 1..ni {
        rhs *= (b - a * q.pow(i - 1)?).pow(ni - i)?;
    }
    rhs *= restricted_product(n, k, p)?;
    Ok(Sides::new(lhs, rhs))
}

/// Result of expanding the Cauchy-polynomial determinant at
/// `x = (u, uq, ..., uq^{n-1}, y)` along its last row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorCheck {
    /// Product form of the determinant against `sum_k C_{n,k} E_k(y)` with
    /// `C_{n,k} = V(U) F_{n,k}(u)`.
    pub expansion: Sides,
    /// Per `k`: the cofactor computed from the minor against `V(U) F_{n,k}(u)`.
    pub cofactors: Vec<Sides>,
    /// Per `k`: the `k`-th term after dividing out the common factor, against
    /// the `(k-1)`-th term of the geometric summation.
    pub normalized: Vec<Sides>,
}

impl CofactorCheck {
    pub fn holds(&self) -> bool {
        self.expansion.holds()
            && self.cofactors.iter().all(Sides::holds)
            && self.normalized.iter().all(Sides::holds)
    }
}

pub fn cofactor_expansion_check(
    n: usize,
    u: &Scalar,
    y: &Scalar,
    p: &DetParams,
    backend: DetBackend,
) -> Result<CofactorCheck> {
    cofactor_expansion_check_shifted(n, u, y, p, backend, ExponentShift::NONE)
}

/// Fault injection: shifts the exponent `-(n+1)n(n-1)/3` of `q` in the product form.
#[doc(hidden)]
pub fn cofactor_expansion_check_shifted(
    n: usize,
    u: &Scalar,
    y: &Scalar,
    p: &DetParams,
    backend: DetBackend,
    shift: ExponentShift,
) -> Result<CofactorCheck> {
    check_nk(n, 1)?;
    p.check_nonzero()?;
    let DetParams { a, b, c, q } = p;
    let ni = n as i64;
    let points = geometric_points(u, q, n);

    let mut vandermonde = Scalar::one();
    let mut pair_product = Scalar::one();
    for i in 0..n {
        for j in i + 1..n {
            vandermonde *= &points[i] - &points[j];
            pair_product *= c - &points[i] * &points[j];
        }
    }
    let mut common = b.pow(binom2(ni + 1))?
        * q.pow(-exact_quotient((ni + 1) * ni * (ni - 1), 3) + shift.get())?;
    let a_over_b = div(a, b, "b")?;
    let c_over_ab = div(c, &(a * b), "a b")?;
    for i in 1..=ni + 1 {
        let bases = [a_over_b.clone(), &c_over_ab * q.pow(2 * ni + 2 - 2 * i)?];
        common *= qpochhammer_product(&bases, q, (i - 1) as usize);
    }
    let last_row: Scalar = points.iter().map(|x| (x - y) * (c - x * y)).product();
    let lhs = &last_row * &vandermonde * &pair_product * &common;

    let mut x = points.clone();
    x.push(y.clone());
    let m = kara_matrix(&x, p)?;
    let spec = GeometricSpec {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        q: q.clone(),
        u: u.clone(),
        n,
    };
    let corollary = corollary_terms(&spec, y)?;
    let divisor = &vandermonde * &pair_product * &common;

    let mut rhs = Scalar::zero();
    let mut cofactors = Vec::with_capacity(n + 1);
    let mut normalized = Vec::with_capacity(n + 1);
    for k in 1..=n + 1 {
        let coeff = &vandermonde * fnk_det(n, k, u, p, backend)?;
        let term = &coeff * kara_entry(n, k, y, p)?;
        cofactors.push(Sides::new(m.cofactor(n, k - 1, backend)?, coeff));
        normalized.push(Sides::new(
            div(&term, &divisor, "normalizing factor")?,
            corollary[k - 1].clone(),
        ));
        rhs += term;
    }
    Ok(CofactorCheck {
        expansion: Sides::new(lhs, rhs),
        cofactors,
        normalized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::s;

    fn params() -> DetParams {
        DetParams::new(s(3, 2), s(-5, 7), s(11, 3), s(2, 5))
    }

    #[test]
    fn yjk_shape() {
        let p = params();
        for n in 1..=4 {
            for k in 1..=n + 1 {
                for j in 1..=n {
                    let y = build_yjk(n, j, k, &p).unwrap();
                    assert_eq!(y.values.cardinality(), 2 * n);
                    assert_eq!(y.a_pairs + y.b_pairs, n);
                    // every pair multiplies to c, so e_{2n} = c^n
                    assert_eq!(
                        elem_sym(&y.values, 2 * n as i64),
                        p.c.pow(n as i64).unwrap()
                    );
                }
            }
        }
        assert!(build_yjk(2, 3, 1, &p).is_err());
        assert!(build_yjk(2, 1, 4, &p).is_err());
    }

    #[test]
    fn determinant_matches_closed_form() {
        let p = params();
        let u = s(-4, 3);
        for n in 1..=4 {
            for k in 1..=n + 1 {
                let det = fnk_det(n, k, &u, &p, DetBackend::Rational).unwrap();
                assert_eq!(det, fnk_closed(n, k, &u, &p).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn closed_form_roots() {
        let p = params();
        let DetParams { a, b, c, q } = &p;
        let n = 3usize;
        let ni = n as i64;
        for k in 1..=n + 1 {
            let mut roots = Vec::new();
            for i in 1..k as i64 {
                roots.push(a * q.pow(i - ni).unwrap());
                roots.push(c * q.pow(1 - i).unwrap() / a);
            }
            for i in 1..=(n + 1 - k) as i64 {
                roots.push(b * q.pow(2 - ni - i).unwrap());
                roots.push(c * q.pow(i - 1).unwrap() / b);
            }
            assert_eq!(roots.len(), 2 * n);
            for u in &roots {
                assert!(fnk_closed(n, k, u, &p).unwrap().is_zero());
                assert!(fnk_det(n, k, u, &p, DetBackend::FractionFree)
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn elementary_determinant() {
        let p = params();
        for n in 1..=4 {
            for k in 1..=n + 1 {
                assert!(
                    lemma33_sides(n, k, &p, DetBackend::Rational)
                        .unwrap()
                        .holds(),
                    "n={n} k={k}"
                );
            }
        }
        assert!(
            !lemma33_sides_shifted(2, 1, &p, DetBackend::Rational, ExponentShift(1))
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn cofactor_expansion() {
        let p = params();
        for n in 1..=3 {
            let check =
                cofactor_expansion_check(n, &s(5, 4), &s(-2, 9), &p, DetBackend::Rational).unwrap();
            assert!(check.holds(), "n={n}: {check:?}");
            let bad = cofactor_expansion_check_shifted(
                n,
                &s(5, 4),
                &s(-2, 9),
                &p,
                DetBackend::Rational,
                ExponentShift(1),
            );
            assert!(!bad.unwrap().expansion.holds());
        }
    }

    #[test]
    fn closed_form_shift_is_caught() {
        let p = params();
        let u = s(7, 2);
        let good = fnk_closed(2, 2, &u, &p).unwrap();
        assert_ne!(
            fnk_closed_shifted(2, 2, &u, &p, ExponentShift(1)).unwrap(),
            good
        );
    }
}
