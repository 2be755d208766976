//! Geometric specialization of the interpolation formula (a terminating
//! very-well-poised summation) and the classical 8phi7 form it maps to.

use crate::error::{QidError, Result};
use crate::exactcore::{cauchy_poly, gauss_binomial, qpochhammer, qpochhammer_product, Scalar};
use crate::interp::GeometricSpec;
use crate::mutation::ExponentShift;
use crate::sides::Sides;

fn binom2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

fn nonzero(x: Scalar, what: &str) -> Result<Scalar> {
    if x.is_zero() {
        Err(QidError::DegenerateParameters(format!("{what} vanishes")))
    } else {
        Ok(x)
    }
}

fn div(x: &Scalar, y: &Scalar, what: &str) -> Result<Scalar> {
    x.checked_div(y)
        .map_err(|_| QidError::DegenerateParameters(format!("{what} vanishes")))
}

/// `prod_{i=1}^{n} (u q^{i-1} - y)(c - u q^{i-1} y)`
pub fn corollary_lhs(spec: &GeometricSpec, y: &Scalar) -> Scalar {
    spec.roots()
        .iter()
        .map(|x| (x - y) * (&spec.c - x * y))
        .product()
}

/// The `y`-free coefficients `T_0..T_n` of the summation, so that the sum is
/// `sum_k T_k * P_{n-k}(y, a q^{k+1-n}) P_{n-k}(y, c/a) P_k(y, b q^{1-n}) P_k(y, c q^{n-k}/b)`.
/// The prefactor `q^{C(n,2)}` is folded in.
pub fn corollary_coefficients(spec: &GeometricSpec) -> Result<Vec<Scalar>> {
    corollary_coefficients_shifted(spec, ExponentShift::NONE)
}

#[doc(hidden)]
pub fn corollary_coefficients_shifted(
    spec: &GeometricSpec,
    shift: ExponentShift,
) -> Result<Vec<Scalar>> {
    let GeometricSpec { a, b, c, q, u, n } = spec;
    let n = *n;
    let ni = n as i64;
    let prefactor = q.pow(binom2(n) + shift.get())?;
    let ab = div(c, &(a * b), "a b")?;
    let pnba = nonzero(cauchy_poly(b, a, q, n), "P_n(b, a)")?;
    let c_over_a = div(c, a, "a")?;
    let c_over_b = div(c, b, "b")?;
    (0..=n)
        .map(|k| {
            let ki = k as i64;
            let num = gauss_binomial(n, ki, q)?
                * cauchy_poly(b, &(u * q.pow(ni - 1)?), q, n - k)
                * cauchy_poly(a, &(u * q.pow(ni - ki)?), q, k)
                * cauchy_poly(u, &c_over_b, q, n - k)
                * cauchy_poly(&c_over_a, u, q, k);
            let den = &pnba
                * qpochhammer(&(&ab * q.pow(ni - ki - 1)?), q, n - k)
                * qpochhammer(&(&ab * q.pow(2 * ni - 2 * ki)?), q, k);
            Ok(&prefactor * div(&num, &den, "summation denominator")?)
        })
        .collect()
}

/// `P_{n-k}(y, a q^{k+1-n}) P_{n-k}(y, c/a) P_k(y, b q^{1-n}) P_k(y, c q^{n-k}/b)`
pub fn corollary_basis(spec: &GeometricSpec, k: usize, y: &Scalar) -> Result<Scalar> {
    let GeometricSpec { a, b, c, q, n, .. } = spec;
    let (ni, ki) = (*n as i64, k as i64);
    Ok(cauchy_poly(y, &(a * q.pow(ki + 1 - ni)?), q, n - k)
        * cauchy_poly(y, &div(c, a, "a")?, q, n - k)
        * cauchy_poly(y, &(b * q.pow(1 - ni)?), q, k)
        * cauchy_poly(y, &(c * q.pow(ni - ki)? / b), q, k))
}

/// Individual summands of the right-hand side at `y`.
pub fn corollary_terms(spec: &GeometricSpec, y: &Scalar) -> Result<Vec<Scalar>> {
    corollary_terms_shifted(spec, y, ExponentShift::NONE)
}

#[doc(hidden)]
pub fn corollary_terms_shifted(
    spec: &GeometricSpec,
    y: &Scalar,
    shift: ExponentShift,
) -> Result<Vec<Scalar>> {
    corollary_coefficients_shifted(spec, shift)?
        .into_iter()
        .enumerate()
        .map(|(k, t)| Ok(t * corollary_basis(spec, k, y)?))
        .collect()
}

/// Both sides of the geometric summation at `y`.
pub fn jackson_corollary_sides(spec: &GeometricSpec, y: &Scalar) -> Result<Sides> {
    jackson_corollary_sides_shifted(spec, y, ExponentShift::NONE)
}

/// Fault injection: shifts the exponent of the `q^{C(n,2)}` prefactor.
#[doc(hidden)]
pub fn jackson_corollary_sides_shifted(
    spec: &GeometricSpec,
    y: &Scalar,
    shift: ExponentShift,
) -> Result<Sides> {
    let rhs = corollary_terms_shifted(spec, y, shift)?.into_iter().sum();
    Ok(Sides::new(corollary_lhs(spec, y), rhs))
}

/// Parameters of the terminating 8phi7 sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jackson8phi7 {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
    pub e: Scalar,
    pub n: usize,
    pub q: Scalar,
}

impl Jackson8phi7 {
    /// The substitution `a -> c q^{-1}/ab`, `b -> y/a`, `c -> c/(b u)`,
    /// `d -> c/(a y)`, `e -> u q^{n-1}/b` applied to a geometric instance.
    pub fn from_geometric(spec: &GeometricSpec, y: &Scalar) -> Result<Self> {
        let GeometricSpec { a, b, c, q, u, n } = spec;
        Ok(Jackson8phi7 {
            a: div(c, &(q * a * b), "q a b")?,
            b: div(y, a, "a")?,
            c: div(c, &(b * u), "b u")?,
            d: div(c, &(a * y), "a y")?,
            e: div(&(u * q.pow(*n as i64 - 1)?), b, "b")?,
            n: *n,
            q: q.clone(),
        })
    }

    /// `a^2 q^{n+1} = b c d e`
    pub fn is_balanced(&self) -> Result<bool> {
        let lhs = &self.a * &self.a * self.q.pow(self.n as i64 + 1)?;
        Ok(lhs == &self.b * &self.c * &self.d * &self.e)
    }

    pub fn sides(&self) -> Result<Sides> {
        jackson_8phi7_sides_shifted(self, ExponentShift::NONE)
    }
}

/// Both sides of the terminating 8phi7 summation.
pub fn jackson_8phi7_sides(
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    d: &Scalar,
    e: &Scalar,
    n: usize,
    q: &Scalar,
) -> Result<Sides> {
    let params = Jackson8phi7 {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        d: d.clone(),
        e: e.clone(),
        n,
        q: q.clone(),
    };
    params.sides()
}

/// Fault injection: shifts the exponent of the `q^k` factor in every summand.
#[doc(hidden)]
pub fn jackson_8phi7_sides_shifted(p: &Jackson8phi7, shift: ExponentShift) -> Result<Sides> {
    let Jackson8phi7 {
        a,
        b,
        c,
        d,
        e,
        n,
        q,
    } = p;
    let n = *n;
    let aq = a * q;
    let over = |x: &Scalar, what: &str| div(&aq, x, what);
    let aq_b = over(b, "b")?;
    let aq_c = over(c, "c")?;
    let aq_d = over(d, "d")?;
    let aq_e = over(e, "e")?;
    let aq_bc = over(&(b * c), "b c")?;
    let aq_bd = over(&(b * d), "b d")?;
    let aq_cd = over(&(c * d), "c d")?;
    let aq_bcd = over(&(b * c * d), "b c d")?;
    let num = qpochhammer_product(&[aq.clone(), aq_bc, aq_bd, aq_cd], q, n);
    let den = qpochhammer_product(&[aq_b.clone(), aq_c.clone(), aq_d.clone(), aq_bcd], q, n);
    let lhs = div(&num, &den, "product side denominator")?;

    let one_minus_a = nonzero(Scalar::one() - a, "1 - a")?;
    let q_neg_n = q.pow(-(n as i64))?;
    let a_q_n1 = a * q.pow(n as i64 + 1)?;
    let mut rhs = Scalar::zero();
    for k in 0..=n {
        let ki = k as i64;
        let num = (Scalar::one() - a * q.pow(2 * ki)?)
            * qpochhammer_product(
                &[
                    a.clone(),
                    b.clone(),
                    c.clone(),
                    d.clone(),
                    e.clone(),
                    q_neg_n.clone(),
                ],
                q,
                k,
            )
            * q.pow(ki + shift.get())?;
        let den = &one_minus_a
            * qpochhammer_product(
                &[
                    q.clone(),
                    aq_b.clone(),
                    aq_c.clone(),
                    aq_d.clone(),
                    aq_e.clone(),
                    a_q_n1.clone(),
                ],
                q,
                k,
            );
        rhs += div(&num, &den, "summand denominator")?;
    }
    Ok(Sides::new(lhs, rhs))
}
