//! q-shifted factorials, Cauchy polynomials and Gaussian binomials.

use crate::error::{QidError, Result};
use crate::exactcore::Scalar;

/// `(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})`, with `(a;q)_0 = 1`.
pub fn qpochhammer(a: &Scalar, q: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= Scalar::one() - &term;
        term *= q;
    }
    acc
}

/// `(a_1, ..., a_m; q)_n`, the product of the individual shifted factorials.
pub fn qpochhammer_product(bases: &[Scalar], q: &Scalar, n: usize) -> Scalar {
    bases.iter().map(|a| qpochhammer(a, q, n)).product()
}

/// Cauchy polynomial `P_n(a, b) = a^n (b/a;q)_n`.
///
/// Evaluated through the product `prod_{i<n} (a - b q^i)`, which agrees with
/// the defining form whenever `a != 0` and stays total at `a = 0`.
pub fn cauchy_poly(a: &Scalar, b: &Scalar, q: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::one();
    let mut term = b.clone();
    for _ in 0..n {
        acc *= a - &term;
        term *= q;
    }
    acc
}

/// Gaussian binomial `[n k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k})`; zero outside `0 <= k <= n`.
///
/// Fails with `DegenerateQ` when some `q^i = 1` for `1 <= i <= n`.
pub fn gauss_binomial(n: usize, k: i64, q: &Scalar) -> Result<Scalar> {
    let qfact_n = qpochhammer(q, q, n);
    if qfact_n.is_zero() {
        return Err(QidError::DegenerateQ(n));
    }
    if k < 0 || k as usize > n {
        return Ok(Scalar::zero());
    }
    let k = k as usize;
    let den = qpochhammer(q, q, k) * qpochhammer(q, q, n - k);
    qfact_n.checked_div(&den)
}
