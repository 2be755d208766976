//! Exact determinants and the determinant identities built on the
//! interpolation formula.

mod fnk;
mod identities;
mod matrix;

pub use fnk::{
    build_yjk, cofactor_expansion_check, cofactor_expansion_check_shifted, fnk_closed,
    fnk_closed_shifted, fnk_det, fnk_det_raw, fnk_sign, lemma33_sides, lemma33_sides_shifted,
    CofactorCheck, YjkSet,
};
pub use identities::{
    kara_entry, kara_matrix, kara_sides, kara_sides_shifted, kratt_sides, kratt_sides_shifted,
};
pub use matrix::{det_exact, det_fraction_free, det_with, DetBackend, ExactMatrix};

use crate::error::{QidError, Result};
use crate::exactcore::Scalar;

/// The parameters `a, b, c, q` shared by the determinant identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetParams {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub q: Scalar,
}

impl DetParams {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, q: Scalar) -> Self {
        DetParams { a, b, c, q }
    }

    /// Fails unless `a, b, c, q` are all nonzero.
    pub fn check_nonzero(&self) -> Result<()> {
        for (name, v) in [
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("q", &self.q),
        ] {
            if v.is_zero() {
                return Err(QidError::DegenerateParameters(format!("{name} = 0")));
            }
        }
        Ok(())
    }
}

/// `num / den` for exponents that must divide evenly.
pub(crate) fn exact_quotient(num: i64, den: i64) -> i64 {
    assert_eq!(num % den, 0, "{num} is not divisible by {den}");
    num / den
}

pub(crate) fn binom2(n: i64) -> i64 {
    exact_quotient(n * (n - 1), 2)
}

pub(crate) fn div(x: &Scalar, y: &Scalar, what: &str) -> Result<Scalar> {
    x.checked_div(y)
        .map_err(|_| QidError::DegenerateParameters(format!("{what} vanishes")))
}
