use crate::error::{QidError, Result};
use crate::exactcore::Scalar;
use crate::poly::Poly;

/// A polynomial `f` of degree at most `2n` with `y^{-n} f(y) = (c/y)^{-n} f(c/y)`,
/// i.e. `f_{n-m} = c^m f_{n+m}` for `0 <= m <= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcSymmetricPoly {
    n: usize,
    c: Scalar,
    poly: Poly,
}

impl BcSymmetricPoly {
    /// `prod (y - x_i)(c - x_i y)`. Needs `c != 0`; the `c = 0` case goes
    /// through the classical Newton path instead.
    pub fn from_roots(roots: &[Scalar], c: &Scalar) -> Result<Self> {
        if c.is_zero() {
            return Err(QidError::WrongPath(
                "c = 0 has no BC symmetry; use the c = 0 Newton formula".into(),
            ));
        }
        let poly = roots.iter().fold(Poly::one(), |acc, x| {
            let pair = Poly::new(vec![-(x * c), x * x + c, -x]);
            &acc * &pair
        });
        Ok(BcSymmetricPoly {
            n: roots.len(),
            c: c.clone(),
            poly,
        })
    }

    /// Checks the symmetry and that the degree is at most `2n`.
    pub fn from_poly(n: usize, c: &Scalar, poly: Poly) -> Result<Self> {
        if c.is_zero() {
            return Err(QidError::WrongPath("BC symmetry needs c != 0".into()));
        }
        if poly.degree().is_some_and(|d| d > 2 * n) {
            return Err(QidError::NotBcSymmetric(n));
        }
        let f = BcSymmetricPoly {
            n,
            c: c.clone(),
            poly,
        };
        if let Some(m) = f.symmetry_defect() {
            return Err(QidError::NotBcSymmetric(m));
        }
        Ok(f)
    }

    pub(crate) fn from_poly_unchecked(n: usize, c: &Scalar, poly: Poly) -> Self {
        BcSymmetricPoly {
            n,
            c: c.clone(),
            poly,
        }
    }

    /// First `m` with `f_{n-m} != c^m f_{n+m}`, if any.
    pub fn symmetry_defect(&self) -> Option<usize> {
        let mut cm = Scalar::one();
        for m in 0..=self.n {
            if self.poly.coeff(self.n - m) != &cm * &self.poly.coeff(self.n + m) {
                return Some(m);
            }
            cm *= &self.c;
        }
        None
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// `f_0, .., f_{2n}` (zero padded).
    pub fn coeffs(&self) -> Vec<Scalar> {
        (0..=2 * self.n).map(|i| self.poly.coeff(i)).collect()
    }

    pub fn eval(&self, y: &Scalar) -> Scalar {
        self.poly.eval(y)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        BcSymmetricPoly {
            n: self.n,
            c: self.c.clone(),
            poly: self.poly.scale(k),
        }
    }
}

/// `bc_poly_from_roots` in free-function form.
pub fn bc_poly_from_roots(roots: &[Scalar], c: &Scalar) -> Result<BcSymmetricPoly> {
    BcSymmetricPoly::from_roots(roots, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::s;
    use proptest::prelude::*;

    #[test]
    fn empty_roots_give_constant_one() {
        let f = bc_poly_from_roots(&[], &s(3, 1)).unwrap();
        assert_eq!(f.n(), 0);
        assert_eq!(f.coeffs(), vec![Scalar::one()]);
    }

    #[test]
    fn single_root_coefficients() {
        let (x, c) = (s(2, 3), s(-5, 1));
        let f = bc_poly_from_roots(std::slice::from_ref(&x), &c).unwrap();
        assert_eq!(f.coeffs(), vec![-(&x * &c), &x * &x + &c, -x]);
    }

    #[test]
    fn c_zero_is_rejected() {
        assert!(matches!(
            bc_poly_from_roots(&[s(1, 1)], &Scalar::zero()),
            Err(QidError::WrongPath(_))
        ));
    }

    #[test]
    fn from_poly_checks_symmetry() {
        let c = s(2, 1);
        // y^2 - 3y + 2 = (y-1)(y-2): f_0 = 2 = c * f_2
        assert!(
            BcSymmetricPoly::from_poly(1, &c, Poly::new(vec![s(2, 1), s(-3, 1), s(1, 1)])).is_ok()
        );
        assert_eq!(
            BcSymmetricPoly::from_poly(1, &c, Poly::new(vec![s(1, 1), s(-3, 1), s(1, 1)])),
            Err(QidError::NotBcSymmetric(1))
        );
        assert_eq!(
            BcSymmetricPoly::from_poly(1, &c, Poly::new(vec![s(0, 1), s(0, 1), s(0, 1), s(1, 1)])),
            Err(QidError::NotBcSymmetric(1))
        );
    }

    proptest! {
        #[test]
        fn products_are_symmetric(
            roots in prop::collection::vec((-30i64..30, 1i64..9), 0..6),
            c in (1i64..30, 1i64..9, any::<bool>()),
            y in (1i64..40, 1i64..9),
        ) {
            let roots: Vec<Scalar> = roots.into_iter().map(|(n, d)| s(n, d)).collect();
            let c = if c.2 { s(c.0, c.1) } else { -s(c.0, c.1) };
            let f = bc_poly_from_roots(&roots, &c).unwrap();
            prop_assert_eq!(f.symmetry_defect(), None);
            // y^{-n} f(y) = (c/y)^{-n} f(c/y)
            let y = s(y.0, y.1);
            let n = f.n() as i64;
            let cy = &c / &y;
            prop_assert_eq!(y.pow(-n).unwrap() * f.eval(&y), cy.pow(-n).unwrap() * f.eval(&cy));
        }
    }
}
