//! The 4n-point interpolation formula for BC-symmetric polynomials.
//!
//! For admissible nodes, a BC-symmetric `f` of degree `2n` expands as
//!
//! ```text
//! f(y) = sum_{j=0}^{n} C_j * prod_{k<=j} (y - b_k)(y - c/b_k) * (a-side product of n - j pairs)
//! ```
//!
//! Two index conventions for the `a` side are in use. In the statement
//! convention the `a`-side product runs over `a_1..a_{n-j}` and
//! `C_n = f(a_1)/prod (a_1 - b_k)(a_1 - c/b_k)`; in the proof convention it runs
//! over `a_{j+1}..a_n` and `C_n` uses `a_n`. They differ only by reversing the
//! `a` list, and both reconstruct `f` exactly.
//!
//! For `0 < j < n` (proof convention),
//!
//! ```text
//! C_j = [f(y) y^{1-j} / prod_{k=j}^{n} (y - a_k)(y - c/a_k)] d_1..d_j |_{b_1..b_{j+1}}
//!       * (b_{j+1} - a_j)(1 - c/(a_j b_{j+1}))
//! ```
//!
//! where the chain is evaluated by the triangular table.

use crate::divop::eval_table;
use crate::error::{QidError, Result};
use crate::exactcore::Scalar;
use crate::interp::{BcSymmetricPoly, NodeSystem};
use crate::mutation::ExponentShift;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IndexConvention {
    /// `a`-side basis over `a_1..a_{n-j}`; `C_n` evaluated at `a_1`.
    #[default]
    Statement,
    /// `a`-side basis over `a_{j+1}..a_n`; `C_n` evaluated at `a_n`.
    Proof,
}

impl IndexConvention {
    /// The `a` list in proof order.
    fn proof_nodes(self, nodes: &NodeSystem) -> NodeSystem {
        match self {
            IndexConvention::Proof => nodes.clone(),
            IndexConvention::Statement => nodes.with_a_reversed(),
        }
    }
}

/// `(y - x)(y - c/x)` as a polynomial.
fn pair_poly(x: &Scalar, c: &Scalar) -> Poly {
    Poly::new(vec![c.clone(), -(x + c / x), Scalar::one()])
}

fn pair_value(y: &Scalar, x: &Scalar, c: &Scalar) -> Scalar {
    (y - x) * (y - c / x)
}

/// `j`-th basis polynomial of the expansion in the given convention.
pub fn basis(j: usize, nodes: &NodeSystem, convention: IndexConvention) -> BcSymmetricPoly {
    let n = nodes.n();
    assert!(j <= n);
    let c = nodes.c();
    let a_side: &[Scalar] = match convention {
        IndexConvention::Statement => &nodes.a()[..n - j],
        IndexConvention::Proof => &nodes.a()[j..],
    };
    let poly = nodes.b()[..j]
        .iter()
        .chain(a_side)
        .fold(Poly::one(), |acc, x| &acc * &pair_poly(x, c));
    BcSymmetricPoly::from_poly_unchecked(n, c, poly)
}

fn check_compatible(f: &BcSymmetricPoly, nodes: &NodeSystem) -> Result<()> {
    if let Some(reason) = nodes.violation() {
        return Err(QidError::DegenerateNodes(reason));
    }
    if f.n() != nodes.n() || f.c() != nodes.c() {
        return Err(QidError::DegenerateNodes(format!(
            "polynomial has (n, c) = ({}, {}) but nodes have ({}, {})",
            f.n(),
            f.c(),
            nodes.n(),
            nodes.c()
        )));
    }
    Ok(())
}

/// Coefficient `C_j` of `f` in the expansion over `nodes`.
pub fn coeff_c(
    j: usize,
    f: &BcSymmetricPoly,
    nodes: &NodeSystem,
    convention: IndexConvention,
) -> Result<Scalar> {
    coeff_c_shifted(j, f, nodes, convention, ExponentShift::NONE)
}

/// [`coeff_c`] with the exponent `1 - j` of `y` shifted (fault injection).
#[doc(hidden)]
pub fn coeff_c_shifted(
    j: usize,
    f: &BcSymmetricPoly,
    nodes: &NodeSystem,
    convention: IndexConvention,
    shift: ExponentShift,
) -> Result<Scalar> {
    check_compatible(f, nodes)?;
    let n = nodes.n();
    if j > n {
        return Err(QidError::Index(format!("C_{j} with n = {n}")));
    }
    let nodes = convention.proof_nodes(nodes);
    let (a, b, c) = (nodes.a(), nodes.b(), nodes.c());
    let degenerate = |what: &str| QidError::DegenerateNodes(format!("{what} vanishes"));
    if j == 0 {
        let den: Scalar = a.iter().map(|ak| pair_value(&b[0], ak, c)).product();
        return f
            .eval(&b[0])
            .checked_div(&den)
            .map_err(|_| degenerate("C_0 denominator"));
    }
    if j == n {
        let an = &a[n - 1];
        let den: Scalar = b.iter().map(|bk| pair_value(an, bk, c)).product();
        return f
            .eval(an)
            .checked_div(&den)
            .map_err(|_| degenerate("C_n denominator"));
    }
    let exponent = 1 - j as i64 + shift.get();
    let a_tail = &a[j - 1..];
    let h = |y: &Scalar| -> Result<Scalar> {
        let den: Scalar = a_tail.iter().map(|ak| pair_value(y, ak, c)).product();
        if den.is_zero() {
            return Err(degenerate("interpolant denominator"));
        }
        Ok(f.eval(y) * y.pow(exponent)? / den)
    };
    let chain = eval_table(h, c, &b[..=j])?;
    let aj = &a[j - 1];
    let bj1 = &b[j];
    let tail = (bj1 - aj) * (Scalar::one() - c / (aj * bj1));
    Ok(chain * tail)
}

/// All coefficients `C_0..C_n`.
pub fn coefficients(
    f: &BcSymmetricPoly,
    nodes: &NodeSystem,
    convention: IndexConvention,
) -> Result<Vec<Scalar>> {
    (0..=nodes.n())
        .map(|j| coeff_c(j, f, nodes, convention))
        .collect()
}

/// Reassembles `sum_j C_j * basis_j`; equals `f` coefficient by coefficient.
pub fn reconstruct(
    f: &BcSymmetricPoly,
    nodes: &NodeSystem,
    convention: IndexConvention,
) -> Result<BcSymmetricPoly> {
    reconstruct_shifted(f, nodes, convention, ExponentShift::NONE)
}

#[doc(hidden)]
pub fn reconstruct_shifted(
    f: &BcSymmetricPoly,
    nodes: &NodeSystem,
    convention: IndexConvention,
    shift: ExponentShift,
) -> Result<BcSymmetricPoly> {
    let mut total = Poly::zero();
    for j in 0..=nodes.n() {
        let cj = coeff_c_shifted(j, f, nodes, convention, shift)?;
        total = &total + &basis(j, nodes, convention).poly().scale(&cj);
    }
    Ok(BcSymmetricPoly::from_poly_unchecked(
        nodes.n(),
        nodes.c(),
        total,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::s;
    use crate::interp::bc_poly_from_roots;

    fn worked_instance() -> (BcSymmetricPoly, NodeSystem) {
        // f = (y - 5)(6 - 5y), c = 6, a_1 = 1, b_1 = 3
        let f = bc_poly_from_roots(&[s(5, 1)], &s(6, 1)).unwrap();
        let nodes = NodeSystem::new(s(6, 1), vec![s(1, 1)], vec![s(3, 1)]).unwrap();
        (f, nodes)
    }

    #[test]
    fn worked_instance_coefficients() {
        let (f, nodes) = worked_instance();
        for conv in [IndexConvention::Statement, IndexConvention::Proof] {
            assert_eq!(coeff_c(0, &f, &nodes, conv).unwrap(), s(-3, 1));
            assert_eq!(coeff_c(1, &f, &nodes, conv).unwrap(), s(-2, 1));
            assert_eq!(reconstruct(&f, &nodes, conv).unwrap(), f);
        }
        // -3 (y-1)(y-6) - 2 (y-3)(y-2) re-expands to f
        let manual = &Poly::from_roots(&[s(1, 1), s(6, 1)]).scale(&s(-3, 1))
            + &Poly::from_roots(&[s(3, 1), s(2, 1)]).scale(&s(-2, 1));
        assert_eq!(&manual, f.poly());
    }

    #[test]
    fn a_side_vanishing_polynomial_keeps_only_first_term() {
        let c = s(-7, 2);
        let a = vec![s(2, 1), s(5, 3), s(-1, 4)];
        let b = vec![s(3, 1), s(-9, 5), s(11, 2)];
        let nodes = NodeSystem::new(c.clone(), a.clone(), b).unwrap();
        let f = bc_poly_from_roots(&a, &c).unwrap();
        let expected_c0: Scalar = a.iter().map(|x| -x).product();
        for conv in [IndexConvention::Statement, IndexConvention::Proof] {
            let cs = coefficients(&f, &nodes, conv).unwrap();
            assert_eq!(cs[0], expected_c0);
            assert!(cs[1..].iter().all(Scalar::is_zero), "{cs:?}");
        }
    }

    #[test]
    fn mismatched_polynomial_is_rejected() {
        let (_, nodes) = worked_instance();
        let f = bc_poly_from_roots(&[s(5, 1)], &s(7, 1)).unwrap();
        assert!(matches!(
            coeff_c(0, &f, &nodes, IndexConvention::Statement),
            Err(QidError::DegenerateNodes(_))
        ));
        let (f, _) = worked_instance();
        assert!(matches!(
            coeff_c(2, &f, &nodes, IndexConvention::Statement),
            Err(QidError::Index(_))
        ));
    }

    #[test]
    fn shifted_exponent_breaks_reconstruction() {
        let c = s(5, 3);
        let nodes =
            NodeSystem::new(c.clone(), vec![s(2, 1), s(7, 1)], vec![s(-3, 1), s(4, 1)]).unwrap();
        let f = bc_poly_from_roots(&[s(1, 2), s(9, 1)], &c).unwrap();
        let good = reconstruct(&f, &nodes, IndexConvention::Statement).unwrap();
        assert_eq!(good, f);
        let bad =
            reconstruct_shifted(&f, &nodes, IndexConvention::Statement, ExponentShift(1)).unwrap();
        assert_ne!(bad, f);
    }
}
