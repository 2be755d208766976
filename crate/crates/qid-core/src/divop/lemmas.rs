//! Executable forms of the basic c-divided difference lemmas: the Leibniz
//! rule, the normalization of BC-symmetric products, the delta property of
//! the node products, and the two-branch evaluation used to extract the
//! interpolation coefficients.

use crate::divop::{apply_chain, MultiFunction, OperatorChain};
use crate::error::{QidError, Result};
use crate::exactcore::Scalar;
use crate::poly::Poly;
use crate::sides::Sides;

/// `(y - r)(1 - c/(y r))`
pub fn normalized_pair(y: &Scalar, r: &Scalar, c: &Scalar) -> Result<Scalar> {
    if c.is_zero() {
        return Ok(y - r);
    }
    let yr = y * r;
    if yr.is_zero() {
        return Err(QidError::DivisionByZero);
    }
    Ok((y - r) * (Scalar::one() - c / yr))
}

fn normalized_product(y: &Scalar, roots: &[Scalar], c: &Scalar) -> Result<Scalar> {
    roots
        .iter()
        .try_fold(Scalar::one(), |acc, r| Ok(acc * normalized_pair(y, r, c)?))
}

/// Both sides of the length-`n` Leibniz rule at `x = (x_1, .., x_{n+1})`:
///
/// `(f g) d_1..d_n = sum_{k=0}^{n} (f(x_1) d_1..d_k) * (g(x_{k+1}) d_{k+1}..d_n)`.
pub fn leibniz_sides(f: &Poly, g: &Poly, c: &Scalar, x: &[Scalar]) -> Result<Sides> {
    assert!(!x.is_empty());
    let n = x.len() - 1;
    let fg = MultiFunction::from_poly(f * g);
    let lhs = apply_chain(&fg, &OperatorChain::prefix(c.clone(), n)).eval(x)?;
    let mut rhs = Scalar::zero();
    for k in 0..=n {
        let f1 = MultiFunction::from_poly(f.clone());
        let left = apply_chain(&f1, &OperatorChain::prefix(c.clone(), k)).eval(x)?;
        let gp = g.clone();
        let g_shift = MultiFunction::in_slot(k + 1, move |y| Ok(gp.eval(y)));
        let right = apply_chain(&g_shift, &OperatorChain::range(c.clone(), k + 1, n)).eval(x)?;
        rhs += left * right;
    }
    Ok(Sides::new(lhs, rhs))
}

/// `y_1^{-n} p_n(y_1) d_1 .. d_m` at `points` (`m = points.len() - 1`), where
/// `p_n(y) = prod (y - x_i)(y - c/x_i)` over `roots`, so that
/// `y^{-n} p_n(y) = prod (y - x_i)(1 - c/(y x_i))`.
pub fn bc_product_chain_value(roots: &[Scalar], c: &Scalar, points: &[Scalar]) -> Result<Scalar> {
    let m = points.len() - 1;
    let (roots, c2) = (roots.to_vec(), c.clone());
    let f = MultiFunction::univariate(move |y| normalized_product(y, &roots, &c2));
    apply_chain(&f, &OperatorChain::prefix(c.clone(), m)).eval(points)
}

/// Value of the normalization lemma for chain length `m` on a degree-`2n`
/// product: `0` for `m > n`, `1` for `m = n`, and unspecified for `m < n`.
pub fn bc_product_chain_expected(n: usize, m: usize) -> Option<Scalar> {
    match m.cmp(&n) {
        std::cmp::Ordering::Greater => Some(Scalar::zero()),
        std::cmp::Ordering::Equal => Some(Scalar::one()),
        std::cmp::Ordering::Less => None,
    }
}

/// `prod_{k<=j}(y_1 - b_k)(1 - c/(y_1 b_k)) d_1..d_i` at `y_k = b_k`, `k <= i + 1`.
pub fn node_delta_value(b: &[Scalar], j: usize, i: usize, c: &Scalar) -> Result<Scalar> {
    assert!(
        b.len() > i && b.len() >= j,
        "need at least max(i + 1, j) nodes"
    );
    bc_product_chain_value(&b[..j], c, &b[..=i])
}

/// `prod_{k<=j} [(y_1-b_k)(1-c/(y_1 b_k))] / [(y_1-a_k)(1-c/(y_1 a_k))] *
/// prod_{k<i} (y_1-a_k)(1-c/(y_1 a_k))`, acted on by `d_1..d_i` and evaluated
/// at `y_k = b_k`, `k <= i + 1`.
pub fn two_branch_value(
    a: &[Scalar],
    b: &[Scalar],
    j: usize,
    i: usize,
    c: &Scalar,
) -> Result<Scalar> {
    assert!(i >= 1 && b.len() > i && b.len() >= j && a.len() >= j.max(i - 1));
    let bs = b[..j].to_vec();
    let a_den = a[..j].to_vec();
    let a_num = a[..i - 1].to_vec();
    let c2 = c.clone();
    let f = MultiFunction::univariate(move |y| {
        let num = normalized_product(y, &bs, &c2)? * normalized_product(y, &a_num, &c2)?;
        num.checked_div(&normalized_product(y, &a_den, &c2)?)
    });
    apply_chain(&f, &OperatorChain::prefix(c.clone(), i)).eval(&b[..=i])
}

/// `0` for `j != i`, else `1/((b_{j+1} - a_j)(1 - c/(a_j b_{j+1})))`.
pub fn two_branch_expected(
    a: &[Scalar],
    b: &[Scalar],
    j: usize,
    i: usize,
    c: &Scalar,
) -> Result<Scalar> {
    if j != i {
        return Ok(Scalar::zero());
    }
    normalized_pair(&b[j], &a[j - 1], c)?.recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::s;

    #[test]
    fn leibniz_first_order_small_instance() {
        let f = Poly::new(vec![s(1, 1), s(2, 1)]);
        let g = Poly::new(vec![s(0, 1), s(0, 1), s(1, 1)]);
        let sides = leibniz_sides(&f, &g, &s(5, 3), &[s(2, 1), s(-7, 2)]).unwrap();
        assert!(sides.holds());
    }

    #[test]
    fn single_pair_normalizes_to_one() {
        let c = s(7, 3);
        let v = bc_product_chain_value(&[s(2, 5)], &c, &[s(3, 1), s(-4, 1)]).unwrap();
        assert_eq!(v, Scalar::one());
        let v = bc_product_chain_value(&[], &c, &[s(3, 1), s(-4, 1)]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn two_branch_closed_value_at_i_equals_one() {
        let c = s(3, 1);
        let a = [s(5, 1), s(7, 1)];
        let b = [s(2, 1), s(-11, 1), s(13, 1)];
        let v = two_branch_value(&a, &b, 1, 1, &c).unwrap();
        assert_eq!(v, two_branch_expected(&a, &b, 1, 1, &c).unwrap());
        assert!(two_branch_value(&a, &b, 2, 1, &c).unwrap().is_zero());
    }
}
