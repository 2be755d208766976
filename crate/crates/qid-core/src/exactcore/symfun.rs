//! Elementary, complete and supersymmetric complete symmetric functions
//! evaluated at exact points.

use crate::exactcore::Scalar;

/// An ordered multiset of scalars. Order never affects any symmetric function value.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VariableSet {
    elements: Vec<Scalar>,
}

impl VariableSet {
    pub fn new(elements: Vec<Scalar>) -> Self {
        VariableSet { elements }
    }

    pub fn cardinality(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Scalar] {
        &self.elements
    }

    pub fn push(&mut self, x: Scalar) {
        self.elements.push(x);
    }
}

impl From<Vec<Scalar>> for VariableSet {
    fn from(elements: Vec<Scalar>) -> Self {
        VariableSet::new(elements)
    }
}

impl FromIterator<Scalar> for VariableSet {
    fn from_iter<I: IntoIterator<Item = Scalar>>(iter: I) -> Self {
        VariableSet::new(iter.into_iter().collect())
    }
}

/// `e_0..e_upto` of `xs` by the usual DP over `prod (1 + x t)`.
fn elementary_table(xs: &[Scalar], upto: usize) -> Vec<Scalar> {
    let mut e = vec![Scalar::zero(); upto + 1];
    e[0] = Scalar::one();
    for x in xs {
        for t in (1..=upto).rev() {
            let add = x * &e[t - 1];
            e[t] += add;
        }
    }
    e
}

/// `h_0..h_upto` of `xs` by the DP over `prod 1/(1 - x t)`.
fn complete_table(xs: &[Scalar], upto: usize) -> Vec<Scalar> {
    let mut h = vec![Scalar::zero(); upto + 1];
    h[0] = Scalar::one();
    for x in xs {
        for t in 1..=upto {
            let add = x * &h[t - 1];
            h[t] += add;
        }
    }
    h
}

/// `e_i(X)`; zero for `i < 0` or `i > |X|`.
pub fn elem_sym(x: &VariableSet, i: i64) -> Scalar {
    if i < 0 || i as usize > x.cardinality() {
        return Scalar::zero();
    }
    let i = i as usize;
    elementary_table(x.elements(), i).swap_remove(i)
}

/// `h_i(X)`; zero for `i < 0`.
pub fn complete_sym(x: &VariableSet, i: i64) -> Scalar {
    if i < 0 {
        return Scalar::zero();
    }
    let i = i as usize;
    complete_table(x.elements(), i).swap_remove(i)
}

/// `h_i(X - Y) = sum_j (-1)^j e_j(Y) h_{i-j}(X)`, the coefficient of `t^i` in
/// `prod_{y in Y}(1 - y t) / prod_{x in X}(1 - x t)`.
pub fn supersym_complete(x: &VariableSet, y: &VariableSet, i: i64) -> Scalar {
    if i < 0 {
        return Scalar::zero();
    }
    let i = i as usize;
    let h = complete_table(x.elements(), i);
    let e = elementary_table(y.elements(), i.min(y.cardinality()));
    e.iter()
        .enumerate()
        .map(|(j, ej)| {
            let term = ej * &h[i - j];
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}
