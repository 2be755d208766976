//! c-divided difference operators on exactly evaluable functions.
//!
//! For a constant `c`, the operator at slot `i` sends `f` to
//!
//! ```text
//! (f(.., x_i, x_{i+1}, ..) - f(.., x_{i+1}, x_i, ..)) / ((x_i - x_{i+1})(1 - c/(x_i x_{i+1})))
//! ```
//!
//! and reduces to the classical divided difference at `c = 0`. Operators are
//! usually written postfix, `f d_1 d_2 ... d_j`, meaning `d_1` acts first; an
//! [`OperatorChain`] with indices `[1, 2, .., j]` applies them in that order.
//!
//! Applying an operator is lazy: it builds a new [`MultiFunction`] and every
//! guard (coincident points, `x_i x_{i+1} = c`, zero coordinates) is checked
//! when the result is evaluated. A black-box evaluation of a length-`j` chain
//! touches up to `2^j` tuples; [`DividedDiffTable`] computes the same value for
//! univariate `f` from `j + 1` evaluations in `O(j^2)` arithmetic.

pub mod lemmas;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{QidError, Result};
use crate::exactcore::Scalar;
use crate::poly::Poly;

type Evaluator = dyn Fn(&[Scalar]) -> Result<Scalar> + Send + Sync;
type Cache = HashMap<(usize, Vec<Scalar>), Scalar>;

enum Node {
    Leaf {
        arity: usize,
        eval: Box<Evaluator>,
    },
    Cdd {
        arity: usize,
        inner: Arc<Node>,
        slot: usize,
        c: Scalar,
    },
}

impl Node {
    fn arity(&self) -> usize {
        match self {
            Node::Leaf { arity, .. } | Node::Cdd { arity, .. } => *arity,
        }
    }

    fn eval(&self, x: &[Scalar], cache: &mut Cache) -> Result<Scalar> {
        let x = &x[..self.arity()];
        match self {
            Node::Leaf { eval, .. } => eval(x),
            Node::Cdd { inner, slot, c, .. } => {
                let key = (self as *const Node as usize, x.to_vec());
                if let Some(v) = cache.get(&key) {
                    return Ok(v.clone());
                }
                let (i, j) = (slot - 1, *slot);
                let den = cdd_denominator(&x[i], &x[j], c, *slot)?;
                let mut swapped = x.to_vec();
                swapped.swap(i, j);
                let here = inner.eval(x, cache)?;
                let there = inner.eval(&swapped, cache)?;
                let v = (here - there) / den;
                cache.insert(key, v.clone());
                Ok(v)
            }
        }
    }
}

/// `(xi - xj)(1 - c/(xi xj))` with the error taxonomy of the operator at `slot`.
fn cdd_denominator(xi: &Scalar, xj: &Scalar, c: &Scalar, slot: usize) -> Result<Scalar> {
    if xi == xj {
        return Err(QidError::CoincidentPoints { slot });
    }
    if c.is_zero() {
        return Ok(xi - xj);
    }
    if xi.is_zero() {
        return Err(QidError::ZeroCoordinate { slot });
    }
    if xj.is_zero() {
        return Err(QidError::ZeroCoordinate { slot: slot + 1 });
    }
    let prod = xi * xj;
    if &prod == c {
        return Err(QidError::SingularPair { slot });
    }
    // (xi - xj)(1 - c/(xi xj)) = (xi - xj)(xi xj - c)/(xi xj)
    Ok((xi - xj) * (&prod - c) / prod)
}

/// Deterministic exact map from scalar tuples to scalars, consuming the first
/// `arity` coordinates and ignoring the rest.
#[derive(Clone)]
pub struct MultiFunction {
    node: Arc<Node>,
}

impl fmt::Debug for MultiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiFunction")
            .field("arity", &self.arity())
            .finish()
    }
}

impl MultiFunction {
    pub fn new<F>(arity: usize, f: F) -> Self
    where
        F: Fn(&[Scalar]) -> Result<Scalar> + Send + Sync + 'static,
    {
        assert!(arity >= 1, "arity must be positive");
        MultiFunction {
            node: Arc::new(Node::Leaf {
                arity,
                eval: Box::new(f),
            }),
        }
    }

    /// A function of the first coordinate only.
    pub fn univariate<F>(f: F) -> Self
    where
        F: Fn(&Scalar) -> Result<Scalar> + Send + Sync + 'static,
    {
        MultiFunction::new(1, move |x| f(&x[0]))
    }

    pub fn from_poly(p: Poly) -> Self {
        MultiFunction::univariate(move |y| Ok(p.eval(y)))
    }

    /// `f` placed in coordinate `slot` (1-based); arity becomes `slot`.
    pub fn in_slot<F>(slot: usize, f: F) -> Self
    where
        F: Fn(&Scalar) -> Result<Scalar> + Send + Sync + 'static,
    {
        assert!(slot >= 1);
        MultiFunction::new(slot, move |x| f(&x[slot - 1]))
    }

    pub fn arity(&self) -> usize {
        self.node.arity()
    }

    /// Evaluates at `x`, which must have at least `arity` coordinates. The
    /// memo cache lives for this call only.
    pub fn eval(&self, x: &[Scalar]) -> Result<Scalar> {
        if x.len() < self.arity() {
            return Err(QidError::Arity {
                need: self.arity(),
                got: x.len(),
            });
        }
        let mut cache = Cache::new();
        self.node.eval(x, &mut cache)
    }
}

/// `f d_i` for the c-divided difference at slot `i` (1-based).
pub fn apply_cdd(f: &MultiFunction, i: usize, c: &Scalar) -> MultiFunction {
    assert!(i >= 1, "operator slots are 1-based");
    let arity = f.arity().max(i + 1);
    MultiFunction {
        node: Arc::new(Node::Cdd {
            arity,
            inner: Arc::clone(&f.node),
            slot: i,
            c: c.clone(),
        }),
    }
}

/// A product of c-divided difference operators, applied left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorChain {
    pub c: Scalar,
    pub indices: Vec<usize>,
}

impl OperatorChain {
    pub fn new(c: Scalar, indices: Vec<usize>) -> Self {
        assert!(
            indices.iter().all(|&i| i >= 1),
            "operator slots are 1-based"
        );
        OperatorChain { c, indices }
    }

    /// `d_1 d_2 ... d_len`
    pub fn prefix(c: Scalar, len: usize) -> Self {
        OperatorChain::new(c, (1..=len).collect())
    }

    /// `d_from ... d_to` (empty when `from > to`).
    pub fn range(c: Scalar, from: usize, to: usize) -> Self {
        OperatorChain::new(c, (from..=to).collect())
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

pub fn apply_chain(f: &MultiFunction, chain: &OperatorChain) -> MultiFunction {
    chain
        .indices
        .iter()
        .fold(f.clone(), |g, &i| apply_cdd(&g, i, &chain.c))
}

/// Triangular table for `(f d_1 ... d_j)(b_1, ..., b_{j+1})` of univariate `f`.
///
/// `rows[0][i] = f(b_{i+1})`, and for `i > m`
/// `rows[m+1][i] = (rows[m][m] - rows[m][i]) / ((b_{m+1} - b_{i+1})(1 - c/(b_{m+1} b_{i+1})))`
/// (0-based storage of the 1-based recurrence).
#[derive(Clone, Debug)]
pub struct DividedDiffTable {
    pub c: Scalar,
    pub points: Vec<Scalar>,
    rows: Vec<Vec<Scalar>>,
}

impl DividedDiffTable {
    pub fn build<F>(f: F, c: &Scalar, points: &[Scalar]) -> Result<Self>
    where
        F: Fn(&Scalar) -> Result<Scalar>,
    {
        assert!(!points.is_empty(), "need at least one point");
        check_points(c, points)?;
        let first: Vec<Scalar> = points.iter().map(&f).collect::<Result<_>>()?;
        let mut rows = vec![first];
        for m in 0..points.len() - 1 {
            let prev = &rows[m];
            let mut next = vec![Scalar::zero(); points.len()];
            for i in m + 1..points.len() {
                let den = cdd_denominator(&points[m], &points[i], c, m + 1)?;
                next[i] = (&prev[m] - &prev[i]) / den;
            }
            rows.push(next);
        }
        Ok(DividedDiffTable {
            c: c.clone(),
            points: points.to_vec(),
            rows,
        })
    }

    /// `D[m][i]` in the 1-based indexing of the recurrence; defined for `i >= m`.
    pub fn entry(&self, m: usize, i: usize) -> &Scalar {
        assert!(m >= 1 && i >= m && i <= self.points.len());
        &self.rows[m - 1][i - 1]
    }

    /// `(f d_1 ... d_j)(b_1, ..., b_{j+1})`
    pub fn top(&self) -> &Scalar {
        let j = self.points.len();
        self.entry(j, j)
    }
}

/// Checks admissibility of `points` for a chain `d_1 ... d_j`: pairwise
/// distinct, no pair with product `c`, and no zero point when `c != 0`.
pub fn check_points(c: &Scalar, points: &[Scalar]) -> Result<()> {
    if !c.is_zero() {
        if let Some(i) = points.iter().position(Scalar::is_zero) {
            return Err(QidError::ZeroCoordinate { slot: i + 1 });
        }
    }
    for i in 0..points.len() {
        for k in i + 1..points.len() {
            if points[i] == points[k] {
                return Err(QidError::CoincidentPoints { slot: i + 1 });
            }
            if !c.is_zero() && &(&points[i] * &points[k]) == c {
                return Err(QidError::SingularPair { slot: i + 1 });
            }
        }
    }
    Ok(())
}

/// `(f d_1 ... d_j)(b_1, ..., b_{j+1})` with `j = points.len() - 1`.
pub fn eval_table<F>(f: F, c: &Scalar, points: &[Scalar]) -> Result<Scalar>
where
    F: Fn(&Scalar) -> Result<Scalar>,
{
    Ok(DividedDiffTable::build(f, c, points)?.top().clone())
}
