use crate::error::{QidError, Result};
use crate::exactcore::{RangeSpec, Scalar, SeededSampler};

/// Interpolation nodes `A = {a_i, c/a_i}` and `B = {b_i, c/b_i}`, `i = 1..n`.
///
/// Admissible when `c`, every `a_i` and every `b_i` are nonzero, the `4n`
/// values `a_i, c/a_i, b_j, c/b_j` are pairwise distinct, and no two distinct
/// `b_i, b_k` multiply to `c`. Under these conditions every denominator in the
/// coefficient formulas and in the operator chains at the `b` nodes is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSystem {
    c: Scalar,
    a: Vec<Scalar>,
    b: Vec<Scalar>,
}

impl NodeSystem {
    pub fn new(c: Scalar, a: Vec<Scalar>, b: Vec<Scalar>) -> Result<Self> {
        let nodes = NodeSystem { c, a, b };
        match nodes.violation() {
            Some(reason) => Err(QidError::DegenerateNodes(reason)),
            None => Ok(nodes),
        }
    }

    /// Why the nodes are inadmissible, if they are.
    pub fn violation(&self) -> Option<String> {
        let n = self.a.len();
        if n == 0 || self.b.len() != n {
            return Some(format!(
                "need n >= 1 with |a| = |b|, got {} and {}",
                n,
                self.b.len()
            ));
        }
        if self.c.is_zero() {
            return Some("c = 0".into());
        }
        if let Some(i) = self.a.iter().position(Scalar::is_zero) {
            return Some(format!("a_{} = 0", i + 1));
        }
        if let Some(i) = self.b.iter().position(Scalar::is_zero) {
            return Some(format!("b_{} = 0", i + 1));
        }
        let all = self.all_nodes();
        for i in 0..all.len() {
            for k in i + 1..all.len() {
                if all[i].1 == all[k].1 {
                    return Some(format!("{} = {} = {}", all[i].0, all[k].0, all[i].1));
                }
            }
        }
        for i in 0..n {
            for k in i + 1..n {
                if &self.b[i] * &self.b[k] == self.c {
                    return Some(format!("b_{} * b_{} = c", i + 1, k + 1));
                }
            }
        }
        None
    }

    fn all_nodes(&self) -> Vec<(String, Scalar)> {
        let mut out = Vec::with_capacity(4 * self.n());
        for (name, xs) in [("a", &self.a), ("b", &self.b)] {
            for (i, x) in xs.iter().enumerate() {
                out.push((format!("{name}_{}", i + 1), x.clone()));
                out.push((format!("c/{name}_{}", i + 1), &self.c / x));
            }
        }
        out
    }

    /// Draws `c`, `a`, `b` from `range` until the system is admissible.
    pub fn sample(sampler: &mut SeededSampler, n: usize, range: &RangeSpec) -> Result<Self> {
        let range = range.clone().nonzero();
        sampler.rejection(|s| {
            let c = s.sample_scalar(&range);
            let a = (0..n).map(|_| s.sample_scalar(&range)).collect();
            let b = (0..n).map(|_| s.sample_scalar(&range)).collect();
            let nodes = NodeSystem { c, a, b };
            match nodes.violation() {
                Some(reason) => Err(reason),
                None => Ok(nodes),
            }
        })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn a(&self) -> &[Scalar] {
        &self.a
    }

    pub fn b(&self) -> &[Scalar] {
        &self.b
    }

    /// Same node sets with the `a` list in reverse order.
    pub fn with_a_reversed(&self) -> NodeSystem {
        let mut a = self.a.clone();
        a.reverse();
        NodeSystem {
            c: self.c.clone(),
            a,
            b: self.b.clone(),
        }
    }
}

/// Geometric nodes `A = {a q^{1-i}, c q^{i-1}/a}`, `B = {b q^{1-i}, c q^{i-1}/b}`
/// together with the root base `u` of `prod (u q^{i-1} - y)(c - u q^{i-1} y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricSpec {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub q: Scalar,
    pub u: Scalar,
    pub n: usize,
}

impl GeometricSpec {
    /// The induced [`NodeSystem`], ordered so that the `k`-th term of the
    /// geometric summation is the `k`-th term of the interpolation formula in
    /// the statement convention: `a_i = a q^{1-i}` and `b_i = b q^{i-n}`.
    pub fn node_system(&self) -> Result<NodeSystem> {
        let n = self.n as i64;
        let a = (1..=n)
            .map(|i| Ok(&self.a * self.q.pow(1 - i)?))
            .collect::<Result<_>>()?;
        let b = (1..=n)
            .map(|i| Ok(&self.b * self.q.pow(i - n)?))
            .collect::<Result<_>>()?;
        NodeSystem::new(self.c.clone(), a, b)
    }

    /// `u q^{i-1}` for `i = 1..n`.
    pub fn roots(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.n);
        let mut x = self.u.clone();
        for _ in 0..self.n {
            out.push(x.clone());
            x *= &self.q;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::s;

    #[test]
    fn admissibility_guards() {
        let ok = NodeSystem::new(s(6, 1), vec![s(1, 1)], vec![s(3, 1)]);
        assert!(ok.is_ok());
        let clash = NodeSystem::new(s(6, 1), vec![s(1, 1)], vec![s(6, 1)]);
        assert!(matches!(clash, Err(QidError::DegenerateNodes(_))));
        let zero_c = NodeSystem::new(Scalar::zero(), vec![s(1, 1)], vec![s(3, 1)]);
        assert!(matches!(zero_c, Err(QidError::DegenerateNodes(_))));
        let zero_a = NodeSystem::new(s(5, 1), vec![s(0, 1)], vec![s(3, 1)]);
        assert!(matches!(zero_a, Err(QidError::DegenerateNodes(_))));
        // b_1 b_2 = c is caught as b_1 = c/b_2
        let singular = NodeSystem::new(s(6, 1), vec![s(5, 1), s(7, 1)], vec![s(2, 1), s(3, 1)]);
        assert_eq!(
            singular.unwrap_err(),
            QidError::DegenerateNodes("b_1 = c/b_2 = 2/1".into())
        );
        let self_paired = NodeSystem::new(s(4, 1), vec![s(2, 1)], vec![s(3, 1)]);
        assert!(self_paired.is_err(), "a = c/a = 2");
        let uneven = NodeSystem::new(s(4, 1), vec![s(5, 1)], vec![]);
        assert!(uneven.is_err());
    }

    #[test]
    fn sampling_is_admissible_and_deterministic() {
        let range = RangeSpec::default();
        let x = NodeSystem::sample(&mut SeededSampler::new(5), 4, &range).unwrap();
        let y = NodeSystem::sample(&mut SeededSampler::new(5), 4, &range).unwrap();
        assert_eq!(x, y);
        assert!(x.violation().is_none());
    }

    #[test]
    fn geometric_ordering() {
        let g = GeometricSpec {
            a: s(2, 1),
            b: s(3, 1),
            c: s(7, 1),
            q: s(5, 1),
            u: s(1, 1),
            n: 3,
        };
        let nodes = g.node_system().unwrap();
        assert_eq!(nodes.a(), &[s(2, 1), s(2, 5), s(2, 25)]);
        assert_eq!(nodes.b(), &[s(3, 25), s(3, 5), s(3, 1)]);
        assert_eq!(g.roots(), vec![s(1, 1), s(5, 1), s(25, 1)]);
    }
}
