use qid_core::exactcore::{RangeSpec, SeededSampler};
use qid_core::interp::jackson::{corollary_coefficients, corollary_terms};
use qid_core::interp::newton::newton_basis_c0;
use qid_core::interp::{
    basis, bc_poly_from_roots, coefficients, jackson_corollary_sides, newton_reconstruct_c0,
    reconstruct, BcSymmetricPoly, GeometricSpec, IndexConvention, Jackson8phi7, NodeSystem,
};
use qid_core::{Poly, Scalar};

const CONVENTIONS: [IndexConvention; 2] = [IndexConvention::Statement, IndexConvention::Proof];

fn random_bc(sampler: &mut SeededSampler, n: usize, c: &Scalar) -> BcSymmetricPoly {
    let range = RangeSpec::default();
    let mut coeffs = vec![Scalar::zero(); 2 * n + 1];
    for m in 0..=n {
        let v = sampler.sample_scalar(&range);
        coeffs[n - m] = &v * c.pow(m as i64).unwrap();
        coeffs[n + m] = v;
    }
    BcSymmetricPoly::from_poly(n, c, Poly::new(coeffs)).unwrap()
}

/// Solves the overdetermined system `sum_j x_j cols[j] = rhs` by elimination
/// and checks that it is consistent with a unique solution.
fn solve_columns(cols: &[Vec<Scalar>], rhs: &[Scalar]) -> Vec<Scalar> {
    let (rows, unknowns) = (rhs.len(), cols.len());
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|i| {
            cols.iter()
                .map(|c| c[i].clone())
                .chain([rhs[i].clone()])
                .collect()
        })
        .collect();
    for col in 0..unknowns {
        let pivot_row = col;
        let p = (pivot_row..rows)
            .find(|&r| !m[r][col].is_zero())
            .expect("full column rank");
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip().unwrap();
        for v in m[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let k = m[r][col].clone();
                let pivot = m[pivot_row].clone();
                for (v, pv) in m[r].iter_mut().zip(&pivot) {
                    *v = &*v - &k * pv;
                }
            }
        }
    }
    for row in &m[unknowns..] {
        assert!(row[unknowns].is_zero(), "inconsistent system");
    }
    (0..unknowns).map(|i| m[i][unknowns].clone()).collect()
}

#[test]
fn coefficients_match_linear_solve() {
    let mut sampler = SeededSampler::new(101);
    let range = RangeSpec::default();
    for n in [2usize, 3] {
        for _ in 0..5 {
            let nodes = NodeSystem::sample(&mut sampler, n, &range).unwrap();
            let f = random_bc(&mut sampler, n, nodes.c());
            for conv in CONVENTIONS {
                let cols: Vec<Vec<Scalar>> =
                    (0..=n).map(|j| basis(j, &nodes, conv).coeffs()).collect();
                let expected = solve_columns(&cols, &f.coeffs());
                assert_eq!(
                    coefficients(&f, &nodes, conv).unwrap(),
                    expected,
                    "n={n} {conv:?}"
                );
            }
        }
    }
}

#[test]
fn basis_vanishes_on_its_nodes() {
    let mut sampler = SeededSampler::new(102);
    let nodes = NodeSystem::sample(&mut sampler, 4, &RangeSpec::default()).unwrap();
    let n = nodes.n();
    let c = nodes.c();
    for j in 0..=n {
        let st = basis(j, &nodes, IndexConvention::Statement);
        let pr = basis(j, &nodes, IndexConvention::Proof);
        assert_eq!(st.poly().degree(), Some(2 * n));
        for bk in &nodes.b()[..j] {
            assert!(st.eval(bk).is_zero() && st.eval(&(c / bk)).is_zero());
        }
        // b_{j+1} is not a root, so C_j is read off at b_{j+1} once C_0..C_{j-1} are known
        if j < n {
            assert!(!st.eval(&nodes.b()[j]).is_zero());
        }
        for ak in &nodes.a()[..n - j] {
            assert!(st.eval(ak).is_zero() && st.eval(&(c / ak)).is_zero());
        }
        for ak in &nodes.a()[j..] {
            assert!(pr.eval(ak).is_zero());
        }
    }
}

#[test]
fn reconstruction_round_trip() {
    let mut sampler = SeededSampler::new(103);
    let range = RangeSpec::default();
    for n in 1..=6 {
        for _ in 0..3 {
            let nodes = NodeSystem::sample(&mut sampler, n, &range).unwrap();
            let f = random_bc(&mut sampler, n, nodes.c());
            for conv in CONVENTIONS {
                assert_eq!(reconstruct(&f, &nodes, conv).unwrap(), f);
            }
        }
    }
}

/// Interpolating polynomial through `(x_i, y_i)` from the Lagrange basis.
fn lagrange(xs: &[Scalar], ys: &[Scalar]) -> Poly {
    let mut out = Poly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let others: Vec<&Scalar> = xs
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, x)| x)
            .collect();
        let den: Scalar = others.iter().map(|&xk| xi - xk).product();
        let num = Poly::from_roots(others.iter().copied());
        out = &out + &num.scale(&(yi / &den));
    }
    out
}

#[test]
fn newton_c0_agrees_with_lagrange() {
    let mut sampler = SeededSampler::new(104);
    let range = RangeSpec::default();
    for n in 1..=6 {
        for _ in 0..5 {
            let f = Poly::new((0..=n).map(|_| sampler.sample_scalar(&range)).collect());
            let mut nodes: Vec<Scalar> = Vec::new();
            while nodes.len() < 2 * n {
                let x = sampler.sample_scalar(&range);
                if !nodes.contains(&x) {
                    nodes.push(x);
                }
            }
            let (a, b) = nodes.split_at(n);
            let rebuilt = newton_reconstruct_c0(&f, a, b).unwrap();
            // any n + 1 of the nodes determine f
            let values: Vec<Scalar> = nodes[n - 1..].iter().map(|x| rebuilt.eval(x)).collect();
            assert_eq!(lagrange(&nodes[n - 1..], &values), f);
            assert_eq!(rebuilt, f);
            assert_eq!(newton_basis_c0(0, a, b), Poly::from_roots(a));
        }
    }
}

fn geometric(sampler: &mut SeededSampler, n: usize) -> (GeometricSpec, Scalar) {
    let r = RangeSpec::default();
    loop {
        let spec = GeometricSpec {
            a: sampler.sample_scalar(&r),
            b: sampler.sample_scalar(&r),
            c: sampler.sample_scalar(&r),
            q: sampler.sample_scalar(&r),
            u: sampler.sample_scalar(&r),
            n,
        };
        let y = sampler.sample_scalar(&r);
        if (n == 0 || spec.node_system().is_ok()) && corollary_coefficients(&spec).is_ok() {
            return (spec, y);
        }
    }
}

#[test]
fn summation_terms_are_interpolation_terms() {
    let mut sampler = SeededSampler::new(105);
    for n in 1..=5 {
        for _ in 0..3 {
            let (spec, y) = geometric(&mut sampler, n);
            let nodes = spec.node_system().unwrap();
            let f = bc_poly_from_roots(&spec.roots(), &spec.c)
                .unwrap()
                .scale(&Scalar::sign_power(n as i64));
            let cs = coefficients(&f, &nodes, IndexConvention::Statement).unwrap();
            assert_eq!(corollary_coefficients(&spec).unwrap(), cs);
            let terms = corollary_terms(&spec, &y).unwrap();
            for (k, term) in terms.iter().enumerate() {
                assert_eq!(
                    term,
                    &(&cs[k] * basis(k, &nodes, IndexConvention::Statement).eval(&y))
                );
            }
            assert_eq!(
                reconstruct(&f, &nodes, IndexConvention::Statement).unwrap(),
                f
            );
        }
    }
}

#[test]
fn summation_and_8phi7_hold() {
    let mut sampler = SeededSampler::new(106);
    for n in 0..=8 {
        let (spec, y) = geometric(&mut sampler, n);
        assert!(jackson_corollary_sides(&spec, &y).unwrap().holds(), "n={n}");
        if let Ok(p) = Jackson8phi7::from_geometric(&spec, &y) {
            assert!(p.is_balanced().unwrap());
            if let Ok(sides) = p.sides() {
                assert!(sides.holds(), "n={n}");
            }
        }
    }
}
