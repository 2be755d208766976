//! One seeded trial of each identity suite: draw parameters, evaluate both
//! sides of every check exactly.

use qid_core::detlab::{self, DetBackend, DetParams};
use qid_core::divop::lemmas::{
    bc_product_chain_expected, bc_product_chain_value, leibniz_sides, node_delta_value,
    normalized_pair, two_branch_expected, two_branch_value,
};
use qid_core::divop::{apply_cdd, apply_chain, eval_table, MultiFunction, OperatorChain};
use qid_core::exactcore::{elem_sym, RangeSpec, SeededSampler, VariableSet};
use qid_core::interp::jackson::{
    corollary_coefficients_shifted, jackson_8phi7_sides_shifted, jackson_corollary_sides_shifted,
};
use qid_core::interp::newton::newton_reconstruct_c0_shifted;
use qid_core::interp::theorem::reconstruct_shifted;
use qid_core::interp::{
    bc_poly_from_roots, coefficients, BcSymmetricPoly, GeometricSpec, IndexConvention,
    Jackson8phi7, NodeSystem,
};
use qid_core::mutation::ExponentShift;
use qid_core::{Poly, QidError, Result, Scalar, Sides};

use crate::config::Identity;

/// One labeled equality to verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub sides: Sides,
}

/// The drawn parameters of a trial and its checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trial {
    pub parameters: Vec<(String, Scalar)>,
    pub checks: Vec<Check>,
}

impl Trial {
    fn param(&mut self, name: impl Into<String>, v: &Scalar) {
        self.parameters.push((name.into(), v.clone()));
    }

    fn params(&mut self, name: &str, vs: &[Scalar]) {
        for (i, v) in vs.iter().enumerate() {
            self.param(format!("{name}_{}", i + 1), v);
        }
    }

    fn check(&mut self, label: impl Into<String>, sides: Sides) {
        self.checks.push(Check {
            label: label.into(),
            sides,
        });
    }

    fn check_eq(&mut self, label: impl Into<String>, lhs: Scalar, rhs: Scalar) {
        self.check(label, Sides::new(lhs, rhs));
    }
}

/// Evaluation settings shared by every suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrialContext {
    pub backend: DetBackend,
    pub shift: ExponentShift,
}

/// How a cell ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellOutcome {
    Done(Trial),
    /// Every draw was inadmissible.
    Rejected(String),
    /// Evaluation failed for a reason other than a degenerate draw.
    Error(String),
}

/// Errors that mean the draw hit a forbidden parameter value.
fn is_degenerate(e: &QidError) -> bool {
    matches!(
        e,
        QidError::DivisionByZero
            | QidError::DegenerateQ(_)
            | QidError::CoincidentPoints { .. }
            | QidError::SingularPair { .. }
            | QidError::ZeroCoordinate { .. }
            | QidError::DegenerateNodes(_)
            | QidError::DegenerateParameters(_)
    )
}

/// Runs one trial of `identity` at size `n`, redrawing degenerate parameters.
pub fn run_trial(
    identity: Identity,
    n: usize,
    sampler: &mut SeededSampler,
    ctx: TrialContext,
) -> CellOutcome {
    let generate: fn(usize, &mut SeededSampler, TrialContext) -> Result<Trial> = match identity {
        Identity::Theorem1 => theorem1,
        Identity::NewtonC0 => newton_c0,
        Identity::JacksonCorollary => jackson_corollary,
        Identity::Jackson8phi7 => jackson_8phi7,
        Identity::Kara => kara,
        Identity::Krattenthaler => krattenthaler,
        Identity::Fnk => fnk,
        Identity::Lemma33 => lemma33,
        Identity::Cofactor => cofactor,
        Identity::Lemmas2x => lemmas2x,
        Identity::All => return CellOutcome::Error("`all` is not a single suite".into()),
    };
    let drawn = sampler.rejection(|s| match generate(n, s, ctx) {
        Ok(t) => Ok(Ok(t)),
        Err(e) if is_degenerate(&e) => Err(e.to_string()),
        Err(e) => Ok(Err(e)),
    });
    match drawn {
        Ok(Ok(trial)) => CellOutcome::Done(trial),
        Ok(Err(e)) => CellOutcome::Error(e.to_string()),
        Err(e) => CellOutcome::Rejected(e.to_string()),
    }
}

fn range() -> RangeSpec {
    RangeSpec::default()
}

fn draw(s: &mut SeededSampler) -> Scalar {
    s.sample_scalar(&range())
}

fn draw_vec(s: &mut SeededSampler, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| draw(s)).collect()
}

fn det_params(s: &mut SeededSampler, t: &mut Trial) -> DetParams {
    let p = DetParams::new(draw(s), draw(s), draw(s), draw(s));
    for (name, v) in [("a", &p.a), ("b", &p.b), ("c", &p.c), ("q", &p.q)] {
        t.param(name, v);
    }
    p
}

fn poly_checks(t: &mut Trial, label: &str, got: &Poly, want: &Poly, len: usize) {
    for i in 0..len {
        t.check_eq(format!("{label} y^{i}"), got.coeff(i), want.coeff(i));
    }
}

/// A random BC-symmetric polynomial: free coefficients `f_n..f_{2n}`, mirrored.
fn random_bc_poly(s: &mut SeededSampler, n: usize, c: &Scalar) -> Result<BcSymmetricPoly> {
    let upper = draw_vec(s, n + 1);
    let mut coeffs = vec![Scalar::zero(); 2 * n + 1];
    for m in 0..=n {
        coeffs[n + m] = upper[m].clone();
        coeffs[n - m] = &upper[m] * c.pow(m as i64)?;
    }
    BcSymmetricPoly::from_poly(n, c, Poly::new(coeffs))
}

fn theorem1(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let nodes = NodeSystem::new(draw(s), draw_vec(s, n), draw_vec(s, n))?;
    let f = random_bc_poly(s, n, nodes.c())?;
    t.param("c", nodes.c());
    t.params("a", nodes.a());
    t.params("b", nodes.b());
    t.params("f", f.poly().coeffs());
    for (name, conv) in [
        ("statement", IndexConvention::Statement),
        ("proof", IndexConvention::Proof),
    ] {
        let rebuilt = reconstruct_shifted(&f, &nodes, conv, ctx.shift)?;
        poly_checks(&mut t, name, rebuilt.poly(), f.poly(), 2 * n + 1);
    }
    Ok(t)
}

fn newton_c0(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let a = draw_vec(s, n);
    let b = draw_vec(s, n);
    let f = Poly::new(draw_vec(s, n + 1));
    t.params("a", &a);
    t.params("b", &b);
    t.params("f", f.coeffs());
    let rebuilt = newton_reconstruct_c0_shifted(&f, &a, &b, ctx.shift)?;
    poly_checks(&mut t, "newton", &rebuilt, &f, n + 1);
    Ok(t)
}

fn geometric(n: usize, s: &mut SeededSampler, t: &mut Trial) -> (GeometricSpec, Scalar) {
    let spec = GeometricSpec {
        a: draw(s),
        b: draw(s),
        c: draw(s),
        q: draw(s),
        u: draw(s),
        n,
    };
    let y = draw(s);
    for (name, v) in [
        ("a", &spec.a),
        ("b", &spec.b),
        ("c", &spec.c),
        ("q", &spec.q),
        ("u", &spec.u),
        ("y", &y),
    ] {
        t.param(name, v);
    }
    (spec, y)
}

/// Largest `n` at which the summation coefficients are also compared with
/// the general interpolation coefficients.
const COEFFICIENT_CHECK_MAX_N: usize = 5;

fn jackson_corollary(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let (spec, y) = geometric(n, s, &mut t);
    t.check(
        "summation",
        jackson_corollary_sides_shifted(&spec, &y, ctx.shift)?,
    );
    if (1..=COEFFICIENT_CHECK_MAX_N).contains(&n) {
        let nodes = spec.node_system()?;
        let f = bc_poly_from_roots(&spec.roots(), &spec.c)?.scale(&Scalar::sign_power(n as i64));
        let general = coefficients(&f, &nodes, IndexConvention::Statement)?;
        let summed = corollary_coefficients_shifted(&spec, ctx.shift)?;
        for (k, (tk, ck)) in summed.into_iter().zip(general).enumerate() {
            t.check_eq(format!("summand {k} vs interpolation coefficient"), tk, ck);
        }
    }
    Ok(t)
}

fn jackson_8phi7(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let (spec, y) = geometric(n, s, &mut t);
    t.check(
        "source summation",
        jackson_corollary_sides_shifted(&spec, &y, ExponentShift::NONE)?,
    );
    let p = Jackson8phi7::from_geometric(&spec, &y)?;
    let Jackson8phi7 {
        a, b, c, d, e, q, ..
    } = &p;
    t.check_eq("balanced", a * a * q.pow(n as i64 + 1)?, b * c * d * e);
    t.check("8phi7", jackson_8phi7_sides_shifted(&p, ctx.shift)?);
    Ok(t)
}

fn kara(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let p = det_params(s, &mut t);
    let x = draw_vec(s, n + 1);
    t.params("x", &x);
    t.check(
        "determinant",
        detlab::kara_sides_shifted(&x, &p, ctx.backend, ctx.shift)?,
    );
    Ok(t)
}

fn krattenthaler(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let p = det_params(s, &mut t);
    let x = draw_vec(s, n);
    t.params("x", &x);
    t.check(
        "determinant",
        detlab::kratt_sides_shifted(&x, &p, ctx.backend, ctx.shift)?,
    );
    Ok(t)
}

/// The `2n` prescribed zeros of `F_{n,k}` as a function of `u`.
pub fn fnk_u_roots(n: usize, k: usize, p: &DetParams) -> Result<Vec<Scalar>> {
    let DetParams { a, b, c, q } = p;
    let ni = n as i64;
    let mut roots = Vec::with_capacity(2 * n);
    for i in 1..k as i64 {
        roots.push(a * q.pow(i - ni)?);
        roots.push(c * q.pow(1 - i)? / a);
    }
    for i in 1..=(n + 1 - k) as i64 {
        roots.push(b * q.pow(2 - ni - i)?);
        roots.push(c * q.pow(i - 1)? / b);
    }
    Ok(roots)
}

fn fnk(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let p = det_params(s, &mut t);
    let u = draw(s);
    t.param("u", &u);
    let zero = Scalar::zero();
    for k in 1..=n + 1 {
        let det = detlab::fnk_det(n, k, &u, &p, ctx.backend)?;
        t.check_eq(
            format!("F_{n},{k} determinant vs closed form"),
            det,
            detlab::fnk_closed_shifted(n, k, &u, &p, ctx.shift)?,
        );
        for (r, root) in fnk_u_roots(n, k, &p)?.iter().enumerate() {
            t.check_eq(
                format!("F_{n},{k} closed form at root {}", r + 1),
                detlab::fnk_closed(n, k, root, &p)?,
                zero.clone(),
            );
            t.check_eq(
                format!("F_{n},{k} determinant at root {}", r + 1),
                detlab::fnk_det(n, k, root, &p, ctx.backend)?,
                zero.clone(),
            );
        }
    }
    if n >= 2 {
        // move c onto the factor c - u^2 q^{i+j-2}
        let i = s.sample_int(1..=n as i64 - 1);
        let j = s.sample_int(i + 1..=n as i64);
        let c = &u * &u * p.q.pow(i + j - 2)?;
        t.param("pair_i", &Scalar::from_int(i));
        t.param("pair_j", &Scalar::from_int(j));
        let on_pair = DetParams { c, ..p.clone() };
        for k in 1..=n + 1 {
            t.check_eq(
                format!("F_{n},{k} closed form on c = u^2 q^(i+j-2)"),
                detlab::fnk_closed(n, k, &u, &on_pair)?,
                zero.clone(),
            );
            t.check_eq(
                format!("F_{n},{k} determinant on c = u^2 q^(i+j-2)"),
                detlab::fnk_det(n, k, &u, &on_pair, ctx.backend)?,
                zero.clone(),
            );
        }
    }
    Ok(t)
}

fn lemma33(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let p = det_params(s, &mut t);
    for k in 1..=n + 1 {
        t.check(
            format!("k = {k}"),
            detlab::lemma33_sides_shifted(n, k, &p, ctx.backend, ctx.shift)?,
        );
    }
    Ok(t)
}

fn cofactor(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let p = det_params(s, &mut t);
    let u = draw(s);
    let y = draw(s);
    t.param("u", &u);
    t.param("y", &y);
    let check = detlab::cofactor_expansion_check_shifted(n, &u, &y, &p, ctx.backend, ctx.shift)?;
    if check.cofactors.iter().all(|c| c.lhs.is_zero()) {
        return Err(QidError::DegenerateParameters(
            "all cofactors vanish".into(),
        ));
    }
    t.check("expansion", check.expansion);
    for (k, sides) in check.cofactors.into_iter().enumerate() {
        t.check(format!("cofactor {} from minor", k + 1), sides);
    }
    for (k, sides) in check.normalized.into_iter().enumerate() {
        t.check(format!("normalized term {} vs summand {k}", k + 1), sides);
    }
    Ok(t)
}

/// Longest chain used for the product rule and the table comparison.
const LEIBNIZ_MAX_LEN: usize = 3;
const TABLE_MAX_LEN: usize = 5;

fn lemmas2x(n: usize, s: &mut SeededSampler, ctx: TrialContext) -> Result<Trial> {
    let mut t = Trial::default();
    let c = draw(s);
    let x = draw_vec(s, n + 2);
    let a = draw_vec(s, n);
    t.param("c", &c);
    t.params("x", &x);
    t.params("a", &a);
    let zero = Scalar::zero();

    let f = Poly::new(draw_vec(s, 3));
    let g = Poly::new(draw_vec(s, 3));
    let len = n.min(LEIBNIZ_MAX_LEN);
    t.params("f", f.coeffs());
    t.params("g", g.coeffs());
    t.check(
        format!("product rule, length {len}"),
        leibniz_sides(&f, &g, &c, &x[..=len])?,
    );

    let k = draw(s);
    let sym = MultiFunction::new(n + 1, move |v| {
        let set = VariableSet::new(v.to_vec());
        Ok(&k * elem_sym(&set, 2) + v.iter().product::<Scalar>())
    });
    for slot in 1..=n {
        t.check_eq(
            format!("symmetric function at slot {slot}"),
            apply_cdd(&sym, slot, &c).eval(&x[..=n])?,
            zero.clone(),
        );
    }

    let roots = &a[..n];
    for m in [n, n + 1] {
        let expected = bc_product_chain_expected(n, m).expect("m >= n");
        t.check_eq(
            format!("product of {n} pairs, chain length {m}"),
            bc_product_chain_value(roots, &c, &x[..=m])?,
            expected,
        );
    }

    let b = &x[..=n];
    for j in 1..=n {
        for i in 1..=n {
            let delta = if i == j { Scalar::one() } else { zero.clone() };
            t.check_eq(
                format!("node product j = {j}, chain i = {i}"),
                node_delta_value(b, j, i, &c)?,
                delta,
            );
        }
    }

    for j in 1..=n {
        for i in 1..=n {
            let expected = if i == j {
                normalized_pair(&b[j], &a[j - 1], &c)?.pow(-1 - ctx.shift.get())?
            } else {
                two_branch_expected(&a, b, j, i, &c)?
            };
            t.check_eq(
                format!("two-branch j = {j}, i = {i}"),
                two_branch_value(&a, b, j, i, &c)?,
                expected,
            );
        }
    }

    let h = Poly::new(draw_vec(s, 5));
    let j = n.min(TABLE_MAX_LEN);
    t.params("h", h.coeffs());
    let hc = h.clone();
    let table = eval_table(|y: &Scalar| h.eval(y).checked_div(y), &c, &x[..=j])?;
    let black_box = MultiFunction::univariate(move |y| hc.eval(y).checked_div(y));
    let chained = apply_chain(&black_box, &OperatorChain::prefix(c.clone(), j)).eval(&x[..=j])?;
    t.check_eq(
        format!("table vs operator chain, length {j}"),
        table,
        chained,
    );
    Ok(t)
}
