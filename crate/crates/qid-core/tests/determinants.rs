use qid_core::detlab::{
    cofactor_expansion_check, det_exact, det_fraction_free, fnk_closed, fnk_det, kara_matrix,
    kara_sides, kratt_sides, lemma33_sides, DetBackend, DetParams, ExactMatrix,
};
use qid_core::exactcore::{cauchy_poly, RangeSpec, SeededSampler};
use qid_core::{QidError, Scalar};

fn s(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

/// Sum over permutations with sign, generated by Heap's algorithm.
fn permutation_det(m: &ExactMatrix) -> Scalar {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut sign = 1i64;
    let term = |perm: &[usize], sign: i64| {
        let t: Scalar = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| m.get(i, j).clone())
            .product();
        if sign > 0 {
            t
        } else {
            -t
        }
    };
    let mut total = term(&perm, sign);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            sign = -sign;
            total += term(&perm, sign);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    total
}

fn random_matrix(sampler: &mut SeededSampler, n: usize) -> ExactMatrix {
    let range = RangeSpec::new(-30..=30, 1..=12);
    ExactMatrix::from_fn(n, n, |_, _| Ok(sampler.sample_scalar(&range))).unwrap()
}

fn random_params(sampler: &mut SeededSampler) -> DetParams {
    let r = RangeSpec::default();
    DetParams::new(
        sampler.sample_scalar(&r),
        sampler.sample_scalar(&r),
        sampler.sample_scalar(&r),
        sampler.sample_scalar(&r),
    )
}

#[test]
fn eliminations_match_permutation_expansion() {
    let mut sampler = SeededSampler::new(301);
    for t in 0..30 {
        let n = 1 + t % 6;
        let m = random_matrix(&mut sampler, n);
        let oracle = permutation_det(&m);
        assert_eq!(det_exact(&m).unwrap(), oracle);
        assert_eq!(det_fraction_free(&m).unwrap(), oracle);
    }
}

#[test]
fn backends_agree_on_random_matrices() {
    let mut sampler = SeededSampler::new(302);
    for t in 0..64 {
        let n = 1 + t % 8;
        let m = random_matrix(&mut sampler, n);
        assert_eq!(
            det_exact(&m).unwrap(),
            det_fraction_free(&m).unwrap(),
            "{n}x{n}"
        );
    }
}

#[test]
fn determinant_is_multilinear_in_rows() {
    let mut sampler = SeededSampler::new(303);
    for n in 2..=6 {
        let m = random_matrix(&mut sampler, n);
        let other = random_matrix(&mut sampler, n);
        let row = 1;
        let mut summed = m.clone();
        let mut replaced = m.clone();
        for j in 0..n {
            summed.set(row, j, m.get(row, j) + other.get(row, j));
            replaced.set(row, j, other.get(row, j).clone());
        }
        assert_eq!(
            det_exact(&summed).unwrap(),
            det_exact(&m).unwrap() + det_exact(&replaced).unwrap()
        );
    }
}

#[test]
fn non_square_matrices_are_rejected() {
    let m = ExactMatrix::from_fn(2, 3, |i, j| Ok(Scalar::from_int((i + j) as i64))).unwrap();
    assert_eq!(det_exact(&m), Err(QidError::Shape { rows: 2, cols: 3 }));
}

#[test]
fn pinned_cauchy_instance_by_direct_expansion() {
    // n = 1, q = 1: entries P_1(x, a) P_1(x, c/a) and P_1(x, b) P_1(x, c/b)
    let (a, b, c) = (s(5, 1), s(7, 1), s(11, 1));
    let entry = |x: &Scalar, r: &Scalar| (x - r) * (x - &c / r);
    let (x1, x2) = (s(2, 1), s(3, 1));
    let direct = entry(&x1, &a) * entry(&x2, &b) - entry(&x1, &b) * entry(&x2, &a);
    assert_eq!(direct, s(-48, 7));
    let p = DetParams::new(a, b, c.clone(), Scalar::one());
    let sides = kara_sides(&[x1.clone(), x2.clone()], &p, DetBackend::Rational).unwrap();
    assert_eq!(sides.lhs, direct);
    assert_eq!(sides.rhs, direct);
    assert_eq!(cauchy_poly(&x1, &c, &Scalar::one(), 1), s(-9, 1));
}

#[test]
fn cauchy_determinant_random() {
    let mut sampler = SeededSampler::new(304);
    let r = RangeSpec::default();
    for n in 1..=4 {
        for _ in 0..3 {
            let p = random_params(&mut sampler);
            let x: Vec<Scalar> = (0..=n).map(|_| sampler.sample_scalar(&r)).collect();
            let sides = kara_sides(&x, &p, DetBackend::FractionFree).unwrap();
            assert_eq!(sides.lhs, permutation_det(&kara_matrix(&x, &p).unwrap()));
            assert!(sides.holds());
        }
    }
}

#[test]
fn ratio_determinant_random() {
    let mut sampler = SeededSampler::new(305);
    let r = RangeSpec::default();
    let mut done = 0;
    while done < 12 {
        let n = 1 + done % 6;
        let p = random_params(&mut sampler);
        let x: Vec<Scalar> = (0..n).map(|_| sampler.sample_scalar(&r)).collect();
        match kratt_sides(&x, &p, DetBackend::Rational) {
            Ok(sides) => {
                assert!(sides.holds(), "n={n}");
                done += 1;
            }
            Err(QidError::DegenerateParameters(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn fnk_chain() {
    let mut sampler = SeededSampler::new(306);
    let r = RangeSpec::default();
    for n in 1..=4 {
        let p = random_params(&mut sampler);
        let u = sampler.sample_scalar(&r);
        for k in 1..=n + 1 {
            assert_eq!(
                fnk_det(n, k, &u, &p, DetBackend::Rational).unwrap(),
                fnk_closed(n, k, &u, &p).unwrap()
            );
            assert!(lemma33_sides(n, k, &p, DetBackend::FractionFree)
                .unwrap()
                .holds());
        }
    }
}

#[test]
fn cofactors_match_brute_force_minors() {
    let mut sampler = SeededSampler::new(307);
    let r = RangeSpec::default();
    for n in 1..=3 {
        let p = random_params(&mut sampler);
        let u = sampler.sample_scalar(&r);
        let y = sampler.sample_scalar(&r);
        let check = cofactor_expansion_check(n, &u, &y, &p, DetBackend::Rational).unwrap();
        assert!(check.holds());
        let mut x: Vec<Scalar> = (0..n as i64).map(|i| &u * p.q.pow(i).unwrap()).collect();
        x.push(y.clone());
        let m = kara_matrix(&x, &p).unwrap();
        for k in 0..=n {
            let minor = m.minor(n, k).unwrap();
            let signed = if (n + k) % 2 == 0 {
                permutation_det(&minor)
            } else {
                -permutation_det(&minor)
            };
            assert_eq!(check.cofactors[k].lhs, signed);
        }
    }
}
