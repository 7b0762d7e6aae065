//! Cross-module property tests: functional-calculus identities, order
//! preservation, spectrum containment, Rayleigh bounds, orientation symmetry.

use hhverify_core::{
    apply_function, check_synchronous, derive_subseed, loewner_compare, probe_values,
    quadratic_form, random_hermitian, random_unit_vector, resolve_function, segment_point,
    spectral_decompose, Checker, HermitianMatrix64, Interval64, OrderRelation, SegmentData,
    StreamTag,
};
use num_complex::Complex;
use proptest::prelude::*;

fn draw(dim: usize, interval: (f64, f64), seed: u64) -> HermitianMatrix64 {
    random_hermitian::<f64>(dim, Interval64::new(interval.0, interval.1).unwrap(), seed).unwrap()
}

#[test]
fn functional_calculus_homomorphism_on_polynomials() {
    // identity · square = cube and identity · identity = square
    let wide = Interval64::of(-10.0, 10.0);
    let id = resolve_function::<f64>("identity", wide).unwrap();
    let sq = resolve_function::<f64>("square", wide).unwrap();
    let cube = resolve_function::<f64>("cube", wide).unwrap();
    for trial in 0..200u64 {
        let dim = 1 + (trial % 8) as usize;
        let a = draw(
            dim,
            (-3.0, 3.0),
            derive_subseed(2024, trial, StreamTag::MatrixA),
        );
        let fa = apply_function(&id, &a).unwrap();
        let ga = apply_function(&sq, &a).unwrap();

        let product = fa.sym_product(&ga).unwrap();
        let direct = apply_function(&cube, &a).unwrap();
        let scale = direct.frobenius_norm().max(1.0);
        assert!(
            product.sub(&direct).unwrap().max_norm() <= 1e-9 * scale,
            "homomorphism breach at dim {dim} trial {trial}"
        );

        let square_direct = apply_function(&sq, &a).unwrap();
        let square_product = fa.sym_product(&fa).unwrap();
        assert!(square_product.sub(&square_direct).unwrap().max_norm() <= 1e-9 * scale);
    }
}

#[test]
fn pointwise_domination_transfers_to_loewner_order() {
    // t² ≤ t on [0, 1], so square(A) ≤ identity(A) for spectra in [0, 1]
    let iv = Interval64::of(0.0, 1.0);
    let id = resolve_function::<f64>("identity", iv).unwrap();
    let sq = resolve_function::<f64>("square", iv).unwrap();
    for trial in 0..300u64 {
        let dim = 1 + (trial % 8) as usize;
        let a = draw(
            dim,
            (0.0, 1.0),
            derive_subseed(7, trial, StreamTag::MatrixA),
        );
        let low = apply_function(&sq, &a).unwrap();
        let high = apply_function(&id, &a).unwrap();
        let verdict = loewner_compare(&low, &high, 1e-9).unwrap();
        assert!(
            matches!(verdict.relation, OrderRelation::Leq | OrderRelation::Equal),
            "order property failed at trial {trial}: {:?}",
            verdict
        );
    }
}

#[test]
fn segment_points_keep_spectra_in_the_endpoint_interval() {
    let interval = (-2.0, 3.0);
    for trial in 0..1000u64 {
        let dim = 1 + (trial % 8) as usize;
        let a = draw(dim, interval, derive_subseed(11, trial, StreamTag::MatrixA));
        let b = draw(dim, interval, derive_subseed(11, trial, StreamTag::MatrixB));
        let t = (trial as f64 * 0.37) % 1.0;
        let point = segment_point(&a, &b, t).unwrap();
        let d = spectral_decompose(&point).unwrap();
        let slack = 1e-12 * 5.0;
        assert!(d.min_eigenvalue() >= interval.0 - slack);
        assert!(d.max_eigenvalue() <= interval.1 + slack);
    }
}

#[test]
fn quadratic_form_is_a_rayleigh_quotient() {
    for trial in 0..500u64 {
        let dim = 1 + (trial % 8) as usize;
        let a = draw(
            dim,
            (-5.0, 5.0),
            derive_subseed(13, trial, StreamTag::MatrixA),
        );
        let x =
            random_unit_vector::<f64>(dim, derive_subseed(13, trial, StreamTag::Probe(0))).unwrap();
        let d = spectral_decompose(&a).unwrap();
        let form = quadratic_form(&a, &x).unwrap();
        let pad = 1e-12 * d.spectral_norm().max(1.0);
        assert!(form >= d.min_eigenvalue() - pad && form <= d.max_eigenvalue() + pad);
    }
}

#[test]
fn checker_sides_are_invariant_under_endpoint_swap() {
    let iv = Interval64::of(0.0, 1.0);
    let id = resolve_function::<f64>("identity", iv).unwrap();
    let sq = resolve_function::<f64>("square", iv).unwrap();
    let checker = Checker::default();
    for trial in 0..50u64 {
        let dim = 1 + (trial % 6) as usize;
        let a = draw(
            dim,
            (0.0, 1.0),
            derive_subseed(5, trial, StreamTag::MatrixA),
        );
        let b = draw(
            dim,
            (0.0, 1.0),
            derive_subseed(5, trial, StreamTag::MatrixB),
        );
        let x =
            random_unit_vector::<f64>(dim, derive_subseed(5, trial, StreamTag::Probe(0))).unwrap();
        for (f, g) in [(&id, &sq), (&id, &id), (&sq, &sq)] {
            let ab = checker.check_product_upper(f, g, &a, &b, &x).unwrap();
            let ba = checker.check_product_upper(f, g, &b, &a, &x).unwrap();
            let scale = ab.lhs.abs().max(ab.rhs.abs()).max(1.0);
            assert!((ab.lhs - ba.lhs).abs() <= 1e-10 * scale);
            assert!((ab.rhs - ba.rhs).abs() <= 1e-10 * scale);

            let ab4 = checker.check_midpoint_product(f, g, &a, &b, &x).unwrap();
            let ba4 = checker.check_midpoint_product(f, g, &b, &a, &x).unwrap();
            assert!((ab4.lhs - ba4.lhs).abs() <= 1e-10 * scale);
            assert!((ab4.rhs - ba4.rhs).abs() <= 1e-10 * scale);

            let ab5 = checker.check_cross_product(f, g, &a, &b, &x).unwrap();
            let ba5 = checker.check_cross_product(f, g, &b, &a, &x).unwrap();
            assert!((ab5.lhs - ba5.lhs).abs() <= 1e-10 * scale);
            assert!((ab5.rhs - ba5.rhs).abs() <= 1e-10 * scale);
        }
    }
}

#[test]
fn functional_triple_recomputable_from_parts() {
    let iv = Interval64::of(0.0, 1.0);
    let id = resolve_function::<f64>("identity", iv).unwrap();
    let sq = resolve_function::<f64>("square", iv).unwrap();
    for trial in 0..100u64 {
        let dim = 1 + (trial % 8) as usize;
        let a = draw(
            dim,
            (0.0, 1.0),
            derive_subseed(3, trial, StreamTag::MatrixA),
        );
        let b = draw(
            dim,
            (0.0, 1.0),
            derive_subseed(3, trial, StreamTag::MatrixB),
        );
        let x =
            random_unit_vector::<f64>(dim, derive_subseed(3, trial, StreamTag::Probe(0))).unwrap();
        let triple = hhverify_core::compute_mnp(&id, &sq, &a, &b, &x).unwrap();

        // recompute the parts through the one-operation surface
        let f_ax = quadratic_form(&apply_function(&id, &a).unwrap(), &x).unwrap();
        let g_ax = quadratic_form(&apply_function(&sq, &a).unwrap(), &x).unwrap();
        let f_bx = quadratic_form(&apply_function(&id, &b).unwrap(), &x).unwrap();
        let g_bx = quadratic_form(&apply_function(&sq, &b).unwrap(), &x).unwrap();
        let p_a = quadratic_form(
            &apply_function(&id, &a)
                .unwrap()
                .sym_product(&apply_function(&sq, &a).unwrap())
                .unwrap(),
            &x,
        )
        .unwrap();
        let p_b = quadratic_form(
            &apply_function(&id, &b)
                .unwrap()
                .sym_product(&apply_function(&sq, &b).unwrap())
                .unwrap(),
            &x,
        )
        .unwrap();

        let scale = triple
            .m_value
            .abs()
            .max(triple.n_value.abs())
            .max(triple.p_value.abs())
            .max(1.0);
        assert!((triple.m_value - (f_ax * g_ax + f_bx * g_bx)).abs() <= 1e-12 * scale);
        assert!((triple.n_value - (f_ax * g_bx + f_bx * g_ax)).abs() <= 1e-12 * scale);
        assert!((triple.p_value - (p_a + p_b)).abs() <= 1e-12 * scale);
    }
}

#[test]
fn synchrony_verdicts_match_scalar_products_on_probe_grid() {
    // witness invariant: any returned witness violates the opposite class by
    // more than the threshold
    let iv = Interval64::of(-1.0, 1.0);
    let id = resolve_function::<f64>("identity", iv).unwrap();
    let sq = resolve_function::<f64>("square", iv).unwrap();
    let v = check_synchronous(&id, &sq, iv, 301).unwrap();
    let (t, s) = v.witness_positive.unwrap();
    assert!((id.eval(t) - id.eval(s)) * (sq.eval(t) - sq.eval(s)) > 1e-12);
    let (t, s) = v.witness_negative.unwrap();
    assert!((id.eval(t) - id.eval(s)) * (sq.eval(t) - sq.eval(s)) < -1e-12);
}

#[test]
fn probe_values_agree_with_one_shot_operations() {
    // the shared-table fast path equals the per-operation public surface
    let iv = Interval64::of(0.0, 1.0);
    let id = resolve_function::<f64>("identity", iv).unwrap();
    let sq = resolve_function::<f64>("square", iv).unwrap();
    for trial in 0..25u64 {
        let dim = 1 + (trial % 5) as usize;
        let a = draw(
            dim,
            (0.0, 1.0),
            derive_subseed(17, trial, StreamTag::MatrixA),
        );
        let b = draw(
            dim,
            (0.0, 1.0),
            derive_subseed(17, trial, StreamTag::MatrixB),
        );
        let x =
            random_unit_vector::<f64>(dim, derive_subseed(17, trial, StreamTag::Probe(0))).unwrap();
        let seg = SegmentData::new(&a, &b, hhverify_core::QuadratureSpec::default()).unwrap();
        let pv = probe_values(&id, &sq, &seg, &seg.probe(&x).unwrap()).unwrap();

        let direct = hhverify_core::integrate_scalar_product_form(
            &id,
            &sq,
            &a,
            &b,
            &x,
            hhverify_core::QuadratureSpec::default(),
        )
        .unwrap();
        assert!((pv.int_uv.value - direct.value).abs() <= 1e-13);

        let direct_u = hhverify_core::integrate_scalar_form(
            &id,
            &a,
            &b,
            &x,
            hhverify_core::QuadratureSpec::default(),
        )
        .unwrap();
        assert!((pv.int_u.value - direct_u.value).abs() <= 1e-13);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eigendecomposition_reconstructs_arbitrary_hermitian(
        dim in 1usize..=6,
        raw in proptest::collection::vec(-10.0f64..10.0, 72),
    ) {
        // symmetrized random complex entries
        let entries: Vec<Complex<f64>> = (0..dim * dim)
            .map(|k| Complex::new(raw[2 * k % 72], raw[(2 * k + 1) % 72]))
            .collect();
        let m = HermitianMatrix64::from_symmetrized(dim, entries).unwrap();
        let d = spectral_decompose(&m).unwrap();
        let scale = d.spectral_norm().max(1.0);
        prop_assert!(d.residual() <= 1e-10 * scale);
        prop_assert!(d.orthonormality_defect() <= 1e-10);
        prop_assert!(d.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn rayleigh_bound_under_proptest_probes(
        dim in 1usize..=8,
        seed in any::<u64>(),
    ) {
        let a = draw(dim, (-1.0, 1.0), seed);
        let x = random_unit_vector::<f64>(dim, seed ^ 0xabcdef).unwrap();
        let d = spectral_decompose(&a).unwrap();
        let form = quadratic_form(&a, &x).unwrap();
        prop_assert!(form >= d.min_eigenvalue() - 1e-12);
        prop_assert!(form <= d.max_eigenvalue() + 1e-12);
    }
}

mod support;

#[test]
fn quadrature_dim_one_matches_trapezoid_oracle_on_catalog() {
    // all three integral operations vs the dense scalar oracle, every catalog
    // entry on an interval inside all domains
    let iv = Interval64::of(0.5, 2.0);
    let quad = hhverify_core::QuadratureSpec::default();
    let x = hhverify_core::UnitVector64::basis(1, 0);
    let catalog = hhverify_core::builtin_catalog::<f64>(iv);
    assert!(catalog.len() >= 8);
    for trial in 0..20u64 {
        let a_val = support::draw_scalar(0.5, 2.0, derive_subseed(23, trial, StreamTag::MatrixA));
        let b_val = support::draw_scalar(0.5, 2.0, derive_subseed(23, trial, StreamTag::MatrixB));
        let a = HermitianMatrix64::from_diagonal(&[a_val]);
        let b = HermitianMatrix64::from_diagonal(&[b_val]);
        for f in &catalog {
            let fe = |t: f64| f.eval(t);
            // segment from B to A for the scalar forms
            let want_u = support::trapezoid(|t| fe(t * a_val + (1.0 - t) * b_val));
            let got_u = hhverify_core::integrate_scalar_form(f, &a, &b, &x, quad).unwrap();
            assert!(
                (got_u.value - want_u).abs() <= 1e-8,
                "{}: scalar form {} vs oracle {}",
                f.id,
                got_u.value,
                want_u
            );
            // chain orientation for the operator integral
            let want_op = support::trapezoid(|t| fe((1.0 - t) * a_val + t * b_val));
            let got_op = hhverify_core::integrate_operator_segment(f, &a, &b, quad).unwrap();
            assert!(
                (got_op.value.entry(0, 0).re - want_op).abs() <= 1e-8,
                "{}",
                f.id
            );
            for g in &catalog {
                let ge = |t: f64| g.eval(t);
                let want_uv = support::trapezoid(|t| {
                    fe(t * a_val + (1.0 - t) * b_val) * ge(t * a_val + (1.0 - t) * b_val)
                });
                let got_uv =
                    hhverify_core::integrate_scalar_product_form(f, g, &a, &b, &x, quad).unwrap();
                assert!(
                    (got_uv.value - want_uv).abs() <= 1e-8,
                    "({}, {}): product form {} vs oracle {}",
                    f.id,
                    g.id,
                    got_uv.value,
                    want_uv
                );
            }
        }
    }
}

#[test]
fn gauss_rule_exact_for_polynomial_products_within_degree_budget() {
    // k nodes integrate deg(f) + deg(g) <= 2k - 1 exactly: square x cube is
    // degree 5, within a 3-node rule
    let wide = Interval64::of(-10.0, 10.0);
    let sq = resolve_function::<f64>("square", wide).unwrap();
    let cube = resolve_function::<f64>("cube", wide).unwrap();
    let a = HermitianMatrix64::from_diagonal(&[0.3]);
    let b = HermitianMatrix64::from_diagonal(&[0.9]);
    let x = hhverify_core::UnitVector64::basis(1, 0);
    let spec = hhverify_core::QuadratureSpec::new(1, 3).unwrap();
    let got = hhverify_core::integrate_scalar_product_form(&sq, &cube, &a, &b, &x, spec).unwrap();
    // ∫ s(t)^5 dt with s linear from 0.9 to 0.3: (a^6 - b^6) / (6 (a - b))
    let exact = (0.3f64.powi(6) - 0.9f64.powi(6)) / (6.0 * (0.3 - 0.9));
    let scale = exact.abs().max(1.0);
    assert!(
        (got.value - exact).abs() <= 1e-12 * scale,
        "{} vs {}",
        got.value,
        exact
    );
}
