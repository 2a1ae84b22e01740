use starlike_core::admissibility::{
    boundary_supremum, verify_admissibility, AdmissiblePoint, RegionSampler,
    DEFAULT_ADMISSIBILITY_TOL,
};
use starlike_core::catalog::{
    build_catalog, CatalogError, CriterionSpec, Direction, Expr, Threshold, GE0,
};

fn catalog_entry(id: &str) -> CriterionSpec {
    build_catalog()
        .into_iter()
        .find(|s| s.id == id)
        .unwrap_or_else(|| panic!("{id} missing from catalog"))
}

/// Small sampler for catalog-wide scans: 16 * 4 * 5 * 3 * 2 = 1920 probes.
fn coarse_sampler() -> RegionSampler {
    RegionSampler {
        rho_count: 16,
        slack_count: 4,
        eta_count: 5,
        xi_count: 3,
        ..RegionSampler::default()
    }
}

#[test]
fn default_sampler_has_the_documented_shape() {
    let sampler = RegionSampler::default();
    assert_eq!(sampler.len(), 64 * 16 * 17 * 3 * 2);
    assert!(sampler.len() >= 100_000);
    assert!(!sampler.is_empty());

    // First probe: smallest rho on the boundary face, eta 0, xi at -xi_max.
    let first = sampler.point_at(0);
    assert_eq!(first.rho, 1e-3);
    let tau = (1.0 + 3.0 * 1e-3 * 1e-3) / (2.0 * 1e-3);
    assert!((first.tau - tau).abs() < 1e-12 * tau);
    assert_eq!(first.eta, 0.0);
    assert_eq!(first.xi, -1.0);

    // Last probe: largest everything on the mirrored branch.
    let last = sampler.point_at(sampler.len() - 1);
    assert!((last.rho + 100.0).abs() < 1e-9);
    assert!(last.tau < 0.0);
    assert_eq!(last.eta, -100.0);
    assert_eq!(last.xi, 1.0);
}

#[test]
fn every_sampled_probe_satisfies_the_region_constraints() {
    let sampler = RegionSampler::default();
    for point in sampler.sample_region() {
        assert!(
            point.satisfies_constraints(),
            "probe out of region: {point:?}"
        );
    }
}

#[test]
fn probe_construction_spot_checks() {
    // rho = 1 on the boundary face gives tau = exactly 2.
    let sampler = RegionSampler {
        rho_min: 1.0,
        ..RegionSampler::default()
    };
    // Index layout: branch fastest, then xi; xi index 1 is 0 of {-1, 0, 1}.
    let point = sampler.point_at(2);
    assert_eq!(
        point,
        AdmissiblePoint {
            rho: 1.0,
            tau: 2.0,
            xi: 0.0,
            eta: 0.0,
        }
    );

    // rho = 0.1 gives tau = 1.03 / 0.2 = 5.15.
    let sampler = RegionSampler {
        rho_min: 0.1,
        ..RegionSampler::default()
    };
    let point = sampler.point_at(0);
    assert_eq!(point.rho, 0.1);
    assert!((point.tau - 5.15).abs() < 1e-12);
}

#[test]
fn negative_branch_mirrors_the_positive_one() {
    let sampler = RegionSampler::default();
    for base in [0, 17 * 3 * 2 * 5, 12345] {
        let index = (base / 2) * 2;
        let plus = sampler.point_at(index);
        let minus = sampler.point_at(index + 1);
        assert_eq!(minus.rho, -plus.rho);
        assert_eq!(minus.tau, -plus.tau);
        assert_eq!(minus.eta, -plus.eta);
        assert_eq!(minus.xi, plus.xi);
        assert!(minus.satisfies_constraints());
    }
}

#[test]
fn known_probe_evaluation() {
    // At (rho, tau, xi, eta) = (1, 2, 0, 3) the first ratio criterion with
    // alpha = beta = 1 gives alpha*tau/rho + beta*eta/rho = 2 + 3 = 5.
    let spec = catalog_entry("T2.9.i");
    let q = AdmissiblePoint {
        rho: 1.0,
        tau: 2.0,
        xi: 0.0,
        eta: 3.0,
    }
    .probe();
    let value = spec.psi.eval(q.u, q.v, q.w, 1.0, 1.0).unwrap();
    assert!((value.re - 5.0).abs() < 1e-14);
}

#[test]
fn re_psi_ignores_xi_and_is_branch_symmetric() {
    let rho: f64 = 0.75;
    let tau = 2.0 * (1.0 + 3.0 * rho * rho) / (2.0 * rho);
    let eta = 1.5;
    for spec in build_catalog() {
        let (alphas, _) = spec.alpha_domain.sweep(2, 4.0);
        let (betas, _) = spec.beta_domain.sweep(2, 4.0);
        let alpha = alphas[alphas.len() - 1];
        let beta = betas[betas.len() - 1];
        let at = |p: AdmissiblePoint| {
            let q = p.probe();
            spec.psi.eval(q.u, q.v, q.w, alpha, beta).unwrap().re
        };
        let base = at(AdmissiblePoint {
            rho,
            tau,
            xi: -1.0,
            eta,
        });
        let shifted = at(AdmissiblePoint {
            rho,
            tau,
            xi: 1.0,
            eta,
        });
        let mirrored = at(AdmissiblePoint {
            rho: -rho,
            tau: -tau,
            xi: -1.0,
            eta: -eta,
        });
        assert!(
            (base - shifted).abs() <= 1e-12 * base.abs().max(1.0),
            "{}: xi moved Re psi from {base} to {shifted}",
            spec.id,
        );
        assert!(
            (base - mirrored).abs() <= 1e-12 * base.abs().max(1.0),
            "{}: branch flip moved Re psi from {base} to {mirrored}",
            spec.id,
        );
    }
}

#[test]
fn every_catalog_entry_is_admissible_on_a_coarse_region() {
    let sampler = coarse_sampler();
    for spec in build_catalog() {
        let (alphas, _) = spec.alpha_domain.sweep(3, 4.0);
        let (betas, _) = spec.beta_domain.sweep(3, 4.0);
        for &alpha in &alphas {
            for &beta in &betas {
                let report =
                    verify_admissibility(&spec, alpha, beta, &sampler, DEFAULT_ADMISSIBILITY_TOL)
                        .unwrap_or_else(|e| panic!("{} at ({alpha}, {beta}): {e}", spec.id));
                assert!(
                    report.passed,
                    "{} at ({alpha}, {beta}): margin {}, worst Re {} at {:?}",
                    spec.id, report.margin, report.extremal, report.arg_extremum,
                );
            }
        }
    }
}

#[test]
fn selected_entries_pass_on_the_full_default_region() {
    let sampler = RegionSampler::default();
    for (id, alpha, beta) in [
        ("T2.1.i", 1.0, 1.0),
        ("T2.4.ii", 2.0, 0.0),
        ("T2.9.i", 1.0, 1.0),
        ("T2.13.iv", -2.0, 3.0),
    ] {
        let spec = catalog_entry(id);
        let report =
            verify_admissibility(&spec, alpha, beta, &sampler, DEFAULT_ADMISSIBILITY_TOL).unwrap();
        assert!(report.passed, "{id}: margin {}", report.margin);
        assert_eq!(report.samples, 104_448);
        assert_eq!(report.skipped, 0);
    }
}

#[test]
fn the_sign_flipped_control_fails() {
    // Negating the product criterion makes Re psi = +rho*tau on the probes,
    // which charges past any lower threshold; a verifier that cannot fail
    // this would be vacuous.
    let control = CriterionSpec {
        id: "control.negated-product",
        psi: Expr::Product(vec![Expr::Const(-1, 1), Expr::VarU, Expr::VarV]),
        threshold: Threshold::NegHalfAlpha,
        direction: Direction::Gt,
        alpha_domain: GE0,
        beta_domain: GE0,
    };
    let report = verify_admissibility(
        &control,
        1.0,
        0.0,
        &RegionSampler::default(),
        DEFAULT_ADMISSIBILITY_TOL,
    )
    .unwrap();
    assert!(!report.passed);
    assert!(report.margin < -1.0, "margin {}", report.margin);
}

#[test]
fn product_criterion_threshold_is_tight() {
    // sup Re psi on the extremal face is -(1 + 3 rho^2)/2 at the smallest
    // rho: within 1.5e-6 of the threshold -1/2 for rho_min = 1e-3.
    let spec = catalog_entry("T2.1.i");
    let sup = boundary_supremum(&spec, 1.0, 0.0, &RegionSampler::default()).unwrap();
    assert!((sup + 0.5000015).abs() < 1e-12, "sup {sup}");
    assert!((sup + 0.5).abs() < 1e-3);
}

#[test]
fn ratio_criterion_threshold_is_tight() {
    // sup Re(Q_ST/Q_CV) on the face is 2 rho^2 / (1 + 3 rho^2), increasing
    // toward 2/3; the sweep attains it at rho_max.
    let spec = catalog_entry("T2.10.i");
    let sup = boundary_supremum(&spec, 1.0, 0.0, &RegionSampler::default()).unwrap();
    let expected = 20_000.0 / 30_001.0;
    assert!((sup - expected).abs() < 1e-12 * expected, "sup {sup}");
    assert!((sup - 2.0 / 3.0).abs() < 5e-3);

    let narrow = RegionSampler {
        rho_max: 10.0,
        ..RegionSampler::default()
    };
    let sup = boundary_supremum(&spec, 1.0, 0.0, &narrow).unwrap();
    let expected = 200.0 / 301.0;
    assert!((sup - expected).abs() < 1e-12 * expected, "sup {sup}");
}

#[test]
fn upper_bounded_entries_are_rejected_by_the_supremum_sweep() {
    let spec = catalog_entry("T2.9.i");
    match boundary_supremum(&spec, 1.0, 0.0, &RegionSampler::default()) {
        Err(CatalogError::GtOnly { id }) => assert_eq!(id, "T2.9.i"),
        other => panic!("expected GT-only rejection, got {other:?}"),
    }
}

#[test]
fn out_of_domain_parameters_are_rejected() {
    let spec = catalog_entry("T2.10.i");
    assert!(matches!(
        verify_admissibility(
            &spec,
            1.0,
            0.5,
            &coarse_sampler(),
            DEFAULT_ADMISSIBILITY_TOL
        ),
        Err(CatalogError::ParamOutOfDomain { param: "beta", .. })
    ));
}

#[test]
fn an_underflowing_sampler_surfaces_as_a_ratio_error() {
    let sampler = RegionSampler {
        rho_min: 1e-15,
        rho_max: 1e-13,
        ..RegionSampler::default()
    };
    match verify_admissibility(
        &catalog_entry("T2.9.i"),
        1.0,
        0.0,
        &sampler,
        DEFAULT_ADMISSIBILITY_TOL,
    ) {
        Err(CatalogError::RatioAtZero { den, .. }) => assert_eq!(den, "Q_ST"),
        other => panic!("expected ratio error, got {other:?}"),
    }
}

#[test]
fn region_reports_are_deterministic() {
    let spec = catalog_entry("T2.13.iv");
    let sampler = coarse_sampler();
    let a = verify_admissibility(&spec, -1.0, 2.0, &sampler, DEFAULT_ADMISSIBILITY_TOL).unwrap();
    let b = verify_admissibility(&spec, -1.0, 2.0, &sampler, DEFAULT_ADMISSIBILITY_TOL).unwrap();
    assert_eq!(a.margin.to_bits(), b.margin.to_bits());
    assert_eq!(a.extremal.to_bits(), b.extremal.to_bits());
    assert_eq!(a.arg_extremum, b.arg_extremum);
}
