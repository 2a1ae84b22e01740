// Externally computed reference values keep every digit they were printed with.
#![allow(clippy::excessive_precision)]

use num_complex::Complex64;
use rand_core::{RngCore, SeedableRng};
use starlike_core::catalog::{
    build_catalog, criterion_holds, default_criterion_grid, eval_psi, remark_reductions,
    CatalogError, CriterionSpec, Direction, Expr, Interval, Threshold, ALL, GE0, GT0, LE0, LT0,
    UNIT,
};
use starlike_core::oracle::DiskGrid;
use starlike_core::quotients::{
    reference_zoo, QuotientError, QuotientSource, QuotientTriple, ReferenceFunction,
};
use starlike_core::series::TaylorFunction;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn catalog_entry(id: &str) -> CriterionSpec {
    build_catalog()
        .into_iter()
        .find(|s| s.id == id)
        .unwrap_or_else(|| panic!("{id} missing from catalog"))
}

fn zoo_entry(id: &str) -> ReferenceFunction {
    reference_zoo()
        .into_iter()
        .find(|f| f.id == id)
        .unwrap_or_else(|| panic!("{id} missing from zoo"))
}

fn boundary_triple(rho: f64, tau: f64, xi: f64, eta: f64) -> QuotientTriple {
    QuotientTriple {
        u: c(0.0, rho),
        v: c(0.0, tau),
        w: c(xi, eta),
        at: Complex64::ZERO,
        accuracy_warning: false,
    }
}

#[test]
fn catalog_has_sixty_unique_entries_with_expected_shape() {
    let catalog = build_catalog();
    assert_eq!(catalog.len(), 60);

    let mut ids: Vec<&str> = catalog.iter().map(|s| s.id).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), 60, "criterion ids must be unique");

    let expected_counts = [
        ("T2.1", 4),
        ("T2.2", 4),
        ("T2.3", 4),
        ("T2.4", 4),
        ("T2.5", 4),
        ("T2.6", 4),
        ("T2.7", 8),
        ("T2.8", 2),
        ("T2.9", 2),
        ("T2.10", 2),
        ("T2.11", 4),
        ("T2.12", 4),
        ("T2.13", 4),
        ("T2.14", 6),
        ("T2.15", 4),
    ];
    for (theorem, count) in expected_counts {
        let got = catalog.iter().filter(|s| s.theorem() == theorem).count();
        assert_eq!(got, count, "{theorem} entry count");
    }

    let mut bounded_above: Vec<&str> = catalog
        .iter()
        .filter(|s| s.direction == Direction::Lt)
        .map(|s| s.id)
        .collect();
    bounded_above.sort_unstable();
    assert_eq!(bounded_above, ["T2.15.i", "T2.15.ii", "T2.9.i", "T2.9.ii"]);
}

#[test]
fn parameter_domains_follow_the_theorem_headers() {
    let expected: &[(&str, Interval, Interval)] = &[
        ("T2.1", GE0, GE0),
        ("T2.2", GE0, GE0),
        ("T2.3", GE0, GE0),
        ("T2.4", GT0, GE0),
        ("T2.5", GT0, GE0),
        ("T2.6", GT0, GE0),
        ("T2.7", UNIT, GE0),
        ("T2.8", UNIT, GE0),
        ("T2.9", GT0, GE0),
        ("T2.10", GT0, LE0),
        ("T2.11", LT0, ALL),
        ("T2.12", LE0, GE0),
        ("T2.13", LE0, GE0),
        ("T2.14", LE0, GT0),
        ("T2.15", GT0, GE0),
    ];
    for spec in build_catalog() {
        let (_, alpha, beta) = expected
            .iter()
            .find(|(t, _, _)| *t == spec.theorem())
            .expect("every theorem listed");
        assert_eq!(spec.alpha_domain, *alpha, "{} alpha domain", spec.id);
        assert_eq!(spec.beta_domain, *beta, "{} beta domain", spec.id);
    }
}

#[test]
fn formulas_render_compactly() {
    let cases = [
        ("T2.1.i", "Re(Q_ST*(alpha*Q_CV+beta*Q_SD))>-alpha/2"),
        (
            "T2.3.ii",
            "Re(Q_CV*(alpha*Q_CV+(1-alpha)*Q_CV^2+beta*Q_SD))>0",
        ),
        ("T2.4.i", "Re(beta*Q_ST*Q_SD+alpha*(1+Q_CV)^2)>alpha"),
        ("T2.7.i", "Re(alpha*Q_ST+(1-alpha)*Q_ST^2+beta*Q_CV*Q_SD)>0"),
        (
            "T2.8.i",
            "Re(Q_CV*(alpha*Q_ST+(1-alpha)*Q_CV+beta*Q_SD))>-alpha/2",
        ),
        ("T2.9.i", "Re(alpha*Q_CV/Q_ST+beta*Q_SD/Q_ST)<3*alpha/2"),
        ("T2.10.i", "Re(alpha*Q_ST/Q_CV+beta*Q_SD/Q_CV)>2*alpha/3"),
        ("T2.12.i", "Re(alpha*Q_SD/Q_ST+Q_ST*(1+beta*Q_ST))>0"),
        ("T2.13.iv", "Re(alpha*Q_SD/Q_CV+Q_ST*(1+beta*Q_CV))>-beta/2"),
        ("T2.14.i", "Re(alpha*Q_SD/Q_ST+beta*Q_ST*Q_CV)>-beta/2"),
        ("T2.15.i", "Re(alpha*Q_CV/Q_ST-beta*Q_CV*Q_SD)<3*alpha/2"),
    ];
    for (id, formula) in cases {
        assert_eq!(catalog_entry(id).formula(), formula, "{id}");
    }
}

#[test]
fn threshold_values_track_the_parameters() {
    assert_eq!(Threshold::NegHalfAlpha.value(3.0, 7.0), -1.5);
    assert_eq!(Threshold::Zero.value(3.0, 7.0), 0.0);
    assert_eq!(Threshold::Alpha.value(3.0, 7.0), 3.0);
    assert_eq!(Threshold::ThreeHalvesAlpha.value(3.0, 7.0), 4.5);
    assert_eq!(Threshold::TwoThirdsAlpha.value(3.0, 7.0), 2.0);
    assert_eq!(Threshold::NegHalfBeta.value(3.0, 7.0), -3.5);
    assert_eq!(Threshold::TwoThirdsAlpha.render(), "2*alpha/3");
}

/// Re psi at the boundary probe (u, v, w) = (i rho, i tau, xi + i eta),
/// derived by hand per entry. This table is the independent check that each
/// expression tree encodes its intended criterion: a transcription slip in
/// either the tree or the table would break the match.
fn boundary_re(id: &str, rho: f64, tau: f64, xi: f64, eta: f64, a: f64, b: f64) -> f64 {
    let _ = xi;
    match id {
        "T2.1.i" => -a * rho * tau - b * rho * eta,
        "T2.1.ii" => -a * rho * tau - b * tau * eta,
        "T2.1.iii" => -a * rho * rho - b * rho * eta,
        "T2.1.iv" => -a * tau * tau - b * tau * eta,
        "T2.2.i" => -a * rho * tau - b * tau * eta,
        "T2.2.ii" => -a * rho * tau - b * rho * eta,
        "T2.2.iii" => -a * rho * tau - b * rho * eta,
        "T2.2.iv" => -a * rho * tau - b * tau * eta,
        "T2.3.i" => -a * rho * rho - b * rho * eta,
        "T2.3.ii" => -a * tau * tau - b * tau * eta,
        "T2.3.iii" => -a * rho * rho - b * rho * eta,
        "T2.3.iv" => -a * tau * tau - b * tau * eta,
        "T2.4.i" => a * (1.0 - tau * tau) - b * rho * eta,
        "T2.4.ii" => a * (1.0 - rho * rho) - b * rho * eta,
        "T2.4.iii" => a * (1.0 - tau * tau) - b * tau * eta,
        "T2.4.iv" => a * (1.0 - rho * rho) - b * tau * eta,
        "T2.5.i" => -a * rho * tau - b * rho * eta,
        "T2.5.ii" => -a * rho * tau - b * tau * eta,
        "T2.5.iii" => -a * rho * tau - b * tau * eta,
        "T2.5.iv" => -a * rho * tau - b * rho * eta,
        "T2.6.i" => -a * rho * rho - b * rho * eta,
        "T2.6.ii" => -a * rho * rho - b * tau * eta,
        "T2.6.iii" => -a * tau * tau - b * rho * eta,
        "T2.6.iv" => -a * tau * tau - b * tau * eta,
        "T2.7.i" => -(1.0 - a) * rho * rho - b * tau * eta,
        "T2.7.ii" => -(1.0 - a) * rho * rho - b * rho * eta,
        "T2.7.iii" => -(1.0 - a) * tau * tau - b * rho * eta,
        "T2.7.iv" => -(1.0 - a) * rho * rho - b * rho * eta,
        "T2.7.v" => -(1.0 - a) * tau * tau - b * tau * eta,
        "T2.7.vi" => -(1.0 - a) * rho * rho - b * tau * eta,
        "T2.7.vii" => -(1.0 - a) * tau * tau - b * tau * eta,
        "T2.7.viii" => -(1.0 - a) * tau * tau - b * rho * eta,
        "T2.8.i" => -a * rho * tau - (1.0 - a) * tau * tau - b * tau * eta,
        "T2.8.ii" => -a * rho * tau - (1.0 - a) * rho * rho - b * rho * eta,
        "T2.9.i" => a * tau / rho + b * eta / rho,
        "T2.9.ii" => a * tau / rho + b * eta / tau,
        "T2.10.i" => a * rho / tau + b * eta / tau,
        "T2.10.ii" => a * rho / tau + b * eta / rho,
        "T2.11.i" => a * eta / rho,
        "T2.11.ii" => a * eta / tau,
        "T2.11.iii" => a * eta / rho,
        "T2.11.iv" => a * eta / tau,
        "T2.12.i" => a * eta / rho - b * rho * rho,
        "T2.12.ii" => a * eta / tau - b * rho * rho,
        "T2.12.iii" => a * eta / tau - b * tau * tau,
        "T2.12.iv" => a * eta / rho - b * tau * tau,
        "T2.13.i" => a * eta / rho - b * rho * tau,
        "T2.13.ii" => a * eta / rho - b * rho * tau,
        "T2.13.iii" => a * eta / tau - b * rho * tau,
        "T2.13.iv" => a * eta / tau - b * rho * tau,
        "T2.14.i" => a * eta / rho - b * rho * tau,
        "T2.14.ii" => a * eta / tau - b * rho * tau,
        "T2.14.iii" => a * eta / tau - b * rho * rho,
        "T2.14.iv" => a * eta / rho - b * tau * tau,
        "T2.14.v" => a * eta / rho - b * rho * rho,
        "T2.14.vi" => a * eta / tau - b * tau * tau,
        "T2.15.i" => a * tau / rho + b * tau * eta,
        "T2.15.ii" => a * tau / rho + b * rho * eta,
        "T2.15.iii" => a * rho / tau - b * tau * eta,
        "T2.15.iv" => a * rho / tau - b * rho * eta,
        other => panic!("no boundary formula for {other}"),
    }
}

#[test]
fn boundary_evaluations_match_hand_derived_real_parts() {
    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(0x60);
    let mut unif = move || (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    for spec in build_catalog() {
        let (alphas, _) = spec.alpha_domain.sweep(3, 4.0);
        let (betas, _) = spec.beta_domain.sweep(3, 4.0);
        for &alpha in &alphas {
            for &beta in &betas {
                for _ in 0..4 {
                    let sign = |x: f64| if x < 0.5 { -1.0 } else { 1.0 };
                    let rho = (0.3 + 2.7 * unif()) * sign(unif());
                    let tau = (0.3 + 2.7 * unif()) * sign(unif());
                    let xi = 6.0 * unif() - 3.0;
                    let eta = 6.0 * unif() - 3.0;
                    let q = boundary_triple(rho, tau, xi, eta);
                    let got = eval_psi(&spec, &q, alpha, beta)
                        .unwrap_or_else(|e| panic!("{}: {e}", spec.id));
                    let want = boundary_re(spec.id, rho, tau, xi, eta, alpha, beta);
                    assert!(
                        (got.re - want).abs() < 1e-10,
                        "{} at rho={rho} tau={tau} xi={xi} eta={eta} alpha={alpha} beta={beta}: \
                         got {}, want {want}",
                        spec.id,
                        got.re,
                    );
                }
            }
        }
    }
}

#[test]
fn known_evaluations_match_closed_arithmetic() {
    // u*(alpha*v + beta*w) at (1, 1, 0) is 1 for any alpha + beta = 1 split.
    let t21i = catalog_entry("T2.1.i");
    let q = QuotientTriple {
        u: c(1.0, 0.0),
        v: c(1.0, 0.0),
        w: Complex64::ZERO,
        at: Complex64::ZERO,
        accuracy_warning: false,
    };
    let got = eval_psi(&t21i, &q, 1.0, 1.0).unwrap();
    assert!((got - c(1.0, 0.0)).norm() < 1e-15);

    // The classical map z/(1-z)^2 at z = 1/2 has the triple (3, 13/3, -8/3).
    let koebe = zoo_entry("koebe");
    let q = koebe.triple_at(c(0.5, 0.0)).unwrap();
    let product = eval_psi(&t21i, &q, 1.0, 0.0).unwrap();
    assert!((product - c(13.0, 0.0)).norm() < 1e-12, "got {product}");
    let ratio = eval_psi(&catalog_entry("T2.9.i"), &q, 1.0, 0.0).unwrap();
    assert!((ratio - c(13.0 / 9.0, 0.0)).norm() < 1e-13, "got {ratio}");
}

#[test]
fn out_of_domain_parameters_are_rejected_with_the_requirement() {
    let t21i = catalog_entry("T2.1.i");
    let err = t21i.check_params(-1.0, 0.0).unwrap_err();
    match &err {
        CatalogError::ParamOutOfDomain {
            param,
            value,
            requirement,
        } => {
            assert_eq!(*param, "alpha");
            assert_eq!(*value, -1.0);
            assert!(
                requirement.contains(">= 0"),
                "requirement was {requirement}"
            );
        }
        other => panic!("expected domain error, got {other:?}"),
    }
    assert!(format!("{err}").contains("alpha = -1"));

    // Strictly positive domain excludes the endpoint.
    let t24i = catalog_entry("T2.4.i");
    assert!(matches!(
        t24i.check_params(0.0, 1.0),
        Err(CatalogError::ParamOutOfDomain { param: "alpha", .. })
    ));
    assert!(t24i.check_params(1e-9, 0.0).is_ok());

    // Unit interval includes both endpoints, rejects outside.
    let t27i = catalog_entry("T2.7.i");
    assert!(t27i.check_params(0.0, 0.0).is_ok());
    assert!(t27i.check_params(1.0, 0.0).is_ok());
    assert!(matches!(
        t27i.check_params(1.5, 0.0),
        Err(CatalogError::ParamOutOfDomain { param: "alpha", .. })
    ));

    // beta side is checked too.
    let t214i = catalog_entry("T2.14.i");
    assert!(matches!(
        t214i.check_params(-1.0, 0.0),
        Err(CatalogError::ParamOutOfDomain { param: "beta", .. })
    ));
}

#[test]
fn ratio_at_near_zero_denominator_is_reported() {
    let t29i = catalog_entry("T2.9.i");
    let q = QuotientTriple {
        u: c(1e-13, 0.0),
        v: c(1.0, 0.0),
        w: Complex64::ZERO,
        at: Complex64::ZERO,
        accuracy_warning: false,
    };
    match eval_psi(&t29i, &q, 1.0, 0.0) {
        Err(CatalogError::RatioAtZero { den, magnitude }) => {
            assert_eq!(den, "Q_ST");
            assert!(magnitude < 1e-12);
        }
        other => panic!("expected ratio error, got {other:?}"),
    }
}

#[test]
fn interval_sweeps_respect_endpoints_and_truncation() {
    let (points, truncated) = UNIT.sweep(5, 4.0);
    assert!(!truncated);
    assert_eq!(points, vec![0.0, 0.25, 0.5, 0.75, 1.0]);

    let (points, truncated) = GE0.sweep(4, 4.0);
    assert!(truncated, "infinite end must be flagged");
    assert_eq!(points[0], 0.0);
    assert_eq!(points[3], 4.0);

    let (points, truncated) = GT0.sweep(4, 4.0);
    assert!(truncated);
    assert!(points[0] > 0.0, "open endpoint stays interior");

    let (points, _) = LT0.sweep(4, 4.0);
    assert!(points[3] < 0.0, "open endpoint stays interior");
    assert_eq!(points[0], -4.0);

    let (points, truncated) = ALL.sweep(3, 4.0);
    assert!(truncated);
    assert_eq!(points, vec![-4.0, 0.0, 4.0]);
}

#[test]
fn identity_map_satisfies_the_product_criterion() {
    let spec = catalog_entry("T2.1.i");
    let identity = TaylorFunction::identity(8);
    let grid = default_criterion_grid();
    let report = criterion_holds(&spec, &identity, 1.0, 1.0, &grid).unwrap();
    assert!(report.passed);
    assert_eq!(report.criterion_id, "T2.1.i");
    assert_eq!(report.threshold, -0.5);
    assert_eq!(report.samples, 64 * 256);
    assert_eq!(report.skipped, 0);
    // u = v = 1 and w = 0 everywhere, so Re psi = 1 and the slack is 3/2.
    assert!(
        (report.margin - 1.5).abs() < 1e-12,
        "margin {}",
        report.margin
    );
    assert!((report.extremal - 1.0).abs() < 1e-12);
}

#[test]
fn identity_map_satisfies_the_ratio_criterion() {
    let spec = catalog_entry("T2.9.i");
    let identity = TaylorFunction::identity(8);
    let report = criterion_holds(&spec, &identity, 1.0, 0.0, &default_criterion_grid()).unwrap();
    assert!(report.passed);
    // Re(Q_CV/Q_ST) = 1 < 3/2 everywhere.
    assert!(
        (report.margin - 0.5).abs() < 1e-12,
        "margin {}",
        report.margin
    );
}

#[test]
fn strong_quadratic_perturbation_fails_the_square_criterion() {
    // z + 0.6 z^2: min Re(Q_ST^2) over the stock grid, frozen from an exact
    // closed-form scan.
    let spec = catalog_entry("T2.1.iii");
    let f = zoo_entry("quad-0.6");
    let report = criterion_holds(&spec, &f, 1.0, 0.0, &default_criterion_grid()).unwrap();
    assert!(!report.passed);
    let frozen = -0.76081728282475115;
    assert!(
        (report.margin - frozen).abs() < 1e-9 * frozen.abs(),
        "margin {} vs frozen {frozen}",
        report.margin,
    );
    assert!((report.arg_extremum.norm() - 0.995).abs() < 1e-12);
    assert!(report.arg_extremum.re < 0.0 && report.arg_extremum.im < 0.0);
}

#[test]
fn ratio_criterion_blows_up_near_the_boundary_for_the_extremal_map() {
    // Re(Q_CV/Q_ST) for z/(1-z)^2 diverges to +infinity approaching z = -1
    // off-axis, so the upper-bound criterion fails on the stock grid even
    // though the map is starlike: the implication is one-directional.
    let spec = catalog_entry("T2.9.i");
    let koebe = zoo_entry("koebe");
    let report = criterion_holds(&spec, &koebe, 1.0, 0.0, &default_criterion_grid()).unwrap();
    assert!(!report.passed);
    let frozen = -2931.5991938660875;
    assert!(
        (report.margin - frozen).abs() < 1e-8 * frozen.abs(),
        "margin {} vs frozen {frozen}",
        report.margin,
    );
    assert!((report.arg_extremum.norm() - 0.995).abs() < 1e-12);
    assert!(report.arg_extremum.re < -0.99);
}

#[test]
fn grid_point_on_a_derivative_zero_fails_the_precondition() {
    // f(z) = z + 0.6 z^2 has f'(-5/6) = 0; the 8-angle grid at radius 5/6
    // lands on it at theta = pi.
    let spec = catalog_entry("T2.1.i");
    let f = zoo_entry("quad-0.6");
    let grid = DiskGrid::new(vec![5.0 / 6.0], 8).unwrap();
    match criterion_holds(&spec, &f, 1.0, 0.0, &grid) {
        Err(CatalogError::PreconditionFailed { part, at, .. }) => {
            assert_eq!(part, "f'");
            assert!((at - c(-5.0 / 6.0, 0.0)).norm() < 1e-9);
        }
        other => panic!("expected precondition failure, got {other:?}"),
    }
}

#[test]
fn inapplicable_ratio_points_are_skipped_and_counted() {
    // Q_CV for z + 0.6 z^2 vanishes at z = -1/2.4; the ratio criterion with
    // denominator Q_CV must skip that grid point and use the rest.
    let spec = catalog_entry("T2.9.ii");
    let f = zoo_entry("quad-0.6");
    let grid = DiskGrid::new(vec![1.0 / 2.4], 8).unwrap();
    let report = criterion_holds(&spec, &f, 1.0, 1.0, &grid).unwrap();
    assert_eq!(report.samples, 8);
    assert_eq!(report.skipped, 1);
    assert!(report.margin.is_finite());
}

struct ConstantTriple {
    taylor: TaylorFunction,
    u: Complex64,
}

impl QuotientSource for ConstantTriple {
    fn triple_at(&self, z: Complex64) -> Result<QuotientTriple, QuotientError> {
        Ok(QuotientTriple {
            u: self.u,
            v: c(1.0, 0.0),
            w: Complex64::ZERO,
            at: z,
            accuracy_warning: false,
        })
    }

    fn f_over_z_at(&self, _z: Complex64) -> (Complex64, Complex64) {
        (c(1.0, 0.0), Complex64::ZERO)
    }

    fn f_prime_at(&self, _z: Complex64) -> (Complex64, Complex64) {
        (c(1.0, 0.0), Complex64::ZERO)
    }

    fn taylor(&self) -> &TaylorFunction {
        &self.taylor
    }
}

#[test]
fn a_grid_with_no_applicable_point_is_an_error() {
    let spec = catalog_entry("T2.9.i");
    let degenerate = ConstantTriple {
        taylor: TaylorFunction::identity(4),
        u: Complex64::ZERO,
    };
    let grid = DiskGrid::new(vec![0.5], 8).unwrap();
    match criterion_holds(&spec, &degenerate, 1.0, 0.0, &grid) {
        Err(CatalogError::RatioAtZero { den, .. }) => assert_eq!(den, "Q_ST"),
        other => panic!("expected ratio error, got {other:?}"),
    }
}

#[test]
fn verification_reports_are_deterministic() {
    let spec = catalog_entry("T2.9.i");
    let koebe = zoo_entry("koebe");
    let grid = default_criterion_grid();
    let a = criterion_holds(&spec, &koebe, 1.0, 0.5, &grid).unwrap();
    let b = criterion_holds(&spec, &koebe, 1.0, 0.5, &grid).unwrap();
    assert_eq!(a.margin.to_bits(), b.margin.to_bits());
    assert_eq!(a.extremal.to_bits(), b.extremal.to_bits());
    assert_eq!(a.arg_extremum, b.arg_extremum);
}

#[test]
fn documented_reductions_hold_except_the_flagged_one() {
    let reductions = remark_reductions();
    assert_eq!(reductions.len(), 8);

    let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(0x61);
    let mut unif = move || (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    let mut triples = Vec::new();
    for _ in 0..16 {
        let mut draw = || c(2.0 * unif() + 0.2, 2.0 * unif() - 1.0);
        triples.push((draw(), draw(), draw()));
    }

    for reduction in &reductions {
        let spec = catalog_entry(reduction.criterion_id);
        let mut max_gap = 0.0f64;
        for &(u, v, w) in &triples {
            let full = spec
                .psi
                .eval(u, v, w, reduction.alpha, reduction.beta)
                .unwrap();
            let simple = reduction
                .claimed
                .eval(u, v, w, reduction.alpha, reduction.beta)
                .unwrap();
            max_gap = max_gap.max((full - simple).norm());
        }
        if reduction.matches {
            assert!(
                max_gap < 1e-12,
                "{} claimed reduction drifts by {max_gap}",
                reduction.criterion_id,
            );
        } else {
            assert!(
                max_gap > 1e-3,
                "{} is flagged as a non-match but agrees",
                reduction.criterion_id,
            );
        }
    }

    let flagged: Vec<&str> = reductions
        .iter()
        .filter(|r| !r.matches)
        .map(|r| r.criterion_id)
        .collect();
    assert_eq!(flagged, ["T2.3.iv"]);
}

#[test]
fn the_flagged_reduction_matches_the_factored_form_instead() {
    // What T2.3.iv actually reduces to at alpha = beta = 1.
    let spec = catalog_entry("T2.3.iv");
    let factored = Expr::Product(vec![Expr::VarV, Expr::Sum(vec![Expr::VarV, Expr::VarW])]);
    let probes = [
        (c(0.7, 0.3), c(1.1, -0.4), c(0.2, 0.9)),
        (c(-0.5, 1.2), c(0.8, 0.8), c(-1.0, 0.1)),
    ];
    for (u, v, w) in probes {
        let full = spec.psi.eval(u, v, w, 1.0, 1.0).unwrap();
        let simple = factored.eval(u, v, w, 1.0, 1.0).unwrap();
        assert!((full - simple).norm() < 1e-13);
    }
}
