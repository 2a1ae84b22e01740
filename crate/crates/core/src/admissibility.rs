//! Region-side verification. Every catalog entry is sound because its psi
//! maps a specific set of boundary probes outside the target half-plane:
//! probes (u, v, w) = (i rho, i tau, xi + i eta) with
//!
//!   rho * tau >= (1 + 3 rho^2) / 2   and   rho * eta >= 0.
//!
//! This module samples that region densely, confirms Re psi stays on the
//! forbidden side of each entry's threshold, and measures how tight the
//! threshold is along the extremal face.

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::catalog::{CatalogError, CriterionSpec, Direction, VerificationReport};
use crate::quotients::QuotientTriple;

/// Slack allowed when checking Re psi against the threshold: the extremal
/// face often attains equality exactly, and probe construction rounds.
pub const DEFAULT_ADMISSIBILITY_TOL: f64 = 1e-9;

/// Resolution of the extremal-face sweep in [`boundary_supremum`].
pub const BOUNDARY_SWEEP_POINTS: usize = 4096;

/// One probe in the verification region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdmissiblePoint {
    pub rho: f64,
    pub tau: f64,
    pub xi: f64,
    pub eta: f64,
}

impl AdmissiblePoint {
    /// Region membership, with 1e-12 relative slack for the rounding in
    /// constructed tau values.
    pub fn satisfies_constraints(&self) -> bool {
        let bound = 0.5 * (1.0 + 3.0 * self.rho * self.rho);
        let tol = 1e-12 * bound;
        self.rho * self.tau >= bound - tol && self.rho * self.eta >= 0.0
    }

    /// The quotient values this probe stands for.
    pub fn probe(&self) -> QuotientTriple {
        QuotientTriple {
            u: Complex64::new(0.0, self.rho),
            v: Complex64::new(0.0, self.tau),
            w: Complex64::new(self.xi, self.eta),
            at: Complex64::ZERO,
            accuracy_warning: false,
        }
    }
}

/// tau on the slack-s surface over rho. s = 1 is the region boundary; the
/// multiplication by s is exact there, so face sweeps and sampler points
/// agree bit for bit.
fn slack_tau(rho: f64, s: f64) -> f64 {
    s * (1.0 + 3.0 * rho * rho) / (2.0 * rho)
}

fn geometric_at(lo: f64, hi: f64, count: usize, index: usize) -> f64 {
    if count == 1 {
        hi
    } else {
        lo * Float::powf(hi / lo, index as f64 / (count - 1) as f64)
    }
}

fn linear_at(lo: f64, hi: f64, count: usize, index: usize) -> f64 {
    if count == 1 {
        lo
    } else {
        lo + (hi - lo) * index as f64 / (count - 1) as f64
    }
}

/// Deterministic product grid over the region, built so every point
/// satisfies the constraints by construction rather than by filtering:
/// rho geometric, the slack factor s >= 1 (tau = s times the boundary
/// value) linear, eta linear from 0, xi linear symmetric about 0. The
/// negative branch mirrors (rho, tau, eta) -> (-rho, -tau, -eta) with xi
/// unchanged, covering the region's second component.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionSampler {
    pub rho_min: f64,
    pub rho_max: f64,
    pub rho_count: usize,
    pub slack_max: f64,
    pub slack_count: usize,
    pub eta_max: f64,
    pub eta_count: usize,
    pub xi_max: f64,
    pub xi_count: usize,
    pub include_negative_branch: bool,
}

impl Default for RegionSampler {
    fn default() -> Self {
        RegionSampler {
            rho_min: 1e-3,
            rho_max: 100.0,
            rho_count: 64,
            slack_max: 10.0,
            slack_count: 16,
            eta_max: 100.0,
            eta_count: 17,
            xi_max: 1.0,
            xi_count: 3,
            include_negative_branch: true,
        }
    }
}

impl RegionSampler {
    fn assert_valid(&self) {
        assert!(
            self.rho_count >= 1
                && self.slack_count >= 1
                && self.eta_count >= 1
                && self.xi_count >= 1,
            "every sampler axis needs at least one sample"
        );
        assert!(
            self.rho_min > 0.0 && self.rho_max >= self.rho_min,
            "rho range must be positive and ordered"
        );
        assert!(
            self.slack_max >= 1.0,
            "slack scales the constraint boundary, so it starts at 1"
        );
        assert!(self.eta_max >= 0.0, "eta spans the nonnegative half-axis");
        assert!(self.xi_max >= 0.0, "xi spans a symmetric range about zero");
    }

    fn branches(&self) -> usize {
        if self.include_negative_branch {
            2
        } else {
            1
        }
    }

    pub fn len(&self) -> usize {
        self.assert_valid();
        self.rho_count * self.slack_count * self.eta_count * self.xi_count * self.branches()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Probe at a flat index; axis order rho, slack, eta, xi, branch with
    /// branch fastest.
    pub fn point_at(&self, index: usize) -> AdmissiblePoint {
        self.assert_valid();
        let mut rest = index;
        let negative = rest % self.branches() == 1;
        rest /= self.branches();
        let i_xi = rest % self.xi_count;
        rest /= self.xi_count;
        let i_eta = rest % self.eta_count;
        rest /= self.eta_count;
        let i_s = rest % self.slack_count;
        rest /= self.slack_count;
        assert!(rest < self.rho_count, "sampler index out of range");

        let rho = geometric_at(self.rho_min, self.rho_max, self.rho_count, rest);
        let s = linear_at(1.0, self.slack_max, self.slack_count, i_s);
        let eta = linear_at(0.0, self.eta_max, self.eta_count, i_eta);
        let xi = linear_at(-self.xi_max, self.xi_max, self.xi_count, i_xi);
        let tau = slack_tau(rho, s);
        if negative {
            AdmissiblePoint {
                rho: -rho,
                tau: -tau,
                xi,
                eta: -eta,
            }
        } else {
            AdmissiblePoint { rho, tau, xi, eta }
        }
    }

    pub fn sample_region(&self) -> Vec<AdmissiblePoint> {
        (0..self.len()).map(|i| self.point_at(i)).collect()
    }
}

/// Confirms the region inequality for one entry at fixed parameters: Re psi
/// must stay outside the open half-plane the criterion targets, i.e. at or
/// below the threshold for GT entries and at or above it for LT entries,
/// up to `tol` at every sampled probe.
///
/// The report's margin is the worst slack (threshold minus max for GT, min
/// minus threshold for LT); `passed` allows `-tol` because the extremal
/// face attains equality. A ratio denominator vanishing here is a
/// misconfigured sampler (rho or tau underflowed), reported as an error
/// rather than a skip.
pub fn verify_admissibility(
    spec: &CriterionSpec,
    alpha: f64,
    beta: f64,
    sampler: &RegionSampler,
    tol: f64,
) -> Result<VerificationReport<AdmissiblePoint>, CatalogError> {
    spec.check_params(alpha, beta)?;
    let t = spec.threshold.value(alpha, beta);
    let samples = sampler.len();
    let mut worst = f64::INFINITY;
    let mut worst_re = f64::NAN;
    let mut arg = AdmissiblePoint {
        rho: 0.0,
        tau: 0.0,
        xi: 0.0,
        eta: 0.0,
    };
    for index in 0..samples {
        let point = sampler.point_at(index);
        let q = point.probe();
        let value = spec.psi.eval(q.u, q.v, q.w, alpha, beta)?;
        let margin = match spec.direction {
            Direction::Gt => t - value.re,
            Direction::Lt => value.re - t,
        };
        if margin < worst {
            worst = margin;
            worst_re = value.re;
            arg = point;
        }
    }
    Ok(VerificationReport {
        criterion_id: String::from(spec.id),
        alpha,
        beta,
        threshold: t,
        extremal: worst_re,
        margin: worst,
        arg_extremum: arg,
        samples,
        skipped: 0,
        passed: worst >= -tol,
    })
}

/// Supremum of Re psi along the extremal face (slack 1, eta = 0, xi = 0),
/// swept geometrically in rho over the sampler's range. For GT entries this
/// approaches the threshold as rho heads to the relevant extreme, which is
/// how tight the constant is; LT entries attain their extreme on the same
/// face as an infimum, so they are rejected here.
pub fn boundary_supremum(
    spec: &CriterionSpec,
    alpha: f64,
    beta: f64,
    sampler: &RegionSampler,
) -> Result<f64, CatalogError> {
    if spec.direction == Direction::Lt {
        return Err(CatalogError::GtOnly {
            id: String::from(spec.id),
        });
    }
    spec.check_params(alpha, beta)?;
    sampler.assert_valid();
    let mut sup = f64::NEG_INFINITY;
    for index in 0..BOUNDARY_SWEEP_POINTS {
        let rho = geometric_at(
            sampler.rho_min,
            sampler.rho_max,
            BOUNDARY_SWEEP_POINTS,
            index,
        );
        let tau = slack_tau(rho, 1.0);
        let signs: &[f64] = if sampler.include_negative_branch {
            &[1.0, -1.0]
        } else {
            &[1.0]
        };
        for &sign in signs {
            let value = spec.psi.eval(
                Complex64::new(0.0, sign * rho),
                Complex64::new(0.0, sign * tau),
                Complex64::ZERO,
                alpha,
                beta,
            )?;
            if value.re > sup {
                sup = value.re;
            }
        }
    }
    Ok(sup)
}
