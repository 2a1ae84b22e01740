//! The three disk quotients of a normalized analytic function.
//!
//! For f analytic on the unit disk with f(0) = 0 and f'(0) = 1:
//!
//! ```text
//! Q_ST = z f'/f      Q_CV = 1 + z f''/f'      Q_SD = z^2 {f, z}
//! ```
//!
//! where {f, z} = (f''/f')' - (f''/f')^2 / 2 is the Schwarzian derivative.
//! Re Q_ST > 0 characterizes starlike functions and Re Q_CV > 0 convex ones;
//! Q_SD vanishes identically exactly for Moebius maps. The normalization
//! forces the limits (1, 1, 0) at z = 0.
//!
//! Two evaluation routes are provided. [`quotient_series`] runs truncated
//! series arithmetic and is cheap to evaluate on dense grids but only
//! trustworthy inside its estimated accuracy radius. The direct route
//! ([`quotient_triple_direct`]) forms the quotients from pointwise values of
//! f, f', f'', f''', which is exact (up to rounding) for polynomial input at
//! any disk point and is therefore what the grid oracles build on.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::series::{ComplexSeries, TaylorFunction, ZeroConstantTerm, DEFAULT_ORDER};

/// Below this modulus of z the exact limits (1, 1, 0) are returned instead of
/// evaluating series: the constant terms are exactly those limits, so the
/// switch avoids 0/0 noise while perturbing values only by O(|z|).
pub const NEAR_ZERO_TOL: f64 = 1e-8;

/// Modulus below which f/z or f' counts as a sampled zero of the
/// nonvanishing precondition.
pub const VANISHING_TOL: f64 = 1e-12;

/// Projected truncation tail allowed before a series-route value is flagged
/// as beyond the trustworthy radius.
pub const ACCURACY_TAIL_TOL: f64 = 1e-9;

/// Truncation order used for reference functions with boundary
/// singularities. Their quotient series have coefficients growing linearly,
/// so the tail at |z| = 0.9 drops below 1e-10 only once the order clears
/// roughly 350; 512 leaves headroom.
pub const ZOO_ORDER: usize = 512;

/// Failure while forming or evaluating quotients.
#[derive(Debug, Clone, PartialEq)]
pub enum QuotientError {
    /// The point lies outside the open unit disk.
    Domain { z: Complex64 },
    /// Series arithmetic hit a non-invertible divisor (corrupted input: a
    /// normalized function always has unit pivots).
    Series(ZeroConstantTerm),
    /// f/z or f' is numerically zero at the point, so the quotients blow up.
    Vanishing {
        at: Complex64,
        part: &'static str,
        magnitude: f64,
    },
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::Domain { z } => {
                write!(f, "point {z} lies outside the open unit disk")
            }
            QuotientError::Series(e) => write!(f, "series arithmetic failed: {e}"),
            QuotientError::Vanishing {
                at,
                part,
                magnitude,
            } => write!(f, "|{part}| = {magnitude:e} at {at}: quotients undefined"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for QuotientError {}

impl From<ZeroConstantTerm> for QuotientError {
    fn from(e: ZeroConstantTerm) -> Self {
        QuotientError::Series(e)
    }
}

/// The values (u, v, w) = (Q_ST, Q_CV, Q_SD) at one disk point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuotientTriple {
    pub u: Complex64,
    pub v: Complex64,
    pub w: Complex64,
    /// The disk point the values belong to.
    pub at: Complex64,
    /// Set when a series-route evaluation happened beyond the estimated
    /// accuracy radius; closed-form and direct-route values never set it.
    pub accuracy_warning: bool,
}

impl QuotientTriple {
    /// The z = 0 limits forced by normalization.
    pub fn at_origin() -> Self {
        QuotientTriple {
            u: Complex64::new(1.0, 0.0),
            v: Complex64::new(1.0, 0.0),
            w: Complex64::ZERO,
            at: Complex64::ZERO,
            accuracy_warning: false,
        }
    }
}

/// Top coefficient slots zeroed in each quotient series: derivatives
/// zero-pad their top slots, so for a truncated input the top slots of the
/// divisions depend on Taylor coefficients beyond the stored order and come
/// out wildly wrong (for the Koebe function at order 512 the raw top slot of
/// Q_SD is ~7e10 against a true coefficient of ~1.5e3).
const NOISE_PAD: usize = 3;

/// Taylor series of (Q_ST, Q_CV, Q_SD), computed as
/// Q_ST = f' / (f/z), P = f''/f', Q_CV = 1 + zP, Q_SD = z^2 (P' - P^2/2).
///
/// The top [`NOISE_PAD`] slots of each result are zeroed; to get quotient
/// coefficients trustworthy through order m, supply f at order m + 3.
pub fn quotient_series(
    f: &TaylorFunction,
) -> Result<(ComplexSeries, ComplexSeries, ComplexSeries), QuotientError> {
    let f_over_z = f.over_z();
    let fp = f.derivative();
    let fpp = fp.derive();
    let qst = fp.divide(&f_over_z)?.zero_top(NOISE_PAD);
    let p = fpp.divide(&fp)?;
    let qcv = p
        .shift_up()
        .add_scalar(Complex64::new(1.0, 0.0))
        .zero_top(NOISE_PAD);
    let qsd = p
        .derive()
        .sub(&p.multiply(&p).scale(Complex64::new(0.5, 0.0)))
        .shift_up()
        .shift_up()
        .zero_top(NOISE_PAD);
    Ok((qst, qcv, qsd))
}

/// Caches the three quotient series of one function so dense grids pay the
/// series divisions once, and carries the estimated radius inside which the
/// truncation tail stays below [`ACCURACY_TAIL_TOL`].
#[derive(Debug, Clone)]
pub struct QuotientEvaluator {
    qst: ComplexSeries,
    qcv: ComplexSeries,
    qsd: ComplexSeries,
    accuracy_radius: f64,
}

impl QuotientEvaluator {
    pub fn new(f: &TaylorFunction) -> Result<Self, QuotientError> {
        let (qst, qcv, qsd) = quotient_series(f)?;
        let accuracy_radius = accuracy_radius(&qst)
            .min(accuracy_radius(&qcv))
            .min(accuracy_radius(&qsd));
        Ok(QuotientEvaluator {
            qst,
            qcv,
            qsd,
            accuracy_radius,
        })
    }

    /// Radius inside which truncation tails are projected to stay below
    /// [`ACCURACY_TAIL_TOL`].
    pub fn accuracy_radius(&self) -> f64 {
        self.accuracy_radius
    }

    /// Evaluates the cached series at a disk point.
    pub fn at(&self, z: Complex64) -> Result<QuotientTriple, QuotientError> {
        if z.norm() >= 1.0 {
            return Err(QuotientError::Domain { z });
        }
        if z.norm() < NEAR_ZERO_TOL {
            return Ok(QuotientTriple::at_origin());
        }
        Ok(QuotientTriple {
            u: self.qst.evaluate(z),
            v: self.qcv.evaluate(z),
            w: self.qsd.evaluate(z),
            at: z,
            accuracy_warning: z.norm() > self.accuracy_radius,
        })
    }
}

/// Series-route quotient values at one point. Building the evaluator costs
/// three series divisions; callers with dense grids should hold a
/// [`QuotientEvaluator`] instead.
pub fn quotient_triple(f: &TaylorFunction, z: Complex64) -> Result<QuotientTriple, QuotientError> {
    QuotientEvaluator::new(f)?.at(z)
}

/// Direct-route quotient values from pointwise derivatives: exact (up to
/// rounding) for polynomial input at any disk point, with no truncation
/// error near the boundary.
pub fn quotient_triple_direct(
    f: &TaylorFunction,
    z: Complex64,
) -> Result<QuotientTriple, QuotientError> {
    if z.norm() >= 1.0 {
        return Err(QuotientError::Domain { z });
    }
    if z.norm() < NEAR_ZERO_TOL {
        return Ok(QuotientTriple::at_origin());
    }
    let [f0, f1, f2, f3] = f.derivatives_at(z);
    let f_over_z = f0 / z;
    let m = f_over_z.norm();
    if m < VANISHING_TOL {
        return Err(QuotientError::Vanishing {
            at: z,
            part: "f/z",
            magnitude: m,
        });
    }
    let m = f1.norm();
    if m < VANISHING_TOL {
        return Err(QuotientError::Vanishing {
            at: z,
            part: "f'",
            magnitude: m,
        });
    }
    let u = f1 / f_over_z;
    let v = Complex64::new(1.0, 0.0) + z * f2 / f1;
    let w = z * z * (f3 * f1 - 1.5 * f2 * f2) / (f1 * f1);
    Ok(QuotientTriple {
        u,
        v,
        w,
        at: z,
        accuracy_warning: false,
    })
}

/// Largest radius at which the projected truncation tail of the series stays
/// below [`ACCURACY_TAIL_TOL`]. The tail is extrapolated geometrically from
/// the trailing coefficients; an essentially polynomial series gets the full
/// disk.
fn accuracy_radius(s: &ComplexSeries) -> f64 {
    let n = s.order();
    let mut k_last = 0usize;
    for k in (0..=n).rev() {
        if s.coeff(k).norm() > 1e-300 {
            k_last = k;
            break;
        }
    }
    if k_last < n / 2 {
        return 1.0;
    }
    let m = k_last.min(8);
    let head = s.coeff(k_last - m).norm();
    let tail_coeff = s.coeff(k_last).norm();
    let growth = if head > 1e-300 {
        Float::powf(tail_coeff / head, 1.0 / m as f64)
    } else {
        1.0
    };
    let tail_at = |r: f64| -> f64 {
        let gr = growth * r;
        if gr >= 1.0 {
            return f64::INFINITY;
        }
        tail_coeff * Float::powi(r, k_last as i32) * gr / (1.0 - gr)
    };
    if tail_at(1.0 - 1e-9) <= ACCURACY_TAIL_TOL {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if tail_at(mid) <= ACCURACY_TAIL_TOL {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// What the direct oracle is allowed to conclude about a reference function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnownStatus {
    Starlike,
    Convex,
    NotStarlike,
    Unknown,
}

impl fmt::Display for KnownStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            KnownStatus::Starlike => "starlike",
            KnownStatus::Convex => "convex",
            KnownStatus::NotStarlike => "not-starlike",
            KnownStatus::Unknown => "unknown",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum ClosedForm {
    Identity,
    Koebe,
    HalfPlane,
    /// z + a z^n with real a and n >= 2.
    Monomial {
        a: f64,
        n: u32,
    },
}

/// A test-corpus function with exact closed-form quotients alongside its
/// truncated Taylor series.
#[derive(Debug, Clone)]
pub struct ReferenceFunction {
    pub id: String,
    pub taylor: TaylorFunction,
    pub known_status: KnownStatus,
    form: ClosedForm,
}

impl ReferenceFunction {
    /// Exact Q_ST value.
    pub fn closed_qst(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self.form {
            ClosedForm::Identity => one,
            ClosedForm::Koebe => (one + z) / (one - z),
            ClosedForm::HalfPlane => one / (one - z),
            ClosedForm::Monomial { a, n } => {
                let t = a * pow_u32(z, n - 1);
                (one + n as f64 * t) / (one + t)
            }
        }
    }

    /// Exact Q_CV value.
    pub fn closed_qcv(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self.form {
            ClosedForm::Identity => one,
            ClosedForm::Koebe => (one + 4.0 * z + z * z) / (one - z * z),
            ClosedForm::HalfPlane => (one + z) / (one - z),
            ClosedForm::Monomial { a, n } => {
                let nf = n as f64;
                let t = a * pow_u32(z, n - 1);
                (one + nf * nf * t) / (one + nf * t)
            }
        }
    }

    /// Exact Q_SD value.
    pub fn closed_qsd(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match self.form {
            ClosedForm::Identity | ClosedForm::HalfPlane => Complex64::ZERO,
            ClosedForm::Koebe => {
                let d = one - z * z;
                -6.0 * z * z / (d * d)
            }
            ClosedForm::Monomial { a, n } => {
                let nf = n as f64;
                let t = a * pow_u32(z, n - 1);
                let den = one + nf * t;
                nf * (nf - 1.0) * t * ((nf - 2.0) - nf * (nf + 1.0) * t / 2.0) / (den * den)
            }
        }
    }

    /// Exact triple at a disk point.
    pub fn closed_triple(&self, z: Complex64) -> Result<QuotientTriple, QuotientError> {
        if z.norm() >= 1.0 {
            return Err(QuotientError::Domain { z });
        }
        if z.norm() < NEAR_ZERO_TOL {
            return Ok(QuotientTriple::at_origin());
        }
        // Q_CV and Q_SD share the f' factor in their denominators; a zero
        // there is a genuine singularity of the quotients, not a formula
        // artifact.
        let (fp, _) = self.f_prime_at(z);
        let m = fp.norm();
        if m < VANISHING_TOL {
            return Err(QuotientError::Vanishing {
                at: z,
                part: "f'",
                magnitude: m,
            });
        }
        let (foz, _) = self.f_over_z_at(z);
        let m = foz.norm();
        if m < VANISHING_TOL {
            return Err(QuotientError::Vanishing {
                at: z,
                part: "f/z",
                magnitude: m,
            });
        }
        Ok(QuotientTriple {
            u: self.closed_qst(z),
            v: self.closed_qcv(z),
            w: self.closed_qsd(z),
            at: z,
            accuracy_warning: false,
        })
    }

    /// Exact (f/z, (f/z)') pair.
    pub fn f_over_z_at(&self, z: Complex64) -> (Complex64, Complex64) {
        let one = Complex64::new(1.0, 0.0);
        match self.form {
            ClosedForm::Identity => (one, Complex64::ZERO),
            ClosedForm::Koebe => {
                let d = one - z;
                (one / (d * d), 2.0 / (d * d * d))
            }
            ClosedForm::HalfPlane => {
                let d = one - z;
                (one / d, one / (d * d))
            }
            ClosedForm::Monomial { a, n } => (
                one + a * pow_u32(z, n - 1),
                (n as f64 - 1.0) * a * pow_u32(z, n - 2),
            ),
        }
    }

    /// Exact (f', f'') pair.
    pub fn f_prime_at(&self, z: Complex64) -> (Complex64, Complex64) {
        let one = Complex64::new(1.0, 0.0);
        match self.form {
            ClosedForm::Identity => (one, Complex64::ZERO),
            ClosedForm::Koebe => {
                let d = one - z;
                let d3 = d * d * d;
                ((one + z) / d3, (4.0 + 2.0 * z) / (d3 * d))
            }
            ClosedForm::HalfPlane => {
                let d = one - z;
                let d2 = d * d;
                (one / d2, 2.0 / (d2 * d))
            }
            ClosedForm::Monomial { a, n } => {
                let nf = n as f64;
                (
                    one + nf * a * pow_u32(z, n - 1),
                    nf * (nf - 1.0) * a * pow_u32(z, n - 2),
                )
            }
        }
    }
}

fn pow_u32(z: Complex64, k: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..k {
        acc *= z;
    }
    acc
}

/// z + a z^n with real a, as a reference function with exact quotients.
/// The starlikeness status is left unknown; the stock zoo instances pin
/// theirs.
pub fn monomial_perturbation(a: f64, n: u32) -> ReferenceFunction {
    assert!(n >= 2, "the perturbed power must be at least 2");
    let mut coeffs = alloc::vec![Complex64::ZERO; n as usize + 1];
    coeffs[1] = Complex64::new(1.0, 0.0);
    coeffs[n as usize] = Complex64::new(a, 0.0);
    let id = match n {
        2 => format!("quad-{a}"),
        3 => format!("cubic-{a}"),
        _ => format!("monomial-{n}-{a}"),
    };
    ReferenceFunction {
        id,
        taylor: TaylorFunction::from_polynomial(&coeffs)
            .expect("perturbation is normalized by construction")
            .with_label("monomial perturbation"),
        known_status: KnownStatus::Unknown,
        form: ClosedForm::Monomial { a, n },
    }
}

/// The stock reference functions: identity, the Koebe function z/(1-z)^2,
/// the half-plane map z/(1-z), and three monomial perturbations straddling
/// the classical |a| <= 1/2 starlikeness bound for z + a z^2.
pub fn reference_zoo() -> Vec<ReferenceFunction> {
    let one = Complex64::new(1.0, 0.0);

    let identity = ReferenceFunction {
        id: String::from("identity"),
        taylor: TaylorFunction::identity(DEFAULT_ORDER).with_label("identity"),
        known_status: KnownStatus::Convex,
        form: ClosedForm::Identity,
    };

    let koebe_coeffs: Vec<Complex64> = (0..=ZOO_ORDER)
        .map(|k| Complex64::new(k as f64, 0.0))
        .collect();
    let koebe = ReferenceFunction {
        id: String::from("koebe"),
        taylor: TaylorFunction::new(ComplexSeries::from_coeffs(&koebe_coeffs, ZOO_ORDER))
            .expect("Koebe coefficients are normalized")
            .with_label("Koebe z/(1-z)^2"),
        known_status: KnownStatus::Starlike,
        form: ClosedForm::Koebe,
    };

    let mut half_coeffs = alloc::vec![one; ZOO_ORDER + 1];
    half_coeffs[0] = Complex64::ZERO;
    let half_plane = ReferenceFunction {
        id: String::from("half-plane"),
        taylor: TaylorFunction::new(ComplexSeries::from_coeffs(&half_coeffs, ZOO_ORDER))
            .expect("half-plane coefficients are normalized")
            .with_label("half-plane z/(1-z)"),
        known_status: KnownStatus::Convex,
        form: ClosedForm::HalfPlane,
    };

    let mut quad_mild = monomial_perturbation(0.4, 2);
    quad_mild.known_status = KnownStatus::Starlike;
    let mut quad_wild = monomial_perturbation(0.6, 2);
    quad_wild.known_status = KnownStatus::NotStarlike;
    let mut cubic = monomial_perturbation(0.25, 3);
    cubic.known_status = KnownStatus::Starlike;

    alloc::vec![identity, koebe, half_plane, quad_mild, quad_wild, cubic]
}

/// Anything the grid oracles can query for quotient values and the
/// nonvanishing parts f/z and f'.
///
/// [`TaylorFunction`] answers through the direct pointwise route, which is
/// exact for the polynomials the corpus draws; [`ReferenceFunction`] answers
/// through its closed forms, valid at any disk point regardless of how badly
/// its truncated series behaves near the boundary.
pub trait QuotientSource {
    fn triple_at(&self, z: Complex64) -> Result<QuotientTriple, QuotientError>;

    /// (g, g') for g = f/z.
    fn f_over_z_at(&self, z: Complex64) -> (Complex64, Complex64);

    /// (g, g') for g = f', i.e. (f', f'').
    fn f_prime_at(&self, z: Complex64) -> (Complex64, Complex64);

    /// The truncated Taylor coefficients backing this function.
    fn taylor(&self) -> &TaylorFunction;
}

impl QuotientSource for TaylorFunction {
    fn triple_at(&self, z: Complex64) -> Result<QuotientTriple, QuotientError> {
        quotient_triple_direct(self, z)
    }

    fn f_over_z_at(&self, z: Complex64) -> (Complex64, Complex64) {
        let [f0, f1, _, _] = self.derivatives_at(z);
        if z.norm() < NEAR_ZERO_TOL {
            // f/z -> c_1 = 1 and (f/z)' -> c_2 at the origin.
            return (Complex64::new(1.0, 0.0), self.series().coeff(2));
        }
        // (f/z)' = (z f' - f) / z^2.
        (f0 / z, (z * f1 - f0) / (z * z))
    }

    fn f_prime_at(&self, z: Complex64) -> (Complex64, Complex64) {
        let [_, f1, f2, _] = self.derivatives_at(z);
        (f1, f2)
    }

    fn taylor(&self) -> &TaylorFunction {
        self
    }
}

impl QuotientSource for ReferenceFunction {
    fn triple_at(&self, z: Complex64) -> Result<QuotientTriple, QuotientError> {
        self.closed_triple(z)
    }

    fn f_over_z_at(&self, z: Complex64) -> (Complex64, Complex64) {
        ReferenceFunction::f_over_z_at(self, z)
    }

    fn f_prime_at(&self, z: Complex64) -> (Complex64, Complex64) {
        ReferenceFunction::f_prime_at(self, z)
    }

    fn taylor(&self) -> &TaylorFunction {
        &self.taylor
    }
}
