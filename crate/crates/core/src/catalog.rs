//! The criterion catalog: every sufficient starlikeness condition encoded as
//! data. Each entry is an expression tree over (u, v, w, alpha, beta), a
//! symbolic threshold, a comparison direction, and parameter domains.
//!
//! Each entry asserts: if f(z)f'(z)/z != 0 on the disk and Re psi(u, v, w)
//! clears the threshold at every disk point, then f is starlike. The
//! admissibility module verifies the matching region inequality for each
//! entry; [`criterion_holds`] checks the disk-side hypothesis by grid scan.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use num_complex::Complex64;

use crate::oracle::DiskGrid;
use crate::quotients::{QuotientError, QuotientSource, QuotientTriple};

/// Denominator modulus below which a ratio entry is inapplicable at a point.
pub const RATIO_TOL: f64 = 1e-12;

/// Expression tree over the quotient values and the two real parameters.
/// Ratio denominators are restricted to u or v: no criterion divides by
/// anything else, and the restriction keeps the singularity analysis local.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    VarU,
    VarV,
    VarW,
    ParamAlpha,
    ParamBeta,
    /// Rational constant num/den with den > 0.
    Const(i64, i64),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Ratio(Box<Expr>, RatioDen),
    Power(Box<Expr>, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioDen {
    U,
    V,
}

impl RatioDen {
    fn name(self) -> &'static str {
        match self {
            RatioDen::U => "Q_ST",
            RatioDen::V => "Q_CV",
        }
    }
}

impl Expr {
    /// Evaluates the tree at one quotient triple and parameter pair.
    pub fn eval(
        &self,
        u: Complex64,
        v: Complex64,
        w: Complex64,
        alpha: f64,
        beta: f64,
    ) -> Result<Complex64, CatalogError> {
        match self {
            Expr::VarU => Ok(u),
            Expr::VarV => Ok(v),
            Expr::VarW => Ok(w),
            Expr::ParamAlpha => Ok(Complex64::new(alpha, 0.0)),
            Expr::ParamBeta => Ok(Complex64::new(beta, 0.0)),
            Expr::Const(num, den) => Ok(Complex64::new(*num as f64 / *den as f64, 0.0)),
            Expr::Sum(terms) => {
                let mut acc = Complex64::ZERO;
                for t in terms {
                    acc += t.eval(u, v, w, alpha, beta)?;
                }
                Ok(acc)
            }
            Expr::Product(factors) => {
                let mut acc = Complex64::new(1.0, 0.0);
                for t in factors {
                    acc *= t.eval(u, v, w, alpha, beta)?;
                }
                Ok(acc)
            }
            Expr::Ratio(num, den) => {
                let d = match den {
                    RatioDen::U => u,
                    RatioDen::V => v,
                };
                if d.norm() < RATIO_TOL {
                    return Err(CatalogError::RatioAtZero {
                        den: den.name(),
                        magnitude: d.norm(),
                    });
                }
                Ok(num.eval(u, v, w, alpha, beta)? / d)
            }
            Expr::Power(base, exp) => {
                let b = base.eval(u, v, w, alpha, beta)?;
                let mut acc = Complex64::new(1.0, 0.0);
                for _ in 0..*exp {
                    acc *= b;
                }
                Ok(acc)
            }
        }
    }

    /// Compact formula string, space-free so records stay space-delimited.
    pub fn render(&self) -> String {
        match self {
            Expr::VarU => String::from("Q_ST"),
            Expr::VarV => String::from("Q_CV"),
            Expr::VarW => String::from("Q_SD"),
            Expr::ParamAlpha => String::from("alpha"),
            Expr::ParamBeta => String::from("beta"),
            Expr::Const(num, 1) => format!("{num}"),
            Expr::Const(num, den) => format!("{num}/{den}"),
            Expr::Sum(terms) => {
                let mut out = String::new();
                for t in terms {
                    let s = t.render();
                    if !out.is_empty() && !s.starts_with('-') {
                        out.push('+');
                    }
                    out.push_str(&s);
                }
                out
            }
            Expr::Product(factors) => {
                let mut out = String::new();
                let mut rest = factors.as_slice();
                if factors.first() == Some(&Expr::Const(-1, 1)) {
                    out.push('-');
                    rest = &factors[1..];
                }
                for (i, t) in rest.iter().enumerate() {
                    if i > 0 {
                        out.push('*');
                    }
                    if matches!(t, Expr::Sum(_)) {
                        out.push('(');
                        out.push_str(&t.render());
                        out.push(')');
                    } else {
                        out.push_str(&t.render());
                    }
                }
                out
            }
            Expr::Ratio(num, den) => {
                if matches!(**num, Expr::Sum(_)) {
                    format!("({})/{}", num.render(), den.name())
                } else {
                    format!("{}/{}", num.render(), den.name())
                }
            }
            Expr::Power(base, exp) => {
                if matches!(
                    **base,
                    Expr::VarU | Expr::VarV | Expr::VarW | Expr::ParamAlpha | Expr::ParamBeta
                ) {
                    format!("{}^{exp}", base.render())
                } else {
                    format!("({})^{exp}", base.render())
                }
            }
        }
    }
}

/// Threshold kept symbolic so one spec serves every parameter choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threshold {
    NegHalfAlpha,
    Zero,
    Alpha,
    ThreeHalvesAlpha,
    TwoThirdsAlpha,
    NegHalfBeta,
}

impl Threshold {
    pub fn value(self, alpha: f64, beta: f64) -> f64 {
        match self {
            Threshold::NegHalfAlpha => -alpha / 2.0,
            Threshold::Zero => 0.0,
            Threshold::Alpha => alpha,
            Threshold::ThreeHalvesAlpha => 1.5 * alpha,
            Threshold::TwoThirdsAlpha => 2.0 * alpha / 3.0,
            Threshold::NegHalfBeta => -beta / 2.0,
        }
    }

    pub fn render(self) -> &'static str {
        match self {
            Threshold::NegHalfAlpha => "-alpha/2",
            Threshold::Zero => "0",
            Threshold::Alpha => "alpha",
            Threshold::ThreeHalvesAlpha => "3*alpha/2",
            Threshold::TwoThirdsAlpha => "2*alpha/3",
            Threshold::NegHalfBeta => "-beta/2",
        }
    }
}

/// Which side of the threshold Re psi must stay on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Gt,
    Lt,
}

impl Direction {
    pub fn render(self) -> &'static str {
        match self {
            Direction::Gt => ">",
            Direction::Lt => "<",
        }
    }
}

/// Closed or open interval on the extended real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub min: f64,
    pub max: f64,
    pub min_open: bool,
    pub max_open: bool,
}

pub const GE0: Interval = Interval {
    min: 0.0,
    max: f64::INFINITY,
    min_open: false,
    max_open: true,
};
pub const GT0: Interval = Interval {
    min: 0.0,
    max: f64::INFINITY,
    min_open: true,
    max_open: true,
};
pub const UNIT: Interval = Interval {
    min: 0.0,
    max: 1.0,
    min_open: false,
    max_open: false,
};
pub const LT0: Interval = Interval {
    min: f64::NEG_INFINITY,
    max: 0.0,
    min_open: true,
    max_open: true,
};
pub const LE0: Interval = Interval {
    min: f64::NEG_INFINITY,
    max: 0.0,
    min_open: true,
    max_open: false,
};
pub const ALL: Interval = Interval {
    min: f64::NEG_INFINITY,
    max: f64::INFINITY,
    min_open: true,
    max_open: true,
};

impl Interval {
    pub fn contains(&self, x: f64) -> bool {
        let above = if self.min_open {
            x > self.min
        } else {
            x >= self.min
        };
        let below = if self.max_open {
            x < self.max
        } else {
            x <= self.max
        };
        above && below
    }

    /// Human-readable membership requirement, used in domain errors.
    pub fn describe(&self) -> String {
        match (self.min.is_finite(), self.max.is_finite()) {
            (false, false) => String::from("may be any real"),
            (true, false) => format!(
                "must be {} {}",
                if self.min_open { ">" } else { ">=" },
                self.min
            ),
            (false, true) => format!(
                "must be {} {}",
                if self.max_open { "<" } else { "<=" },
                self.max
            ),
            (true, true) => format!(
                "must be in {}{}, {}{}",
                if self.min_open { "(" } else { "[" },
                self.min,
                self.max,
                if self.max_open { ")" } else { "]" },
            ),
        }
    }

    /// Evenly spaced sweep values inside the interval. Infinite ends are
    /// truncated at `trunc` (flagged in the second return); open finite
    /// endpoints are nudged half a step inward.
    pub fn sweep(&self, count: usize, trunc: f64) -> (Vec<f64>, bool) {
        let mut truncated = false;
        let lo = if self.min < -trunc {
            truncated = true;
            -trunc
        } else {
            self.min
        };
        let hi = if self.max > trunc {
            truncated = true;
            trunc
        } else {
            self.max
        };
        if count <= 1 {
            return (vec![0.5 * (lo + hi)], truncated);
        }
        let step = (hi - lo) / (count - 1) as f64;
        let mut points: Vec<f64> = (0..count).map(|k| lo + step * k as f64).collect();
        if self.min_open && lo == self.min {
            points[0] = lo + 0.5 * step;
        }
        if self.max_open && hi == self.max {
            points[count - 1] = hi - 0.5 * step;
        }
        (points, truncated)
    }
}

/// Failure modes of catalog evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogError {
    ParamOutOfDomain {
        param: &'static str,
        value: f64,
        requirement: String,
    },
    /// A ratio denominator (Q_ST or Q_CV) is numerically zero at a sampled
    /// point; the criterion is inapplicable there.
    RatioAtZero { den: &'static str, magnitude: f64 },
    /// A sampled zero of f/z or f'; the hypothesis of every criterion
    /// requires f(z)f'(z)/z != 0.
    PreconditionFailed {
        at: Complex64,
        part: &'static str,
        magnitude: f64,
    },
    /// Unexpected quotient failure (domain or series corruption).
    Quotient(QuotientError),
    /// Operation defined only for GT criteria was handed an LT criterion.
    GtOnly { id: String },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::ParamOutOfDomain {
                param,
                value,
                requirement,
            } => write!(f, "{param} = {value} rejected: {param} {requirement}"),
            CatalogError::RatioAtZero { den, magnitude } => {
                write!(
                    f,
                    "|{den}| = {magnitude:e} below {RATIO_TOL:e}: ratio undefined"
                )
            }
            CatalogError::PreconditionFailed {
                at,
                part,
                magnitude,
            } => write!(
                f,
                "nonvanishing precondition violated: |{part}| = {magnitude:e} at {at}"
            ),
            CatalogError::Quotient(e) => write!(f, "quotient evaluation failed: {e}"),
            CatalogError::GtOnly { id } => {
                write!(
                    f,
                    "{id} bounds Re psi from above; supremum reporting covers GT criteria only"
                )
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CatalogError {}

impl From<QuotientError> for CatalogError {
    fn from(e: QuotientError) -> Self {
        match e {
            QuotientError::Vanishing {
                at,
                part,
                magnitude,
            } => CatalogError::PreconditionFailed {
                at,
                part,
                magnitude,
            },
            other => CatalogError::Quotient(other),
        }
    }
}

/// One sufficient condition: Re psi(u, v, w) on the stated side of the
/// threshold for all disk points implies starlikeness, valid for parameters
/// inside the domains.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionSpec {
    pub id: &'static str,
    pub psi: Expr,
    pub threshold: Threshold,
    pub direction: Direction,
    pub alpha_domain: Interval,
    pub beta_domain: Interval,
}

impl CriterionSpec {
    /// "T2.13.iv" -> "T2.13".
    pub fn theorem(&self) -> &'static str {
        let last_dot = self.id.rfind('.').expect("ids carry a part suffix");
        &self.id[..last_dot]
    }

    /// Full rendered inequality, e.g.
    /// "Re(Q_ST*(alpha*Q_CV+beta*Q_SD))>-alpha/2".
    pub fn formula(&self) -> String {
        format!(
            "Re({}){}{}",
            self.psi.render(),
            self.direction.render(),
            self.threshold.render()
        )
    }

    pub fn check_params(&self, alpha: f64, beta: f64) -> Result<(), CatalogError> {
        if !self.alpha_domain.contains(alpha) {
            return Err(CatalogError::ParamOutOfDomain {
                param: "alpha",
                value: alpha,
                requirement: self.alpha_domain.describe(),
            });
        }
        if !self.beta_domain.contains(beta) {
            return Err(CatalogError::ParamOutOfDomain {
                param: "beta",
                value: beta,
                requirement: self.beta_domain.describe(),
            });
        }
        Ok(())
    }
}

/// psi at one quotient triple, with the parameters checked against the
/// criterion's domains.
pub fn eval_psi(
    spec: &CriterionSpec,
    q: &QuotientTriple,
    alpha: f64,
    beta: f64,
) -> Result<Complex64, CatalogError> {
    spec.check_params(alpha, beta)?;
    spec.psi.eval(q.u, q.v, q.w, alpha, beta)
}

/// Outcome of one verification scan, over disk points (P = complex point)
/// or region points (P = admissible tuple).
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<P> {
    pub criterion_id: String,
    pub alpha: f64,
    pub beta: f64,
    /// Threshold value at these parameters.
    pub threshold: f64,
    /// Re psi at the extremal sample.
    pub extremal: f64,
    /// Signed slack toward the requirement; positive means satisfied at
    /// every sample.
    pub margin: f64,
    pub arg_extremum: P,
    /// Points evaluated, including skipped ones.
    pub samples: usize,
    /// Points where a ratio denominator vanished (criterion inapplicable).
    pub skipped: usize,
    pub passed: bool,
}

/// Scans the disk grid for the criterion hypothesis. The margin is the
/// worst signed slack (Re psi - t for GT, t - Re psi for LT); the hypothesis
/// holds iff it stays positive.
///
/// Callers are expected to have run the oracle's nonvanishing check; a grid
/// point landing exactly on a zero of f/z or f' aborts with
/// `PreconditionFailed`.
pub fn criterion_holds<S: QuotientSource>(
    spec: &CriterionSpec,
    f: &S,
    alpha: f64,
    beta: f64,
    grid: &DiskGrid,
) -> Result<VerificationReport<Complex64>, CatalogError> {
    spec.check_params(alpha, beta)?;
    let t = spec.threshold.value(alpha, beta);
    let mut worst = f64::INFINITY;
    let mut worst_re = f64::NAN;
    let mut arg = Complex64::ZERO;
    let mut samples = 0usize;
    let mut skipped = 0usize;
    let mut last_ratio_err = None;
    for z in grid.points() {
        samples += 1;
        let q = f.triple_at(z)?;
        let value = match spec.psi.eval(q.u, q.v, q.w, alpha, beta) {
            Ok(value) => value,
            Err(e @ CatalogError::RatioAtZero { .. }) => {
                skipped += 1;
                last_ratio_err = Some(e);
                continue;
            }
            Err(other) => return Err(other),
        };
        let margin = match spec.direction {
            Direction::Gt => value.re - t,
            Direction::Lt => t - value.re,
        };
        if margin < worst {
            worst = margin;
            worst_re = value.re;
            arg = z;
        }
    }
    if samples == skipped {
        return Err(
            last_ratio_err.expect("a nonempty grid that skipped everything saw a ratio error")
        );
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
        skipped,
        passed: worst > 0.0,
    })
}

/// Stock verification grid, denser than the oracle default: ratio criteria
/// vary sharply near the boundary, and the inner radii catch low-order
/// coefficient effects.
pub fn default_criterion_grid() -> DiskGrid {
    DiskGrid::geometric(0.05, 0.995, 64, 256).expect("stock grid parameters are valid")
}

fn u() -> Expr {
    Expr::VarU
}
fn v() -> Expr {
    Expr::VarV
}
fn w() -> Expr {
    Expr::VarW
}
fn al() -> Expr {
    Expr::ParamAlpha
}
fn be() -> Expr {
    Expr::ParamBeta
}
fn k(n: i64) -> Expr {
    Expr::Const(n, 1)
}
fn sum(terms: Vec<Expr>) -> Expr {
    Expr::Sum(terms)
}
fn prod(factors: Vec<Expr>) -> Expr {
    Expr::Product(factors)
}
fn neg(e: Expr) -> Expr {
    prod(vec![k(-1), e])
}
fn pow(base: Expr, exp: u32) -> Expr {
    Expr::Power(Box::new(base), exp)
}
fn over_u(num: Expr) -> Expr {
    Expr::Ratio(Box::new(num), RatioDen::U)
}
fn over_v(num: Expr) -> Expr {
    Expr::Ratio(Box::new(num), RatioDen::V)
}
/// 1 - alpha.
fn one_minus_alpha() -> Expr {
    sum(vec![k(1), neg(al())])
}
/// alpha*x + (1-alpha)*y^2 + beta*z.
fn affine_blend(x: Expr, y: Expr, z: Expr) -> Expr {
    sum(vec![
        prod(vec![al(), x]),
        prod(vec![one_minus_alpha(), pow(y, 2)]),
        prod(vec![be(), z]),
    ])
}

struct Entry {
    id: &'static str,
    psi: Expr,
    threshold: Threshold,
    direction: Direction,
}

fn entry(id: &'static str, psi: Expr, threshold: Threshold) -> Entry {
    Entry {
        id,
        psi,
        threshold,
        direction: Direction::Gt,
    }
}

fn entry_lt(id: &'static str, psi: Expr, threshold: Threshold) -> Entry {
    Entry {
        id,
        psi,
        threshold,
        direction: Direction::Lt,
    }
}

/// Every sufficient condition, exactly 60 entries; parameter domains follow
/// the per-theorem headers.
pub fn build_catalog() -> Vec<CriterionSpec> {
    use Threshold::{Alpha, NegHalfAlpha, NegHalfBeta, ThreeHalvesAlpha, TwoThirdsAlpha, Zero};
    let mut out = Vec::with_capacity(60);

    let mut push = |domains: (Interval, Interval), entries: Vec<Entry>| {
        for e in entries {
            out.push(CriterionSpec {
                id: e.id,
                psi: e.psi,
                threshold: e.threshold,
                direction: e.direction,
                alpha_domain: domains.0,
                beta_domain: domains.1,
            });
        }
    };

    // u*(alpha*v + beta*w) and its u/v permutations.
    push(
        (GE0, GE0),
        vec![
            entry(
                "T2.1.i",
                prod(vec![
                    u(),
                    sum(vec![prod(vec![al(), v()]), prod(vec![be(), w()])]),
                ]),
                NegHalfAlpha,
            ),
            entry(
                "T2.1.ii",
                prod(vec![
                    v(),
                    sum(vec![prod(vec![al(), u()]), prod(vec![be(), w()])]),
                ]),
                NegHalfAlpha,
            ),
            entry(
                "T2.1.iii",
                prod(vec![
                    u(),
                    sum(vec![prod(vec![al(), u()]), prod(vec![be(), w()])]),
                ]),
                Zero,
            ),
            entry(
                "T2.1.iv",
                prod(vec![
                    v(),
                    sum(vec![prod(vec![al(), v()]), prod(vec![be(), w()])]),
                ]),
                Zero,
            ),
        ],
    );

    // Outer factor times an affine blend alpha*x + (1-alpha)*y^2 + beta*w.
    let blend = |outer: Expr, x: Expr, y: Expr| prod(vec![outer, affine_blend(x, y, w())]);
    push(
        (GE0, GE0),
        vec![
            entry("T2.2.i", blend(v(), u(), u()), NegHalfAlpha),
            entry("T2.2.ii", blend(u(), v(), v()), NegHalfAlpha),
            entry("T2.2.iii", blend(u(), v(), u()), NegHalfAlpha),
            entry("T2.2.iv", blend(v(), u(), v()), NegHalfAlpha),
        ],
    );
    push(
        (GE0, GE0),
        vec![
            entry("T2.3.i", blend(u(), u(), u()), Zero),
            entry("T2.3.ii", blend(v(), v(), v()), Zero),
            entry("T2.3.iii", blend(u(), u(), v()), Zero),
            entry("T2.3.iv", blend(v(), v(), u()), Zero),
        ],
    );

    // beta*x*w + alpha*(1+y)^2.
    let shifted_square = |x: Expr, y: Expr| {
        sum(vec![
            prod(vec![be(), x, w()]),
            prod(vec![al(), pow(sum(vec![k(1), y]), 2)]),
        ])
    };
    push(
        (GT0, GE0),
        vec![
            entry("T2.4.i", shifted_square(u(), v()), Alpha),
            entry("T2.4.ii", shifted_square(u(), u()), Alpha),
            entry("T2.4.iii", shifted_square(v(), v()), Alpha),
            entry("T2.4.iv", shifted_square(v(), u()), Alpha),
        ],
    );

    // beta*x*w + alpha*y*(1+z).
    let shifted_product = |x: Expr, y: Expr, z: Expr| {
        sum(vec![
            prod(vec![be(), x, w()]),
            prod(vec![al(), y, sum(vec![k(1), z])]),
        ])
    };
    push(
        (GT0, GE0),
        vec![
            entry("T2.5.i", shifted_product(u(), v(), u()), NegHalfAlpha),
            entry("T2.5.ii", shifted_product(v(), u(), v()), NegHalfAlpha),
            entry("T2.5.iii", shifted_product(v(), v(), u()), NegHalfAlpha),
            entry("T2.5.iv", shifted_product(u(), u(), v()), NegHalfAlpha),
        ],
    );
    push(
        (GT0, GE0),
        vec![
            entry("T2.6.i", shifted_product(u(), u(), u()), Zero),
            entry("T2.6.ii", shifted_product(v(), u(), u()), Zero),
            entry("T2.6.iii", shifted_product(u(), v(), v()), Zero),
            entry("T2.6.iv", shifted_product(v(), v(), v()), Zero),
        ],
    );

    // alpha*x + (1-alpha)*y^2 + beta*z*w, unfactored.
    let open_blend = |x: Expr, y: Expr, z: Expr| affine_blend(x, y, prod(vec![z, w()]));
    push(
        (UNIT, GE0),
        vec![
            entry("T2.7.i", open_blend(u(), u(), v()), Zero),
            entry("T2.7.ii", open_blend(u(), u(), u()), Zero),
            entry("T2.7.iii", open_blend(u(), v(), u()), Zero),
            entry("T2.7.iv", open_blend(v(), u(), u()), Zero),
            entry("T2.7.v", open_blend(v(), v(), v()), Zero),
            entry("T2.7.vi", open_blend(v(), u(), v()), Zero),
            entry("T2.7.vii", open_blend(u(), v(), v()), Zero),
            entry("T2.7.viii", open_blend(v(), v(), u()), Zero),
        ],
    );

    // Outer factor times a first-order blend alpha*x + (1-alpha)*y + beta*w.
    let linear_blend = |outer: Expr, x: Expr, y: Expr| {
        prod(vec![
            outer,
            sum(vec![
                prod(vec![al(), x]),
                prod(vec![one_minus_alpha(), y]),
                prod(vec![be(), w()]),
            ]),
        ])
    };
    push(
        (UNIT, GE0),
        vec![
            entry("T2.8.i", linear_blend(v(), u(), v()), NegHalfAlpha),
            entry("T2.8.ii", linear_blend(u(), v(), u()), NegHalfAlpha),
        ],
    );

    // Ratio criteria bounded above.
    push(
        (GT0, GE0),
        vec![
            entry_lt(
                "T2.9.i",
                sum(vec![
                    prod(vec![al(), over_u(v())]),
                    prod(vec![be(), over_u(w())]),
                ]),
                ThreeHalvesAlpha,
            ),
            entry_lt(
                "T2.9.ii",
                sum(vec![
                    prod(vec![al(), over_u(v())]),
                    prod(vec![be(), over_v(w())]),
                ]),
                ThreeHalvesAlpha,
            ),
        ],
    );
    push(
        (GT0, LE0),
        vec![
            entry(
                "T2.10.i",
                sum(vec![
                    prod(vec![al(), over_v(u())]),
                    prod(vec![be(), over_v(w())]),
                ]),
                TwoThirdsAlpha,
            ),
            entry(
                "T2.10.ii",
                sum(vec![
                    prod(vec![al(), over_v(u())]),
                    prod(vec![be(), over_u(w())]),
                ]),
                TwoThirdsAlpha,
            ),
        ],
    );

    // alpha*(w over u or v) plus a correction term.
    push(
        (LT0, ALL),
        vec![
            entry(
                "T2.11.i",
                sum(vec![prod(vec![al(), over_u(w())]), prod(vec![be(), u()])]),
                Zero,
            ),
            entry(
                "T2.11.ii",
                sum(vec![prod(vec![al(), over_v(w())]), prod(vec![be(), u()])]),
                Zero,
            ),
            entry(
                "T2.11.iii",
                sum(vec![prod(vec![al(), over_u(w())]), prod(vec![be(), v()])]),
                Zero,
            ),
            entry(
                "T2.11.iv",
                sum(vec![prod(vec![al(), over_v(w())]), prod(vec![be(), v()])]),
                Zero,
            ),
        ],
    );

    // x*(1 + beta*y) corrections.
    let self_correction = |x: Expr, y: Expr| prod(vec![x, sum(vec![k(1), prod(vec![be(), y])])]);
    push(
        (LE0, GE0),
        vec![
            entry(
                "T2.12.i",
                sum(vec![
                    prod(vec![al(), over_u(w())]),
                    self_correction(u(), u()),
                ]),
                Zero,
            ),
            entry(
                "T2.12.ii",
                sum(vec![
                    prod(vec![al(), over_v(w())]),
                    self_correction(u(), u()),
                ]),
                Zero,
            ),
            entry(
                "T2.12.iii",
                sum(vec![
                    prod(vec![al(), over_v(w())]),
                    self_correction(v(), v()),
                ]),
                Zero,
            ),
            entry(
                "T2.12.iv",
                sum(vec![
                    prod(vec![al(), over_u(w())]),
                    self_correction(v(), v()),
                ]),
                Zero,
            ),
        ],
    );
    push(
        (LE0, GE0),
        vec![
            entry(
                "T2.13.i",
                sum(vec![
                    prod(vec![al(), over_u(w())]),
                    self_correction(u(), v()),
                ]),
                NegHalfBeta,
            ),
            entry(
                "T2.13.ii",
                sum(vec![
                    prod(vec![al(), over_u(w())]),
                    self_correction(v(), u()),
                ]),
                NegHalfBeta,
            ),
            entry(
                "T2.13.iii",
                sum(vec![
                    prod(vec![al(), over_v(w())]),
                    self_correction(v(), u()),
                ]),
                NegHalfBeta,
            ),
            entry(
                "T2.13.iv",
                sum(vec![
                    prod(vec![al(), over_v(w())]),
                    self_correction(u(), v()),
                ]),
                NegHalfBeta,
            ),
        ],
    );

    // alpha*(w over u or v) + beta * quadratic term.
    let quad_correction =
        |den: Expr, q: Expr| sum(vec![prod(vec![al(), den]), prod(vec![be(), q])]);
    push(
        (LE0, GT0),
        vec![
            entry(
                "T2.14.i",
                quad_correction(over_u(w()), prod(vec![u(), v()])),
                NegHalfBeta,
            ),
            entry(
                "T2.14.ii",
                quad_correction(over_v(w()), prod(vec![u(), v()])),
                NegHalfBeta,
            ),
            entry("T2.14.iii", quad_correction(over_v(w()), pow(u(), 2)), Zero),
            entry("T2.14.iv", quad_correction(over_u(w()), pow(v(), 2)), Zero),
            entry("T2.14.v", quad_correction(over_u(w()), pow(u(), 2)), Zero),
            entry("T2.14.vi", quad_correction(over_v(w()), pow(v(), 2)), Zero),
        ],
    );

    // Mixed ratio and product criteria.
    push(
        (GT0, GE0),
        vec![
            entry_lt(
                "T2.15.i",
                sum(vec![
                    prod(vec![al(), over_u(v())]),
                    neg(prod(vec![be(), v(), w()])),
                ]),
                ThreeHalvesAlpha,
            ),
            entry_lt(
                "T2.15.ii",
                sum(vec![
                    prod(vec![al(), over_u(v())]),
                    neg(prod(vec![be(), u(), w()])),
                ]),
                ThreeHalvesAlpha,
            ),
            entry(
                "T2.15.iii",
                sum(vec![
                    prod(vec![al(), over_v(u())]),
                    prod(vec![be(), v(), w()]),
                ]),
                TwoThirdsAlpha,
            ),
            entry(
                "T2.15.iv",
                sum(vec![
                    prod(vec![al(), over_v(u())]),
                    prod(vec![be(), u(), w()]),
                ]),
                TwoThirdsAlpha,
            ),
        ],
    );

    out
}

/// One documented reduction: the catalog entry at the pinned parameters is
/// claimed to equal the simpler expression. `matches` records whether the
/// claim is numerically true; one known entry does not match its claim and
/// is kept flagged rather than silently corrected.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduction {
    pub criterion_id: &'static str,
    pub alpha: f64,
    pub beta: f64,
    pub claimed: Expr,
    pub matches: bool,
    pub note: &'static str,
}

pub fn remark_reductions() -> Vec<Reduction> {
    vec![
        Reduction {
            criterion_id: "T2.1.i",
            alpha: 1.0,
            beta: 0.0,
            claimed: prod(vec![u(), v()]),
            matches: true,
            note: "collapses to the product criterion Re(Q_ST*Q_CV)>-1/2",
        },
        Reduction {
            criterion_id: "T2.3.iv",
            alpha: 1.0,
            beta: 1.0,
            claimed: sum(vec![pow(v(), 2), w()]),
            matches: false,
            note: "claimed equal to Re(Q_CV^2+Q_SD)>0, but the entry at alpha=1, beta=1 \
                   evaluates to Q_CV*(Q_CV+Q_SD); kept as a flagged non-match",
        },
        Reduction {
            criterion_id: "T2.8.i",
            alpha: 1.0,
            beta: 0.0,
            claimed: prod(vec![v(), u()]),
            matches: true,
            note: "collapses to the product criterion Re(Q_ST*Q_CV)>-1/2",
        },
        Reduction {
            criterion_id: "T2.8.ii",
            alpha: 1.0,
            beta: 0.0,
            claimed: prod(vec![u(), v()]),
            matches: true,
            note: "collapses to the product criterion Re(Q_ST*Q_CV)>-1/2",
        },
        Reduction {
            criterion_id: "T2.9.i",
            alpha: 1.0,
            beta: 0.0,
            claimed: over_u(v()),
            matches: true,
            note: "collapses to the ratio criterion Re(Q_CV/Q_ST)<3/2",
        },
        Reduction {
            criterion_id: "T2.9.ii",
            alpha: 1.0,
            beta: 0.0,
            claimed: over_u(v()),
            matches: true,
            note: "collapses to the ratio criterion Re(Q_CV/Q_ST)<3/2",
        },
        Reduction {
            criterion_id: "T2.15.i",
            alpha: 1.0,
            beta: 0.0,
            claimed: over_u(v()),
            matches: true,
            note: "collapses to the ratio criterion Re(Q_CV/Q_ST)<3/2",
        },
        Reduction {
            criterion_id: "T2.15.ii",
            alpha: 1.0,
            beta: 0.0,
            claimed: over_u(v()),
            matches: true,
            note: "collapses to the ratio criterion Re(Q_CV/Q_ST)<3/2",
        },
    ]
}
