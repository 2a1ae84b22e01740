//! Sampling-based ground truth: starlikeness and convexity of any order
//! gamma in [0, 1), and the nonvanishing precondition f(z)f'(z)/z != 0.
//!
//! The oracle scans a full disk grid rather than the boundary circle alone
//! (Re Q_ST need not be harmonic, so no minimum principle is assumed). A
//! "holds" verdict means no violation was found at the stated resolution;
//! values within the margin tolerance of zero are reported inconclusive.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::quotients::{QuotientError, QuotientSource, QuotientTriple};

/// Verdict band half-width: grid minima this close to zero are inconclusive.
pub const DEFAULT_MARGIN_TOL: f64 = 1e-6;

const DEFAULT_RADII: [f64; 8] = [0.1, 0.3, 0.5, 0.7, 0.85, 0.95, 0.99, 0.995];
const MIN_ANGLES: usize = 8;

/// Newton refinement in [`nonvanishing_check`]: residual below which a point
/// counts as a zero, how far outside the disk the iteration may wander, and
/// the interior margin a zero must clear to count as inside.
const NEWTON_MAX_STEPS: usize = 40;
const NEWTON_RESIDUAL_TOL: f64 = 1e-9;
const NEWTON_WANDER_CAP: f64 = 2.0;
const INTERIOR_MARGIN: f64 = 1e-6;

/// Invalid grid description.
#[derive(Debug, Clone, PartialEq)]
pub enum GridError {
    EmptyRadii,
    RadiusOutOfRange { r: f64 },
    RadiiNotIncreasing { index: usize },
    TooFewAngles { angles: usize },
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::EmptyRadii => write!(f, "grid needs at least one radius"),
            GridError::RadiusOutOfRange { r } => {
                write!(f, "radius {r} is outside (0, 1)")
            }
            GridError::RadiiNotIncreasing { index } => {
                write!(
                    f,
                    "radii must be strictly increasing (violated at index {index})"
                )
            }
            GridError::TooFewAngles { angles } => {
                write!(f, "grid needs at least {MIN_ANGLES} angles, got {angles}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GridError {}

/// Polar sampling grid: every radius crossed with equally spaced angles.
/// Point order is radius-major, angle-minor, which fixes the reported
/// arg-extremum under any chunked evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskGrid {
    radii: Vec<f64>,
    angles: usize,
}

impl DiskGrid {
    pub fn new(radii: Vec<f64>, angles: usize) -> Result<Self, GridError> {
        if radii.is_empty() {
            return Err(GridError::EmptyRadii);
        }
        for (i, &r) in radii.iter().enumerate() {
            if !(r > 0.0 && r < 1.0) {
                return Err(GridError::RadiusOutOfRange { r });
            }
            if i > 0 && radii[i - 1] >= r {
                return Err(GridError::RadiiNotIncreasing { index: i });
            }
        }
        if angles < MIN_ANGLES {
            return Err(GridError::TooFewAngles { angles });
        }
        Ok(DiskGrid { radii, angles })
    }

    /// Geometrically spaced radii from r_min to r_max inclusive.
    pub fn geometric(
        r_min: f64,
        r_max: f64,
        count: usize,
        angles: usize,
    ) -> Result<Self, GridError> {
        if count == 0 {
            return Err(GridError::EmptyRadii);
        }
        if !(r_min > 0.0 && r_min < 1.0) {
            return Err(GridError::RadiusOutOfRange { r: r_min });
        }
        let radii = if count == 1 {
            alloc::vec![r_max]
        } else {
            let ratio = r_max / r_min;
            (0..count)
                .map(|k| r_min * Float::powf(ratio, k as f64 / (count - 1) as f64))
                .collect()
        };
        DiskGrid::new(radii, angles)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> usize {
        self.angles
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angles
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }

    pub fn point(&self, radius_idx: usize, angle_idx: usize) -> Complex64 {
        let r = self.radii[radius_idx];
        let theta = core::f64::consts::TAU * angle_idx as f64 / self.angles as f64;
        Complex64::new(r * Float::cos(theta), r * Float::sin(theta))
    }

    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        (0..self.radii.len()).flat_map(move |ri| (0..self.angles).map(move |ai| self.point(ri, ai)))
    }
}

impl Default for DiskGrid {
    fn default() -> Self {
        DiskGrid::new(DEFAULT_RADII.to_vec(), 512).expect("stock grid is valid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Outcome of one oracle scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleVerdict {
    /// For the Re-quotient oracles: grid minimum of Re q - gamma. For the
    /// nonvanishing check: grid minimum of min(|f/z|, |f'|) when no interior
    /// zero was found, and the negated boundary distance -(1 - |z*|) of the
    /// refined zero z* when one was.
    pub min_value: f64,
    pub arg_min: Complex64,
    pub verdict: Verdict,
    pub margin_tol: f64,
}

impl OracleVerdict {
    /// Applies the verdict band: holds above +margin_tol, fails below
    /// -margin_tol, inconclusive between.
    pub fn from_min(min_value: f64, arg_min: Complex64, margin_tol: f64) -> Self {
        let verdict = if min_value > margin_tol {
            Verdict::Holds
        } else if min_value < -margin_tol {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        };
        OracleVerdict {
            min_value,
            arg_min,
            verdict,
            margin_tol,
        }
    }
}

fn min_re_part<S, F>(
    f: &S,
    grid: &DiskGrid,
    gamma: f64,
    pick: F,
) -> Result<OracleVerdict, QuotientError>
where
    S: QuotientSource,
    F: Fn(&QuotientTriple) -> Complex64,
{
    assert!(
        (0.0..1.0).contains(&gamma),
        "order parameter must lie in [0, 1), got {gamma}"
    );
    let mut min = f64::INFINITY;
    let mut arg_min = Complex64::ZERO;
    for z in grid.points() {
        let t = f.triple_at(z)?;
        let m = pick(&t).re - gamma;
        if m < min {
            min = m;
            arg_min = z;
        }
    }
    Ok(OracleVerdict::from_min(min, arg_min, DEFAULT_MARGIN_TOL))
}

/// Grid minimum of Re Q_ST - gamma: starlikeness of order gamma (gamma = 0
/// is plain starlikeness).
pub fn min_re_qst<S: QuotientSource>(
    f: &S,
    grid: &DiskGrid,
    gamma: f64,
) -> Result<OracleVerdict, QuotientError> {
    min_re_part(f, grid, gamma, |t| t.u)
}

/// Grid minimum of Re Q_CV - gamma: convexity of order gamma.
pub fn min_re_qcv<S: QuotientSource>(
    f: &S,
    grid: &DiskGrid,
    gamma: f64,
) -> Result<OracleVerdict, QuotientError> {
    min_re_part(f, grid, gamma, |t| t.v)
}

#[derive(Clone, Copy)]
enum Part {
    FOverZ,
    FPrime,
}

fn part_at<S: QuotientSource>(f: &S, part: Part, z: Complex64) -> (Complex64, Complex64) {
    match part {
        Part::FOverZ => f.f_over_z_at(z),
        Part::FPrime => f.f_prime_at(z),
    }
}

/// Newton iteration from a grid minimizer toward a zero of the part.
/// Returns the zero only when the residual drops below tolerance strictly
/// inside the disk; divergence, a boundary zero, or a flat derivative all
/// report "no interior zero found from here".
fn newton_interior_zero<S: QuotientSource>(
    f: &S,
    part: Part,
    start: Complex64,
) -> Option<Complex64> {
    let mut z = start;
    for _ in 0..NEWTON_MAX_STEPS {
        let (g, dg) = part_at(f, part, z);
        if g.norm() <= NEWTON_RESIDUAL_TOL {
            return (z.norm() < 1.0 - INTERIOR_MARGIN).then_some(z);
        }
        if dg.norm() < 1e-14 {
            return None;
        }
        z -= g / dg;
        if z.norm() > NEWTON_WANDER_CAP {
            return None;
        }
    }
    None
}

/// The Theorem-level precondition that f/z and f' have no zero in the disk.
///
/// Grid moduli of an analytic function cannot go negative, so a bare grid
/// minimum could never trip the "fails" band. Instead the grid minimizer of
/// each part seeds a Newton refinement; a zero found strictly inside the
/// disk is reported as min_value = -(1 - |z*|), the negated distance from
/// the boundary, which is negative exactly when the precondition is
/// genuinely violated.
pub fn nonvanishing_check<S: QuotientSource>(f: &S, grid: &DiskGrid) -> OracleVerdict {
    let mut grid_min = f64::INFINITY;
    let mut grid_arg = Complex64::ZERO;
    let mut part_args = [Complex64::ZERO; 2];
    let mut part_mins = [f64::INFINITY; 2];
    for z in grid.points() {
        for (i, part) in [Part::FOverZ, Part::FPrime].into_iter().enumerate() {
            let (g, _) = part_at(f, part, z);
            let m = g.norm();
            if m < part_mins[i] {
                part_mins[i] = m;
                part_args[i] = z;
            }
            if m < grid_min {
                grid_min = m;
                grid_arg = z;
            }
        }
    }

    let mut deepest: Option<(f64, Complex64)> = None;
    for (i, part) in [Part::FOverZ, Part::FPrime].into_iter().enumerate() {
        if let Some(zero) = newton_interior_zero(f, part, part_args[i]) {
            let depth = -(1.0 - zero.norm());
            if deepest.is_none_or(|(d, _)| depth < d) {
                deepest = Some((depth, zero));
            }
        }
    }

    match deepest {
        Some((depth, zero)) => OracleVerdict::from_min(depth, zero, DEFAULT_MARGIN_TOL),
        None => OracleVerdict::from_min(grid_min, grid_arg, DEFAULT_MARGIN_TOL),
    }
}
