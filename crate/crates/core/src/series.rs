//! Truncated complex power-series arithmetic.
//!
//! A [`ComplexSeries`] holds coefficients `c_0..c_N` (index k is the
//! coefficient of z^k) and every operation truncates its result back to the
//! same degree N. This is enough structure to form f', f'', f/z, their
//! ratios, and the Schwarzian combination for normalized analytic functions
//! on the unit disk; anything fancier (composition, logs, fractional powers)
//! is out of scope.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

/// Default truncation degree for series built without an explicit order.
pub const DEFAULT_ORDER: usize = 64;

/// Divisors whose constant term has modulus below this are rejected:
/// recursive long division by such a series amplifies rounding noise into
/// meaningless coefficients, and the quotient is not analytic at 0 anyway.
pub const DIVISION_PIVOT_TOL: f64 = 1e-12;

/// Division by a series whose constant term is numerically zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroConstantTerm {
    /// Modulus of the offending constant term.
    pub magnitude: f64,
}

impl fmt::Display for ZeroConstantTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "series division pivot |c_0| = {:e} is below {:e}",
            self.magnitude, DIVISION_PIVOT_TOL
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ZeroConstantTerm {}

/// Rejected input for [`TaylorFunction::new`]: the series is not normalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NotNormalized {
    pub c0: Complex64,
    pub c1: Complex64,
}

impl fmt::Display for NotNormalized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expected c_0 = 0 and c_1 = 1, got c_0 = {} and c_1 = {}",
            self.c0, self.c1
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for NotNormalized {}

/// A complex power series truncated at a fixed degree.
///
/// Invariant: the coefficient vector always holds exactly `order() + 1`
/// entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries {
    coeffs: Vec<Complex64>,
}

impl ComplexSeries {
    /// Series with the given coefficients, padded with zeros or truncated so
    /// that exactly `order + 1` are kept.
    pub fn from_coeffs(coeffs: &[Complex64], order: usize) -> Self {
        let mut c = Vec::with_capacity(order + 1);
        c.extend(coeffs.iter().take(order + 1).copied());
        c.resize(order + 1, Complex64::ZERO);
        ComplexSeries { coeffs: c }
    }

    /// Series with the given real coefficients.
    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_coeffs(&c, order)
    }

    /// The zero series.
    pub fn zero(order: usize) -> Self {
        ComplexSeries {
            coeffs: vec![Complex64::ZERO; order + 1],
        }
    }

    /// The constant series c + 0z + ...
    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Truncation degree N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^k (zero when k exceeds the order).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO)
    }

    /// All stored coefficients, index k holding the coefficient of z^k.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Termwise derivative, padded back to the same order. The top
    /// coefficient of the result is the truncation boundary and is set to
    /// zero.
    pub fn derive(&self) -> Self {
        let n = self.order();
        let mut c = Vec::with_capacity(n + 1);
        for k in 1..=n {
            c.push(self.coeffs[k] * k as f64);
        }
        c.push(Complex64::ZERO);
        ComplexSeries { coeffs: c }
    }

    /// Cauchy product truncated to the common order.
    ///
    /// Panics if the orders differ; mixing truncation degrees is a
    /// programming error, not a data condition.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(
            self.order(),
            other.order(),
            "series multiply requires equal truncation orders"
        );
        let n = self.order();
        let mut c = vec![Complex64::ZERO; n + 1];
        for i in 0..=n {
            let a = self.coeffs[i];
            if a == Complex64::ZERO {
                continue;
            }
            for j in 0..=(n - i) {
                c[i + j] += a * other.coeffs[j];
            }
        }
        ComplexSeries { coeffs: c }
    }

    /// Recursive long division: the result q satisfies
    /// `q.multiply(other) == self` through the truncation degree.
    pub fn divide(&self, other: &Self) -> Result<Self, ZeroConstantTerm> {
        assert_eq!(
            self.order(),
            other.order(),
            "series divide requires equal truncation orders"
        );
        let pivot = other.coeffs[0];
        let magnitude = pivot.norm();
        if magnitude < DIVISION_PIVOT_TOL {
            return Err(ZeroConstantTerm { magnitude });
        }
        let n = self.order();
        let mut q = vec![Complex64::ZERO; n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for (j, qj) in q[..k].iter().enumerate() {
                acc -= qj * other.coeffs[k - j];
            }
            q[k] = acc / pivot;
        }
        Ok(ComplexSeries { coeffs: q })
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.order(),
            other.order(),
            "series add requires equal truncation orders"
        );
        let c = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        ComplexSeries { coeffs: c }
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            self.order(),
            other.order(),
            "series sub requires equal truncation orders"
        );
        let c = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        ComplexSeries { coeffs: c }
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: Complex64) -> Self {
        ComplexSeries {
            coeffs: self.coeffs.iter().map(|a| a * factor).collect(),
        }
    }

    /// Adds a constant to the series (shifts c_0).
    pub fn add_scalar(&self, c: Complex64) -> Self {
        let mut s = self.clone();
        s.coeffs[0] += c;
        s
    }

    /// Multiplication by z: coefficients shift up one slot and the top one
    /// falls off the truncation edge.
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        let mut c = Vec::with_capacity(n + 1);
        c.push(Complex64::ZERO);
        c.extend(self.coeffs[..n].iter().copied());
        ComplexSeries { coeffs: c }
    }

    /// Division by z for a series with c_0 = 0: coefficients shift down one
    /// slot and the vacated top slot is zero.
    ///
    /// The caller is responsible for c_0 = 0; a nonzero constant term is
    /// silently dropped (a pole is not representable here).
    pub fn shift_down(&self) -> Self {
        let n = self.order();
        let mut c = Vec::with_capacity(n + 1);
        c.extend(self.coeffs[1..].iter().copied());
        c.push(Complex64::ZERO);
        ComplexSeries { coeffs: c }
    }

    /// Zeroes the top `count` coefficient slots. Derivatives of a truncated
    /// series zero-pad their top slots, so arithmetic on them yields top
    /// coefficients that silently depend on data beyond the stored order;
    /// callers use this to discard such slots.
    pub fn zero_top(mut self, count: usize) -> Self {
        let n = self.coeffs.len();
        for c in &mut self.coeffs[n.saturating_sub(count)..] {
            *c = Complex64::ZERO;
        }
        self
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Largest coefficient modulus.
    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// A normalized analytic function carried by its truncated Taylor series:
/// c_0 = 0 and c_1 = 1 exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorFunction {
    series: ComplexSeries,
    label: Option<String>,
}

impl TaylorFunction {
    /// Wraps a series, enforcing the normalization exactly.
    pub fn new(series: ComplexSeries) -> Result<Self, NotNormalized> {
        let c0 = series.coeff(0);
        let c1 = series.coeff(1);
        if c0 != Complex64::ZERO || c1 != Complex64::new(1.0, 0.0) {
            return Err(NotNormalized { c0, c1 });
        }
        Ok(TaylorFunction {
            series,
            label: None,
        })
    }

    /// Builds from raw polynomial coefficients starting at index 0.
    /// The order is the larger of the polynomial degree and 1.
    pub fn from_polynomial(coeffs: &[Complex64]) -> Result<Self, NotNormalized> {
        let order = coeffs.len().saturating_sub(1).max(1);
        Self::new(ComplexSeries::from_coeffs(coeffs, order))
    }

    /// The identity function z.
    pub fn identity(order: usize) -> Self {
        let mut s = ComplexSeries::zero(order.max(1));
        // c_1 = 1 exists because the order is at least 1.
        let coeffs = &mut s.coeffs;
        coeffs[1] = Complex64::new(1.0, 0.0);
        TaylorFunction {
            series: s,
            label: None,
        }
    }

    /// Attaches a human-readable name.
    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(String::from(label));
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn series(&self) -> &ComplexSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// Taylor series of f/z, exact because c_0 = 0.
    pub fn over_z(&self) -> ComplexSeries {
        self.series.shift_down()
    }

    /// Taylor series of f'.
    pub fn derivative(&self) -> ComplexSeries {
        self.series.derive()
    }

    /// Values of (f, f', f'', f''') at a point, by a single Horner-style
    /// recurrence over the stored coefficients. Exact (up to rounding) for
    /// polynomial input; no series division is involved.
    pub fn derivatives_at(&self, z: Complex64) -> [Complex64; 4] {
        let mut d0 = Complex64::ZERO;
        let mut d1 = Complex64::ZERO;
        let mut d2 = Complex64::ZERO;
        let mut d3 = Complex64::ZERO;
        for c in self.series.coeffs.iter().rev() {
            d3 = d3 * z + d2;
            d2 = d2 * z + d1;
            d1 = d1 * z + d0;
            d0 = d0 * z + c;
        }
        // d_j accumulates the j-th divided difference: f^(j) = j! * d_j.
        [d0, d1, d2 * 2.0, d3 * 6.0]
    }
}
