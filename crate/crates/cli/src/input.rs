//! User-facing value formats: stock function lookup, coefficient-list
//! parsing, and the complex-number spelling shared between input flags and
//! replay output, so a reported violation pastes straight back into
//! `--coeffs`.

use starlike_core::catalog::Interval;
use starlike_core::quotients::{
    reference_zoo, QuotientError, QuotientSource, QuotientTriple, ReferenceFunction,
};
use starlike_core::series::TaylorFunction;
use starlike_core::Complex64;

/// A function named on the command line: a stock reference function or an
/// explicit coefficient list.
#[derive(Debug)]
pub enum FunctionInput {
    Zoo(ReferenceFunction),
    Custom(TaylorFunction),
}

impl FunctionInput {
    pub fn name(&self) -> &str {
        match self {
            FunctionInput::Zoo(f) => &f.id,
            FunctionInput::Custom(_) => "custom",
        }
    }
}

impl QuotientSource for FunctionInput {
    fn triple_at(&self, z: Complex64) -> Result<QuotientTriple, QuotientError> {
        match self {
            FunctionInput::Zoo(f) => f.triple_at(z),
            FunctionInput::Custom(f) => f.triple_at(z),
        }
    }

    fn f_over_z_at(&self, z: Complex64) -> (Complex64, Complex64) {
        match self {
            FunctionInput::Zoo(f) => QuotientSource::f_over_z_at(f, z),
            FunctionInput::Custom(f) => f.f_over_z_at(z),
        }
    }

    fn f_prime_at(&self, z: Complex64) -> (Complex64, Complex64) {
        match self {
            FunctionInput::Zoo(f) => QuotientSource::f_prime_at(f, z),
            FunctionInput::Custom(f) => f.f_prime_at(z),
        }
    }

    fn taylor(&self) -> &TaylorFunction {
        match self {
            FunctionInput::Zoo(f) => f.taylor(),
            FunctionInput::Custom(f) => f,
        }
    }
}

/// Resolves `--fn NAME` or `--coeffs LIST`; exactly one must be present.
pub fn resolve_function(name: Option<&str>, coeffs: Option<&str>) -> Result<FunctionInput, String> {
    match (name, coeffs) {
        (Some(name), None) => {
            let zoo = reference_zoo();
            let known = zoo
                .iter()
                .map(|f| f.id.as_str())
                .collect::<Vec<_>>()
                .join(", ");
            zoo.into_iter()
                .find(|f| f.id == name)
                .map(FunctionInput::Zoo)
                .ok_or_else(|| format!("unknown function '{name}'; stock functions: {known}"))
        }
        (None, Some(list)) => parse_coeffs(list).map(FunctionInput::Custom),
        (None, None) => Err(String::from("provide a function with --fn or --coeffs")),
        (Some(_), Some(_)) => Err(String::from("--fn and --coeffs are mutually exclusive")),
    }
}

/// Parses "0,1,0.5+0.25i,..." into a normalized function. The list starts
/// at index 0 so off-by-one coefficient lists fail loudly against the
/// normalization instead of shifting silently.
pub fn parse_coeffs(list: &str) -> Result<TaylorFunction, String> {
    let coeffs = list
        .split(',')
        .map(parse_complex)
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() < 2 {
        return Err(String::from(
            "coefficient list starts at index 0 and needs at least indices 0 and 1",
        ));
    }
    if coeffs[0] != Complex64::ZERO {
        return Err(format!(
            "index-0 coefficient must be 0 (normalization), got {}",
            format_complex(coeffs[0])
        ));
    }
    if coeffs[1] != Complex64::new(1.0, 0.0) {
        return Err(format!(
            "index-1 coefficient must be 1 (normalization), got {}",
            format_complex(coeffs[1])
        ));
    }
    TaylorFunction::from_polynomial(&coeffs).map_err(|e| e.to_string())
}

/// One coefficient written as "re" or "re+imi"/"re-imi". The imaginary
/// part starts at the last sign that is neither leading nor an exponent
/// sign.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err(String::from("empty coefficient"));
    }
    let Some(body) = text.strip_suffix('i') else {
        let re = text
            .parse()
            .map_err(|_| format!("'{text}' is not a number"))?;
        return Ok(Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let mut split = None;
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if (b == b'+' || b == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
        }
    }
    let split = split.ok_or_else(|| format!("'{text}' has no real part; write it as re+imi"))?;
    let re = body[..split]
        .parse()
        .map_err(|_| format!("bad real part in '{text}'"))?;
    let im = body[split..]
        .parse()
        .map_err(|_| format!("bad imaginary part in '{text}'"))?;
    Ok(Complex64::new(re, im))
}

/// Renders one value in the exact spelling [`parse_complex`] accepts.
pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else {
        format!("{}{:+}i", c.re, c.im)
    }
}

/// Renders a coefficient list in the exact spelling [`parse_coeffs`]
/// accepts.
pub fn format_coeffs(coeffs: &[Complex64]) -> String {
    coeffs
        .iter()
        .map(|&c| format_complex(c))
        .collect::<Vec<_>>()
        .join(",")
}

/// Compact domain rendering for records: "[0,inf)", "(-inf,0]", "[0,1]".
pub fn format_interval(domain: &Interval) -> String {
    let lo = if domain.min_open || domain.min.is_infinite() {
        '('
    } else {
        '['
    };
    let hi = if domain.max_open || domain.max.is_infinite() {
        ')'
    } else {
        ']'
    };
    format!("{lo}{},{}{hi}", domain.min, domain.max)
}
