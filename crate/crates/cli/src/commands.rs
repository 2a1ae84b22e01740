//! Command implementations. Each returns the process exit code for its
//! success and failure verdicts; an `Err` string is reported on stderr by
//! the caller with exit code 2.
//!
//! All numeric output uses shortest-roundtrip float formatting with a
//! decimal point and LF line endings, so runs are locale-independent and
//! byte-identical. Parallel sections collect into submission order before
//! anything is printed.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use starlike_core::admissibility::{
    boundary_supremum, verify_admissibility, AdmissiblePoint, RegionSampler,
};
use starlike_core::catalog::{
    build_catalog, criterion_holds, remark_reductions, CatalogError, CriterionSpec, Direction,
    Interval, VerificationReport,
};
use starlike_core::oracle::DiskGrid;
use starlike_core::quotients::QuotientSource;
use starlike_core::search::{
    absorb, empty_report, random_function, scan_function, CorpusConfig, FunctionScan,
};
use starlike_core::Complex64;

use crate::input::{format_coeffs, format_complex, format_interval, resolve_function};
use crate::{AdmissibilityArgs, CatalogArgs, CheckArgs, Format, QuotientsArgs, ScanArgs};

macro_rules! w {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(|e| format!("write failed: {e}"))?
    };
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, String> {
    Ok(match path {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| format!("cannot create {}: {e}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn finish(mut out: Box<dyn Write>) -> Result<(), String> {
    out.flush().map_err(|e| format!("write failed: {e}"))
}

fn find_criterion<'a>(catalog: &'a [CriterionSpec], id: &str) -> Result<&'a CriterionSpec, String> {
    catalog.iter().find(|spec| spec.id == id).ok_or_else(|| {
        format!(
            "unknown criterion '{id}'; the catalog command lists all {} ids",
            catalog.len()
        )
    })
}

fn select_criteria<'a>(
    catalog: &'a [CriterionSpec],
    selector: &str,
) -> Result<Vec<&'a CriterionSpec>, String> {
    if selector == "all" {
        Ok(catalog.iter().collect())
    } else {
        find_criterion(catalog, selector).map(|spec| vec![spec])
    }
}

/// Geometric radius span mirroring the oracle grid's spacing, without its
/// minimum angle count: tabulation has no resolution requirement.
fn geometric_radii(r_min: f64, r_max: f64, count: usize) -> Result<Vec<f64>, String> {
    if count == 0 {
        return Err(String::from("need at least one radius"));
    }
    if !(r_min.is_finite() && r_max.is_finite()) || r_min <= 0.0 || r_min > r_max {
        return Err(format!(
            "radius span [{r_min}, {r_max}] must be positive and ordered"
        ));
    }
    Ok(if count == 1 {
        vec![r_max]
    } else {
        (0..count)
            .map(|k| r_min * (r_max / r_min).powf(k as f64 / (count - 1) as f64))
            .collect()
    })
}

pub fn quotients(args: &QuotientsArgs) -> Result<u8, String> {
    let f = resolve_function(
        args.function.name.as_deref(),
        args.function.coeffs.as_deref(),
    )?;
    if args.angles == 0 {
        return Err(String::from("need at least one angle"));
    }
    let radii = match args.r {
        Some(r) => vec![r],
        None => geometric_radii(args.r_min, args.r_max, args.radii)?,
    };
    for &r in &radii {
        if !(r > 0.0 && r < 1.0) {
            return Err(format!("radius {r} is outside the open unit disk"));
        }
    }

    let mut out = open_output(args.out.as_deref())?;
    if args.format == Format::Csv {
        w!(out, "r,theta,re_u,im_u,re_v,im_v,re_w,im_w");
    }
    for &r in &radii {
        for j in 0..args.angles {
            let theta = core::f64::consts::TAU * j as f64 / args.angles as f64;
            let z = Complex64::new(r * theta.cos(), r * theta.sin());
            let q = f.triple_at(z).map_err(|e| e.to_string())?;
            match args.format {
                Format::Csv => w!(
                    out,
                    "{r},{theta},{},{},{},{},{},{}",
                    q.u.re, q.u.im, q.v.re, q.v.im, q.w.re, q.w.im
                ),
                Format::Records => w!(
                    out,
                    "record=quotient r={r} theta={theta} re_u={} im_u={} re_v={} im_v={} re_w={} im_w={}",
                    q.u.re, q.u.im, q.v.re, q.v.im, q.w.re, q.w.im
                ),
            }
        }
    }
    finish(out)?;
    Ok(0)
}

pub fn check(args: &CheckArgs) -> Result<u8, String> {
    let f = resolve_function(
        args.function.name.as_deref(),
        args.function.coeffs.as_deref(),
    )?;
    let catalog = build_catalog();
    let spec = find_criterion(&catalog, &args.criterion)?;
    let grid = DiskGrid::geometric(args.r_min, args.r_max, args.radii, args.angles)
        .map_err(|e| e.to_string())?;
    let report =
        criterion_holds(spec, &f, args.alpha, args.beta, &grid).map_err(|e| e.to_string())?;

    // The margin is the worst signed slack over the grid; the band keeps a
    // near-zero margin from flipping the verdict on rounding noise.
    let (verdict, code) = if report.margin > args.margin_tol {
        ("holds", 0)
    } else if report.margin < -args.margin_tol {
        ("fails", 1)
    } else {
        ("inconclusive", 3)
    };

    let mut out = open_output(args.out.as_deref())?;
    w!(
        out,
        "record=check criterion={} formula={} function={} alpha={} beta={} threshold={} \
         extremal={} margin={} arg={} samples={} skipped={} verdict={verdict}",
        report.criterion_id,
        spec.formula(),
        f.name(),
        report.alpha,
        report.beta,
        report.threshold,
        report.extremal,
        report.margin,
        format_complex(report.arg_extremum),
        report.samples,
        report.skipped
    );
    finish(out)?;
    Ok(code)
}

/// The pinned value if it lies in the domain, the stock sweep otherwise; a
/// pinned out-of-domain value is an error naming the requirement.
fn axis_values(
    name: &str,
    domain: &Interval,
    pinned: Option<f64>,
    sweep: usize,
    trunc: f64,
) -> Result<Vec<f64>, String> {
    match pinned {
        Some(value) => {
            if domain.contains(value) {
                Ok(vec![value])
            } else {
                Err(format!("{name} = {value} rejected: {}", domain.describe()))
            }
        }
        None => Ok(domain.sweep(sweep, trunc).0),
    }
}

pub fn admissibility(args: &AdmissibilityArgs) -> Result<u8, String> {
    if !(args.rho_min.is_finite() && args.rho_max.is_finite())
        || args.rho_min <= 0.0
        || args.rho_min >= args.rho_max
    {
        return Err(format!(
            "rho span [{}, {}] must be positive and ordered",
            args.rho_min, args.rho_max
        ));
    }
    if args.sweep == 0 {
        return Err(String::from("need at least one sweep sample per axis"));
    }
    if !args.trunc.is_finite() || args.trunc <= 0.0 {
        return Err(String::from(
            "domain truncation must be positive and finite",
        ));
    }
    let sampler = RegionSampler {
        rho_min: args.rho_min,
        rho_max: args.rho_max,
        ..RegionSampler::default()
    };
    let catalog = build_catalog();
    let specs = select_criteria(&catalog, &args.criterion)?;
    let single = specs.len() == 1;

    // A pinned parameter outside the domain is a config error for a single
    // criterion; across the whole catalog the criterion is skipped with a
    // record, since one pin cannot fit every domain.
    let mut jobs: Vec<(&CriterionSpec, f64, f64)> = Vec::new();
    let mut skipped: Vec<(&str, String)> = Vec::new();
    for spec in &specs {
        let axes = axis_values(
            "alpha",
            &spec.alpha_domain,
            args.alpha,
            args.sweep,
            args.trunc,
        )
        .and_then(|alphas| {
            axis_values("beta", &spec.beta_domain, args.beta, args.sweep, args.trunc)
                .map(|betas| (alphas, betas))
        });
        match axes {
            Ok((alphas, betas)) => {
                for &alpha in &alphas {
                    for &beta in &betas {
                        jobs.push((spec, alpha, beta));
                    }
                }
            }
            Err(reason) => {
                if single {
                    return Err(format!("{}: {reason}", spec.id));
                }
                skipped.push((spec.id, reason));
            }
        }
    }
    if jobs.is_empty() {
        return Err(String::from("no criterion admits the pinned parameters"));
    }

    type JobResult = Result<(VerificationReport<AdmissiblePoint>, Option<f64>), CatalogError>;
    let results: Vec<JobResult> = jobs
        .par_iter()
        .map(|&(spec, alpha, beta)| {
            let report = verify_admissibility(spec, alpha, beta, &sampler, args.tol)?;
            let sup = if args.report_sup && spec.direction == Direction::Gt {
                Some(boundary_supremum(spec, alpha, beta, &sampler)?)
            } else {
                None
            };
            Ok((report, sup))
        })
        .collect();

    let mut out = open_output(args.out.as_deref())?;
    for (id, reason) in &skipped {
        w!(out, "record=skipped criterion={id} reason=\"{reason}\"");
    }
    let mut failed = 0usize;
    for result in results {
        let (report, sup) = result.map_err(|e| e.to_string())?;
        if !report.passed {
            failed += 1;
        }
        let p = &report.arg_extremum;
        w!(
            out,
            "record=admissibility criterion={} alpha={} beta={} threshold={} samples={} \
             worst_margin={} extremal_re={} rho={} tau={} xi={} eta={} passed={}",
            report.criterion_id,
            report.alpha,
            report.beta,
            report.threshold,
            report.samples,
            report.margin,
            report.extremal,
            p.rho,
            p.tau,
            p.xi,
            p.eta,
            report.passed
        );
        if let Some(sup) = sup {
            w!(
                out,
                "record=supremum criterion={} alpha={} beta={} threshold={} sup={sup}",
                report.criterion_id,
                report.alpha,
                report.beta,
                report.threshold
            );
        } else if args.report_sup {
            // The extremal face carries an infimum for LT entries, so no
            // supremum estimate exists there.
            w!(
                out,
                "record=supremum criterion={} alpha={} beta={} defined=false",
                report.criterion_id,
                report.alpha,
                report.beta
            );
        }
    }
    w!(
        out,
        "record=summary command=admissibility criteria={} pairs={} failed={failed}",
        specs.len() - skipped.len(),
        jobs.len()
    );
    finish(out)?;
    Ok(if failed == 0 { 0 } else { 1 })
}

fn parse_pair(text: &str) -> Result<(f64, f64), String> {
    let (alpha, beta) = text
        .split_once(',')
        .ok_or_else(|| format!("pair '{text}' must be written alpha,beta"))?;
    let alpha = alpha
        .trim()
        .parse()
        .map_err(|_| format!("bad alpha in pair '{text}'"))?;
    let beta = beta
        .trim()
        .parse()
        .map_err(|_| format!("bad beta in pair '{text}'"))?;
    Ok((alpha, beta))
}

pub fn scan(args: &ScanArgs) -> Result<u8, String> {
    if !(args.coeff_bound >= 0.0 && args.coeff_bound.is_finite()) {
        return Err(format!(
            "coefficient bound must be finite and nonnegative, got {}",
            args.coeff_bound
        ));
    }
    let params = if args.pairs.is_empty() {
        None
    } else {
        Some(
            args.pairs
                .iter()
                .map(|s| parse_pair(s))
                .collect::<Result<Vec<_>, _>>()?,
        )
    };
    let mut catalog = build_catalog();
    if args.criterion != "all" {
        let total = catalog.len();
        catalog.retain(|spec| spec.id == args.criterion);
        if catalog.is_empty() {
            return Err(format!(
                "unknown criterion '{}'; the catalog command lists all {total} ids",
                args.criterion
            ));
        }
    }
    let cfg = CorpusConfig {
        count: args.count,
        degree: args.degree,
        coeff_bound: args.coeff_bound,
        seed: args.seed,
        params,
        ..CorpusConfig::default()
    };

    let scans: Vec<FunctionScan> = (0..cfg.count)
        .into_par_iter()
        .map(|index| scan_function(&catalog, &cfg, index))
        .collect();
    let mut report = empty_report(&catalog, &cfg);
    for scan in scans {
        absorb(&mut report, scan);
    }

    let mut out = open_output(args.out.as_deref())?;
    for tally in &report.tallies {
        w!(
            out,
            "record=tally criterion={} pairs={} hypothesis_true={} conclusion_true={} \
             inapplicable={} violations={}",
            tally.criterion_id,
            tally.pairs.len(),
            tally.hypothesis_true_count,
            tally.conclusion_true_count,
            tally.inapplicable_count,
            tally.violations.len()
        );
    }
    for tally in &report.tallies {
        for v in &tally.violations {
            // Everything needed to replay: the coefficient list rebuilds
            // the function, and `check --coeffs ... --criterion ...`
            // reproduces the margin.
            let coeffs = format_coeffs(random_function(&cfg, v.function_index).series().coeffs());
            w!(
                out,
                "record=violation criterion={} index={} alpha={} beta={} hypothesis_margin={} \
                 oracle_min={} oracle_arg={} coeffs={coeffs}",
                v.criterion_id,
                v.function_index,
                v.alpha,
                v.beta,
                v.criterion_margin,
                v.oracle_min,
                format_complex(v.oracle_arg)
            );
        }
    }
    let violations = report.total_violations();
    w!(
        out,
        "record=summary command=scan functions={} inapplicable={} starlike={} violations={} \
         max_coverage={} seed={}",
        report.functions,
        report.inapplicable_functions,
        report.starlike_functions,
        violations,
        report.max_hypothesis_coverage(),
        cfg.seed
    );
    finish(out)?;
    Ok(if violations == 0 { 0 } else { 1 })
}

pub fn catalog(args: &CatalogArgs) -> Result<u8, String> {
    let catalog = build_catalog();
    let specs = select_criteria(&catalog, &args.criterion)?;
    let mut out = open_output(args.out.as_deref())?;
    for spec in &specs {
        w!(
            out,
            "record=criterion id={} theorem={} formula={} alpha_domain={} beta_domain={}",
            spec.id,
            spec.theorem(),
            spec.formula(),
            format_interval(&spec.alpha_domain),
            format_interval(&spec.beta_domain)
        );
    }
    if args.reductions {
        for r in remark_reductions() {
            if args.criterion != "all" && r.criterion_id != args.criterion {
                continue;
            }
            w!(
                out,
                "record=reduction criterion={} alpha={} beta={} claimed={} matches={} note=\"{}\"",
                r.criterion_id,
                r.alpha,
                r.beta,
                r.claimed.render(),
                r.matches,
                r.note
            );
        }
    }
    finish(out)?;
    Ok(0)
}
