//! Corpus-based implication testing. Each catalog entry promises that its
//! hypothesis forces starlikeness; the criteria are proved, so a sampled
//! counterexample can only mean an implementation bug. The scan draws a
//! deterministic corpus of normalized polynomials, evaluates every
//! criterion's hypothesis against the starlikeness oracle on a shared grid,
//! and reports any (function, parameter) pair where the hypothesis held but
//! the oracle refuted the conclusion.

use alloc::vec::Vec;
use alloc::{format, vec};

use num_complex::Complex64;
use num_traits::Float;
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

use crate::catalog::{CatalogError, CriterionSpec, Direction, ALL, GE0, GT0, LE0, LT0, UNIT};
use crate::oracle::{min_re_qst, nonvanishing_check, DiskGrid, OracleVerdict, Verdict};
use crate::quotients::{QuotientSource, QuotientTriple};
use crate::series::TaylorFunction;

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_CORPUS_COUNT: usize = 1000;
pub const DEFAULT_MAX_DEGREE: usize = 6;
pub const DEFAULT_COEFF_BOUND: f64 = 0.4;

/// Corpus shape and evaluation resolution. The grid serves both sides of
/// the implication: hypotheses and the starlikeness oracle sample the same
/// points, so neither side sees structure the other missed.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig {
    pub count: usize,
    /// Largest polynomial degree; each function draws its own degree
    /// uniformly from 2..=degree, so low-order families stay represented.
    pub degree: usize,
    /// Upper bound on |a_k| for k >= 2.
    pub coeff_bound: f64,
    pub seed: u64,
    pub grid: DiskGrid,
    /// Explicit (alpha, beta) pairs, filtered per criterion to its domains;
    /// `None` uses a stock sweep derived from each criterion's domains.
    pub params: Option<Vec<(f64, f64)>>,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            count: DEFAULT_CORPUS_COUNT,
            degree: DEFAULT_MAX_DEGREE,
            coeff_bound: DEFAULT_COEFF_BOUND,
            seed: DEFAULT_SEED,
            grid: DiskGrid::default(),
            params: None,
        }
    }
}

fn unif01(rng: &mut ChaCha12Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// The corpus member at one index: z plus uniformly drawn perturbation
/// coefficients (modulus uniform in [0, coeff_bound], phase uniform).
/// Deterministic in (seed, index) via per-index RNG streams, so corpus
/// members can be generated independently in any order.
pub fn random_function(cfg: &CorpusConfig, index: usize) -> TaylorFunction {
    assert!(index < cfg.count, "corpus index out of range");
    let mut rng = ChaCha12Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let degree = if cfg.degree < 2 {
        1
    } else {
        2 + (rng.next_u64() % (cfg.degree as u64 - 1)) as usize
    };
    let mut coeffs = vec![Complex64::ZERO; degree + 1];
    coeffs[1] = Complex64::new(1.0, 0.0);
    for slot in coeffs.iter_mut().skip(2) {
        let modulus = cfg.coeff_bound * unif01(&mut rng);
        let phase = core::f64::consts::TAU * unif01(&mut rng);
        *slot = Complex64::new(modulus * Float::cos(phase), modulus * Float::sin(phase));
    }
    TaylorFunction::from_polynomial(&coeffs)
        .expect("corpus construction fixes c0 = 0 and c1 = 1")
        .with_label(&format!("corpus-{index}"))
}

/// Stock parameter sweep for one criterion: two values per axis chosen
/// inside its domains, crossed into four pairs.
fn default_axis(domain: &crate::catalog::Interval, alpha_axis: bool) -> &'static [f64] {
    if *domain == UNIT {
        &[0.5, 1.0]
    } else if *domain == GT0 {
        &[0.5, 2.0]
    } else if *domain == GE0 {
        // The alpha endpoint 0 degenerates most criteria, so stay interior
        // there; beta = 0 exercises the no-Schwarzian special cases.
        if alpha_axis {
            &[0.5, 2.0]
        } else {
            &[0.0, 2.0]
        }
    } else if *domain == LT0 {
        &[-0.5, -2.0]
    } else if *domain == LE0 {
        &[0.0, -2.0]
    } else {
        debug_assert_eq!(*domain, ALL);
        &[-2.0, 2.0]
    }
}

/// The (alpha, beta) pairs this scan evaluates for one criterion.
pub fn criterion_pairs(spec: &CriterionSpec, cfg: &CorpusConfig) -> Vec<(f64, f64)> {
    match &cfg.params {
        Some(pairs) => pairs
            .iter()
            .copied()
            .filter(|&(alpha, beta)| {
                spec.alpha_domain.contains(alpha) && spec.beta_domain.contains(beta)
            })
            .collect(),
        None => {
            let alphas = default_axis(&spec.alpha_domain, true);
            let betas = default_axis(&spec.beta_domain, false);
            let mut pairs = Vec::with_capacity(alphas.len() * betas.len());
            for &alpha in alphas {
                for &beta in betas {
                    pairs.push((alpha, beta));
                }
            }
            pairs
        }
    }
}

/// A sampled contradiction of a proved implication: the hypothesis held on
/// the grid while the oracle found Re Q_ST negative. Carries enough to
/// replay: the corpus index pins the function, the pair pins the criterion
/// instance, and the oracle argmin locates the refuting point.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub criterion_id: &'static str,
    pub function_index: usize,
    pub alpha: f64,
    pub beta: f64,
    /// Hypothesis margin that (wrongly) certified the function.
    pub criterion_margin: f64,
    pub oracle_min: f64,
    pub oracle_arg: Complex64,
}

/// Aggregated outcome for one criterion across the corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionTally {
    pub criterion_id: &'static str,
    pub pairs: Vec<(f64, f64)>,
    /// (function, pair) combinations whose hypothesis held.
    pub hypothesis_true_count: usize,
    /// Hypothesis-true combinations the oracle confirmed starlike. Falls
    /// short of hypothesis_true_count only by violations and oracle
    /// inconclusives.
    pub conclusion_true_count: usize,
    /// Combinations that could not be judged: the function failed the
    /// nonvanishing precondition, or every grid point was inapplicable.
    pub inapplicable_count: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ImplicationReport {
    pub functions: usize,
    /// Corpus members excluded by the nonvanishing precondition.
    pub inapplicable_functions: usize,
    /// Corpus members the oracle certified starlike.
    pub starlike_functions: usize,
    pub tallies: Vec<CriterionTally>,
}

impl ImplicationReport {
    pub fn total_violations(&self) -> usize {
        self.tallies.iter().map(|t| t.violations.len()).sum()
    }

    /// Largest per-criterion hypothesis coverage; zero means every check
    /// this report ran was vacuous.
    pub fn max_hypothesis_coverage(&self) -> usize {
        self.tallies
            .iter()
            .map(|t| t.hypothesis_true_count)
            .max()
            .unwrap_or(0)
    }
}

/// Per-criterion outcome of scanning one function.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionHits {
    /// (pair index, hypothesis margin) for pairs whose hypothesis held.
    pub true_pairs: Vec<(usize, f64)>,
    /// Pairs with no applicable grid point.
    pub inapplicable_pairs: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScanOutcome {
    /// nonvanishing_check would not certify f(z)f'(z)/z != 0.
    Inapplicable,
    Evaluated {
        oracle: OracleVerdict,
        /// Aligned with the catalog passed to [`scan_function`].
        hits: Vec<CriterionHits>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FunctionScan {
    pub index: usize,
    pub outcome: ScanOutcome,
}

/// Evaluates one corpus member against every criterion and the oracle.
/// Pure in (catalog, cfg, index), so corpus members can be scanned in
/// parallel and folded with [`absorb`] in index order.
pub fn scan_function(catalog: &[CriterionSpec], cfg: &CorpusConfig, index: usize) -> FunctionScan {
    let f = random_function(cfg, index);
    let precondition = nonvanishing_check(&f, &cfg.grid);
    if precondition.verdict != Verdict::Holds {
        return FunctionScan {
            index,
            outcome: ScanOutcome::Inapplicable,
        };
    }

    // The precondition certified both parts above the margin tolerance on
    // this same grid, so quotient evaluation cannot hit a vanishing part.
    let oracle = min_re_qst(&f, &cfg.grid, 0.0)
        .expect("nonvanishing holds, so quotients exist on this grid");
    let triples: Vec<QuotientTriple> = cfg
        .grid
        .points()
        .map(|z| {
            f.triple_at(z)
                .expect("nonvanishing holds, so quotients exist on this grid")
        })
        .collect();

    let hits = catalog
        .iter()
        .map(|spec| {
            let pairs = criterion_pairs(spec, cfg);
            let mut true_pairs = Vec::new();
            let mut inapplicable_pairs = 0usize;
            for (pair_index, &(alpha, beta)) in pairs.iter().enumerate() {
                let t = spec.threshold.value(alpha, beta);
                let mut worst = f64::INFINITY;
                let mut applicable = false;
                for q in &triples {
                    let value = match spec.psi.eval(q.u, q.v, q.w, alpha, beta) {
                        Ok(value) => value,
                        Err(CatalogError::RatioAtZero { .. }) => continue,
                        Err(_) => unreachable!("psi evaluation only fails on ratio denominators"),
                    };
                    applicable = true;
                    let margin = match spec.direction {
                        Direction::Gt => value.re - t,
                        Direction::Lt => t - value.re,
                    };
                    if margin < worst {
                        worst = margin;
                    }
                }
                if !applicable {
                    inapplicable_pairs += 1;
                } else if worst > 0.0 {
                    true_pairs.push((pair_index, worst));
                }
            }
            CriterionHits {
                true_pairs,
                inapplicable_pairs,
            }
        })
        .collect();

    FunctionScan {
        index,
        outcome: ScanOutcome::Evaluated { oracle, hits },
    }
}

/// A report with zeroed tallies, ready to absorb scans of this catalog.
pub fn empty_report(catalog: &[CriterionSpec], cfg: &CorpusConfig) -> ImplicationReport {
    ImplicationReport {
        functions: 0,
        inapplicable_functions: 0,
        starlike_functions: 0,
        tallies: catalog
            .iter()
            .map(|spec| CriterionTally {
                criterion_id: spec.id,
                pairs: criterion_pairs(spec, cfg),
                hypothesis_true_count: 0,
                conclusion_true_count: 0,
                inapplicable_count: 0,
                violations: Vec::new(),
            })
            .collect(),
    }
}

/// Folds one function's scan into the report. Absorbing scans in index
/// order yields identical reports regardless of how they were produced.
pub fn absorb(report: &mut ImplicationReport, scan: FunctionScan) {
    report.functions += 1;
    match scan.outcome {
        ScanOutcome::Inapplicable => {
            report.inapplicable_functions += 1;
            for tally in &mut report.tallies {
                tally.inapplicable_count += tally.pairs.len();
            }
        }
        ScanOutcome::Evaluated { oracle, hits } => {
            assert_eq!(
                hits.len(),
                report.tallies.len(),
                "scan and report come from different catalogs"
            );
            if oracle.verdict == Verdict::Holds {
                report.starlike_functions += 1;
            }
            for (tally, hit) in report.tallies.iter_mut().zip(hits) {
                tally.hypothesis_true_count += hit.true_pairs.len();
                tally.inapplicable_count += hit.inapplicable_pairs;
                match oracle.verdict {
                    Verdict::Holds => tally.conclusion_true_count += hit.true_pairs.len(),
                    Verdict::Fails => {
                        for (pair_index, margin) in hit.true_pairs {
                            let (alpha, beta) = tally.pairs[pair_index];
                            tally.violations.push(Violation {
                                criterion_id: tally.criterion_id,
                                function_index: scan.index,
                                alpha,
                                beta,
                                criterion_margin: margin,
                                oracle_min: oracle.min_value,
                                oracle_arg: oracle.arg_min,
                            });
                        }
                    }
                    // Oracle minimum inside the tolerance band: neither a
                    // confirmation nor a counterexample.
                    Verdict::Inconclusive => {}
                }
            }
        }
    }
}

/// Sequential scan of the whole corpus.
pub fn implication_test(catalog: &[CriterionSpec], cfg: &CorpusConfig) -> ImplicationReport {
    let mut report = empty_report(catalog, cfg);
    for index in 0..cfg.count {
        absorb(&mut report, scan_function(catalog, cfg, index));
    }
    report
}
