//! Exhaustive scans and cross-check suites over delayed hedgehogs, eps
//! vectors and random trees.
//!
//! Every scan produces [`ScanRecord`]s in a fixed canonical order (lengths
//! ascending, then lexicographic), whatever the number of worker threads, so
//! reports are stable artifacts.

mod enumerate;
pub mod golden;
pub mod report;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plucking::{
    family_1_4k_1, hedgehog_anti_unimodal, hedgehog_delay12, DelayedHedgehog, Plucker,
};
use crate::qpoly::{
    eps_poly, factor_quantum, gaussian_binomial, is_strictly_unimodal, is_symmetric, is_unimodal,
    q_factorial, quantum_integer, EpsVector, FactoredForm, QPolynomial,
};
use crate::tree::{
    format_delays, random_tree, serialize_delayed_tree, serialize_tree, DelayAssignment,
    DelayedTree, PlaneRootedTree,
};

pub use enumerate::{all_sequences, anti_unimodal_sequences};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("scan needs {required} records but the limit is {limit}")]
    BudgetExceeded { limit: usize, required: usize },
    #[error("recursion and closed form disagree on {descriptor}: recursion {recursion}, formula {formula}")]
    FormulaMismatch {
        descriptor: String,
        recursion: QPolynomial,
        formula: QPolynomial,
    },
    #[error("{suite}: counterexample at {descriptor}: {detail}")]
    CounterexampleFound {
        suite: String,
        descriptor: String,
        detail: String,
    },
    #[error("invalid scan parameter: {0}")]
    InvalidParameter(String),
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("malformed report: {0}")]
    Report(String),
}

/// One scanned input with its polynomial and shape verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub input_descriptor: String,
    pub polynomial: QPolynomial,
    pub unimodal: bool,
    pub strictly_unimodal: bool,
    pub symmetric: bool,
    /// `None` exactly when the polynomial is zero.
    pub factored: Option<FactoredForm>,
    pub zero: bool,
}

impl ScanRecord {
    pub fn new(input_descriptor: impl Into<String>, polynomial: QPolynomial) -> Self {
        Self {
            input_descriptor: input_descriptor.into(),
            unimodal: is_unimodal(&polynomial),
            strictly_unimodal: is_strictly_unimodal(&polynomial),
            symmetric: is_symmetric(&polynomial),
            factored: factor_quantum(&polynomial).ok(),
            zero: polynomial.is_zero(),
            polynomial,
        }
    }

    /// Whether the stored verdicts match the stored polynomial.
    pub fn is_consistent(&self) -> bool {
        let fresh = ScanRecord::new(self.input_descriptor.clone(), self.polynomial.clone());
        self.unimodal == fresh.unimodal
            && self.strictly_unimodal == fresh.strictly_unimodal
            && self.symmetric == fresh.symmetric
            && self.zero == fresh.zero
            && match &self.factored {
                Some(f) => f.expand() == self.polynomial,
                None => self.zero,
            }
    }

    /// A nonzero polynomial that is not unimodal.
    pub fn is_counterexample(&self) -> bool {
        !self.zero && !self.unimodal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub suite: String,
    /// Set for scans whose hypotheses go beyond the hedgehog setting.
    pub exploratory: bool,
    pub total: usize,
    pub zero_count: usize,
    /// Descriptors of nonzero, non-unimodal records, in record order.
    pub non_unimodal: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ScanSummary {
    pub fn from_records(suite: &str, records: &[ScanRecord], started: Instant) -> Self {
        Self {
            suite: suite.to_string(),
            exploratory: false,
            total: records.len(),
            zero_count: records.iter().filter(|r| r.zero).count(),
            non_unimodal: records
                .iter()
                .filter(|r| r.is_counterexample())
                .map(|r| r.input_descriptor.clone())
                .collect(),
            elapsed_ms: Some(started.elapsed().as_millis() as u64),
        }
    }

    /// The summary without wall-clock timing, for byte-stable output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanReport {
    fn build(suite: &str, records: Vec<ScanRecord>, started: Instant) -> Self {
        let summary = ScanSummary::from_records(suite, &records, started);
        Self { records, summary }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ScanOptions {
    /// Worker threads; 0 lets the pool pick.
    pub jobs: usize,
    /// Refuse scans that would produce more records than this.
    pub record_limit: Option<usize>,
}

impl ScanOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        Self {
            jobs,
            record_limit: None,
        }
    }

    fn check_budget(&self, required: usize) -> Result<(), SearchError> {
        match self.record_limit {
            Some(limit) if required > limit => Err(SearchError::BudgetExceeded { limit, required }),
            _ => Ok(()),
        }
    }
}

/// Maps `work` over `items` on a pool of `opts.jobs` threads, each worker
/// holding its own [`Plucker`]. Output order matches input order.
fn run_parallel<T, R, F>(opts: &ScanOptions, items: &[T], work: F) -> Result<Vec<R>, SearchError>
where
    T: Sync,
    R: Send,
    F: Fn(&mut Plucker, &T) -> R + Sync + Send,
{
    if opts.jobs == 1 {
        let mut plucker = Plucker::new();
        return Ok(items.iter().map(|x| work(&mut plucker, x)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| SearchError::ThreadPool(e.to_string()))?;
    Ok(pool.install(|| {
        items
            .par_iter()
            .map_init(Plucker::new, |p, x| work(p, x))
            .collect()
    }))
}

fn counterexample(
    suite: &str,
    descriptor: impl Into<String>,
    detail: impl Into<String>,
) -> SearchError {
    SearchError::CounterexampleFound {
        suite: suite.to_string(),
        descriptor: descriptor.into(),
        detail: detail.into(),
    }
}

fn hedgehog_q(plucker: &mut Plucker, delays: &[u32]) -> QPolynomial {
    let t = DelayedTree::hedgehog(delays).expect("scan delays are positive");
    plucker
        .delayed(&t.tree, &t.delays)
        .expect("hedgehog delays match its leaves")
}

/// Every delay sequence of each length in `n_min..=n_max` over `values`,
/// evaluated with the delay recursion.
pub fn scan_hedgehog_delays(
    n_min: usize,
    n_max: usize,
    values: &[u32],
    opts: &ScanOptions,
) -> Result<ScanReport, SearchError> {
    if n_min < 1 || n_min > n_max {
        return Err(SearchError::InvalidParameter(format!(
            "need 1 <= n_min <= n_max, got {n_min}..{n_max}"
        )));
    }
    let mut values = values.to_vec();
    values.sort_unstable();
    values.dedup();
    if values.is_empty() || values[0] == 0 {
        return Err(SearchError::InvalidParameter(
            "delay values must be a nonempty set of positive integers".into(),
        ));
    }
    let required: usize = (n_min..=n_max)
        .map(|n| values.len().saturating_pow(n as u32))
        .fold(0usize, usize::saturating_add);
    opts.check_budget(required)?;

    let started = Instant::now();
    let inputs: Vec<Vec<u32>> = (n_min..=n_max)
        .flat_map(|n| all_sequences(n, &values))
        .collect();
    let records = run_parallel(opts, &inputs, |p, d| {
        ScanRecord::new(format_delays(d), hedgehog_q(p, d))
    })?;
    let suite = format!("hedgehog-delays values={}", format_value_set(&values));
    Ok(ScanReport::build(&suite, records, started))
}

fn format_value_set(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// All {1,2}-delay hedgehogs with up to `n_max` leaves, through both the
/// recursion and the `p_n(q) [n-1]_q!` formula.
pub fn verify_conjecture_12(n_max: usize, opts: &ScanOptions) -> Result<ScanReport, SearchError> {
    let started = Instant::now();
    let mut report = scan_hedgehog_delays(1, n_max, &[1, 2], opts)?;
    for record in &report.records {
        let delays = crate::tree::parse_hedgehog_shorthand(&record.input_descriptor)
            .map_err(|e| SearchError::Report(e.to_string()))?;
        let eps = DelayedHedgehog::new(delays)
            .ok()
            .and_then(|h| h.eps_vector())
            .ok_or_else(|| SearchError::Report(record.input_descriptor.clone()))?;
        let formula = hedgehog_delay12(&eps);
        if formula != record.polynomial {
            return Err(SearchError::FormulaMismatch {
                descriptor: record.input_descriptor.clone(),
                recursion: record.polynomial.clone(),
                formula,
            });
        }
    }
    report.summary = ScanSummary::from_records("conjecture12", &report.records, started);
    Ok(report)
}

/// `1^2 4^k 1^2` for `k = 1..=k_max`, closed form.
pub fn scan_family_1_4k_1_report(k_max: usize) -> Result<ScanReport, SearchError> {
    if k_max < 1 {
        return Err(SearchError::InvalidParameter(
            "k_max must be at least 1".into(),
        ));
    }
    let started = Instant::now();
    let records = (1..=k_max)
        .map(|k| {
            let q = family_1_4k_1(k).expect("k >= 1");
            ScanRecord::new(format!("1^2 4^{k} 1^2"), q)
        })
        .collect();
    Ok(ScanReport::build("family-1^2 4^k 1^2", records, started))
}

/// `(k, unimodal)` for `k = 1..=k_max`.
pub fn scan_family_1_4k_1(k_max: usize) -> Result<Vec<(usize, bool)>, SearchError> {
    Ok(scan_family_1_4k_1_report(k_max)?
        .records
        .iter()
        .enumerate()
        .map(|(i, r)| (i + 1, r.unimodal))
        .collect())
}

/// Hedgehog delay strings from the non-unimodal discussion, in order.
pub const GARSTKA_DESCRIPTORS: [&str; 6] = [
    "21412",
    "214412",
    "1214121",
    "112141211",
    "2114112",
    "211141112",
];

pub fn check_garstka_report() -> ScanReport {
    let started = Instant::now();
    let mut plucker = Plucker::new();
    let records = GARSTKA_DESCRIPTORS
        .iter()
        .map(|&d| {
            let delays = crate::tree::parse_hedgehog_shorthand(d).expect("fixed descriptor");
            ScanRecord::new(d, hedgehog_q(&mut plucker, &delays))
        })
        .collect();
    ScanReport::build("garstka", records, started)
}

pub fn check_garstka_list() -> Vec<(String, bool)> {
    check_garstka_report()
        .records
        .into_iter()
        .map(|r| (r.input_descriptor, r.unimodal))
        .collect()
}

/// Anti-unimodal hedgehog delays of length `1..=n_max`, values `1..=max_value`,
/// each containing a 1: closed form against recursion.
pub fn scan_anti_unimodal(
    n_max: usize,
    max_value: u32,
    opts: &ScanOptions,
) -> Result<ScanReport, SearchError> {
    if n_max < 1 || max_value < 1 {
        return Err(SearchError::InvalidParameter(
            "n_max and max_value must be at least 1".into(),
        ));
    }
    let inputs: Vec<Vec<u32>> = (1..=n_max)
        .flat_map(|n| anti_unimodal_sequences(n, max_value, true))
        .collect();
    opts.check_budget(inputs.len())?;
    let started = Instant::now();
    let results = run_parallel(opts, &inputs, |p, d| {
        let recursion = hedgehog_q(p, d);
        let h = DelayedHedgehog::new(d.clone()).expect("positive delays");
        let formula = hedgehog_anti_unimodal(&h).expect("enumerated anti-unimodal");
        (format_delays(d), recursion, formula)
    })?;
    let mut records = Vec::with_capacity(results.len());
    for (descriptor, recursion, formula) in results {
        if recursion != formula {
            return Err(SearchError::FormulaMismatch {
                descriptor,
                recursion,
                formula,
            });
        }
        records.push(ScanRecord::new(descriptor, recursion));
    }
    Ok(ScanReport::build("anti-unimodal", records, started))
}

/// Random plane trees with every anti-unimodal delay assignment (read along
/// the left-to-right leaf order) that contains a 1. Exploratory: findings are
/// reported, never treated as errors.
pub fn scan_general_trees_anti_unimodal(
    edge_max: usize,
    max_value: u32,
    seed: u64,
    samples: usize,
    opts: &ScanOptions,
) -> Result<ScanReport, SearchError> {
    if edge_max < 1 || max_value < 1 {
        return Err(SearchError::InvalidParameter(
            "edge_max and max_value must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut trees = Vec::new();
    for _ in 0..samples {
        let edges = rng.random_range(1..=edge_max);
        let t = random_tree(edges, &mut rng);
        if seen.insert(serialize_tree(&t)) {
            trees.push(t);
        }
    }
    let mut inputs: Vec<(PlaneRootedTree, DelayAssignment)> = Vec::new();
    for t in &trees {
        for d in anti_unimodal_sequences(t.leaf_count(), max_value, true) {
            inputs.push((t.clone(), DelayAssignment::new(d).expect("positive delays")));
            opts.check_budget(inputs.len())?;
        }
    }
    let started = Instant::now();
    let records = run_parallel(opts, &inputs, |p, (t, f)| {
        let q = p.delayed(t, f).expect("assignment sized to leaves");
        ScanRecord::new(serialize_delayed_tree(t, f), q)
    })?;
    let mut report = ScanReport::build("general-anti-unimodal", records, started);
    report.summary.exploratory = true;
    Ok(report)
}

/// `p_{n+1}(q) [n]_q` is unimodal for every eps of length `n + 1`, and its
/// coefficients satisfy `c_n - c_{n-1} = eps_n - eps_0`.
pub fn check_prop33(n_max: usize, opts: &ScanOptions) -> Result<ScanReport, SearchError> {
    const SUITE: &str = "prop33";
    if n_max < 1 {
        return Err(SearchError::InvalidParameter(
            "n_max must be at least 1".into(),
        ));
    }
    let inputs: Vec<(usize, EpsVector)> = (1..=n_max)
        .flat_map(|n| EpsVector::all(n + 1).map(move |e| (n, e)))
        .collect();
    opts.check_budget(inputs.len())?;
    let started = Instant::now();
    let records = run_parallel(opts, &inputs, |_, (n, eps)| {
        let q = &eps_poly(eps) * &quantum_integer(*n);
        let step = q.coeff(*n) - q.coeff(n - 1);
        let expected = i64::from(eps.get(*n)) - i64::from(eps.get(0));
        (
            ScanRecord::new(format!("n={n} eps={eps}"), q),
            step == expected.into(),
        )
    })?;
    let mut out = Vec::with_capacity(records.len());
    for (record, step_ok) in records {
        if !record.unimodal {
            return Err(counterexample(
                SUITE,
                record.input_descriptor,
                "not unimodal",
            ));
        }
        if !step_ok {
            return Err(counterexample(
                SUITE,
                record.input_descriptor,
                "c_n - c_(n-1) differs from eps_n - eps_0",
            ));
        }
        out.push(record);
    }
    Ok(ScanReport::build(SUITE, out, started))
}

/// `p_{n+2}(q) [n+1]_q [n]_q` unimodal for all eps of length `n + 2`, and
/// `p_{n+1}(q) [n]_q!` unimodal whenever `p_{n+1}` is symmetric, for
/// `n = 0..=n_max`.
pub fn check_prop35_and_corollary(
    n_max: usize,
    opts: &ScanOptions,
) -> Result<ScanReport, SearchError> {
    const SUITE: &str = "prop35";
    if n_max < 1 {
        return Err(SearchError::InvalidParameter(
            "n_max must be at least 1".into(),
        ));
    }
    let mut inputs: Vec<(String, QPolynomial)> = Vec::new();
    for n in 0..=n_max {
        let tail = &quantum_integer(n + 1) * &quantum_integer(n);
        for eps in EpsVector::all(n + 2) {
            inputs.push((format!("prop35 n={n} eps={eps}"), &eps_poly(&eps) * &tail));
        }
    }
    for n in 0..=n_max {
        let fact = q_factorial(n);
        for eps in EpsVector::all(n + 1) {
            let p = eps_poly(&eps);
            if is_symmetric(&p) {
                inputs.push((format!("cor34 n={n} eps={eps}"), &p * &fact));
            }
        }
    }
    opts.check_budget(inputs.len())?;
    let started = Instant::now();
    let records = run_parallel(opts, &inputs, |_, (d, q)| {
        ScanRecord::new(d.clone(), q.clone())
    })?;
    if let Some(bad) = records.iter().find(|r| !r.unimodal) {
        return Err(counterexample(
            SUITE,
            bad.input_descriptor.clone(),
            "not unimodal",
        ));
    }
    Ok(ScanReport::build(SUITE, records, started))
}

/// `Q(T)` agrees across random re-embeddings of random trees, and so do the
/// canonical keys. Each embedding is evaluated with an embedding-sensitive
/// memo so no cached value is shared between embeddings.
pub fn embedding_invariance_test(
    edge_max: usize,
    trees: usize,
    shuffles: usize,
    seed: u64,
    opts: &ScanOptions,
) -> Result<ScanReport, SearchError> {
    const SUITE: &str = "embedding";
    if edge_max < 1 || trees < 1 || shuffles < 1 {
        return Err(SearchError::InvalidParameter(
            "edge_max, trees and shuffles must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inputs = Vec::with_capacity(trees);
    for _ in 0..trees {
        let edges = rng.random_range(1..=edge_max);
        let t = random_tree(edges, &mut rng);
        let seeds: Vec<u64> = (0..shuffles).map(|_| rng.random()).collect();
        inputs.push((t, seeds));
    }
    opts.check_budget(inputs.len())?;
    let started = Instant::now();
    let outcomes = run_parallel(opts, &inputs, |_, (t, seeds)| {
        let base = Plucker::embedding_sensitive().plain(t);
        let key = t.canonical_key();
        for &s in seeds {
            let shuffled = t.random_embedding(s);
            let descriptor = format!("{} seed={s}", serialize_tree(&shuffled));
            if shuffled.canonical_key() != key {
                return Err((descriptor, "canonical key changed".to_string()));
            }
            let q = Plucker::embedding_sensitive().plain(&shuffled);
            if q != base {
                return Err((descriptor, format!("Q = {q}, original {base}")));
            }
        }
        Ok(ScanRecord::new(serialize_tree(t), base))
    })?;
    let records = outcomes
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|(d, detail)| counterexample(SUITE, d, detail))?;
    Ok(ScanReport::build(SUITE, records, started))
}

/// `Q(T_{b,a}) = binom(a+b, a)_q` for `1 <= a <= a_max`, `1 <= b <= b_max`.
pub fn two_branch_check(a_max: usize, b_max: usize) -> Result<ScanReport, SearchError> {
    const SUITE: &str = "two-branch";
    if a_max < 1 || b_max < 1 {
        return Err(SearchError::InvalidParameter(
            "a_max and b_max must be at least 1".into(),
        ));
    }
    let started = Instant::now();
    let mut plucker = Plucker::new();
    let mut records = Vec::new();
    for a in 1..=a_max {
        for b in 1..=b_max {
            let q = plucker.plain(&PlaneRootedTree::two_branch(b, a));
            let expected = gaussian_binomial(a + b, a as i64);
            let descriptor = format!("T(b={b},a={a})");
            if q != expected {
                return Err(counterexample(
                    SUITE,
                    descriptor,
                    format!("Q = {q}, Gaussian binomial {expected}"),
                ));
            }
            records.push(ScanRecord::new(descriptor, q));
        }
    }
    Ok(ScanReport::build(SUITE, records, started))
}
