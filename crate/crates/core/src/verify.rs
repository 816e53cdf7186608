//! Exhaustive certification of the bounds over all trees of given orders.

use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_exact, bounds_for, AlphaRegime, Direction, GammaRange, TheoremId};
use crate::canon::{canonical_code, CanonicalCode};
use crate::enumerate::{free_trees, free_trees_part, partition_keys};
use crate::error::{Error, Result};
use crate::families::{Family, FamilyKind, FamilyRecognizer};
use crate::invariants::domination_number;
use crate::numeric::{approx_eq, integral_exponent, pow};
use crate::tree::Tree;

pub const DEFAULT_MAX_ORDER: usize = 14;
pub const MAX_ORDER_ENV: &str = "TREEBOUND_MAX_ORDER";
pub const DEFAULT_ALPHAS: [f64; 7] = [-1.0, -0.5, 0.25, 0.5, 0.75, 2.0, 3.0];
pub const CSV_HEADER: &str =
    "n,gamma,alpha,theorem,direction,bound,extremal_value,satisfied,equality_count,family_match";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest order `verify` accepts.
    pub max_order: usize,
    /// Worker threads; 1 processes the tree stream serially.
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_order: DEFAULT_MAX_ORDER, jobs: 1 }
    }
}

impl VerifyConfig {
    /// Default configuration with the ceiling taken from `TREEBOUND_MAX_ORDER`
    /// when it is set.
    pub fn from_env() -> Result<Self> {
        let mut config = VerifyConfig::default();
        if let Ok(text) = std::env::var(MAX_ORDER_ENV) {
            config.max_order = text.trim().parse().map_err(|_| {
                Error::InvalidParameters(format!("{MAX_ORDER_ENV} must be an integer, got `{text}`"))
            })?;
        }
        Ok(config)
    }
}

/// Outcome of one bound over one domination-number bucket.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub theorem_id: TheoremId,
    pub direction: Direction,
    pub value: f64,
    pub gamma_range: GammaRange,
    pub satisfied: bool,
    /// max over the bucket for upper bounds, min for lower bounds
    pub extremal_value: f64,
    pub equality_achiever_codes: Vec<CanonicalCode>,
    pub family_match: bool,
    pub counterexample_codes: Vec<CanonicalCode>,
}

impl BoundCheck {
    pub fn attained(&self) -> bool {
        !self.equality_achiever_codes.is_empty()
    }

    fn violations(&self) -> usize {
        usize::from(!self.satisfied) + usize::from(!self.family_match) + usize::from(!self.attained())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub gamma: usize,
    pub tree_class_count: usize,
    pub min_value: f64,
    pub max_value: f64,
    pub applicable_bounds: Vec<BoundCheck>,
    pub equality_achiever_codes: Vec<CanonicalCode>,
    pub family_match: bool,
    pub counterexample_codes: Vec<CanonicalCode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub order: usize,
    pub alpha: f64,
    pub rows: Vec<ReportRow>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    /// Unsatisfied bounds, achiever/family mismatches and unattained bounds.
    pub fn violations(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| &r.applicable_bounds)
            .map(BoundCheck::violations)
            .sum()
    }

    pub fn tree_count(&self) -> usize {
        self.rows.iter().map(|r| r.tree_class_count).sum()
    }

    pub fn without_timing(mut self) -> Self {
        self.runtime_ms = 0;
        self
    }
}

/// Per-tree data shared by every exponent.
#[derive(Debug, Clone)]
struct TreeRecord {
    code: CanonicalCode,
    gamma: usize,
    /// `degree_count[d]` vertices of degree `d`
    degree_count: Vec<usize>,
    members: [bool; 3],
}

impl TreeRecord {
    fn value(&self, alpha: f64) -> f64 {
        self.degree_count
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(d, &c)| c as f64 * pow(d as f64, alpha))
            .sum()
    }

    fn exact_value(&self, power: u32) -> i128 {
        self.degree_count
            .iter()
            .enumerate()
            .map(|(d, &c)| c as i128 * (d as i128).pow(power))
            .sum()
    }
}

fn family_of(theorem: TheoremId) -> Family {
    match theorem {
        TheoremId::F1Bound => Family::F1,
        TheoremId::F2Bound => Family::F2,
        TheoremId::F3Bound => Family::F3,
    }
}

fn family_slot(family: Family) -> usize {
    match family {
        Family::F1 => 0,
        Family::F2 => 1,
        Family::F3 => 2,
    }
}

struct Recognizers(BTreeMap<(usize, Family), FamilyRecognizer>);

impl Recognizers {
    fn for_order(n: usize) -> Result<Self> {
        let mut map = BTreeMap::new();
        for gamma in 1..=n / 2 {
            for family in [Family::F1, Family::F2, Family::F3] {
                if FamilyKind::is_feasible(family, n, gamma) {
                    let kind = FamilyKind::new(family, n, gamma)?;
                    map.insert((gamma, family), FamilyRecognizer::new(kind)?);
                }
            }
        }
        Ok(Recognizers(map))
    }

    fn record(&self, tree: &Tree) -> Result<TreeRecord> {
        let code = canonical_code(tree);
        let gamma = domination_number(tree).gamma;
        let mut degree_count = vec![0usize; tree.max_degree() + 1];
        for d in tree.degrees() {
            degree_count[d] += 1;
        }
        let mut members = [false; 3];
        for family in [Family::F1, Family::F2, Family::F3] {
            if let Some(rec) = self.0.get(&(gamma, family)) {
                members[family_slot(family)] = rec.accepts_with(tree, gamma, Some(&code))?;
            }
        }
        Ok(TreeRecord { code, gamma, degree_count, members })
    }
}

fn records_for(n: usize, jobs: usize) -> Result<Vec<TreeRecord>> {
    let recognizers = Recognizers::for_order(n)?;
    if jobs <= 1 {
        return free_trees(n).map(|t| recognizers.record(&t)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    let mut tagged: Vec<(usize, TreeRecord)> = pool.install(|| {
        partition_keys(n)
            .into_par_iter()
            .map(|key| {
                free_trees_part(n, key)
                    .map(|(index, tree)| Ok((index, recognizers.record(&tree)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()
    })?
    .into_iter()
    .flatten()
    .collect();
    tagged.sort_by_key(|(index, _)| *index);
    Ok(tagged.into_iter().map(|(_, r)| r).collect())
}

fn check_bucket(n: usize, gamma: usize, alpha: f64, bucket: &[&TreeRecord]) -> Result<ReportRow> {
    let exact = integral_exponent(alpha);
    let values: Vec<f64> = bucket.iter().map(|r| r.value(alpha)).collect();
    let exact_values: Option<Vec<i128>> = exact.map(|p| bucket.iter().map(|r| r.exact_value(p)).collect());
    let min_value = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max_value = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let mut applicable_bounds = Vec::new();
    for bound in bounds_for(n, gamma, alpha)? {
        let exact_bound = match exact {
            Some(p) => Some(bound_exact(bound.theorem_id, n, gamma, p)?),
            None => None,
        };
        let slot = family_slot(family_of(bound.theorem_id));
        let mut achievers = Vec::new();
        let mut family = Vec::new();
        let mut counterexamples = Vec::new();
        for (i, record) in bucket.iter().enumerate() {
            let (admitted, equal) = match (&exact_values, exact_bound) {
                (Some(ev), Some(eb)) => (bound.direction.admits_exact(ev[i], eb), ev[i] == eb),
                _ => (bound.direction.admits(values[i], bound.value), approx_eq(values[i], bound.value)),
            };
            if !admitted {
                counterexamples.push(record.code.clone());
            }
            if equal {
                achievers.push(record.code.clone());
            }
            if record.members[slot] {
                family.push(record.code.clone());
            }
        }
        achievers.sort();
        family.sort();
        counterexamples.sort();
        applicable_bounds.push(BoundCheck {
            theorem_id: bound.theorem_id,
            direction: bound.direction,
            value: bound.value,
            gamma_range: bound.gamma_range,
            satisfied: counterexamples.is_empty(),
            extremal_value: match bound.direction {
                Direction::Upper => max_value,
                Direction::Lower => min_value,
            },
            family_match: achievers == family,
            equality_achiever_codes: achievers,
            counterexample_codes: counterexamples,
        });
    }

    let mut equality_achiever_codes: Vec<CanonicalCode> = applicable_bounds
        .iter()
        .flat_map(|b| b.equality_achiever_codes.iter().cloned())
        .collect();
    equality_achiever_codes.sort();
    equality_achiever_codes.dedup();
    let mut counterexample_codes: Vec<CanonicalCode> = applicable_bounds
        .iter()
        .flat_map(|b| b.counterexample_codes.iter().cloned())
        .collect();
    counterexample_codes.sort();
    counterexample_codes.dedup();

    Ok(ReportRow {
        gamma,
        tree_class_count: bucket.len(),
        min_value,
        max_value,
        family_match: applicable_bounds.iter().all(|b| b.family_match),
        applicable_bounds,
        equality_achiever_codes,
        counterexample_codes,
    })
}

/// Checks every applicable bound, and the equality/family coupling, for
/// every tree with `min_order <= n <= max_order` and every exponent in
/// `alphas`. One report per `(n, alpha)`, ordered by `n` then by position in
/// `alphas`.
pub fn verify(
    min_order: usize,
    max_order: usize,
    alphas: &[f64],
    config: &VerifyConfig,
) -> Result<Vec<VerificationReport>> {
    if min_order < 2 || min_order > max_order {
        return Err(Error::InvalidParameters(format!(
            "order range must satisfy 2 <= min <= max, got [{min_order}, {max_order}]"
        )));
    }
    if max_order > config.max_order {
        return Err(Error::TooLarge { what: "verify", n: max_order, limit: config.max_order });
    }
    for &alpha in alphas {
        AlphaRegime::strict(alpha)?;
    }

    let mut reports = Vec::new();
    for n in min_order..=max_order {
        let start = Instant::now();
        let records = records_for(n, config.jobs)?;
        let mut buckets: BTreeMap<usize, Vec<&TreeRecord>> = BTreeMap::new();
        for record in &records {
            buckets.entry(record.gamma).or_default().push(record);
        }
        for &alpha in alphas {
            let rows = buckets
                .iter()
                .map(|(&gamma, bucket)| check_bucket(n, gamma, alpha, bucket))
                .collect::<Result<Vec<_>>>()?;
            reports.push(VerificationReport {
                order: n,
                alpha,
                rows,
                runtime_ms: start.elapsed().as_millis() as u64,
            });
        }
    }
    Ok(reports)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct CsvRecord {
    n: usize,
    gamma: usize,
    alpha: f64,
    theorem: TheoremId,
    direction: Direction,
    bound: f64,
    extremal_value: f64,
    satisfied: bool,
    equality_count: usize,
    family_match: bool,
}

/// Serializes reports: JSON as an array mirroring [`VerificationReport`],
/// CSV as one line per `(n, gamma, alpha, theorem)`.
pub fn emit_report<W: Write>(reports: &[VerificationReport], format: ReportFormat, mut out: W) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidParameters(format!("write failed: {e}"));
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, reports)
                .map_err(|e| Error::InvalidParameters(format!("write failed: {e}")))?;
            out.write_all(b"\n").map_err(io)?;
        }
        ReportFormat::Csv => {
            let mut writer = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            writer
                .write_record(CSV_HEADER.split(','))
                .map_err(|e| Error::InvalidParameters(format!("write failed: {e}")))?;
            for report in reports {
                for row in &report.rows {
                    for check in &row.applicable_bounds {
                        writer
                            .serialize(CsvRecord {
                                n: report.order,
                                gamma: row.gamma,
                                alpha: report.alpha,
                                theorem: check.theorem_id,
                                direction: check.direction,
                                bound: check.value,
                                extremal_value: check.extremal_value,
                                satisfied: check.satisfied,
                                equality_count: check.equality_achiever_codes.len(),
                                family_match: check.family_match,
                            })
                            .map_err(|e| Error::InvalidParameters(format!("write failed: {e}")))?;
                    }
                }
            }
            writer.flush().map_err(io)?;
        }
    }
    Ok(())
}

pub fn emit_report_bytes(reports: &[VerificationReport], format: ReportFormat) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    emit_report(reports, format, &mut buf)?;
    Ok(buf)
}
