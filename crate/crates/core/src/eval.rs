//! Gold-standard loading, dataset statistics, accuracy and chunked
//! comparison reports.
//!
//! Accuracy is correctly stemmed unique words over unique words, times 100.
//! Values are kept exact (as a count pair) and only truncated to one decimal
//! when displayed, so 101/118 = 85.59... shows as `85.5`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::script::GraphemeWord;
use crate::stem::Stemmer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("gold line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("accuracy is undefined over zero unique words")]
    UndefinedMetric,
    #[error("{correct} correct out of {unique} unique words is impossible")]
    InvalidCounts { correct: u64, unique: u64 },
    #[error("gold set is empty")]
    EmptyGold,
    #[error("no chunk sizes given")]
    NoChunks,
    #[error("chunk size {size} exceeds the {available} gold entries")]
    ChunkTooLarge { size: usize, available: usize },
    #[error("chunk sizes must be positive and ascending; {size} follows {previous}")]
    ChunkOrder { previous: usize, size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldEntry {
    pub surface: GraphemeWord,
    pub expected_stem: GraphemeWord,
}

impl GoldEntry {
    pub fn new(surface: &str, expected_stem: &str) -> Self {
        GoldEntry {
            surface: GraphemeWord::new(surface),
            expected_stem: GraphemeWord::new(expected_stem),
        }
    }
}

/// Parses `surface<TAB>stem` lines. `#` starts a comment; blank lines are skipped.
pub fn load_gold(text: &str) -> Result<Vec<GoldEntry>, EvalError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split('\t').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(EvalError::Parse {
                line,
                message: format!("expected 2 tab-separated fields, found {}", fields.len()),
            });
        }
        if fields.iter().any(|f| f.is_empty()) {
            return Err(EvalError::Parse {
                line,
                message: "empty field".into(),
            });
        }
        out.push(GoldEntry::new(fields[0], fields[1]));
    }
    Ok(out)
}

/// Renders entries in the gold file format.
pub fn render_gold(entries: &[GoldEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("{}\t{}\n", e.surface, e.expected_stem))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct DatasetStats {
    pub total_words: usize,
    pub unique_words: usize,
    /// Shortest word in grapheme clusters; 0 for an empty set.
    pub min_len: usize,
    pub max_len: usize,
}

pub fn dataset_stats<'a, I>(words: I) -> DatasetStats
where
    I: IntoIterator<Item = &'a GraphemeWord>,
{
    let mut seen = std::collections::HashSet::new();
    let mut stats = DatasetStats::default();
    let mut min_len = usize::MAX;
    for w in words {
        stats.total_words += 1;
        if seen.insert(w.as_str()) {
            stats.unique_words += 1;
        }
        min_len = min_len.min(w.len());
        stats.max_len = stats.max_len.max(w.len());
    }
    if stats.total_words > 0 {
        stats.min_len = min_len;
    }
    stats
}

/// Exact accuracy, held as the count pair it was computed from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Accuracy {
    correct: u64,
    unique: u64,
}

pub fn accuracy(n_correct: u64, n_unique: u64) -> Result<Accuracy, EvalError> {
    if n_unique == 0 {
        return Err(EvalError::UndefinedMetric);
    }
    if n_correct > n_unique {
        return Err(EvalError::InvalidCounts {
            correct: n_correct,
            unique: n_unique,
        });
    }
    Ok(Accuracy {
        correct: n_correct,
        unique: n_unique,
    })
}

impl Accuracy {
    pub fn correct(self) -> u64 {
        self.correct
    }

    pub fn unique(self) -> u64 {
        self.unique
    }

    pub fn percent(self) -> f64 {
        self.correct as f64 * 100.0 / self.unique as f64
    }

    /// The percentage in tenths, truncated toward zero, in integer arithmetic.
    pub fn truncated_tenths(self) -> u64 {
        self.correct * 1000 / self.unique
    }
}

impl fmt::Display for Accuracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.truncated_tenths();
        write!(f, "{}.{}", t / 10, t % 10)
    }
}

impl PartialOrd for Accuracy {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        // cross-multiplied, exact
        let lhs = self.correct as u128 * other.unique as u128;
        let rhs = other.correct as u128 * self.unique as u128;
        Some(lhs.cmp(&rhs))
    }
}

impl Serialize for Accuracy {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.percent())
    }
}

/// Truncates a percentage toward zero to one decimal for display.
pub fn format_truncated(percent: f64) -> String {
    // Nudge values like 84.99999999999999 that are 85.0 in exact arithmetic.
    let tenths = (percent * 10.0 + 1e-9).trunc() as i64;
    format!("{}.{}", tenths / 10, (tenths % 10).abs())
}

/// A gold surface listed more than once with different stems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldConflict {
    pub surface: GraphemeWord,
    pub kept: GraphemeWord,
    pub ignored: GraphemeWord,
}

impl fmt::Display for GoldConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "`{}` has conflicting gold stems `{}` and `{}`; keeping `{}`",
            self.surface, self.kept, self.ignored, self.kept
        )
    }
}

/// Index of the first occurrence of each distinct surface, in gold order,
/// plus any conflicts among the repeats.
fn first_occurrences(gold: &[GoldEntry]) -> (Vec<usize>, Vec<GoldConflict>) {
    let mut first: HashMap<&str, usize> = HashMap::new();
    let mut order = Vec::new();
    let mut conflicts = Vec::new();
    for (i, e) in gold.iter().enumerate() {
        match first.get(e.surface.as_str()) {
            Some(&j) => {
                if gold[j].expected_stem != e.expected_stem {
                    conflicts.push(GoldConflict {
                        surface: e.surface.clone(),
                        kept: gold[j].expected_stem.clone(),
                        ignored: e.expected_stem.clone(),
                    });
                }
            }
            None => {
                first.insert(e.surface.as_str(), i);
                order.push(i);
            }
        }
    }
    (order, conflicts)
}

pub fn gold_conflicts(gold: &[GoldEntry]) -> Vec<GoldConflict> {
    first_occurrences(gold).1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub n_unique: u64,
    pub n_correct: u64,
    pub conflicts: Vec<GoldConflict>,
}

impl Evaluation {
    pub fn accuracy(&self) -> Accuracy {
        // n_unique >= 1 because evaluate rejects empty gold
        accuracy(self.n_correct, self.n_unique).expect("non-empty evaluation")
    }
}

/// Scores `stem` against the gold set, one vote per distinct surface (the
/// first listed stem wins).
pub fn evaluate<F>(stem: F, gold: &[GoldEntry]) -> Result<Evaluation, EvalError>
where
    F: Fn(&GraphemeWord) -> GraphemeWord,
{
    if gold.is_empty() {
        return Err(EvalError::EmptyGold);
    }
    let (unique, conflicts) = first_occurrences(gold);
    let n_correct = unique
        .iter()
        .filter(|&&i| stem(&gold[i].surface) == gold[i].expected_stem)
        .count();
    Ok(Evaluation {
        n_unique: unique.len() as u64,
        n_correct: n_correct as u64,
        conflicts,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRow {
    pub n_words: usize,
    pub n_unique: u64,
    #[serde(rename = "correct_strip")]
    pub n_correct_strip: u64,
    #[serde(rename = "correct_light")]
    pub n_correct_light: u64,
    pub acc_strip: Accuracy,
    pub acc_light: Accuracy,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct EvalReport {
    pub rows: Vec<EvalRow>,
    /// Arithmetic mean of the row accuracies, in percent.
    pub avg_strip: f64,
    pub avg_light: f64,
}

fn mean(values: impl ExactSizeIterator<Item = f64>) -> f64 {
    let n = values.len();
    if n == 0 {
        0.0
    } else {
        values.sum::<f64>() / n as f64
    }
}

/// Runs both stemmers over cumulative prefixes of `gold`.
pub fn compare(
    gold: &[GoldEntry],
    chunk_sizes: &[usize],
    strip: &dyn Stemmer,
    light: &dyn Stemmer,
) -> Result<EvalReport, EvalError> {
    if gold.is_empty() {
        return Err(EvalError::EmptyGold);
    }
    if chunk_sizes.is_empty() {
        return Err(EvalError::NoChunks);
    }
    let mut previous = 0;
    for &size in chunk_sizes {
        if size <= previous {
            return Err(EvalError::ChunkOrder { previous, size });
        }
        if size > gold.len() {
            return Err(EvalError::ChunkTooLarge {
                size,
                available: gold.len(),
            });
        }
        previous = size;
    }

    let (unique, _) = first_occurrences(gold);
    let score = |stemmer: &dyn Stemmer| -> Vec<bool> {
        unique
            .iter()
            .map(|&i| stemmer.stem(&gold[i].surface).stem == gold[i].expected_stem)
            .collect()
    };
    let (strip_ok, light_ok) = std::thread::scope(|s| {
        let handle = s.spawn(|| score(strip));
        let light_ok = score(light);
        (handle.join().expect("strip scoring panicked"), light_ok)
    });

    let mut rows = Vec::with_capacity(chunk_sizes.len());
    for &k in chunk_sizes {
        // `unique` is sorted by first occurrence, so a prefix of it is the
        // set of distinct surfaces within the first k entries.
        let n = unique.partition_point(|&i| i < k);
        let strip_c = strip_ok[..n].iter().filter(|&&b| b).count() as u64;
        let light_c = light_ok[..n].iter().filter(|&&b| b).count() as u64;
        rows.push(EvalRow {
            n_words: k,
            n_unique: n as u64,
            n_correct_strip: strip_c,
            n_correct_light: light_c,
            acc_strip: accuracy(strip_c, n as u64)?,
            acc_light: accuracy(light_c, n as u64)?,
        });
    }
    let avg_strip = mean(rows.iter().map(|r| r.acc_strip.percent()));
    let avg_light = mean(rows.iter().map(|r| r.acc_light.percent()));
    Ok(EvalReport {
        rows,
        avg_strip,
        avg_light,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(ReportFormat::Table),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

pub const CSV_HEADER: &str = "n_words,n_unique,correct_strip,acc_strip,correct_light,acc_light";

pub fn render(report: &EvalReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Table => render_table(report),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

fn render_csv(report: &EvalReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n_words, r.n_unique, r.n_correct_strip, r.acc_strip, r.n_correct_light, r.acc_light
        ));
    }
    if !report.rows.is_empty() {
        out.push_str(&format!(
            "avg,,,{},,{}\n",
            format_truncated(report.avg_strip),
            format_truncated(report.avg_light)
        ));
    }
    out
}

fn render_table(report: &EvalReport) -> String {
    let header = [
        "words",
        "unique",
        "correct(strip)",
        "acc(strip)",
        "correct(light)",
        "acc(light)",
    ];
    let mut lines: Vec<[String; 6]> = vec![header.map(String::from)];
    for r in &report.rows {
        lines.push([
            r.n_words.to_string(),
            r.n_unique.to_string(),
            r.n_correct_strip.to_string(),
            format!("{}%", r.acc_strip),
            r.n_correct_light.to_string(),
            format!("{}%", r.acc_light),
        ]);
    }
    if !report.rows.is_empty() {
        lines.push([
            "average".into(),
            String::new(),
            String::new(),
            format!("{}%", format_truncated(report.avg_strip)),
            String::new(),
            format!("{}%", format_truncated(report.avg_light)),
        ]);
    }
    let mut widths = [0usize; 6];
    for l in &lines {
        for (w, cell) in widths.iter_mut().zip(l) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for l in &lines {
        let cells: Vec<String> = l
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (c, w))| {
                if i == 0 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
