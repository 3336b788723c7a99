//! Citation-record and policy files.
//!
//! Records come as CSV with the fixed header
//!
//! ```text
//! article_id,citations,author_count,author_position,x_override,s_override,explicit_partition,rank_override
//! ```
//!
//! (empty cells mean absent, `explicit_partition` is `;`-separated) or as a
//! JSON array of objects with the same field names. Every error carries the
//! line it was found on.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::partition::{self, PartitionPolicy, Scheme, ScheduleExtension};

pub const CSV_HEADER: [&str; 8] = [
    "article_id",
    "citations",
    "author_count",
    "author_position",
    "x_override",
    "s_override",
    "explicit_partition",
    "rank_override",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordFormat {
    Csv,
    Json,
}

impl RecordFormat {
    /// Guesses from a file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => RecordFormat::Json,
            _ => RecordFormat::Csv,
        }
    }
}

/// One publication of the subject author.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArticleRecord {
    pub article_id: String,
    pub citations: u64,
    pub author_count: usize,
    /// 1-based byline position of the subject author.
    pub author_position: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_override: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_override: Option<f64>,
    /// Stated contribution fractions in byline order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit_partition: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_override: Option<usize>,
}

impl ArticleRecord {
    pub fn new(article_id: impl Into<String>, citations: u64, author_count: usize, author_position: usize) -> Self {
        ArticleRecord {
            article_id: article_id.into(),
            citations,
            author_count,
            author_position,
            x_override: None,
            s_override: None,
            explicit_partition: None,
            rank_override: None,
        }
    }

    /// Checks the record invariants; on failure returns the offending column
    /// and the violated constraint.
    pub fn check(&self) -> std::result::Result<(), (&'static str, String)> {
        if self.article_id.trim().is_empty() {
            return Err(("article_id", "must be non-empty".into()));
        }
        if self.author_count == 0 {
            return Err(("author_count", "must be at least 1".into()));
        }
        if self.author_position == 0 || self.author_position > self.author_count {
            return Err((
                "author_position",
                format!(
                    "{} outside [1, author_count = {}]",
                    self.author_position, self.author_count
                ),
            ));
        }
        if let Some(s) = self.s_override {
            if !(s.is_finite() && s > 0.0) {
                return Err(("s_override", format!("{s} must be positive")));
            }
        }
        if let Some(x) = self.x_override {
            let upper = self.s_override.unwrap_or(f64::INFINITY);
            if !(x.is_finite() && x >= 0.0 && x <= upper) {
                return Err(("x_override", format!("{x} outside [0, s]")));
            }
        }
        if let Some(parts) = &self.explicit_partition {
            if self.x_override.is_some() {
                return Err((
                    "explicit_partition",
                    "cannot be combined with x_override".into(),
                ));
            }
            if let Err(e) = partition::explicit_psequence(self.author_count, parts) {
                return Err(("explicit_partition", strip_kind(&e)));
            }
        }
        if let Some(rank) = self.rank_override {
            if rank == 0 || rank > self.author_count {
                return Err((
                    "rank_override",
                    format!("{rank} outside [1, author_count = {}]", self.author_count),
                ));
            }
        }
        Ok(())
    }
}

fn strip_kind(e: &Error) -> String {
    match e {
        Error::Validation(m) | Error::Domain(m) | Error::Policy(m) => m.clone(),
        other => other.to_string(),
    }
}

fn parse_error(line: u64, column: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column: column.to_string(),
        message: message.into(),
    }
}

fn read_all(mut source: impl Read) -> Result<String> {
    let mut text = String::new();
    source.read_to_string(&mut text).map_err(|e| {
        if e.kind() == std::io::ErrorKind::InvalidData {
            parse_error(1, "-", "input is not valid UTF-8")
        } else {
            Error::Io(e)
        }
    })?;
    Ok(text)
}

/// Parses a record file. Blank input yields an empty list.
pub fn parse_records(source: impl Read, format: RecordFormat) -> Result<Vec<ArticleRecord>> {
    let text = read_all(source)?;
    let located = match format {
        RecordFormat::Csv => parse_csv(&text)?,
        RecordFormat::Json => parse_json(&text)?,
    };
    let mut seen: HashMap<String, u64> = HashMap::new();
    let mut out = Vec::with_capacity(located.len());
    for (line, record) in located {
        if let Err((column, message)) = record.check() {
            return Err(parse_error(line, column, message));
        }
        if let Some(&first_line) = seen.get(&record.article_id) {
            return Err(Error::DuplicateId {
                id: record.article_id,
                first_line,
                second_line: line,
            });
        }
        seen.insert(record.article_id.clone(), line);
        out.push(record);
    }
    Ok(out)
}

pub fn read_records(path: &Path) -> Result<Vec<ArticleRecord>> {
    let file = std::fs::File::open(path)?;
    parse_records(file, RecordFormat::from_path(path))
}

fn cell<T: FromStr>(raw: &str, line: u64, column: &str, what: &str) -> Result<Option<T>> {
    if raw.is_empty() {
        return Ok(None);
    }
    raw.parse::<T>()
        .map(Some)
        .map_err(|_| parse_error(line, column, format!("`{raw}` is not {what}")))
}

fn required<T: FromStr>(raw: &str, line: u64, column: &str, what: &str) -> Result<T> {
    cell(raw, line, column, what)?.ok_or_else(|| parse_error(line, column, "required value is missing"))
}

fn parse_csv(text: &str) -> Result<Vec<(u64, ArticleRecord)>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| parse_error(1, "-", e.to_string()))?
        .clone();
    if headers.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(parse_error(
            1,
            "-",
            format!("header must be exactly `{}`", CSV_HEADER.join(",")),
        ));
    }
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            parse_error(line, "-", e.to_string())
        })?;
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        let get = |i: usize| row.get(i).unwrap_or("");
        let explicit_partition = match get(6) {
            "" => None,
            raw => Some(
                raw.split(';')
                    .map(|v| {
                        let v = v.trim();
                        v.parse::<f64>().map_err(|_| {
                            parse_error(line, CSV_HEADER[6], format!("`{v}` is not a decimal number"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        let record = ArticleRecord {
            article_id: get(0).to_string(),
            citations: required(get(1), line, CSV_HEADER[1], "a non-negative integer")?,
            author_count: required(get(2), line, CSV_HEADER[2], "a positive integer")?,
            author_position: required(get(3), line, CSV_HEADER[3], "a positive integer")?,
            x_override: cell(get(4), line, CSV_HEADER[4], "a decimal number")?,
            s_override: cell(get(5), line, CSV_HEADER[5], "a decimal number")?,
            explicit_partition,
            rank_override: cell(get(7), line, CSV_HEADER[7], "a positive integer")?,
        };
        out.push((line, record));
    }
    Ok(out)
}

fn line_of(text: &str, offset: usize) -> u64 {
    text.as_bytes()[..offset].iter().filter(|&&b| b == b'\n').count() as u64 + 1
}

fn json_syntax(e: &serde_json::Error) -> Error {
    parse_error(e.line() as u64, &format!("char {}", e.column()), e.to_string())
}

fn parse_json(text: &str) -> Result<Vec<(u64, ArticleRecord)>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let items: Vec<&RawValue> = serde_json::from_str(text).map_err(|e| json_syntax(&e))?;
    items
        .into_iter()
        .map(|raw| {
            let offset = raw.get().as_ptr() as usize - text.as_ptr() as usize;
            let line = line_of(text, offset);
            let record: ArticleRecord = serde_json::from_str(raw.get()).map_err(|e| {
                let column = field_in_message(&e.to_string()).unwrap_or("-");
                parse_error(line + e.line() as u64 - 1, column, e.to_string())
            })?;
            Ok((line, record))
        })
        .collect()
}

fn field_in_message(message: &str) -> Option<&'static str> {
    CSV_HEADER.into_iter().find(|f| message.contains(&format!("`{f}`")))
}

/// Renders records in the CSV interchange format.
pub fn records_to_csv(records: &[ArticleRecord]) -> String {
    let mut out = CSV_HEADER.join(",");
    out.push('\n');
    for r in records {
        let opt = |v: Option<String>| v.unwrap_or_default();
        let parts = r.explicit_partition.as_ref().map(|p| {
            let joined: Vec<String> = p.iter().map(f64::to_string).collect();
            format!("\"{}\"", joined.join(";"))
        });
        let id = if r.article_id.contains([',', '"', '\n']) {
            format!("\"{}\"", r.article_id.replace('"', "\"\""))
        } else {
            r.article_id.clone()
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            id,
            r.citations,
            r.author_count,
            r.author_position,
            opt(r.x_override.map(|v| v.to_string())),
            opt(r.s_override.map(|v| v.to_string())),
            opt(parts),
            opt(r.rank_override.map(|v| v.to_string())),
        );
    }
    out
}

pub fn records_to_json(records: &[ArticleRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolicyFile {
    scheme: String,
    #[serde(default = "unit_stretch")]
    s: f64,
    #[serde(default)]
    schedule: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    extension: Option<ExtensionFile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtensionFile {
    slope: f64,
    intercept: f64,
    cap: f64,
}

fn unit_stretch() -> f64 {
    1.0
}

/// Parses a policy document:
///
/// ```json
/// {"scheme": "bernstein_s", "s": 2, "schedule": {"3": 0.25},
///  "extension": {"slope": 0.05, "intercept": 0.15, "cap": 0.5}}
/// ```
pub fn parse_policy(source: impl Read) -> Result<PartitionPolicy> {
    let text = read_all(source)?;
    let file: PolicyFile = serde_json::from_str(&text).map_err(|e| json_syntax(&e))?;
    let scheme: Scheme = file.scheme.parse()?;
    let mut schedule = BTreeMap::new();
    for (key, x) in file.schedule {
        let m: usize = key
            .trim()
            .parse()
            .map_err(|_| Error::Policy(format!("schedule key `{key}` is not an author count")))?;
        schedule.insert(m, x);
    }
    let policy = PartitionPolicy {
        scheme,
        s: file.s,
        schedule,
        extension: file.extension.map(|e| ScheduleExtension {
            slope: e.slope,
            intercept: e.intercept,
            cap: e.cap,
        }),
    };
    policy.validate()?;
    Ok(policy)
}

/// Reads a policy file, or returns the demonstration schedule when no path
/// is given.
pub fn load_policy(path: Option<&Path>) -> Result<PartitionPolicy> {
    match path {
        None => Ok(PartitionPolicy::default_schedule(7)),
        Some(p) => parse_policy(std::fs::File::open(p)?),
    }
}

pub fn policy_to_json(policy: &PartitionPolicy) -> String {
    let file = PolicyFile {
        scheme: policy.scheme.as_str().to_string(),
        s: policy.s,
        schedule: policy
            .schedule
            .iter()
            .map(|(m, x)| (m.to_string(), *x))
            .collect(),
        extension: policy.extension.map(|e| ExtensionFile {
            slope: e.slope,
            intercept: e.intercept,
            cap: e.cap,
        }),
    };
    serde_json::to_string_pretty(&file).expect("policy serializes")
}
