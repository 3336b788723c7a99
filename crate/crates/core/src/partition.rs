//! Turning an author count into a descending list of contribution fractions.
//!
//! The basis polynomials of degree `M - 1` are cut by a vertical line (the
//! p-axis) at `x`; the `M` ordinates are sorted in descending order and
//! handed out to the authors by contribution rank.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::basis;
use crate::error::{Error, Result};

/// Tolerance on the sum of hand-entered fractions.
pub const EXPLICIT_SUM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Bernstein,
    BernsteinS,
    Uniform,
    Explicit,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [
        Scheme::Bernstein,
        Scheme::BernsteinS,
        Scheme::Uniform,
        Scheme::Explicit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::Bernstein => "bernstein",
            Scheme::BernsteinS => "bernstein_s",
            Scheme::Uniform => "uniform",
            Scheme::Explicit => "explicit",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                let valid: Vec<_> = Scheme::ALL.iter().map(|k| k.as_str()).collect();
                Error::Policy(format!(
                    "unknown scheme `{s}`; valid schemes: {}",
                    valid.join(", ")
                ))
            })
    }
}

/// Affine continuation `x = intercept + slope (M - 1)`, capped at `cap`, for
/// author counts missing from the explicit schedule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScheduleExtension {
    pub slope: f64,
    pub intercept: f64,
    pub cap: f64,
}

impl ScheduleExtension {
    pub const DEMONSTRATION: ScheduleExtension = ScheduleExtension {
        slope: 0.05,
        intercept: 0.15,
        cap: 0.5,
    };

    pub fn x_for(&self, authors: usize) -> f64 {
        (self.intercept + self.slope * (authors - 1) as f64).min(self.cap)
    }
}

/// How each article's contribution fractions are derived.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionPolicy {
    pub scheme: Scheme,
    pub s: f64,
    /// p-axis position keyed by author count.
    pub schedule: BTreeMap<usize, f64>,
    pub extension: Option<ScheduleExtension>,
}

impl Default for PartitionPolicy {
    fn default() -> Self {
        PartitionPolicy::default_schedule(7)
    }
}

impl PartitionPolicy {
    /// The demonstration schedule: `x = 0` for a single author and
    /// `x = 0.15 + 0.05 (M - 1)` after that, capped at `0.5`, i.e.
    /// `[0.00, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45]` for one to seven authors.
    pub fn default_schedule(max_authors: usize) -> Self {
        let schedule = (1..=max_authors.max(1))
            .map(|m| {
                let x = if m == 1 {
                    0.0
                } else {
                    // exact decimals for the tabulated entries
                    ((10 + 5 * m) as f64 / 100.0).min(0.5)
                };
                (m, x)
            })
            .collect();
        PartitionPolicy {
            scheme: Scheme::Bernstein,
            s: 1.0,
            schedule,
            extension: Some(ScheduleExtension::DEMONSTRATION),
        }
    }

    pub fn uniform() -> Self {
        PartitionPolicy {
            scheme: Scheme::Uniform,
            s: 1.0,
            schedule: BTreeMap::new(),
            extension: None,
        }
    }

    /// Checks the policy as a whole; [`make_psequence`] re-checks what it uses.
    pub fn validate(&self) -> Result<()> {
        if !(self.s.is_finite() && self.s > 0.0) {
            return Err(Error::Policy(format!(
                "s = {} must be positive and finite",
                self.s
            )));
        }
        if self.scheme == Scheme::Bernstein && self.s != 1.0 {
            return Err(Error::Policy(format!(
                "scheme bernstein requires s = 1 (got {}); use bernstein_s to stretch",
                self.s
            )));
        }
        for (&m, &x) in &self.schedule {
            if m == 0 {
                return Err(Error::Policy("schedule key M = 0; author counts start at 1".into()));
            }
            if !(0.0..=self.s).contains(&x) {
                return Err(Error::Policy(format!(
                    "schedule entry for M = {m}: x = {x} outside [0, {}]",
                    self.s
                )));
            }
        }
        if let Some(ext) = &self.extension {
            if ![ext.slope, ext.intercept, ext.cap].iter().all(|v| v.is_finite()) {
                return Err(Error::Policy("extension parameters must be finite".into()));
            }
            if !(0.0..=self.s).contains(&ext.cap) {
                return Err(Error::Policy(format!(
                    "extension cap {} outside [0, {}]",
                    ext.cap, self.s
                )));
            }
        }
        Ok(())
    }

    /// p-axis position for `authors`, from the schedule or its extension.
    pub fn resolve_x(&self, authors: usize) -> Result<f64> {
        if let Some(&x) = self.schedule.get(&authors) {
            return Ok(x);
        }
        match &self.extension {
            Some(ext) => Ok(ext.x_for(authors)),
            None => Err(Error::Policy(format!(
                "no schedule entry for M = {authors} and no extension rule"
            ))),
        }
    }
}

/// Where a sequence came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    Basis,
    Uniform,
    Explicit,
}

/// Descending contribution fractions for one article.
#[derive(Debug, Clone, PartialEq)]
pub struct PSequence {
    pub author_count: usize,
    /// p-axis position; `None` for stated and uniform partitions.
    pub x: Option<f64>,
    pub s: f64,
    pub fractions: Vec<f64>,
    /// `fractions * M`; each lies in `[0, M]` and they sum to `M`.
    pub raw_contributions: Vec<f64>,
    pub kind: PartitionKind,
}

impl PSequence {
    fn from_fractions(author_count: usize, x: Option<f64>, s: f64, mut fractions: Vec<f64>, kind: PartitionKind) -> Self {
        // stable: equal values keep ascending basis-index order
        fractions.sort_by(|a, b| b.total_cmp(a));
        let m = author_count as f64;
        let raw_contributions = fractions.iter().map(|f| f * m).collect();
        PSequence {
            author_count,
            x,
            s,
            fractions,
            raw_contributions,
            kind,
        }
    }

    /// Fraction credited to the author at 1-based contribution `rank`.
    pub fn fraction_at(&self, rank: usize) -> Option<f64> {
        rank.checked_sub(1).and_then(|i| self.fractions.get(i).copied())
    }

    /// Some coauthor receives nothing, as at `x = 0` with two or more authors.
    pub fn is_degenerate(&self) -> bool {
        self.author_count >= 2 && self.fractions.contains(&0.0)
    }
}

fn check_author_count(authors: usize) -> Result<()> {
    if authors == 0 {
        return Err(Error::Validation("author count must be at least 1".into()));
    }
    Ok(())
}

/// Builds the p-sequence for `authors` under `policy`.
pub fn make_psequence(authors: usize, policy: &PartitionPolicy) -> Result<PSequence> {
    check_author_count(authors)?;
    match policy.scheme {
        Scheme::Uniform => Ok(uniform_psequence(authors)),
        Scheme::Explicit if authors > 1 => Err(Error::Policy(format!(
            "scheme explicit needs a per-article partition for M = {authors}"
        ))),
        _ => {
            let x = if authors == 1 { policy.resolve_x(1).unwrap_or(0.0) } else { policy.resolve_x(authors)? };
            psequence_at(authors, x, policy.s)
        }
    }
}

/// Basis p-sequence at an explicit p-axis position `x ∈ [0, s]`.
pub fn psequence_at(authors: usize, x: f64, s: f64) -> Result<PSequence> {
    check_author_count(authors)?;
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!("s = {s} must be positive and finite")));
    }
    if !(0.0..=s).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, {s}]")));
    }
    if authors == 1 {
        return Ok(PSequence::from_fractions(1, Some(x), s, vec![1.0], PartitionKind::Basis));
    }
    let values = basis::basis_values(authors - 1, x, s)?;
    Ok(PSequence::from_fractions(authors, Some(x), s, values, PartitionKind::Basis))
}

/// Equal split, `1 / M` each.
pub fn uniform_psequence(authors: usize) -> PSequence {
    let kind = if authors == 1 { PartitionKind::Basis } else { PartitionKind::Uniform };
    let share = 1.0 / authors.max(1) as f64;
    PSequence::from_fractions(authors, None, 1.0, vec![share; authors], kind)
}

/// Validates and sorts a stated partition, e.g. `[0.65, 0.20, 0.15]`.
pub fn explicit_psequence(authors: usize, fractions: &[f64]) -> Result<PSequence> {
    check_author_count(authors)?;
    if fractions.len() != authors {
        return Err(Error::Validation(format!(
            "explicit partition has {} entries for {authors} authors",
            fractions.len()
        )));
    }
    if let Some((i, f)) = fractions
        .iter()
        .enumerate()
        .find(|(_, f)| !(f.is_finite() && **f > 0.0 && **f <= 1.0))
    {
        return Err(Error::Validation(format!(
            "explicit partition entry {} = {f} outside (0, 1]",
            i + 1
        )));
    }
    let sum: f64 = fractions.iter().sum();
    if (sum - 1.0).abs() > EXPLICIT_SUM_TOLERANCE {
        return Err(Error::Validation(format!(
            "explicit partition sums to {sum}, not 1 (tolerance {EXPLICIT_SUM_TOLERANCE:e})"
        )));
    }
    Ok(PSequence::from_fractions(
        authors,
        None,
        1.0,
        fractions.to_vec(),
        PartitionKind::Explicit,
    ))
}

/// Splits ranks `1..=M` into maximal runs whose fractions lie within
/// `tolerance` of each other: shared first authorship shows up as `[1, 2]`.
///
/// Runs are grown greedily from the top; since the fractions are sorted the
/// spread of a run is its first minus its last value.
pub fn shared_rank_groups(seq: &PSequence, tolerance: f64) -> Result<Vec<Vec<usize>>> {
    if tolerance.is_nan() || tolerance < 0.0 {
        return Err(Error::Validation(format!(
            "tie tolerance {tolerance} must be non-negative"
        )));
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut head = f64::NAN;
    for (i, &f) in seq.fractions.iter().enumerate() {
        match groups.last_mut() {
            Some(group) if (head - f).abs() <= tolerance => group.push(i + 1),
            _ => {
                head = f;
                groups.push(vec![i + 1]);
            }
        }
    }
    Ok(groups)
}
