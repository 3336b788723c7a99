//! Author metrics from partitioned citations.
//!
//! With `N` articles of which `N_s` are single-authored, the personal total is
//!
//! ```text
//! C = Σ_single C_i + Σ_multi A_i C_i
//! ```
//!
//! where `A_i` is the author's fraction of article `i`. Then `Q = C / N` and
//! `P = min(N, Q)`. The conventional total (`A_i = 1` everywhere) and the
//! Hirsch index are reported alongside for comparison.

use std::fmt;

use crate::error::{Error, Result};
use crate::ingest::ArticleRecord;
use crate::partition::{self, PSequence, PartitionKind, PartitionPolicy};
use crate::sum::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EarningFlag {
    /// Some coauthor of this article received nothing.
    DegeneratePartition,
    ExplicitPartition,
    UniformPartition,
}

impl EarningFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            EarningFlag::DegeneratePartition => "degenerate_partition",
            EarningFlag::ExplicitPartition => "explicit_partition",
            EarningFlag::UniformPartition => "uniform_partition",
        }
    }
}

impl fmt::Display for EarningFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The subject author's share of one article.
#[derive(Debug, Clone, PartialEq)]
pub struct ArticleEarning {
    pub article_id: String,
    pub citations: u64,
    pub author_count: usize,
    /// Rank in the descending partition that was credited.
    pub position: usize,
    pub fraction: f64,
    pub earning: f64,
    /// Sorted, without duplicates.
    pub flags: Vec<EarningFlag>,
}

impl ArticleEarning {
    pub fn is_single_author(&self) -> bool {
        self.author_count == 1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub n: usize,
    pub n_single: usize,
    pub c_single: u64,
    pub c: f64,
    pub c_rounded: u64,
    pub q: f64,
    pub p: f64,
    pub p_rounded: u64,
    pub c_false: u64,
    pub h: usize,
    pub earnings: Vec<ArticleEarning>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CitationTotals {
    pub c: f64,
    pub c_single: f64,
    pub n_single: usize,
}

/// Resolves the partition for one record and credits the author's share.
///
/// An explicit partition is read in byline order, so the author receives the
/// entry at `author_position`; otherwise the author receives the
/// `author_position`-th largest fraction. `rank_override`, when present,
/// always selects by descending rank.
pub fn resolve_earning(record: &ArticleRecord, policy: &PartitionPolicy) -> Result<ArticleEarning> {
    let wrap = |e: Error| Error::Record {
        id: record.article_id.clone(),
        source: Box::new(e),
    };
    let m = record.author_count;
    let (seq, byline_fraction): (PSequence, Option<f64>) = match &record.explicit_partition {
        Some(parts) => {
            let seq = partition::explicit_psequence(m, parts).map_err(wrap)?;
            let own = parts.get(record.author_position.wrapping_sub(1)).copied();
            (seq, own)
        }
        None if record.x_override.is_some() || record.s_override.is_some() => {
            let s = record.s_override.unwrap_or(policy.s);
            let x = match record.x_override {
                Some(x) => x,
                None if m == 1 => 0.0,
                None => policy.resolve_x(m).map_err(wrap)?,
            };
            (partition::psequence_at(m, x, s).map_err(wrap)?, None)
        }
        None => (partition::make_psequence(m, policy).map_err(wrap)?, None),
    };

    let (position, fraction) = match (record.rank_override, byline_fraction) {
        (Some(rank), _) => (rank, seq.fraction_at(rank)),
        (None, Some(own)) => {
            // rank of the stated value within the sorted sequence
            let rank = seq.fractions.iter().position(|&f| f == own).map_or(0, |i| i + 1);
            (rank, Some(own))
        }
        (None, None) => (record.author_position, seq.fraction_at(record.author_position)),
    };
    let fraction = fraction.ok_or_else(|| {
        wrap(Error::Validation(format!(
            "position {position} outside [1, {m}]"
        )))
    })?;

    let mut flags = Vec::new();
    if seq.is_degenerate() {
        flags.push(EarningFlag::DegeneratePartition);
    }
    match seq.kind {
        PartitionKind::Explicit => flags.push(EarningFlag::ExplicitPartition),
        PartitionKind::Uniform => flags.push(EarningFlag::UniformPartition),
        PartitionKind::Basis => {}
    }
    flags.sort();

    Ok(ArticleEarning {
        article_id: record.article_id.clone(),
        citations: record.citations,
        author_count: m,
        position,
        fraction,
        earning: fraction * record.citations as f64,
        flags,
    })
}

/// `C`, its single-author part, and `N_s`.
pub fn total_citations(earnings: &[ArticleEarning]) -> CitationTotals {
    let mut c = CompensatedSum::default();
    let mut c_single = CompensatedSum::default();
    let mut n_single = 0;
    for e in earnings {
        if e.is_single_author() {
            n_single += 1;
            c_single.add(e.citations as f64);
            c.add(e.citations as f64);
        } else {
            c.add(e.earning);
        }
    }
    CitationTotals {
        c: c.value(),
        c_single: c_single.value(),
        n_single,
    }
}

/// `Q = C / N`, with `N` counting uncited articles too.
pub fn q_value(c: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::NoArticles);
    }
    Ok(c / n as f64)
}

/// `P = min(N, Q)` and its nearest integer, halves rounded away from zero.
pub fn p_index(n: usize, q: f64) -> (f64, u64) {
    let p = (n as f64).min(q).max(0.0);
    (p, p.round() as u64)
}

/// Conventional total: every coauthor credited with the full count.
pub fn false_total(records: &[ArticleRecord]) -> u64 {
    records.iter().map(|r| r.citations).sum()
}

/// Largest `h` such that at least `h` articles have `h` or more citations.
pub fn h_index(citations: &[u64]) -> usize {
    let mut sorted = citations.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .enumerate()
        .take_while(|(i, &c)| c > *i as u64)
        .count()
}

pub fn build_report(records: &[ArticleRecord], policy: &PartitionPolicy) -> Result<MetricsReport> {
    policy.validate()?;
    let earnings = records
        .iter()
        .map(|r| resolve_earning(r, policy))
        .collect::<Result<Vec<_>>>()?;
    let n = records.len();
    let totals = total_citations(&earnings);
    let q = q_value(totals.c, n)?;
    let (p, p_rounded) = p_index(n, q);
    let citations: Vec<u64> = records.iter().map(|r| r.citations).collect();
    Ok(MetricsReport {
        n,
        n_single: totals.n_single,
        c_single: earnings
            .iter()
            .filter(|e| e.is_single_author())
            .map(|e| e.citations)
            .sum(),
        c: totals.c,
        c_rounded: totals.c.round() as u64,
        q,
        p,
        p_rounded,
        c_false: false_total(records),
        h: h_index(&citations),
        earnings,
    })
}

/// Side-by-side view of partitioned and conventional metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub c: f64,
    pub c_false: u64,
    /// `C / C_false`; `None` when nothing is cited.
    pub ratio: Option<f64>,
    pub p: f64,
    pub p_rounded: u64,
    pub h: usize,
    /// Article counts per credited-fraction decile; the last bucket
    /// includes 1.0.
    pub histogram: [usize; 10],
}

impl Comparison {
    pub fn from_report(report: &MetricsReport) -> Self {
        let mut histogram = [0; 10];
        for e in &report.earnings {
            let bucket = ((e.fraction * 10.0).floor() as usize).min(9);
            histogram[bucket] += 1;
        }
        Comparison {
            c: report.c,
            c_false: report.c_false,
            ratio: (report.c_false > 0).then(|| report.c / report.c_false as f64),
            p: report.p,
            p_rounded: report.p_rounded,
            h: report.h,
            histogram,
        }
    }
}
