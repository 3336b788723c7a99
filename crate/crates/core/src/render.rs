//! Text renderings of reports, p-sequences and basis curves.
//!
//! Machine formats (JSON, CSV) print reals with 6 decimals and tables with 4.
//! Key order is fixed, so equal inputs give byte-identical output.

use std::fmt::Write as _;

use crate::basis::BasisCurve;
use crate::metrics::{Comparison, MetricsReport};
use crate::partition::PSequence;

/// Fixed 6-decimal real, never `-0.000000`.
pub fn real6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn real4(v: f64) -> String {
    let s = format!("{v:.4}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

fn json_reals(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|&v| real6(v)).collect();
    format!("[{}]", parts.join(", "))
}

fn json_groups(groups: &[Vec<usize>]) -> String {
    let parts: Vec<String> = groups
        .iter()
        .map(|g| {
            let ranks: Vec<String> = g.iter().map(usize::to_string).collect();
            format!("[{}]", ranks.join(", "))
        })
        .collect();
    format!("[{}]", parts.join(", "))
}

pub fn report_json(report: &MetricsReport) -> String {
    let mut out = String::from("{\n");
    let scalars = [
        ("N", report.n.to_string()),
        ("N_s", report.n_single.to_string()),
        ("C_single", report.c_single.to_string()),
        ("C", real6(report.c)),
        ("C_rounded", report.c_rounded.to_string()),
        ("Q", real6(report.q)),
        ("P", real6(report.p)),
        ("P_rounded", report.p_rounded.to_string()),
        ("C_false", report.c_false.to_string()),
        ("H", report.h.to_string()),
    ];
    for (key, value) in scalars {
        let _ = writeln!(out, "  \"{key}\": {value},");
    }
    out.push_str("  \"earnings\": [");
    for (i, e) in report.earnings.iter().enumerate() {
        let flags: Vec<String> = e.flags.iter().map(|f| json_str(f.as_str())).collect();
        let _ = write!(
            out,
            "{}\n    {{\"article_id\": {}, \"citations\": {}, \"author_count\": {}, \"position\": {}, \"fraction\": {}, \"earning\": {}, \"flags\": [{}]}}",
            if i == 0 { "" } else { "," },
            json_str(&e.article_id),
            e.citations,
            e.author_count,
            e.position,
            real6(e.fraction),
            real6(e.earning),
            flags.join(", "),
        );
    }
    if !report.earnings.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

pub fn report_table(report: &MetricsReport) -> String {
    let mut out = String::new();
    let rows = [
        ("N (articles)", report.n.to_string()),
        ("N_s (single-author)", report.n_single.to_string()),
        ("C_single", report.c_single.to_string()),
        ("C (personal total)", real4(report.c)),
        ("C rounded", report.c_rounded.to_string()),
        ("Q = C / N", real4(report.q)),
        ("P = min(N, Q)", real4(report.p)),
        ("P rounded", report.p_rounded.to_string()),
        ("C_false", report.c_false.to_string()),
        ("H", report.h.to_string()),
    ];
    for (label, value) in rows {
        let _ = writeln!(out, "{label:<22}{value:>12}");
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "{:<16}{:>10}{:>8}{:>6}{:>10}{:>12}  flags",
        "article_id", "citations", "authors", "rank", "fraction", "earning"
    );
    for e in &report.earnings {
        let flags: Vec<&str> = e.flags.iter().map(|f| f.as_str()).collect();
        let _ = writeln!(
            out,
            "{:<16}{:>10}{:>8}{:>6}{:>10}{:>12}  {}",
            e.article_id,
            e.citations,
            e.author_count,
            e.position,
            real4(e.fraction),
            real4(e.earning),
            flags.join(";")
        );
    }
    out
}

/// Per-article earnings as CSV.
pub fn earnings_csv(report: &MetricsReport) -> String {
    let mut out = String::from("article_id,citations,author_count,position,fraction,earning,flags\n");
    for e in &report.earnings {
        let flags: Vec<&str> = e.flags.iter().map(|f| f.as_str()).collect();
        let id = if e.article_id.contains([',', '"', '\n']) {
            format!("\"{}\"", e.article_id.replace('"', "\"\""))
        } else {
            e.article_id.clone()
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            id,
            e.citations,
            e.author_count,
            e.position,
            real6(e.fraction),
            real6(e.earning),
            flags.join(";")
        );
    }
    out
}

pub fn psequence_json(seq: &PSequence, groups: &[Vec<usize>]) -> String {
    let x = seq.x.map_or("null".to_string(), real6);
    format!(
        "{{\n  \"authors\": {},\n  \"x\": {},\n  \"s\": {},\n  \"fractions\": {},\n  \"raw_contributions\": {},\n  \"shared_groups\": {}\n}}\n",
        seq.author_count,
        x,
        real6(seq.s),
        json_reals(&seq.fractions),
        json_reals(&seq.raw_contributions),
        json_groups(groups)
    )
}

pub fn psequence_table(seq: &PSequence, groups: &[Vec<usize>]) -> String {
    let mut out = String::new();
    let fr: Vec<String> = seq.fractions.iter().map(|&v| real4(v)).collect();
    let _ = writeln!(out, "authors  {}", seq.author_count);
    if let Some(x) = seq.x {
        let _ = writeln!(out, "x        {}", real4(x));
    }
    let _ = writeln!(out, "s        {}", real4(seq.s));
    let _ = writeln!(out, "p-sequence [{}]", fr.join(", "));
    let _ = writeln!(out, "{:>5}{:>10}{:>10}", "rank", "fraction", "raw");
    for (i, (f, r)) in seq.fractions.iter().zip(&seq.raw_contributions).enumerate() {
        let _ = writeln!(out, "{:>5}{:>10}{:>10}", i + 1, real4(*f), real4(*r));
    }
    let shared: Vec<String> = groups
        .iter()
        .filter(|g| g.len() > 1)
        .map(|g| {
            let r: Vec<String> = g.iter().map(usize::to_string).collect();
            format!("{{{}}}", r.join(","))
        })
        .collect();
    let _ = writeln!(
        out,
        "shared ranks: {}",
        if shared.is_empty() { "none".to_string() } else { shared.join(" ") }
    );
    out
}

/// CSV rows of the p-sequence: `rank,fraction,raw_contribution,group`.
pub fn psequence_csv(seq: &PSequence, groups: &[Vec<usize>]) -> String {
    let mut out = String::from("rank,fraction,raw_contribution,group\n");
    for (gi, g) in groups.iter().enumerate() {
        for &rank in g {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                rank,
                real6(seq.fractions[rank - 1]),
                real6(seq.raw_contributions[rank - 1]),
                gi + 1
            );
        }
    }
    out
}

fn bucket_labels() -> impl Iterator<Item = String> {
    (0..10).map(|i| format!("{:.1}-{:.1}", i as f64 / 10.0, (i + 1) as f64 / 10.0))
}

pub fn comparison_table(cmp: &Comparison) -> String {
    let mut out = String::new();
    let ratio = cmp.ratio.map_or("n/a".to_string(), real4);
    let _ = writeln!(out, "{:<14}{:>14}{:>14}", "", "partitioned", "conventional");
    let _ = writeln!(out, "{:<14}{:>14}{:>14}", "total", real4(cmp.c), cmp.c_false);
    let _ = writeln!(out, "{:<14}{:>14}{:>14}", "index (P / H)", real4(cmp.p), cmp.h);
    let _ = writeln!(out, "{:<14}{:>14}", "C / C_false", ratio);
    let _ = writeln!(out, "{:<14}{:>14}", "P rounded", cmp.p_rounded);
    out.push_str("\nfraction of credit per article\n");
    let total = cmp.histogram.iter().sum::<usize>().max(1);
    for (label, &count) in bucket_labels().zip(&cmp.histogram) {
        let bar = "#".repeat((count * 40).div_ceil(total));
        let _ = writeln!(out, "{label:>8}{count:>6}  {bar}");
    }
    out
}

pub fn comparison_json(cmp: &Comparison) -> String {
    let ratio = cmp.ratio.map_or("null".to_string(), real6);
    let buckets: Vec<String> = bucket_labels()
        .zip(&cmp.histogram)
        .map(|(label, count)| format!("{{\"bucket\": \"{label}\", \"articles\": {count}}}"))
        .collect();
    format!(
        "{{\n  \"C\": {},\n  \"C_false\": {},\n  \"ratio\": {},\n  \"P\": {},\n  \"P_rounded\": {},\n  \"H\": {},\n  \"histogram\": [\n    {}\n  ]\n}}\n",
        real6(cmp.c),
        cmp.c_false,
        ratio,
        real6(cmp.p),
        cmp.p_rounded,
        cmp.h,
        buckets.join(",\n    ")
    )
}

/// `x,A_0,...,A_j[,envelope]`, one row per sample. Singular envelope cells
/// are left empty.
pub fn curve_csv(curve: &BasisCurve) -> String {
    let mut out = String::from("x");
    for a in 0..=curve.degree {
        let _ = write!(out, ",A_{a}");
    }
    if curve.envelope.is_some() {
        out.push_str(",envelope");
    }
    out.push('\n');
    for (i, sample) in curve.samples.iter().enumerate() {
        out.push_str(&real6(sample.x));
        for &v in &sample.values {
            out.push(',');
            out.push_str(&real6(v));
        }
        if let Some(env) = &curve.envelope {
            out.push(',');
            if let Some(e) = env[i] {
                out.push_str(&real6(e));
            }
        }
        out.push('\n');
    }
    out
}

const SVG_W: f64 = 800.0;
const SVG_H: f64 = 500.0;
const MARGIN: f64 = 50.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Self-contained SVG: one polyline per basis polynomial, the envelope
/// dashed (clipped to `[0, 1]`), and an optional vertical p-axis.
pub fn curve_svg(curve: &BasisCurve, p_axis: Option<f64>) -> String {
    let plot_w = SVG_W - 2.0 * MARGIN;
    let plot_h = SVG_H - 2.0 * MARGIN;
    let px = |x: f64| MARGIN + x / curve.s * plot_w;
    let py = |y: f64| SVG_H - MARGIN - y * plot_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SVG_W} {SVG_H}\" width=\"{SVG_W}\" height=\"{SVG_H}\">"
    );
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{SVG_W}\" height=\"{SVG_H}\" fill=\"white\"/>");
    let (x0, x1, y0, y1) = (px(0.0), px(curve.s), py(0.0), py(1.0));
    let _ = writeln!(
        out,
        "<path d=\"M{x0:.2},{y1:.2} L{x0:.2},{y0:.2} L{x1:.2},{y0:.2}\" fill=\"none\" stroke=\"black\"/>"
    );
    for i in 0..=4 {
        let t = i as f64 / 4.0;
        let _ = writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
            px(t * curve.s),
            y0 + 18.0,
            real4(t * curve.s).trim_end_matches('0').trim_end_matches('.')
        );
        let _ = writeln!(
            out,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"end\">{}</text>",
            x0 - 6.0,
            py(t) + 4.0,
            real4(t).trim_end_matches('0').trim_end_matches('.')
        );
    }
    for a in 0..=curve.degree {
        let points: Vec<String> = curve
            .samples
            .iter()
            .map(|s| format!("{:.2},{:.2}", px(s.x), py(s.values[a])))
            .collect();
        let _ = writeln!(
            out,
            "<polyline class=\"basis\" data-index=\"{a}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>",
            PALETTE[a % PALETTE.len()],
            points.join(" ")
        );
    }
    if let Some(env) = &curve.envelope {
        // separate runs wherever the envelope leaves the plotted range
        let mut runs: Vec<Vec<String>> = vec![Vec::new()];
        for (s, e) in curve.samples.iter().zip(env) {
            match e {
                Some(v) if *v <= 1.0 => runs
                    .last_mut()
                    .expect("non-empty")
                    .push(format!("{:.2},{:.2}", px(s.x), py(*v))),
                _ => {
                    if !runs.last().expect("non-empty").is_empty() {
                        runs.push(Vec::new());
                    }
                }
            }
        }
        for run in runs.iter().filter(|r| r.len() >= 2) {
            let _ = writeln!(
                out,
                "<polyline class=\"envelope\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"6 4\" points=\"{}\"/>",
                run.join(" ")
            );
        }
    }
    if let Some(x) = p_axis.filter(|x| (0.0..=curve.s).contains(x)) {
        let _ = writeln!(
            out,
            "<line class=\"p-axis\" x1=\"{:.2}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y1:.2}\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>",
            px(x),
            px(x)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::sample_curves;
    use crate::ingest::ArticleRecord;
    use crate::metrics::build_report;
    use crate::partition::{psequence_at, shared_rank_groups, PartitionPolicy};

    #[test]
    fn real_formats() {
        assert_eq!(real6(0.1), "0.100000");
        assert_eq!(real6(-0.0), "0.000000");
        assert_eq!(real6(-1e-9), "0.000000");
        assert_eq!(real4(0.37499), "0.3750");
    }

    #[test]
    fn json_is_stable() {
        let recs = vec![
            ArticleRecord::new("a,\"1\"", 10, 3, 2),
            ArticleRecord::new("b", 0, 1, 1),
        ];
        let rep = build_report(&recs, &PartitionPolicy::default()).unwrap();
        let a = report_json(&rep);
        assert_eq!(a, report_json(&rep));
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["N"], 2);
        assert_eq!(v["earnings"][0]["article_id"], "a,\"1\"");
        assert!(a.contains("\"fraction\": 0.375000"));
        let csv = earnings_csv(&rep);
        assert!(csv.contains("\"a,\"\"1\"\"\",10,3,2,0.375000,3.750000,"));
    }

    #[test]
    fn table_sequence() {
        let seq = psequence_at(5, 0.2, 1.0).unwrap();
        let groups = shared_rank_groups(&seq, 1e-4).unwrap();
        let t = psequence_table(&seq, &groups);
        assert!(t.contains("[0.4096, 0.4096, 0.1536, 0.0256, 0.0016]"), "{t}");
        assert!(t.contains("shared ranks: {1,2}"));
        let j = psequence_json(&seq, &groups);
        assert!(j.contains("\"shared_groups\": [[1, 2], [3], [4], [5]]"));
    }

    #[test]
    fn curve_outputs() {
        let c = sample_curves(2, 1.0, 5, true).unwrap();
        let csv = curve_csv(&c);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "x,A_0,A_1,A_2,envelope");
        assert_eq!(lines.len(), 6);
        assert!(lines[1].ends_with(','));
        assert!(lines[5].ends_with(','));
        let svg = curve_svg(&c, Some(0.25));
        assert_eq!(svg.matches("class=\"basis\"").count(), 3);
        assert!(svg.contains("class=\"p-axis\""));
        assert!(svg.contains("viewBox=\"0 0 800 500\""));
    }
}
