//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Three operations are exported: the p-sequence at a chosen axis, an SVG of
//! the basis with that axis marked, and a full metrics report for pasted
//! CSV records. Each binding wraps a plain function that returns
//! `Result<String, String>` so it can be tested natively.

use pindex_core::basis::sample_curves;
use pindex_core::ingest::{parse_policy, parse_records, RecordFormat};
use pindex_core::metrics::{build_report, Comparison};
use pindex_core::partition::{psequence_at, shared_rank_groups, PartitionPolicy};
use pindex_core::render;
use wasm_bindgen::prelude::*;

const TIE_TOLERANCE: f64 = 1e-4;
const CURVE_SAMPLES: usize = 201;

pub fn psequence_text(authors: usize, x: f64, s: f64) -> Result<String, String> {
    let seq = psequence_at(authors, x, s).map_err(|e| e.to_string())?;
    let groups = shared_rank_groups(&seq, TIE_TOLERANCE).map_err(|e| e.to_string())?;
    Ok(render::psequence_json(&seq, &groups))
}

pub fn basis_svg_text(authors: usize, x: f64, s: f64, envelope: bool) -> Result<String, String> {
    if authors == 0 {
        return Err("authors must be at least 1".into());
    }
    let curve = sample_curves(authors - 1, s, CURVE_SAMPLES, envelope).map_err(|e| e.to_string())?;
    Ok(render::curve_svg(&curve, Some(x)))
}

/// Report JSON with the comparison block appended under `"comparison"`.
pub fn report_text(records_csv: &str, policy_json: &str) -> Result<String, String> {
    let records = parse_records(records_csv.as_bytes(), RecordFormat::Csv).map_err(|e| e.to_string())?;
    let policy = if policy_json.trim().is_empty() {
        PartitionPolicy::default()
    } else {
        parse_policy(policy_json.as_bytes()).map_err(|e| e.to_string())?
    };
    let report = build_report(&records, &policy).map_err(|e| e.to_string())?;
    let comparison = render::comparison_json(&Comparison::from_report(&report));
    let body = render::report_json(&report);
    Ok(format!(
        "{{\"report\": {}, \"comparison\": {}}}",
        body.trim_end(),
        comparison.trim_end()
    ))
}

#[wasm_bindgen]
pub fn psequence(authors: usize, x: f64, s: f64) -> Result<String, JsValue> {
    psequence_text(authors, x, s).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = basisSvg)]
pub fn basis_svg(authors: usize, x: f64, s: f64, envelope: bool) -> Result<String, JsValue> {
    basis_svg_text(authors, x, s, envelope).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = computeReport)]
pub fn compute_report(records_csv: &str, policy_json: &str) -> Result<String, JsValue> {
    report_text(records_csv, policy_json).map_err(|e| JsValue::from_str(&e))
}
