//! Browser bindings: each export takes plain strings or numbers and returns
//! a JSON document for the page in `www/`.

use ratquad::classical::{classify_cyclic, cos_sq_u};
use ratquad::curve::{mine as mine_curve, MineConfig, MineOutcome};
use ratquad::generators::generate as gen_family;
use ratquad::oracle::{enumerate, LatticeBounds};
use ratquad::{draw, record, Family, ParamSet, Quadrilateral, Rational};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Searching beyond this is too slow for a page without threads.
const SEARCH_LIMIT: u32 = 120;
const MINE_LIMIT: u32 = 8;

fn parse_params(text: &str) -> Result<Vec<Rational>, String> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Rational>()
                .map_err(|_| format!("not a rational number: {t:?}"))
        })
        .collect()
}

fn describe(rec: &Quadrilateral) -> Value {
    let (lengths, area) = rec.tuple();
    json!({
        "tuple": lengths.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "area": area.to_string(),
        "family": rec.family.name(),
        "cyclic": classify_cyclic(rec),
        "cos_sq_u": cos_sq_u(rec).map(|v| v.to_string()).ok(),
        "scale": rec.scale.to_string(),
        "record": record::to_json_line(rec),
        "svg": draw::render_svg(rec),
    })
}

pub fn generate_json(family: &str, params: &str) -> Result<String, String> {
    let family: Family = family.parse().map_err(|e: ratquad::Error| e.to_string())?;
    let params = parse_params(params)?;
    let rec = gen_family(family, &params).map_err(|e| e.to_string())?;
    Ok(describe(&rec).to_string())
}

pub fn mine_json(params: &str, multiples: u32) -> Result<String, String> {
    if !(1..=MINE_LIMIT).contains(&multiples) {
        return Err(format!("multiples must be between 1 and {MINE_LIMIT}"));
    }
    let pqr: [Rational; 6] = parse_params(params)?
        .try_into()
        .map_err(|v: Vec<Rational>| format!("mining takes 6 parameters, got {}", v.len()))?;
    let report = mine_curve(
        &ParamSet::new(pqr),
        &MineConfig {
            multiples,
            ..Default::default()
        },
    )
    .map_err(|e| e.to_string())?;
    let steps: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            let outcome = match &e.outcome {
                MineOutcome::Mined(i) => format!("record {i}"),
                MineOutcome::Duplicate => "duplicate".into(),
                MineOutcome::Skipped(why) => format!("skipped: {why}"),
            };
            json!({ "n": e.n, "height_bits": e.cubic_point.height_bits(), "round_trip": e.round_trip, "outcome": outcome })
        })
        .collect();
    let records: Vec<Value> = report.records.iter().map(describe).collect();
    Ok(json!({ "steps": steps, "records": records }).to_string())
}

pub fn search_json(e_max: u32, coord_max: u32) -> Result<String, String> {
    let bounds = LatticeBounds::new(e_max.min(SEARCH_LIMIT), coord_max.min(SEARCH_LIMIT))
        .ok_or("bounds must be at least 1")?;
    let rows: Vec<Value> = enumerate(bounds)
        .iter()
        .map(|rec| {
            let (lengths, area) = rec.tuple();
            json!({
                "tuple": lengths.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "area": area.to_string(),
                "cyclic": classify_cyclic(rec),
                "record": record::to_json_line(rec),
            })
        })
        .collect();
    Ok(json!({ "bounds": [bounds.e_max, bounds.coord_max], "records": rows }).to_string())
}

/// Record for a parametric family, with its drawing.
#[wasm_bindgen]
pub fn generate(family: &str, params: &str) -> Result<String, JsError> {
    generate_json(family, params).map_err(|e| JsError::new(&e))
}

/// Walks multiples of the base point for six parameters.
#[wasm_bindgen]
pub fn mine(params: &str, multiples: u32) -> Result<String, JsError> {
    mine_json(params, multiples).map_err(|e| JsError::new(&e))
}

/// Lattice search with both bounds capped at 120.
#[wasm_bindgen]
pub fn search(e_max: u32, coord_max: u32) -> Result<String, JsError> {
    search_json(e_max, coord_max).map_err(|e| JsError::new(&e))
}

/// Draws a record line produced by one of the other calls.
#[wasm_bindgen]
pub fn plot(record_line: &str) -> Result<String, JsError> {
    let rec = record::from_json_line(record_line).map_err(|e| JsError::new(&e.to_string()))?;
    Ok(draw::render_svg(&rec))
}
