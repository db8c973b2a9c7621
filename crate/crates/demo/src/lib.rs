//! Browser bindings. Every export takes plain values and returns a JSON
//! string; failures come back as `{"error": {"kind", "message"}}` so the
//! page needs no exception handling.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use conicline::invariants::{invariant_report, IncidenceProfile};
use conicline::report::analyze_arrangement;
use conicline::search::{generate, Family, GeneratorSpec};
use conicline::{Error, Result};

const DIGITS: usize = 6;

fn respond(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }).to_string(),
    }
}

fn parse_counts(counts: &str) -> Result<Vec<u64>> {
    counts
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad count {s:?}"))))
        .collect()
}

fn profile_value(d: usize, k: usize, counts: &str) -> Result<Value> {
    let p = IncidenceProfile::from_counts(d, k, &parse_counts(counts)?)?;
    Ok(serde_json::to_value(invariant_report(&p, DIGITS)).expect("serializable"))
}

/// Invariants and bounds of `d` lines and `k` conics with counts
/// `"t2, t3, ..."`.
#[wasm_bindgen]
pub fn analyze_profile(d: u32, k: u32, counts: &str) -> String {
    respond(profile_value(d as usize, k as usize, counts))
}

fn lower_bound_value(k_max: usize) -> Result<Value> {
    if !(3..=200).contains(&k_max) {
        return Err(Error::InvalidInput("k must lie between 3 and 200".into()));
    }
    let mut rows = Vec::new();
    for k in 3..=k_max {
        let p = IncidenceProfile::from_counts(0, k, &[2 * (k as u64) * (k as u64 - 1)])?;
        let r = invariant_report(&p, DIGITS);
        rows.push(json!({ "k": k, "gamma": r.gamma.map(|g| g.to_string()), "gamma_decimal": r.gamma_decimal }));
    }
    Ok(Value::Array(rows))
}

/// Characteristic numbers of `k` generic conics for `k = 3..=k_max`, the
/// minimum over conic-only arrangements.
#[wasm_bindgen]
pub fn conic_lower_bound(k_max: u32) -> String {
    respond(lower_bound_value(k_max as usize))
}

fn family(name: &str, common: usize) -> Result<Family> {
    Ok(match name {
        "random_rational" => Family::RandomRational,
        "conics_through_common_points" => Family::ConicsThroughCommonPoints { common },
        "pencil_plus_lines" => Family::PencilPlusLines,
        "cremona_example" => Family::CremonaExample,
        _ => return Err(Error::InvalidInput(format!("unknown family {name:?}"))),
    })
}

fn generate_value(name: &str, common: usize, d: usize, k: usize, seed: u64, height: u32) -> Result<Value> {
    if d + k > 8 {
        return Err(Error::InvalidInput("the demo is limited to 8 curves".into()));
    }
    let spec = GeneratorSpec { family: family(name, common)?, d, k, seed, coefficient_height: height };
    let g = generate(&spec)?;
    let report = analyze_arrangement(&g.arrangement, DIGITS)?;
    Ok(json!({
        "attempt": g.attempt,
        "arrangement": g.arrangement.to_file(),
        "report": report,
    }))
}

/// Generates a certified arrangement from a family and analyzes it.
#[wasm_bindgen]
pub fn generate_and_analyze(family: &str, common: u32, d: u32, k: u32, seed: u32, height: u32) -> String {
    respond(generate_value(family, common as usize, d as usize, k as usize, u64::from(seed), height))
}
