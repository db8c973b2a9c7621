use conicline_demo::{analyze_profile, conic_lower_bound, generate_and_analyze};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn klein_profile() {
    let v = parse(analyze_profile(21, 21, "42, 252, 189"));
    assert_eq!(v["gamma"], "108/43");
}

#[test]
fn bad_profile_reports_error() {
    let v = parse(analyze_profile(0, 3, "11"));
    assert_eq!(v["error"]["kind"], "InvalidInput");
    let v = parse(analyze_profile(0, 3, "x"));
    assert_eq!(v["error"]["kind"], "Parse");
}

#[test]
fn lower_bound_rows() {
    let v = parse(conic_lower_bound(5));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["gamma"], "1");
    // (4k^2 - 12k + 9) / (2k^2 - 4k + 3) at k = 5
    assert_eq!(rows[2]["gamma"], "49/33");
    assert_eq!(parse(conic_lower_bound(2))["error"]["kind"], "InvalidInput");
}

#[test]
fn cremona_generation() {
    let v = parse(generate_and_analyze("cremona_example", 0, 3, 2, 7, 20));
    assert_eq!(v["report"]["exceptional_lines"].as_array().unwrap().len(), 3);
    assert_eq!(v["arrangement"]["lines"].as_array().unwrap().len(), 3);
    assert_eq!(parse(generate_and_analyze("nope", 0, 3, 2, 7, 20))["error"]["kind"], "InvalidInput");
}
