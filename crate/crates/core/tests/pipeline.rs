use conicline::algebra::rational::frac;
use conicline::report::{analyze_arrangement, covers_report, Input};
use conicline::search::{
    conjecture_probe, generate, to_json_lines, Family, GeneratorSpec, ProbeConfig, SearchRecord, SearchSpec,
};

fn probe_config(seed: u64) -> ProbeConfig {
    ProbeConfig {
        families: vec![
            Family::RandomRational,
            Family::ConicsThroughCommonPoints { common: 2 },
            Family::PencilPlusLines,
            Family::CremonaExample,
        ],
        d: (0, 3),
        k: (3, 4),
        coefficient_height: 20,
        seed,
    }
}

#[test]
fn probe_finds_no_witness_above_eight_thirds() {
    let s = conjecture_probe(&frac(1, 6), 24, &probe_config(7)).unwrap();
    assert!(s.witnesses.is_empty());
    assert_eq!(s.examined + s.generation_failures, 24);
    if let Some(g) = &s.max_gamma {
        assert!(*g < frac(8, 3));
    }
    let again = conjecture_probe(&frac(1, 6), 24, &probe_config(7)).unwrap();
    assert_eq!(s, again);
}

#[test]
fn generated_arrangement_round_trips_through_reports() {
    let spec = GeneratorSpec { family: Family::RandomRational, d: 2, k: 3, seed: 11, coefficient_height: 20 };
    let g = generate(&spec).unwrap();
    let text = g.arrangement.to_json();
    let input = Input::from_json(&text).unwrap();
    let Input::Arrangement(arr) = &input else { panic!("curves parsed as a profile") };
    let r = analyze_arrangement(arr, 6).unwrap();
    assert_eq!(r.invariants.profile.t, g.profile.t);
    assert_eq!(r.points.len() as u64, r.invariants.profile.t.values().sum::<u64>());

    let c = covers_report(&input, &[3, 5]).unwrap();
    assert_eq!(c.covers.len(), 2);
    // p = 2 with one or two lines is an unsupported case
    assert!(matches!(covers_report(&input, &[2]), Err(conicline::Error::UnsupportedCoverCase { p: 2, d: 2 })));
}

#[test]
fn archive_lines_parse_back() {
    let spec = SearchSpec::from_json(r#"{"mode": "combinatorial", "d": [0, 2], "k": [3, 3], "budget": 50, "seed": 3}"#)
        .unwrap();
    let out = spec.run().unwrap();
    let text = to_json_lines(out.records());
    let back: Vec<SearchRecord> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(back, out.records());
}
