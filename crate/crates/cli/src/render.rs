//! CSV and plain-text renderings. JSON output goes through serde directly.

use std::fmt::Write as _;

use conicline::algebra::rational::to_string;
use conicline::algebra::BigRational;
use conicline::invariants::{f_vector, InvariantReport, Status};
use conicline::report::{ArrangementReport, CoversReport};
use conicline::search::{SearchOutcome, SearchRecord};

fn opt(x: &Option<BigRational>) -> String {
    x.as_ref().map(to_string).unwrap_or_default()
}

fn t_vector(r: &InvariantReport) -> String {
    r.profile.t.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

pub fn invariants_csv(r: &InvariantReport) -> String {
    let f = r.f_vector;
    format!(
        "d,k,t,f0,f1,f2,c1sq,c2,gamma,gamma_decimal,feasible\n{},{},{},{},{},{},{},{},{},{},{}\n",
        r.profile.d,
        r.profile.k,
        t_vector(r),
        f.f0,
        f.f1,
        f.f2,
        to_string(&r.log_chern.c1sq),
        to_string(&r.log_chern.c2),
        opt(&r.gamma),
        r.gamma_decimal.clone().unwrap_or_default(),
        r.bounds.feasible()
    )
}

pub fn invariants_pretty(r: &InvariantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "d = {}, k = {}, t = {}", r.profile.d, r.profile.k, t_vector(r));
    let _ = writeln!(s, "f = ({}, {}, {})", r.f_vector.f0, r.f_vector.f1, r.f_vector.f2);
    let _ = writeln!(s, "c1^2 = {}, c2 = {}", to_string(&r.log_chern.c1sq), to_string(&r.log_chern.c2));
    match (&r.gamma, &r.gamma_decimal) {
        (Some(g), Some(dec)) => {
            let _ = writeln!(s, "gamma = {} ~ {dec}", to_string(g));
        }
        _ => s.push_str("gamma undefined (c2 = 0)\n"),
    }
    for e in &r.bounds.entries {
        let status = match e.status {
            Status::Holds if e.equality => "holds with equality",
            Status::Holds => "holds",
            Status::Fails => "FAILS",
            Status::NotApplicable => "n/a",
        };
        let slack = e.slack.as_ref().map(|x| format!(" (slack {})", to_string(x))).unwrap_or_default();
        let _ = writeln!(s, "  {:<22} {status}{slack}", e.name);
    }
    s
}

pub fn analysis_pretty(r: &ArrangementReport) -> String {
    let mut s = invariants_pretty(&r.invariants);
    let _ = writeln!(s, "exceptional lines: {:?}", r.exceptional_lines);
    for p in &r.points {
        let _ = writeln!(s, "  {:?} [{}]", p.members, p.approx_decimal.join(" : "));
    }
    s
}

pub fn covers_csv(r: &CoversReport) -> String {
    let mut s = String::from("p,rank,euler_scaled,k_sq_scaled,bmy_slack,miyaoka_slack\n");
    for c in &r.covers {
        let i = &c.invariants;
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            i.p,
            c.certificate.rank,
            to_string(&i.euler_scaled),
            to_string(&i.k_sq_scaled),
            opt(&i.bmy_slack),
            opt(&i.miyaoka_slack)
        );
    }
    s
}

pub fn covers_pretty(r: &CoversReport) -> String {
    let mut s = String::new();
    for c in &r.covers {
        let i = &c.invariants;
        let _ = writeln!(
            s,
            "p = {}: group rank {}, e / p^({}) = {}, K^2 / p^({}) = {}",
            i.p,
            c.certificate.rank,
            i.scale_exponent,
            to_string(&i.euler_scaled),
            i.k_sq_scale_exponent,
            to_string(&i.k_sq_scaled)
        );
        if let Some(b) = &i.bmy_slack {
            let _ = writeln!(s, "  BMY slack {}", to_string(b));
        }
        if let Some(m) = &i.miyaoka_slack {
            let _ = writeln!(s, "  log-Miyaoka slack {}", to_string(m));
        }
    }
    s
}

fn record_line(r: &SearchRecord) -> String {
    let t = r.profile.t.iter().map(|(k, v)| format!("t{k}={v}")).collect::<Vec<_>>().join(" ");
    format!(
        "d={} k={} {t} f0={} gamma={} ~ {}",
        r.profile.d,
        r.profile.k,
        f_vector(&r.profile).f0,
        to_string(&r.gamma),
        r.gamma_decimal
    )
}

pub fn search_pretty(out: &SearchOutcome) -> String {
    let mut s = String::new();
    match out {
        SearchOutcome::Combinatorial(recs) => {
            s.push_str("feasible profiles (not necessarily realizable), best first\n");
            for r in recs {
                let _ = writeln!(s, "  {}", record_line(r));
            }
        }
        SearchOutcome::Geometric(sum) => {
            let _ = writeln!(
                s,
                "examined {} certified arrangements ({} generation failures); max gamma {}",
                sum.examined,
                sum.generation_failures,
                opt(&sum.max_gamma)
            );
            let _ = writeln!(s, "witnesses above {}: {}", to_string(&sum.threshold), sum.witnesses.len());
            for r in &sum.witnesses {
                let _ = writeln!(s, "  {}", record_line(r));
            }
        }
    }
    s
}
