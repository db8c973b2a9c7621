//! Inequality checks. Every check returns an exact slack (the amount by
//! which the inequality holds) and a status that respects hypotheses.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::chern::{characteristic_number, log_chern_conic_line};
use super::profile::IncidenceProfile;
use crate::algebra::rational::{frac, rat, serde_opt_str};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    /// `None` when the input does not carry enough information.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub statement: String,
    pub status: Status,
    /// Left side minus right side; `null` when it cannot be evaluated.
    #[serde(with = "serde_opt_str")]
    pub slack: Option<BigRational>,
    /// Strict inequalities need a positive slack, the others a nonnegative one.
    pub strict: bool,
    /// Holds with zero slack.
    pub equality: bool,
    pub hypotheses: Vec<Hypothesis>,
    /// A known theorem rather than a reference threshold.
    pub theorem: bool,
}

impl BoundEntry {
    fn build(
        name: &str,
        statement: &str,
        slack: Option<BigRational>,
        strict: bool,
        hypotheses: Vec<Hypothesis>,
        theorem: bool,
    ) -> Self {
        let applicable = hypotheses.iter().all(|h| h.holds == Some(true));
        let status = match (&slack, applicable) {
            (Some(s), true) => {
                let ok = if strict { s.is_positive() } else { !s.is_negative() };
                if ok {
                    Status::Holds
                } else {
                    Status::Fails
                }
            }
            _ => Status::NotApplicable,
        };
        let equality = status == Status::Holds && slack.as_ref().is_some_and(|s| s.is_zero());
        BoundEntry {
            name: name.into(),
            statement: statement.into(),
            status,
            slack,
            strict,
            equality,
            hypotheses,
            theorem,
        }
    }
}

fn hyp(name: &str, holds: Option<bool>) -> Hypothesis {
    Hypothesis { name: name.into(), holds }
}

fn k_at_least_3(p: &IncidenceProfile) -> Hypothesis {
    hyp("k >= 3", Some(p.k >= 3))
}

fn gamma_defined(g: &Option<BigRational>) -> Hypothesis {
    hyp("c2 != 0", Some(g.is_some()))
}

/// `sum_{r >= from} w(r) t_r`.
fn weighted(p: &IncidenceProfile, from: usize, w: impl Fn(i64) -> i64) -> BigRational {
    p.t.iter().filter(|(&r, _)| r >= from).map(|(&r, &c)| rat(w(r as i64) * c as i64)).sum()
}

fn t(p: &IncidenceProfile, r: usize) -> BigRational {
    rat(p.t(r) as i64)
}

pub fn check_c2_positive(p: &IncidenceProfile) -> BoundEntry {
    BoundEntry::build(
        "c2_positive",
        "3 - 2k - 2d + f1 - f0 > 0",
        Some(log_chern_conic_line(p).c2),
        true,
        vec![k_at_least_3(p)],
        true,
    )
}

pub fn hirzebruch_slack(p: &IncidenceProfile) -> BigRational {
    rat(5 * p.k as i64) + t(p, 2) + t(p, 3) - rat(p.d as i64) - weighted(p, 5, |r| r - 4)
}

pub fn check_hirzebruch(p: &IncidenceProfile) -> BoundEntry {
    BoundEntry::build(
        "hirzebruch",
        "5k + t2 + t3 >= d + sum_{r>=5} (r-4) t_r",
        Some(hirzebruch_slack(p)),
        false,
        vec![k_at_least_3(p)],
        true,
    )
}

pub fn hirzebruch_improved_slack(p: &IncidenceProfile) -> BigRational {
    rat(5 * p.k as i64) + t(p, 2) + frac(3, 4) * t(p, 3) - rat(p.d as i64) - weighted(p, 5, |r| r - 4)
}

pub fn check_hirzebruch_improved(p: &IncidenceProfile) -> BoundEntry {
    BoundEntry::build(
        "hirzebruch_improved",
        "5k + t2 + 3/4 t3 >= d + sum_{r>=5} (r-4) t_r",
        Some(hirzebruch_improved_slack(p)),
        false,
        vec![k_at_least_3(p), hyp("no exceptional line", p.no_exceptional_line())],
        true,
    )
}

pub fn miyaoka_bound_slack(p: &IncidenceProfile) -> BigRational {
    rat(8 * p.k as i64) + t(p, 2) + frac(3, 4) * t(p, 3) - rat(p.d as i64) - weighted(p, 5, |r| 2 * r - 9)
}

/// Hypotheses of the log-Miyaoka bound: `d = 0` or `d >= 3`, `k >= 3`,
/// (a) no point on all lines and no conic, (b) no exceptional line.
pub fn miyaoka_hypotheses(p: &IncidenceProfile) -> Vec<Hypothesis> {
    vec![
        hyp("d = 0 or d >= 3", Some(p.d == 0 || p.d >= 3)),
        k_at_least_3(p),
        hyp("(a) no point on all lines off the conics", p.hypothesis_a()),
        hyp("(b) no exceptional line", p.no_exceptional_line()),
    ]
}

pub fn check_miyaoka(p: &IncidenceProfile) -> BoundEntry {
    BoundEntry::build(
        "miyaoka",
        "8k + t2 + 3/4 t3 >= d + sum_{r>=5} (2r-9) t_r",
        Some(miyaoka_bound_slack(p)),
        false,
        miyaoka_hypotheses(p),
        true,
    )
}

pub fn corollary_slack(p: &IncidenceProfile) -> BigRational {
    rat(8 * p.k as i64) + rat(2) * t(p, 2) + t(p, 3) - rat(3 + p.d as i64) - weighted(p, 5, |r| r - 4)
}

pub fn check_corollary(p: &IncidenceProfile) -> BoundEntry {
    BoundEntry::build(
        "corollary",
        "8k + 2 t2 + t3 > 3 + d + sum_{r>=5} (r-4) t_r",
        Some(corollary_slack(p)),
        true,
        vec![k_at_least_3(p)],
        true,
    )
}

/// `(4k^2 - 12k + 9) / (2k^2 - 4k + 3)`, the value for `k` conics with
/// only double points.
pub fn conic_lower_bound(k: usize) -> BigRational {
    let k = k as i64;
    frac(4 * k * k - 12 * k + 9, 2 * k * k - 4 * k + 3)
}

fn gamma_of(p: &IncidenceProfile) -> Option<BigRational> {
    characteristic_number(&log_chern_conic_line(p)).ok()
}

fn gamma_entries(p: &IncidenceProfile, g: &Option<BigRational>) -> Vec<BoundEntry> {
    let diff = |bound: BigRational, upper: bool| g.as_ref().map(|g| if upper { bound - g } else { g - bound });
    let no_high = p.t.iter().all(|(&r, &c)| r < 4 || c == 0);
    vec![
        BoundEntry::build(
            "gamma_lt_8_3",
            "gamma < 8/3",
            diff(frac(8, 3), true),
            true,
            vec![k_at_least_3(p), gamma_defined(g)],
            true,
        ),
        BoundEntry::build(
            "gamma_lt_5_2",
            "gamma < 5/2 when only double and triple points occur",
            diff(frac(5, 2), true),
            true,
            vec![k_at_least_3(p), hyp("t_r = 0 for r >= 4", Some(no_high)), gamma_defined(g)],
            true,
        ),
        BoundEntry::build("gamma_le_3", "gamma <= 3", diff(rat(3), true), false, vec![gamma_defined(g)], true),
        BoundEntry::build(
            "gamma_conic_lower",
            "gamma >= (4k^2 - 12k + 9) / (2k^2 - 4k + 3) for conics only",
            diff(conic_lower_bound(p.k), false),
            false,
            vec![hyp("d = 0", Some(p.d == 0)), k_at_least_3(p), gamma_defined(g)],
            true,
        ),
        BoundEntry::build(
            "gamma_line_reference",
            "gamma <= 8/3 for line arrangements, equality only for the dual Hesse arrangement",
            diff(frac(8, 3), true),
            false,
            vec![hyp("k = 0", Some(p.k == 0)), gamma_defined(g)],
            false,
        ),
    ]
}

/// The gamma bounds on their own; fails when gamma is undefined.
pub fn check_gamma_bounds(p: &IncidenceProfile) -> Result<Vec<BoundEntry>> {
    let g = characteristic_number(&log_chern_conic_line(p))?;
    Ok(gamma_entries(p, &Some(g)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub certified: bool,
    pub entries: Vec<BoundEntry>,
}

impl InequalityReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Failed theorems on certified input: these contradict known results.
    pub fn contradictions(&self) -> Vec<&BoundEntry> {
        if !self.certified {
            return Vec::new();
        }
        self.entries.iter().filter(|e| e.theorem && e.status == Status::Fails).collect()
    }

    /// No applicable bound fails.
    pub fn feasible(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fails)
    }

    pub fn ensure_consistent(&self) -> Result<()> {
        match self.contradictions().first() {
            None => Ok(()),
            Some(e) => Err(Error::TheoremContradiction(format!(
                "{} fails on a certified arrangement (slack {})",
                e.name,
                e.slack.as_ref().map(crate::algebra::rational::to_string).unwrap_or_default()
            ))),
        }
    }
}

pub fn inequality_report(p: &IncidenceProfile) -> InequalityReport {
    let g = gamma_of(p);
    let mut entries = vec![
        check_c2_positive(p),
        check_hirzebruch(p),
        check_hirzebruch_improved(p),
        check_miyaoka(p),
        check_corollary(p),
    ];
    entries.extend(gamma_entries(p, &g));
    InequalityReport { certified: p.certified, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> IncidenceProfile {
        IncidenceProfile::from_counts(21, 21, &[42, 252, 189]).unwrap()
    }

    fn conics3() -> IncidenceProfile {
        IncidenceProfile::from_counts(0, 3, &[12]).unwrap()
    }

    #[test]
    fn klein_entries() {
        let r = inequality_report(&klein());
        let c2 = r.get("c2_positive").unwrap();
        assert_eq!((c2.status, c2.slack.clone()), (Status::Holds, Some(rat(1032))));
        assert_eq!(r.get("hirzebruch").unwrap().slack, Some(rat(378)));
        assert_eq!(r.get("hirzebruch_improved").unwrap().status, Status::NotApplicable);
        assert_eq!(r.get("corollary").unwrap().slack, Some(rat(480)));
        let g = r.get("gamma_lt_8_3").unwrap();
        assert_eq!((g.status, g.slack.clone()), (Status::Holds, Some(frac(20, 129))));
        assert_eq!(r.get("gamma_lt_5_2").unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn generic_conics() {
        let r = inequality_report(&conics3());
        assert_eq!(r.get("c2_positive").unwrap().slack, Some(rat(9)));
        assert_eq!(r.get("hirzebruch").unwrap().slack, Some(rat(27)));
        let imp = r.get("hirzebruch_improved").unwrap();
        assert_eq!((imp.status, imp.slack.clone()), (Status::Holds, Some(rat(27))));
        let m = r.get("miyaoka").unwrap();
        assert_eq!((m.status, m.slack.clone()), (Status::Holds, Some(rat(36))));
        assert_eq!(r.get("corollary").unwrap().slack, Some(rat(45)));
        let low = r.get("gamma_conic_lower").unwrap();
        assert!(low.status == Status::Holds && low.equality);
    }

    #[test]
    fn improved_with_triples() {
        // t3 = 8 with k = 3 is only a bare profile, but the arithmetic is checkable
        let p = IncidenceProfile { d: 0, k: 3, t: [(3, 8)].into(), ..conics3() };
        assert_eq!(hirzebruch_improved_slack(&p), rat(21));
    }

    #[test]
    fn hypotheses_gate_status() {
        let p = IncidenceProfile::from_counts(0, 4, &[24]).unwrap();
        assert_eq!(check_miyaoka(&p).status, Status::Holds);
        let d1 = IncidenceProfile::from_counts(1, 3, &[18]).unwrap();
        assert_eq!(check_miyaoka(&d1).status, Status::NotApplicable);
        let k2 = IncidenceProfile::from_counts(2, 2, &[13]).unwrap();
        assert_eq!(check_c2_positive(&k2).status, Status::NotApplicable);
        assert_eq!(check_corollary(&k2).status, Status::NotApplicable);
    }

    #[test]
    fn dual_hesse_gamma() {
        let p = IncidenceProfile::from_counts(9, 0, &[0, 12]).unwrap();
        let e = check_gamma_bounds(&p).unwrap();
        let find = |n: &str| e.iter().find(|x| x.name == n).unwrap().clone();
        assert_eq!(find("gamma_lt_8_3").status, Status::NotApplicable);
        assert_eq!(find("gamma_le_3").status, Status::Holds);
        assert!(find("gamma_line_reference").equality);
        let tri = IncidenceProfile::from_counts(3, 0, &[3]).unwrap();
        assert_eq!(check_gamma_bounds(&tri), Err(Error::UndefinedSlope));
    }

    #[test]
    fn contradictions_only_on_certified_input() {
        // not a valid profile; built directly to force a failing bound
        let mut bad = IncidenceProfile { t: [(5, 20)].into(), ..conics3() };
        let r = inequality_report(&bad);
        assert_eq!(r.get("hirzebruch").unwrap().status, Status::Fails);
        assert!(r.contradictions().is_empty() && r.ensure_consistent().is_ok());
        bad.certified = true;
        let r = inequality_report(&bad);
        assert!(matches!(r.ensure_consistent(), Err(Error::TheoremContradiction(_))));
    }
}
