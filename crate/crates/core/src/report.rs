//! End-to-end reports shared by the command line and the browser demo.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::covers::{check_cover_exists, cover_report, BlowupData, CoverCertificate, CoverReport};
use crate::error::{Error, Result};
use crate::geometry::{
    check_prop_miyaoka_hypotheses, exceptional_lines, incidence_profile, Arrangement, ArrangementFile, IncidencePoint,
    MiyaokaHypotheses,
};
use crate::invariants::{invariant_report, IncidenceProfile, InvariantReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSummary {
    pub members: Vec<usize>,
    pub multiplicity: usize,
    /// Affine chart the exact coordinates live in, named by the coordinate
    /// set to one.
    pub chart: String,
    /// Homogeneous coordinates rounded for display only.
    pub approx_decimal: [String; 3],
}

fn complex_decimal(z: Complex64, digits: usize) -> String {
    let prec = digits.min(17);
    let clean = |x: f64| if x.abs() < 0.5 * 10f64.powi(-(prec as i32)) { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.prec$}")
    } else {
        format!("{re:.prec$}{}{:.prec$}i", if im < 0.0 { '-' } else { '+' }, im.abs())
    }
}

impl PointSummary {
    pub fn new(p: &IncidencePoint, digits: usize) -> Self {
        let c = p.point.approx();
        PointSummary {
            members: p.members.clone(),
            multiplicity: p.multiplicity(),
            chart: format!("{:?}", p.point.chart),
            approx_decimal: c.map(|z| complex_decimal(z, digits)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementReport {
    pub invariants: InvariantReport,
    pub exceptional_lines: Vec<usize>,
    pub miyaoka_hypotheses: MiyaokaHypotheses,
    pub points: Vec<PointSummary>,
}

/// Certified incidence, invariants and bounds of explicit curves. A bound
/// failing here is a genuine contradiction and is returned as an error.
pub fn analyze_arrangement(arr: &Arrangement, digits: usize) -> Result<ArrangementReport> {
    let (profile, points) = incidence_profile(arr)?;
    let invariants = invariant_report(&profile, digits);
    invariants.bounds.ensure_consistent()?;
    Ok(ArrangementReport {
        invariants,
        exceptional_lines: exceptional_lines(arr, &points).into_iter().collect(),
        miyaoka_hypotheses: check_prop_miyaoka_hypotheses(arr, &points),
        points: points.iter().map(|p| PointSummary::new(p, digits)).collect(),
    })
}

/// Either explicit curves or bare combinatorial data.
#[derive(Clone, Debug)]
pub enum Input {
    Arrangement(Arrangement),
    Profile(IncidenceProfile),
}

impl Input {
    /// A JSON object with a `d` field is a profile; anything else is read
    /// as an arrangement file.
    pub fn from_json(s: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if v.get("d").is_some() {
            let p: IncidenceProfile = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            p.validate()?;
            Ok(Input::Profile(p))
        } else {
            let f: ArrangementFile = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Input::Arrangement(f.build()?))
        }
    }

    /// Profile and blow-up data; explicit curves give certified incidence.
    pub fn resolve(&self) -> Result<(IncidenceProfile, BlowupData)> {
        match self {
            Input::Arrangement(arr) => {
                let (profile, points) = incidence_profile(arr)?;
                let basis = BlowupData::from_incidence(arr.d(), arr.k(), &points);
                Ok((profile, basis))
            }
            Input::Profile(p) => Ok((p.clone(), BlowupData::synthetic(p))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCoverReport {
    pub certificate: CoverCertificate,
    pub invariants: CoverReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoversReport {
    pub profile: IncidenceProfile,
    /// Whether every blown-up point has an explicit curve assignment.
    pub assignment: bool,
    pub covers: Vec<PrimeCoverReport>,
}

pub fn covers_report(input: &Input, primes: &[u64]) -> Result<CoversReport> {
    let (profile, basis) = input.resolve()?;
    if profile.certified {
        invariant_report(&profile, 1).bounds.ensure_consistent()?;
    }
    let mut covers = Vec::with_capacity(primes.len());
    for &p in primes {
        let certificate = check_cover_exists(profile.d, profile.k, p)?;
        let invariants = cover_report(p, &profile, &basis)?;
        covers.push(PrimeCoverReport { certificate, invariants });
    }
    Ok(CoversReport { assignment: basis.has_assignment(), profile, covers })
}
