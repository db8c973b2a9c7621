//! Combinatorial invariants of an incidence profile and the inequality suite.

pub mod bounds;
pub mod chern;
pub mod profile;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use bounds::{inequality_report, BoundEntry, InequalityReport, Status};
pub use chern::{characteristic_number, f_vector, log_chern_conic_line, log_chern_general, FVector, LogChernNumbers};
pub use profile::IncidenceProfile;

use crate::algebra::rational::{serde_opt_str, to_decimal};

/// Significant digits of `gamma_decimal` unless overridden.
pub const DEFAULT_DECIMAL_DIGITS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub profile: IncidenceProfile,
    pub f_vector: FVector,
    pub log_chern: LogChernNumbers,
    #[serde(with = "serde_opt_str")]
    pub gamma: Option<BigRational>,
    pub gamma_decimal: Option<String>,
    pub bounds: InequalityReport,
}

pub fn invariant_report(p: &IncidenceProfile, digits: usize) -> InvariantReport {
    let log_chern = log_chern_conic_line(p);
    let gamma = characteristic_number(&log_chern).ok();
    InvariantReport {
        profile: p.clone(),
        f_vector: f_vector(p),
        gamma_decimal: gamma.as_ref().map(|g| to_decimal(g, digits)),
        gamma,
        log_chern,
        bounds: inequality_report(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_report_json() {
        let p = IncidenceProfile::from_counts(21, 21, &[42, 252, 189]).unwrap();
        let r = invariant_report(&p, DEFAULT_DECIMAL_DIGITS);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["gamma"], "108/43");
        assert_eq!(v["gamma_decimal"], "2.51163");
        assert_eq!(v["log_chern"]["c1sq"], "2592");
        assert_eq!(v["f_vector"]["f1"], 1596);
    }
}
