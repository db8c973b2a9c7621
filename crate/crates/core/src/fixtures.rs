//! Built-in combinatorial fixtures, embedded at compile time.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{characteristic_number, log_chern_general, IncidenceProfile, LogChernNumbers};

const KLEIN: &str = include_str!("../data/klein.json");
const DUAL_HESSE: &str = include_str!("../data/dual-hesse.json");

pub const NAMES: [&str; 2] = ["klein", "dual-hesse"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveGroup {
    pub degree: i64,
    pub genus: i64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub curves: Vec<CurveGroup>,
    pub profile: IncidenceProfile,
}

impl Fixture {
    pub fn from_json(s: &str) -> Result<Self> {
        let f: Fixture = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        f.profile.validate()?;
        Ok(f)
    }

    /// Log Chern numbers from the degree/genus formula, independent of the
    /// conic-line specialization.
    pub fn log_chern(&self) -> Result<LogChernNumbers> {
        let mut degrees = Vec::new();
        let mut genera = Vec::new();
        for g in &self.curves {
            degrees.extend(std::iter::repeat_n(g.degree, g.count));
            genera.extend(std::iter::repeat_n(g.genus, g.count));
        }
        log_chern_general(&degrees, &genera, &self.profile.t)
    }

    pub fn gamma(&self) -> Result<BigRational> {
        characteristic_number(&self.log_chern()?)
    }
}

pub fn klein() -> Fixture {
    Fixture::from_json(KLEIN).expect("embedded fixture")
}

pub fn dual_hesse() -> Fixture {
    Fixture::from_json(DUAL_HESSE).expect("embedded fixture")
}

pub fn by_name(name: &str) -> Result<Fixture> {
    match name {
        "klein" => Ok(klein()),
        "dual-hesse" => Ok(dual_hesse()),
        _ => Err(Error::InvalidInput(format!("unknown fixture {name:?}"))),
    }
}
