use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Combinatorial data of an arrangement of `d` lines and `k` smooth conics
/// with only ordinary singularities: `t[r]` is the number of points where
/// exactly `r` curves meet (`r >= 2`). Zero entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceProfile {
    pub d: usize,
    pub k: usize,
    pub t: BTreeMap<usize, u64>,
    /// Whether some line meets the rest of the arrangement in exactly two
    /// points. Known only for geometric arrangements or by assertion.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub has_exceptional_line: Option<bool>,
    /// Whether every point of the line part also lies on some conic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypothesis_a_ok: Option<bool>,
    /// Set only when the profile was computed from explicit curves.
    #[serde(default, skip_deserializing)]
    pub certified: bool,
}

pub fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

impl IncidenceProfile {
    /// Validates and builds an uncertified profile.
    pub fn new(d: usize, k: usize, t: impl IntoIterator<Item = (usize, u64)>) -> Result<Self> {
        let p = IncidenceProfile {
            d,
            k,
            t: t.into_iter().filter(|&(_, c)| c > 0).collect(),
            has_exceptional_line: None,
            hypothesis_a_ok: None,
            certified: false,
        };
        p.validate()?;
        Ok(p)
    }

    /// Builds from the list `[t_2, t_3, ...]`.
    pub fn from_counts(d: usize, k: usize, counts: &[u64]) -> Result<Self> {
        Self::new(d, k, counts.iter().enumerate().map(|(i, &c)| (i + 2, c)))
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.d + self.k;
        if m < 3 {
            return Err(Error::TooFewCurves(m));
        }
        for (&r, &c) in &self.t {
            if c == 0 {
                continue;
            }
            if r < 2 {
                return Err(Error::InvalidInput(format!("multiplicity {r} below 2")));
            }
            if r == m {
                return Err(Error::ForbiddenFullPoint(m));
            }
            if r > m {
                return Err(Error::InvalidInput(format!("multiplicity {r} exceeds {m} curves")));
            }
        }
        if !self.count_identity_holds() {
            return Err(Error::InvalidInput(format!(
                "pair count {} differs from {}",
                self.pair_count(),
                self.expected_pair_count()
            )));
        }
        if self.d == 0 && self.has_exceptional_line == Some(true) {
            return Err(Error::InvalidInput("exceptional line claimed with no lines".into()));
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.d + self.k
    }

    pub fn t(&self, r: usize) -> u64 {
        self.t.get(&r).copied().unwrap_or(0)
    }

    /// `sum C(r,2) t_r`: incidences counted pairwise.
    pub fn pair_count(&self) -> u64 {
        self.t.iter().map(|(&r, &c)| binom2(r as u64) * c).sum()
    }

    /// `C(d,2) + 2dk + 4C(k,2)`: intersection points of all pairs by Bezout.
    pub fn expected_pair_count(&self) -> u64 {
        let (d, k) = (self.d as u64, self.k as u64);
        binom2(d) + 2 * d * k + 4 * binom2(k)
    }

    pub fn count_identity_holds(&self) -> bool {
        self.pair_count() == self.expected_pair_count()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.t.keys().copied().max().unwrap_or(0)
    }

    /// No line meets the others in only two points. Vacuous when `d = 0`.
    pub fn no_exceptional_line(&self) -> Option<bool> {
        if self.d == 0 {
            Some(true)
        } else {
            self.has_exceptional_line.map(|b| !b)
        }
    }

    /// Every singular point of the line part lies on a conic. Vacuous when
    /// `d = 0`; a single line always has points off the conics.
    pub fn hypothesis_a(&self) -> Option<bool> {
        match self.d {
            0 => Some(true),
            1 => Some(false),
            _ => self.hypothesis_a_ok,
        }
    }

    /// `[t_2, ..., t_{max}]`, for display and ordering.
    pub fn counts(&self) -> Vec<u64> {
        let top = self.max_multiplicity().max(2);
        (2..=top).map(|r| self.t(r)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_forbidden_points() {
        let p = IncidenceProfile::from_counts(0, 3, &[12]).unwrap();
        assert_eq!(p.pair_count(), 12);
        assert_eq!(IncidenceProfile::from_counts(0, 3, &[0, 4]), Err(Error::ForbiddenFullPoint(3)));
        assert!(matches!(IncidenceProfile::from_counts(0, 3, &[11]), Err(Error::InvalidInput(_))));
        assert_eq!(IncidenceProfile::from_counts(1, 1, &[2]), Err(Error::TooFewCurves(2)));
        // triangle: three double points
        assert!(IncidenceProfile::from_counts(3, 0, &[3]).is_ok());
    }

    #[test]
    fn json_keys_are_multiplicities() {
        let p = IncidenceProfile::from_counts(0, 3, &[12]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains(r#""t":{"2":12}"#));
        let mut back: IncidenceProfile = serde_json::from_str(&s).unwrap();
        back.certified = false;
        assert_eq!(back, p);
    }
}
