use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::profile::IncidenceProfile;
use crate::algebra::rational::{rat, serde_str};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub f0: u64,
    pub f1: u64,
    pub f2: u64,
}

pub fn f_vector(p: &IncidenceProfile) -> FVector {
    let mut f = FVector { f0: 0, f1: 0, f2: 0 };
    for (&r, &c) in &p.t {
        let r = r as u64;
        f.f0 += c;
        f.f1 += r * c;
        f.f2 += r * r * c;
    }
    f
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogChernNumbers {
    #[serde(with = "serde_str")]
    pub c1sq: BigRational,
    #[serde(with = "serde_str")]
    pub c2: BigRational,
}

/// Chern numbers of the log cotangent sheaf for curves of the given
/// degrees and genera meeting in ordinary singularities counted by `t`.
pub fn log_chern_general(degrees: &[i64], genera: &[i64], t: &BTreeMap<usize, u64>) -> Result<LogChernNumbers> {
    if degrees.len() != genera.len() {
        return Err(Error::InvalidInput("degree and genus lists differ in length".into()));
    }
    if degrees.len() < 3 {
        return Err(Error::InvalidInput(format!("need at least 3 curves, got {}", degrees.len())));
    }
    let sq: i64 = degrees.iter().map(|d| d * d).sum();
    let g: i64 = genera.iter().map(|g| g - 1).sum();
    let mut c1sq = rat(9 - sq + 4 * g);
    let mut c2 = rat(3 + 2 * g);
    for (&r, &n) in t {
        let (r, n) = (r as i64, n as i64);
        c1sq += rat((3 * r - 4) * n);
        c2 += rat((r - 1) * n);
    }
    Ok(LogChernNumbers { c1sq, c2 })
}

/// Specialization to `d` lines and `k` conics.
pub fn log_chern_conic_line(p: &IncidenceProfile) -> LogChernNumbers {
    let f = f_vector(p);
    let (d, k) = (p.d as i64, p.k as i64);
    let (f0, f1) = (f.f0 as i64, f.f1 as i64);
    LogChernNumbers { c1sq: rat(9 - 8 * k - 5 * d + 3 * f1 - 4 * f0), c2: rat(3 - 2 * k - 2 * d + f1 - f0) }
}

/// `gamma = c1^2 / c2`.
pub fn characteristic_number(c: &LogChernNumbers) -> Result<BigRational> {
    if c.c2.is_zero() {
        return Err(Error::UndefinedSlope);
    }
    Ok(&c.c1sq / &c.c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;

    #[test]
    fn f_vectors() {
        let tri = IncidenceProfile::from_counts(3, 0, &[3]).unwrap();
        assert_eq!(f_vector(&tri), FVector { f0: 3, f1: 6, f2: 12 });
        let klein = IncidenceProfile::from_counts(21, 21, &[42, 252, 189]).unwrap();
        assert_eq!(f_vector(&klein), FVector { f0: 483, f1: 1596, f2: 5460 });
    }

    #[test]
    fn chern_numbers() {
        let klein = IncidenceProfile::from_counts(21, 21, &[42, 252, 189]).unwrap();
        let c = log_chern_conic_line(&klein);
        assert_eq!((c.c1sq.clone(), c.c2.clone()), (rat(2592), rat(1032)));
        assert_eq!(characteristic_number(&c).unwrap(), frac(108, 43));

        let hesse = BTreeMap::from([(3, 12)]);
        let c = log_chern_general(&[1; 9], &[0; 9], &hesse).unwrap();
        assert_eq!((c.c1sq.clone(), c.c2.clone()), (rat(24), rat(9)));
        assert_eq!(characteristic_number(&c).unwrap(), frac(8, 3));

        let tri = IncidenceProfile::from_counts(3, 0, &[3]).unwrap();
        let c = log_chern_conic_line(&tri);
        assert!(c.c1sq.is_zero() && c.c2.is_zero());
        assert_eq!(characteristic_number(&c), Err(Error::UndefinedSlope));

        let conics = IncidenceProfile::from_counts(0, 3, &[12]).unwrap();
        let a = log_chern_conic_line(&conics);
        let b = log_chern_general(&[2, 2, 2], &[0, 0, 0], &conics.t).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.c1sq, a.c2), (rat(9), rat(9)));
    }

    #[test]
    fn too_few_curves() {
        assert!(matches!(log_chern_general(&[1, 1], &[0, 0], &BTreeMap::new()), Err(Error::InvalidInput(_))));
    }
}
