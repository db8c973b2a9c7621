//! Points of an arrangement with the curves through them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::arrangement::Arrangement;
use super::intersect::{intersect_pair, AlgebraicPoint, PairPoint, PointWitness};
use crate::algebra::roots_equal;
use crate::error::{Error, Result};
use crate::invariants::profile::binom2;
use crate::invariants::IncidenceProfile;

#[derive(Clone, Debug)]
pub struct IncidencePoint {
    pub point: AlgebraicPoint,
    /// Sorted indices of the curves through the point.
    pub members: Vec<usize>,
    pub witness: PointWitness,
}

impl IncidencePoint {
    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }
}

type PairTable = Vec<((usize, usize), Vec<PairPoint>)>;

fn all_pairs(arr: &Arrangement) -> Result<PairTable> {
    let m = arr.len();
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            let pts = intersect_pair(arr.curve(i), arr.curve(j)).map_err(|e| match e {
                Error::DuplicateCurve(..) => Error::DuplicateCurve(i, j),
                e => e,
            })?;
            if pts.iter().any(|p| p.is_tangent()) {
                return Err(Error::NonOrdinarySingularity(i, j));
            }
            out.push(((i, j), pts));
        }
    }
    Ok(out)
}

/// Incidence points and the profile of an arrangement.
///
/// Each point of a pair `(i, j)` is tested exactly against every other
/// curve; it is recorded once, under the pair of its two smallest members.
pub fn incidence_profile(arr: &Arrangement) -> Result<(IncidenceProfile, Vec<IncidencePoint>)> {
    let m = arr.len();
    if m < 3 {
        return Err(Error::TooFewCurves(m));
    }
    let mut points = Vec::new();
    for ((i, j), pts) in all_pairs(arr)? {
        'point: for p in pts {
            let mut members = vec![i, j];
            for l in 0..m {
                if l == i || l == j || !p.witness.lies_on(arr.curve(l))? {
                    continue;
                }
                if l < j {
                    // found already under a smaller pair
                    continue 'point;
                }
                members.push(l);
            }
            members.sort_unstable();
            if members.len() == m {
                return Err(Error::ForbiddenFullPoint(m));
            }
            points.push(IncidencePoint { point: p.point, members, witness: p.witness });
        }
    }
    let mut t: BTreeMap<usize, u64> = BTreeMap::new();
    for p in &points {
        *t.entry(p.multiplicity()).or_default() += 1;
    }
    let mut profile = IncidenceProfile::new(arr.d(), arr.k(), t)
        .map_err(|e| Error::Internal(format!("computed profile rejected: {e}")))?;
    profile.has_exceptional_line = Some(!exceptional_lines(arr, &points).is_empty());
    profile.hypothesis_a_ok = Some(hypothesis_a(arr, &points));
    profile.certified = true;
    Ok((profile, points))
}

/// Lines meeting the rest of the arrangement in exactly two points.
pub fn exceptional_lines(arr: &Arrangement, points: &[IncidencePoint]) -> BTreeSet<usize> {
    (0..arr.d()).filter(|&i| points.iter().filter(|p| p.members.contains(&i)).count() == 2).collect()
}

/// No point lies on all the lines and on no conic.
fn hypothesis_a(arr: &Arrangement, points: &[IncidencePoint]) -> bool {
    match arr.d() {
        0 => true,
        1 => false,
        d => !points.iter().any(|p| p.members.len() == d && p.members.iter().all(|&i| i < d)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiyaokaHypotheses {
    /// (a) no point on all lines and on no conic.
    pub a: bool,
    /// (b) no exceptional line.
    pub b: bool,
    pub d_zero_or_at_least_3: bool,
    pub k_at_least_3: bool,
}

impl MiyaokaHypotheses {
    pub fn all_hold(&self) -> bool {
        self.a && self.b && self.d_zero_or_at_least_3 && self.k_at_least_3
    }
}

pub fn check_prop_miyaoka_hypotheses(arr: &Arrangement, points: &[IncidencePoint]) -> MiyaokaHypotheses {
    MiyaokaHypotheses {
        a: hypothesis_a(arr, points),
        b: exceptional_lines(arr, points).is_empty(),
        d_zero_or_at_least_3: arr.d() == 0 || arr.d() >= 3,
        k_at_least_3: arr.k() >= 3,
    }
}

fn same_point(a: &AlgebraicPoint, b: &AlgebraicPoint) -> Result<bool> {
    Ok(a.chart == b.chart && roots_equal(&a.u, &b.u)? && roots_equal(&a.v, &b.v)?)
}

/// Second route to the profile: cluster all pairwise points by comparing
/// affine coordinates, then check that a cluster with `r` curves collected
/// exactly `C(r, 2)` pairwise points.
pub fn cluster_profile(arr: &Arrangement) -> Result<IncidenceProfile> {
    let m = arr.len();
    if m < 3 {
        return Err(Error::TooFewCurves(m));
    }
    let mut clusters: Vec<(AlgebraicPoint, BTreeSet<usize>, u64)> = Vec::new();
    for ((i, j), pts) in all_pairs(arr)? {
        for p in pts {
            let mut found = None;
            for (idx, c) in clusters.iter().enumerate() {
                if same_point(&c.0, &p.point)? {
                    found = Some(idx);
                    break;
                }
            }
            match found {
                Some(idx) => {
                    clusters[idx].1.extend([i, j]);
                    clusters[idx].2 += 1;
                }
                None => clusters.push((p.point, BTreeSet::from([i, j]), 1)),
            }
        }
    }
    let mut t: BTreeMap<usize, u64> = BTreeMap::new();
    for (_, members, pairs) in &clusters {
        let r = members.len();
        if binom2(r as u64) != *pairs {
            return Err(Error::Internal(format!("cluster of {r} curves holds {pairs} pair points")));
        }
        if r == m {
            return Err(Error::ForbiddenFullPoint(m));
        }
        *t.entry(r).or_default() += 1;
    }
    IncidenceProfile::new(arr.d(), arr.k(), t)
}
