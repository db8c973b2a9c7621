//! Q-divisor classes on the blow-up `Y` of the plane at the points of
//! multiplicity at least 3, in the basis `h, E_P` with `h^2 = 1`,
//! `E_P^2 = -1` and all mixed products zero.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::algebra::rational::{frac, rat, to_string};
use crate::error::{Error, Result};
use crate::geometry::IncidencePoint;
use crate::invariants::IncidenceProfile;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QDivisorClass {
    pub h: BigRational,
    pub e: BTreeMap<usize, BigRational>,
}

impl QDivisorClass {
    pub fn zero() -> Self {
        QDivisorClass::default()
    }

    pub fn hyperplane() -> Self {
        QDivisorClass { h: rat(1), e: BTreeMap::new() }
    }

    pub fn exceptional(id: usize) -> Self {
        QDivisorClass { h: rat(0), e: BTreeMap::from([(id, rat(1))]) }
    }

    pub fn e(&self, id: usize) -> BigRational {
        self.e.get(&id).cloned().unwrap_or_else(BigRational::zero)
    }

    fn normalized(mut self) -> Self {
        self.e.retain(|_, v| !v.is_zero());
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut e = self.e.clone();
        for (id, v) in &o.e {
            *e.entry(*id).or_insert_with(BigRational::zero) += v;
        }
        QDivisorClass { h: &self.h + &o.h, e }.normalized()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QDivisorClass { h: &self.h * c, e: self.e.iter().map(|(id, v)| (*id, v * c)).collect() }.normalized()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&rat(-1)))
    }

    /// Intersection number.
    pub fn dot(&self, o: &Self) -> BigRational {
        let mut s = &self.h * &o.h;
        for (id, v) in &self.e {
            if let Some(w) = o.e.get(id) {
                s -= v * w;
            }
        }
        s
    }
}

impl fmt::Debug for QDivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} h", to_string(&self.h))?;
        for (id, v) in &self.e {
            write!(f, " + {} E{id}", to_string(v))?;
        }
        Ok(())
    }
}

impl Serialize for QDivisorClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("h", &to_string(&self.h))?;
        let e: BTreeMap<String, String> = self.e.iter().map(|(k, v)| (k.to_string(), to_string(v))).collect();
        m.serialize_entry("e", &e)?;
        m.end()
    }
}

pub fn divisor_self_intersection(d: &QDivisorClass) -> BigRational {
    d.dot(d)
}

pub fn pair_with_component(d: &QDivisorClass, component: &QDivisorClass) -> BigRational {
    d.dot(component)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlownUpPoint {
    pub id: usize,
    pub multiplicity: usize,
    /// Curves through the point, when known.
    pub members: Option<Vec<usize>>,
}

/// The blown-up points of an arrangement with what is known about them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupData {
    pub d: usize,
    pub k: usize,
    pub points: Vec<BlownUpPoint>,
}

/// Pairwise intersection number of curves `i` and `j`.
fn pair_capacity(d: usize, i: usize, j: usize) -> u32 {
    (if i < d { 1 } else { 2 }) * (if j < d { 1 } else { 2 })
}

const ASSIGNMENT_ATTEMPTS: u64 = 32;

impl BlowupData {
    /// Points of multiplicity at least 3 of a computed arrangement.
    pub fn from_incidence(d: usize, k: usize, points: &[IncidencePoint]) -> Self {
        let points = points
            .iter()
            .filter(|p| p.multiplicity() >= 3)
            .enumerate()
            .map(|(id, p)| BlownUpPoint { id, multiplicity: p.multiplicity(), members: Some(p.members.clone()) })
            .collect();
        BlowupData { d, k, points }
    }

    /// Abstract points for a bare profile, one per counted point of
    /// multiplicity at least 3. Curves are assigned greedily so that two
    /// curves never share more points than they meet in; when that fails
    /// the points keep unknown members (classes of individual strict
    /// transforms are then unavailable, aggregate classes still are).
    pub fn synthetic(profile: &IncidenceProfile) -> Self {
        let mut mults: Vec<usize> =
            profile.t.iter().filter(|(&r, _)| r >= 3).flat_map(|(&r, &c)| std::iter::repeat_n(r, c as usize)).collect();
        mults.sort_unstable_by(|a, b| b.cmp(a));
        let assignment = (0..ASSIGNMENT_ATTEMPTS).find_map(|seed| assign(profile.d, profile.k, &mults, seed));
        let points = mults
            .iter()
            .enumerate()
            .map(|(id, &r)| BlownUpPoint { id, multiplicity: r, members: assignment.as_ref().map(|a| a[id].clone()) })
            .collect();
        BlowupData { d: profile.d, k: profile.k, points }
    }

    pub fn has_assignment(&self) -> bool {
        self.points.iter().all(|p| p.members.is_some())
    }

    pub fn degree(&self, curve: usize) -> i64 {
        if curve < self.d {
            1
        } else {
            2
        }
    }

    /// `sum E_P`.
    pub fn exceptional_sum(&self) -> QDivisorClass {
        QDivisorClass { h: rat(0), e: self.points.iter().map(|p| (p.id, rat(1))).collect() }
    }

    /// `K_Y = -3h + sum E_P`.
    pub fn k_y(&self) -> QDivisorClass {
        QDivisorClass::hyperplane().scale(&rat(-3)).add(&self.exceptional_sum())
    }

    /// Strict transform of curve `i`: `deg h - sum of E_P over its points`.
    pub fn strict_transform(&self, i: usize) -> Result<QDivisorClass> {
        if i >= self.d + self.k {
            return Err(Error::InvalidInput(format!("no curve {i}")));
        }
        let mut e = BTreeMap::new();
        for p in &self.points {
            let members = p
                .members
                .as_ref()
                .ok_or_else(|| Error::SyntheticAssignment("curves through the blown-up points are unknown".into()))?;
            if members.contains(&i) {
                e.insert(p.id, rat(-1));
            }
        }
        Ok(QDivisorClass { h: rat(self.degree(i)), e })
    }

    /// `sum of all strict transforms = (d + 2k) h - sum n_P E_P`; needs
    /// only the multiplicities.
    pub fn boundary_sum(&self) -> QDivisorClass {
        QDivisorClass {
            h: rat((self.d + 2 * self.k) as i64),
            e: self.points.iter().map(|p| (p.id, rat(-(p.multiplicity as i64)))).collect(),
        }
        .normalized()
    }
}

/// Tries to give each point `mults[i]` curves without exceeding any pair's
/// intersection number. Greedy with a seeded shuffle for tie-breaking.
fn assign(d: usize, k: usize, mults: &[usize], seed: u64) -> Option<Vec<Vec<usize>>> {
    let m = d + k;
    let mut used = vec![vec![0u32; m]; m];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(mults.len());
    for &r in mults {
        let mut order: Vec<usize> = (0..m).collect();
        if seed > 0 {
            order.shuffle(&mut rng);
        }
        let slack = |c: usize, used: &Vec<Vec<u32>>| -> u32 {
            (0..m).filter(|&o| o != c).map(|o| pair_capacity(d, c, o) - used[c][o]).sum()
        };
        let mut chosen: Vec<usize> = Vec::with_capacity(r);
        while chosen.len() < r {
            let next = order
                .iter()
                .copied()
                .filter(|c| !chosen.contains(c))
                .filter(|&c| chosen.iter().all(|&s| used[c][s] < pair_capacity(d, c, s)))
                .max_by_key(|&c| slack(c, &used))?;
            chosen.push(next);
        }
        for a in 0..r {
            for b in 0..r {
                if a != b {
                    used[chosen[a]][chosen[b]] += 1;
                }
            }
        }
        chosen.sort_unstable();
        out.push(chosen);
    }
    Some(out)
}

/// Coefficients of a class written as `a h + b sum E_P + c sum(curves)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCoefficients {
    pub hyperplane: BigRational,
    pub exceptional: BigRational,
    pub curves: BigRational,
}

impl ComponentCoefficients {
    /// Coefficientwise `<=` with at least one strict inequality.
    pub fn less_than(&self, o: &Self) -> bool {
        let pairs = [(&self.hyperplane, &o.hyperplane), (&self.exceptional, &o.exceptional), (&self.curves, &o.curves)];
        pairs.iter().all(|(a, b)| a <= b) && pairs.iter().any(|(a, b)| a < b)
    }

    pub fn class(&self, basis: &BlowupData) -> QDivisorClass {
        QDivisorClass::hyperplane()
            .scale(&self.hyperplane)
            .add(&basis.exceptional_sum().scale(&self.exceptional))
            .add(&basis.boundary_sum().scale(&self.curves))
    }
}

/// `K_p = -3h + (2p-1)/p sum E_P + (p-1)/p sum(curves)`; `None` gives the
/// limit `K = -3h + 2 sum E_P + sum(curves)`, the log canonical class.
pub fn canonical_coefficients(p: Option<u64>) -> ComponentCoefficients {
    match p {
        Some(p) => {
            let p = p as i64;
            ComponentCoefficients { hyperplane: rat(-3), exceptional: frac(2 * p - 1, p), curves: frac(p - 1, p) }
        }
        None => ComponentCoefficients { hyperplane: rat(-3), exceptional: rat(2), curves: rat(1) },
    }
}

pub fn canonical_q_divisor(p: u64, basis: &BlowupData) -> QDivisorClass {
    canonical_coefficients(Some(p)).class(basis)
}

pub fn log_canonical_divisor(basis: &BlowupData) -> QDivisorClass {
    canonical_coefficients(None).class(basis)
}

/// `K_2` rewritten with the first three conics `C_1, C_2, C_3` absorbed:
/// `sum_P (3 - mu_P)/2 E_P + 1/2 (sum lines + sum_{j >= 4} C_j)`, where
/// `mu_P` counts the first three conics through `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectiveForm {
    pub exceptional: BTreeMap<usize, BigRational>,
    pub curves: BTreeMap<usize, BigRational>,
}

impl EffectiveForm {
    pub fn is_effective(&self) -> bool {
        self.exceptional.values().chain(self.curves.values()).all(|c| !c.is_negative())
    }

    pub fn class(&self, basis: &BlowupData) -> Result<QDivisorClass> {
        let mut acc = QDivisorClass::zero();
        for (id, c) in &self.exceptional {
            acc = acc.add(&QDivisorClass::exceptional(*id).scale(c));
        }
        for (i, c) in &self.curves {
            acc = acc.add(&basis.strict_transform(*i)?.scale(c));
        }
        Ok(acc)
    }
}

pub fn k2_effective_form(basis: &BlowupData) -> Result<EffectiveForm> {
    if basis.k < 3 {
        return Err(Error::NotApplicable("needs at least three conics".into()));
    }
    let first = [basis.d, basis.d + 1, basis.d + 2];
    let mut exceptional = BTreeMap::new();
    for p in &basis.points {
        let members = p
            .members
            .as_ref()
            .ok_or_else(|| Error::SyntheticAssignment("curves through the blown-up points are unknown".into()))?;
        let mu = first.iter().filter(|c| members.contains(c)).count() as i64;
        exceptional.insert(p.id, frac(3 - mu, 2));
    }
    let curves = (0..basis.d + basis.k).filter(|i| !first.contains(i)).map(|i| (i, frac(1, 2))).collect();
    Ok(EffectiveForm { exceptional, curves })
}
