//! Seeded generators of conic-line arrangements.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{frac, rat};
use crate::error::{Error, Result};
use crate::geometry::curve::{det3, Mat3};
use crate::geometry::{exceptional_lines, incidence_profile, Arrangement, IncidencePoint, ProjectiveCurve};
use crate::invariants::IncidenceProfile;

/// Attempts per spec before giving up.
pub const RETRY_CAP: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// Independent random lines and conics.
    RandomRational,
    /// All conics through `common` random points (1 to 4); random lines.
    ConicsThroughCommonPoints { common: usize },
    /// Conics from the pencil through four random points; the first lines
    /// join base points in the order P1P2, P3P4, P1P3, P2P4, P1P4, P2P3,
    /// further lines are random. Needs `d >= 2`.
    PencilPlusLines,
    /// The coordinate triangle and conics `a yz + b xz + c xy` through its
    /// vertices, moved by a random projective transformation. Needs `d = 3`.
    CremonaExample,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub d: usize,
    pub k: usize,
    pub seed: u64,
    /// Bound on numerators and denominators of random coefficients.
    pub coefficient_height: u32,
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub spec: GeneratorSpec,
    /// Zero-based attempt that succeeded.
    pub attempt: u32,
    pub arrangement: Arrangement,
    pub profile: IncidenceProfile,
    pub points: Vec<IncidencePoint>,
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        if self.d + self.k < 3 {
            return Err(Error::TooFewCurves(self.d + self.k));
        }
        if self.coefficient_height == 0 {
            return Err(Error::InvalidInput("coefficient height must be positive".into()));
        }
        match self.family {
            Family::RandomRational => Ok(()),
            Family::ConicsThroughCommonPoints { common } => {
                if !(1..=4).contains(&common) {
                    return Err(Error::InvalidInput("common points must be between 1 and 4".into()));
                }
                if self.d == 0 {
                    // every common point would lie on all curves
                    return Err(Error::InvalidInput("conics through common points need d >= 1".into()));
                }
                Ok(())
            }
            Family::PencilPlusLines => {
                // with fewer than two lines the base points lie on every curve
                if self.d < 2 {
                    return Err(Error::InvalidInput("a pencil needs d >= 2 to avoid full points".into()));
                }
                Ok(())
            }
            Family::CremonaExample => {
                if self.d != 3 || self.k == 0 {
                    return Err(Error::InvalidInput("the Cremona family has d = 3 and k >= 1".into()));
                }
                Ok(())
            }
        }
    }

    fn attempt_seed(&self, attempt: u32) -> u64 {
        self.seed.wrapping_add(u64::from(attempt).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

fn is_degeneracy(e: &Error) -> bool {
    matches!(
        e,
        Error::SingularConic
            | Error::DuplicateCurve(..)
            | Error::NonOrdinarySingularity(..)
            | Error::ForbiddenFullPoint(_)
            | Error::InvalidInput(_)
    )
}

/// Builds the arrangement of a spec, retrying with perturbed seeds while
/// the draw is degenerate (singular conic, repeated curve, tangency, a
/// point on every curve).
pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    spec.validate()?;
    for attempt in 0..RETRY_CAP {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.attempt_seed(attempt));
        let built = build(spec, &mut rng).and_then(|arr| incidence_profile(&arr).map(|(p, pts)| (arr, p, pts)));
        match built {
            Ok((arrangement, profile, points)) => {
                if spec.k >= 1 && exceptional_lines(&arrangement, &points).len() > 3 {
                    return Err(Error::TheoremContradiction("more than three exceptional lines".into()));
                }
                return Ok(Generated { spec: spec.clone(), attempt, arrangement, profile, points });
            }
            Err(e) if is_degeneracy(&e) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenerationFailed(RETRY_CAP as usize))
}

fn random_rational(rng: &mut ChaCha8Rng, h: u32) -> BigRational {
    let h = i64::from(h);
    frac(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

fn random_int(rng: &mut ChaCha8Rng, h: u32) -> i64 {
    let h = i64::from(h);
    rng.gen_range(-h..=h)
}

fn random_line(rng: &mut ChaCha8Rng, h: u32) -> Result<ProjectiveCurve> {
    ProjectiveCurve::line(random_rational(rng, h), random_rational(rng, h), random_rational(rng, h))
}

fn random_conic(rng: &mut ChaCha8Rng, h: u32) -> Result<ProjectiveCurve> {
    ProjectiveCurve::conic(std::array::from_fn(|_| random_rational(rng, h)))
}

type Point = [BigRational; 3];

fn random_point(rng: &mut ChaCha8Rng, h: u32) -> Point {
    [rat(random_int(rng, h)), rat(random_int(rng, h)), rat(1)]
}

fn line_through(a: &Point, b: &Point) -> Result<ProjectiveCurve> {
    ProjectiveCurve::line(&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0])
}

/// Monomials `(x^2, y^2, z^2, xy, xz, yz)` at a point.
fn conic_row(p: &Point) -> Vec<BigRational> {
    vec![&p[0] * &p[0], &p[1] * &p[1], &p[2] * &p[2], &p[0] * &p[1], &p[0] * &p[2], &p[1] * &p[2]]
}

/// Basis of the right null space of a rational matrix with 6 columns.
fn null_space(rows: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let n = 6;
    let mut a = rows;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, piv);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); n];
            v[free] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[i][free].clone();
            }
            v
        })
        .collect()
}

fn conic_from_basis(rng: &mut ChaCha8Rng, basis: &[Vec<BigRational>], h: u32) -> Result<ProjectiveCurve> {
    let mut c = vec![BigRational::zero(); 6];
    for b in basis {
        let w = rat(random_int(rng, h));
        for (ci, bi) in c.iter_mut().zip(b) {
            *ci += &w * bi;
        }
    }
    ProjectiveCurve::conic(c.try_into().expect("six coefficients"))
}

fn build(spec: &GeneratorSpec, rng: &mut ChaCha8Rng) -> Result<Arrangement> {
    let h = spec.coefficient_height;
    match spec.family {
        Family::RandomRational => {
            let lines = (0..spec.d).map(|_| random_line(rng, h)).collect::<Result<_>>()?;
            let conics = (0..spec.k).map(|_| random_conic(rng, h)).collect::<Result<_>>()?;
            Arrangement::new(lines, conics)
        }
        Family::ConicsThroughCommonPoints { common } => {
            let pts: Vec<Point> = (0..common).map(|_| random_point(rng, h)).collect();
            let basis = null_space(pts.iter().map(conic_row).collect());
            let conics = (0..spec.k).map(|_| conic_from_basis(rng, &basis, h)).collect::<Result<_>>()?;
            let lines = (0..spec.d).map(|_| random_line(rng, h)).collect::<Result<_>>()?;
            Arrangement::new(lines, conics)
        }
        Family::PencilPlusLines => {
            let base: Vec<Point> = (0..4).map(|_| random_point(rng, h)).collect();
            let basis = null_space(base.iter().map(conic_row).collect());
            if basis.len() != 2 {
                return Err(Error::InvalidInput("base points impose dependent conditions".into()));
            }
            let conics = (0..spec.k).map(|_| conic_from_basis(rng, &basis, h)).collect::<Result<_>>()?;
            const JOINS: [(usize, usize); 6] = [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)];
            let mut lines = Vec::with_capacity(spec.d);
            for i in 0..spec.d {
                lines.push(match JOINS.get(i) {
                    Some(&(a, b)) => line_through(&base[a], &base[b])?,
                    None => random_line(rng, h)?,
                });
            }
            Arrangement::new(lines, conics)
        }
        Family::CremonaExample => {
            let lines = vec![
                ProjectiveCurve::line_i64(1, 0, 0)?,
                ProjectiveCurve::line_i64(0, 1, 0)?,
                ProjectiveCurve::line_i64(0, 0, 1)?,
            ];
            let mut conics = Vec::with_capacity(spec.k);
            for _ in 0..spec.k {
                let nz = |rng: &mut ChaCha8Rng| loop {
                    let v = random_int(rng, h);
                    if v != 0 {
                        return rat(v);
                    }
                };
                let (a, b, c) = (nz(rng), nz(rng), nz(rng));
                let z = rat(0);
                conics.push(ProjectiveCurve::conic([z.clone(), z.clone(), z, c, b, a])?);
            }
            let arr = Arrangement::new(lines, conics)?;
            let m: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| rat(random_int(rng, h))));
            if det3(&m).is_zero() {
                return Err(Error::InvalidInput("singular change of coordinates".into()));
            }
            arr.pullback(&m)
        }
    }
}
