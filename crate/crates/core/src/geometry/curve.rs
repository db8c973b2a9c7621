//! Lines and smooth conics in P^2 with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{frac, rat, to_string};
use crate::algebra::resultant::determinant;
use crate::algebra::RationalPolynomial;
use crate::error::{Error, Result};

/// 3x3 rational matrix, row-major.
pub type Mat3 = [[BigRational; 3]; 3];

pub fn identity() -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { rat(1) } else { rat(0) }))
}

pub fn mat_from_i64(m: [[i64; 3]; 3]) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| rat(m[i][j])))
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|l| &a[i][l] * &b[l][j]).sum()))
}

pub fn transpose(a: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

pub fn det3(a: &Mat3) -> BigRational {
    determinant(a.iter().map(|r| r.to_vec()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveKind {
    Line,
    Conic,
}

/// A line `a x + b y + c z` or a conic
/// `a x^2 + b y^2 + c z^2 + d xy + e xz + f yz`.
///
/// Stored canonically: integer coefficients with gcd 1 and the first
/// nonzero entry positive, so proportional curves compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveCurve {
    kind: CurveKind,
    coeffs: Vec<BigRational>,
}

fn canonicalize(coeffs: &[BigRational]) -> Result<Vec<BigRational>> {
    let Some(first) = coeffs.iter().find(|c| !c.is_zero()) else {
        return Err(Error::InvalidInput("all coefficients are zero".into()));
    };
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if first.is_negative() { -BigInt::one() } else { BigInt::one() };
    Ok(ints.into_iter().map(|c| BigRational::from_integer(c / &g * &sign)).collect())
}

impl ProjectiveCurve {
    pub fn line(a: BigRational, b: BigRational, c: BigRational) -> Result<Self> {
        Ok(ProjectiveCurve { kind: CurveKind::Line, coeffs: canonicalize(&[a, b, c])? })
    }

    /// Coefficients in the order `(x^2, y^2, z^2, xy, xz, yz)`.
    pub fn conic(coeffs: [BigRational; 6]) -> Result<Self> {
        let curve = ProjectiveCurve { kind: CurveKind::Conic, coeffs: canonicalize(&coeffs)? };
        if det3(&curve.gram()).is_zero() {
            return Err(Error::SingularConic);
        }
        Ok(curve)
    }

    pub fn line_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::line(rat(a), rat(b), rat(c))
    }

    pub fn conic_i64(c: [i64; 6]) -> Result<Self> {
        Self::conic(c.map(rat))
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        match self.kind {
            CurveKind::Line => 1,
            CurveKind::Conic => 2,
        }
    }

    /// Lines and smooth conics are rational curves.
    pub fn genus(&self) -> usize {
        0
    }

    /// Symmetric Gram matrix `Q` with `F(v) = v^T Q v` (conics only).
    pub fn gram(&self) -> Mat3 {
        assert_eq!(self.kind, CurveKind::Conic);
        let c = &self.coeffs;
        let h = |x: &BigRational| x * frac(1, 2);
        [[c[0].clone(), h(&c[3]), h(&c[4])], [h(&c[3]), c[1].clone(), h(&c[5])], [h(&c[4]), h(&c[5]), c[2].clone()]]
    }

    fn from_gram(q: &Mat3) -> Result<Self> {
        let two = rat(2);
        Self::conic([
            q[0][0].clone(),
            q[1][1].clone(),
            q[2][2].clone(),
            &q[0][1] * &two,
            &q[0][2] * &two,
            &q[1][2] * &two,
        ])
    }

    /// The curve `F(M v)`, i.e. the same curve in coordinates `v` with
    /// old coordinates `M v`.
    pub fn pullback(&self, m: &Mat3) -> Result<Self> {
        match self.kind {
            CurveKind::Line => {
                let l = &self.coeffs;
                let row: Vec<BigRational> = (0..3).map(|j| (0..3).map(|i| &l[i] * &m[i][j]).sum()).collect();
                Self::line(row[0].clone(), row[1].clone(), row[2].clone())
            }
            CurveKind::Conic => {
                let q = mat_mul(&transpose(m), &mat_mul(&self.gram(), m));
                Self::from_gram(&q)
            }
        }
    }

    /// Evaluates the defining form at a rational point.
    pub fn eval(&self, v: &[BigRational; 3]) -> BigRational {
        let vp = [
            RationalPolynomial::constant(v[0].clone()),
            RationalPolynomial::constant(v[1].clone()),
            RationalPolynomial::constant(v[2].clone()),
        ];
        self.eval_poly(&vp).coeff(0)
    }

    /// Substitutes polynomials for `(x, y, z)`.
    pub fn eval_poly(&self, v: &[RationalPolynomial; 3]) -> RationalPolynomial {
        let c = &self.coeffs;
        let term = |coef: &BigRational, a: &RationalPolynomial| a.scale(coef);
        match self.kind {
            CurveKind::Line => &(&term(&c[0], &v[0]) + &term(&c[1], &v[1])) + &term(&c[2], &v[2]),
            CurveKind::Conic => {
                let (x, y, z) = (&v[0], &v[1], &v[2]);
                let parts = [
                    term(&c[0], &(x * x)),
                    term(&c[1], &(y * y)),
                    term(&c[2], &(z * z)),
                    term(&c[3], &(x * y)),
                    term(&c[4], &(x * z)),
                    term(&c[5], &(y * z)),
                ];
                parts.iter().fold(RationalPolynomial::zero(), |acc, p| &acc + p)
            }
        }
    }

    /// Coefficients as polynomials in `y` over `Q[x]` in the affine chart `z = 1`.
    pub fn in_y(&self) -> Vec<RationalPolynomial> {
        let c = &self.coeffs;
        match self.kind {
            CurveKind::Line => {
                vec![RationalPolynomial::linear(c[0].clone(), c[2].clone()), RationalPolynomial::constant(c[1].clone())]
            }
            CurveKind::Conic => vec![
                RationalPolynomial::new(vec![c[2].clone(), c[4].clone(), c[0].clone()]),
                RationalPolynomial::linear(c[3].clone(), c[5].clone()),
                RationalPolynomial::constant(c[1].clone()),
            ],
        }
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(to_string).collect()
    }
}

impl fmt::Debug for ProjectiveCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.kind, self.coeff_strings())
    }
}

/// Two distinct rational points spanning a line.
pub fn line_basis(line: &ProjectiveCurve) -> [[BigRational; 3]; 2] {
    let l = line.coeffs();
    let z = rat(0);
    if !l[2].is_zero() {
        [[l[2].clone(), z.clone(), -&l[0]], [z.clone(), l[2].clone(), -&l[1]]]
    } else if !l[1].is_zero() {
        [[l[1].clone(), -&l[0], z.clone()], [z.clone(), z.clone(), rat(1)]]
    } else {
        [[z.clone(), rat(1), z.clone()], [z.clone(), z, rat(1)]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_identifies_proportional_curves() {
        let a = ProjectiveCurve::line(frac(-1, 2), rat(1), rat(0)).unwrap();
        let b = ProjectiveCurve::line_i64(2, -4, 0).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeff_strings(), vec!["1", "-2", "0"]);
        assert!(ProjectiveCurve::line_i64(0, 0, 0).is_err());
    }

    #[test]
    fn singular_conic_rejected() {
        // xy: a line pair
        assert_eq!(ProjectiveCurve::conic_i64([0, 0, 0, 1, 0, 0]), Err(Error::SingularConic));
        assert!(ProjectiveCurve::conic_i64([1, 1, -1, 0, 0, 0]).is_ok());
    }

    #[test]
    fn pullback_preserves_incidence() {
        let c = ProjectiveCurve::conic_i64([1, 1, -1, 0, 0, 0]).unwrap();
        let m = mat_from_i64([[1, 2, 0], [0, 1, 0], [1, -1, 1]]);
        let cp = c.pullback(&m).unwrap();
        // v' = (1, 0, 0) maps to M v' = (1, 0, 1), which lies on the circle
        let v = [rat(1), rat(0), rat(0)];
        assert!(cp.eval(&v).is_zero());
        let l = ProjectiveCurve::line_i64(1, 0, -1).unwrap().pullback(&m).unwrap();
        assert!(l.eval(&v).is_zero());
    }

    #[test]
    fn basis_points_lie_on_line() {
        for l in [
            ProjectiveCurve::line_i64(1, 2, 3).unwrap(),
            ProjectiveCurve::line_i64(0, 1, 0).unwrap(),
            ProjectiveCurve::line_i64(1, 0, 0).unwrap(),
        ] {
            for p in line_basis(&l) {
                assert!(l.eval(&p).is_zero());
            }
        }
    }
}
