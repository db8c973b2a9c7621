//! Resultants: univariate (Euclidean remainder sequence), the Sylvester
//! determinant, and the resultant in `y` of two polynomials whose
//! coefficients are polynomials in `x`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::RationalPolynomial;
use super::rational::rat;
use crate::error::{Error, Result};

/// Largest degree accepted at the elimination boundary.
pub const MAX_DEGREE: usize = 8;

fn check_input(f: &RationalPolynomial, g: &RationalPolynomial) -> Result<()> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("resultant of a zero polynomial".into()));
    }
    if f.deg() > MAX_DEGREE || g.deg() > MAX_DEGREE {
        return Err(Error::InvalidInput(format!("degree above {MAX_DEGREE} in resultant")));
    }
    Ok(())
}

/// `Res_x(f, g)` with the usual convention `Res = lc(f)^n lc(g)^m prod (a_i - b_j)`.
pub fn resultant(f: &RationalPolynomial, g: &RationalPolynomial) -> Result<BigRational> {
    check_input(f, g)?;
    Ok(euclid_resultant(f, g))
}

fn euclid_resultant(f: &RationalPolynomial, g: &RationalPolynomial) -> BigRational {
    let (m, n) = (f.deg(), g.deg());
    if n == 0 {
        return num_traits::pow(g.leading(), m);
    }
    if m == 0 {
        return num_traits::pow(f.leading(), n);
    }
    if m < n {
        // Res(f, g) = (-1)^{mn} Res(g, f)
        let r = euclid_resultant(g, f);
        return if (m * n) % 2 == 1 { -r } else { r };
    }
    let r = f.rem(g);
    if r.is_zero() {
        return BigRational::zero();
    }
    // Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r)
    let sign = if (m * n) % 2 == 1 { -BigRational::one() } else { BigRational::one() };
    let k = m - r.deg();
    sign * num_traits::pow(g.leading(), k) * euclid_resultant(g, &r)
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n), size `(m+n)^2`.
pub fn sylvester_matrix(f: &RationalPolynomial, g: &RationalPolynomial) -> Vec<Vec<BigRational>> {
    let (m, n) = (f.deg(), g.deg());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigRational::zero(); size];
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigRational::zero(); size];
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &p;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(f: &RationalPolynomial, g: &RationalPolynomial) -> Result<BigRational> {
    check_input(f, g)?;
    if f.deg() + g.deg() == 0 {
        return Ok(BigRational::one());
    }
    Ok(determinant(sylvester_matrix(f, g)))
}

/// Lagrange interpolation through `(x_i, y_i)`.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> RationalPolynomial {
    let mut acc = RationalPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RationalPolynomial::one();
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &RationalPolynomial::linear(BigRational::one(), -xj);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// A polynomial in `y` whose coefficients are polynomials in `x`
/// (index = power of `y`).
pub type PolyInY = [RationalPolynomial];

fn degree_in_y(f: &PolyInY) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

fn eval_in_x(f: &PolyInY, x: &BigRational) -> RationalPolynomial {
    RationalPolynomial::new(f.iter().map(|c| c.eval(x)).collect())
}

/// `Res_y(f, g)` as a polynomial in `x`, computed by evaluation at integer
/// abscissae (skipping those where a leading coefficient vanishes) and
/// interpolation.
pub fn resultant_in_y(f: &PolyInY, g: &PolyInY) -> Result<RationalPolynomial> {
    let (Some(m), Some(n)) = (degree_in_y(f), degree_in_y(g)) else {
        return Err(Error::InvalidInput("resultant of a zero polynomial".into()));
    };
    if m > MAX_DEGREE || n > MAX_DEGREE {
        return Err(Error::InvalidInput(format!("degree above {MAX_DEGREE} in resultant")));
    }
    let max_x = |p: &PolyInY| p.iter().map(|c| c.deg()).max().unwrap_or(0);
    let bound = n * max_x(f) + m * max_x(g);
    let (lf, lg) = (&f[m], &g[n]);
    let mut samples = Vec::with_capacity(bound + 1);
    let mut x = 0i64;
    while samples.len() <= bound {
        let xv = rat(x);
        x += 1;
        if lf.eval(&xv).is_zero() || lg.eval(&xv).is_zero() {
            continue;
        }
        let r = euclid_resultant(&eval_in_x(f, &xv), &eval_in_x(g, &xv));
        samples.push((xv, r));
    }
    Ok(interpolate(&samples))
}
