//! Intersection of two curves.
//!
//! Tangency is decided by a coordinate-free exact test. Points are computed
//! in a sheared frame where projection to `x` is injective on the
//! intersection, so every point is a root `u` of a univariate factor `h`
//! and its homogeneous coordinates are polynomials in `u` modulo `h`.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::curve::{line_basis, mat_from_i64, CurveKind, Mat3, ProjectiveCurve};
use crate::algebra::rational::{frac, rat, to_f64};
use crate::algebra::roots::{vanishes_at, REFINE_CAP};
use crate::algebra::{isolate_roots, resultant_in_y, IsolatingBox, RationalPolynomial};
use crate::error::{Error, Result};

/// Affine chart of P^2, named by the coordinate that is nonzero there.
/// Charts are tried in the order `Z`, `Y`, `X`; a point lives in the first
/// one where it is finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chart {
    Z,
    Y,
    X,
}

impl Chart {
    pub const ALL: [Chart; 3] = [Chart::Z, Chart::Y, Chart::X];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Homogeneous index of the denominator coordinate.
    fn denominator(self) -> usize {
        match self {
            Chart::Z => 2,
            Chart::Y => 1,
            Chart::X => 0,
        }
    }

    /// Homogeneous indices of the two affine coordinates.
    fn numerators(self) -> (usize, usize) {
        match self {
            Chart::Z => (0, 1),
            Chart::Y => (0, 2),
            Chart::X => (1, 2),
        }
    }
}

/// A point of P^2 with algebraic affine coordinates `(u, v)` in `chart`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicPoint {
    pub chart: Chart,
    pub u: IsolatingBox,
    pub v: IsolatingBox,
}

impl AlgebraicPoint {
    /// Floating-point homogeneous coordinates, for display.
    pub fn approx(&self) -> [Complex64; 3] {
        let one = Complex64::new(1.0, 0.0);
        let (u, v) = (self.u.approx(), self.v.approx());
        match self.chart {
            Chart::Z => [u, v, one],
            Chart::Y => [u, one, v],
            Chart::X => [one, u, v],
        }
    }
}

/// Exact description of a point: `root` is a root of `modulus`, and the
/// point is `[coords[0](root) : coords[1](root) : coords[2](root)]`.
#[derive(Clone, Debug)]
pub struct PointWitness {
    pub modulus: RationalPolynomial,
    pub root: IsolatingBox,
    pub coords: [RationalPolynomial; 3],
}

impl PointWitness {
    /// Exact test whether `curve` passes through the point.
    pub fn lies_on(&self, curve: &ProjectiveCurve) -> Result<bool> {
        let value = curve.eval_poly(&self.coords).rem(&self.modulus);
        vanishes_at(&value, &self.root)
    }
}

#[derive(Clone, Debug)]
pub struct PairPoint {
    pub point: AlgebraicPoint,
    /// Local intersection number of the two curves at the point.
    pub multiplicity: u32,
    pub witness: PointWitness,
}

impl PairPoint {
    pub fn is_tangent(&self) -> bool {
        self.multiplicity > 1
    }
}

fn bilinear(q: &Mat3, p: &[BigRational; 3], r: &[BigRational; 3]) -> BigRational {
    let mut s = BigRational::zero();
    for i in 0..3 {
        for j in 0..3 {
            s += &q[i][j] * &p[i] * &r[j];
        }
    }
    s
}

fn det3_poly(m: &[[RationalPolynomial; 3]; 3]) -> RationalPolynomial {
    let minor = |a: usize, b: usize, c: usize, d: usize| &(&m[1][a] * &m[2][b]) - &(&m[1][c] * &m[2][d]);
    let t0 = &m[0][0] * &minor(1, 2, 2, 1);
    let t1 = &m[0][1] * &minor(0, 2, 2, 0);
    let t2 = &m[0][2] * &minor(0, 1, 1, 0);
    &(&t0 - &t1) + &t2
}

/// Exact transversality test: true when the curves meet in
/// `deg a * deg b` distinct points.
pub fn is_transversal(a: &ProjectiveCurve, b: &ProjectiveCurve) -> Result<bool> {
    if a == b {
        return Err(Error::DuplicateCurve(0, 1));
    }
    match (a.kind(), b.kind()) {
        (CurveKind::Line, CurveKind::Line) => Ok(true),
        (CurveKind::Line, CurveKind::Conic) => Ok(line_conic_transversal(a, b)),
        (CurveKind::Conic, CurveKind::Line) => Ok(line_conic_transversal(b, a)),
        (CurveKind::Conic, CurveKind::Conic) => {
            // the pencil det(A + t B) has a repeated root exactly when the
            // conics are tangent somewhere
            let (qa, qb) = (a.gram(), b.gram());
            let m: [[RationalPolynomial; 3]; 3] = std::array::from_fn(|i| {
                std::array::from_fn(|j| RationalPolynomial::linear(qb[i][j].clone(), qa[i][j].clone()))
            });
            Ok(det3_poly(&m).is_squarefree())
        }
    }
}

fn line_conic_transversal(line: &ProjectiveCurve, conic: &ProjectiveCurve) -> bool {
    let [p, r] = line_basis(line);
    let q = conic.gram();
    let disc = bilinear(&q, &p, &r) * bilinear(&q, &p, &r) - bilinear(&q, &p, &p) * bilinear(&q, &r, &r);
    !disc.is_zero()
}

/// Shears `[[1, s, 0], [0, 1, 0], [a, b, 1]]` (determinant 1), identity
/// first, then by growing max-norm.
fn frames() -> impl Iterator<Item = Mat3> {
    const LIMIT: i64 = 6;
    let order: Vec<i64> = std::iter::once(0).chain((1..=LIMIT).flat_map(|v| [v, -v])).collect();
    (0..=LIMIT).flat_map(move |n| {
        let order = order.clone();
        let mut out = Vec::new();
        for &s in &order {
            for &a in &order {
                for &b in &order {
                    if s.abs().max(a.abs()).max(b.abs()) == n {
                        out.push(mat_from_i64([[1, s, 0], [0, 1, 0], [a, b, 1]]));
                    }
                }
            }
        }
        out
    })
}

/// Elimination data in a frame: `r` is the resultant in `x'`, and on the
/// roots of `sqfree(r)` the `y'` coordinate is `y_of_x`.
struct Frame {
    m: Mat3,
    r: RationalPolynomial,
    y_of_x: RationalPolynomial,
}

fn try_frame(a: &ProjectiveCurve, b: &ProjectiveCurve, m: &Mat3) -> Result<Option<Frame>> {
    let (a2, b2) = (a.pullback(m)?, b.pullback(m)?);
    let (ya, yb) = (a2.in_y(), b2.in_y());
    if ya.last().expect("nonempty").is_zero() || yb.last().expect("nonempty").is_zero() {
        return Ok(None);
    }
    let x = RationalPolynomial::x();
    let one = RationalPolynomial::one();
    let solve_line = |l: &[RationalPolynomial]| (-&l[0]).scale(&l[1].coeff(0).recip());
    let (r, y_of_x) = match (a2.kind(), b2.kind()) {
        (CurveKind::Line, _) => {
            let y = solve_line(&ya);
            (b2.eval_poly(&[x, y.clone(), one]), y)
        }
        (_, CurveKind::Line) => {
            let y = solve_line(&yb);
            (a2.eval_poly(&[x, y.clone(), one]), y)
        }
        _ => {
            let r = resultant_in_y(&ya, &yb)?;
            if r.is_zero() {
                return Ok(None);
            }
            // g2 F - f2 G is linear in y: s1 y + s0
            let s1 = &(&yb[2] * &ya[1]) - &(&ya[2] * &yb[1]);
            let s0 = &(&yb[2] * &ya[0]) - &(&ya[2] * &yb[0]);
            let h = r.squarefree_part()?;
            let Some(inv) = s1.inverse_mod(&h) else {
                return Ok(None);
            };
            (r, (-&(&s0 * &inv)).rem(&h))
        }
    };
    if r.is_zero() || r.deg() != a.degree() * b.degree() {
        return Ok(None);
    }
    Ok(Some(Frame { m: m.clone(), r, y_of_x }))
}

const COORD_PRECISION_BITS: u32 = 16;

fn coord_precision() -> BigRational {
    frac(1, 1 << COORD_PRECISION_BITS)
}

/// All intersection points of two distinct curves, with local
/// intersection multiplicities.
pub fn intersect_pair(a: &ProjectiveCurve, b: &ProjectiveCurve) -> Result<Vec<PairPoint>> {
    let transversal = is_transversal(a, b)?;
    let mut frame = None;
    for m in frames() {
        if let Some(f) = try_frame(a, b, &m)? {
            frame = Some(f);
            break;
        }
    }
    let frame = frame.ok_or_else(|| Error::Internal("no admissible elimination frame".into()))?;
    if frame.r.is_squarefree() != transversal {
        return Err(Error::Internal("tangency test disagrees with elimination".into()));
    }
    let mut out = Vec::new();
    for (g, mult) in frame.r.squarefree_factorization() {
        let y = frame.y_of_x.rem(&g);
        let xs = [RationalPolynomial::x(), y, RationalPolynomial::one()];
        let coords: [RationalPolynomial; 3] = std::array::from_fn(|i| {
            let mut acc = RationalPolynomial::zero();
            for (j, c) in xs.iter().enumerate() {
                acc = &acc + &c.scale(&frame.m[i][j]);
            }
            acc.rem(&g)
        });
        let mut rest = g.clone();
        for chart in Chart::ALL {
            if rest.is_constant() {
                break;
            }
            let den = coords[chart.denominator()].rem(&rest);
            let common = rest.gcd(&den);
            let finite = rest.exact_div(&common)?;
            if !finite.is_constant() {
                points_in_chart(&finite, chart, &coords, mult, &mut out)?;
            }
            rest = common;
        }
        if !rest.is_constant() {
            return Err(Error::Internal("point with all coordinates zero".into()));
        }
    }
    Ok(out)
}

fn points_in_chart(
    h: &RationalPolynomial,
    chart: Chart,
    coords: &[RationalPolynomial; 3],
    mult: u32,
    out: &mut Vec<PairPoint>,
) -> Result<()> {
    let inv = coords[chart.denominator()]
        .inverse_mod(h)
        .ok_or_else(|| Error::Internal("chart denominator not invertible".into()))?;
    let (i, j) = chart.numerators();
    let cu = (&coords[i] * &inv).rem(h);
    let cv = (&coords[j] * &inv).rem(h);
    let (tu, tv) = (coordinate_roots(&cu, h)?, coordinate_roots(&cv, h)?);
    let reduced: [RationalPolynomial; 3] = std::array::from_fn(|l| coords[l].rem(h));
    for root in isolate_roots(h, &coord_precision())? {
        let iu = match_root(&root, &cu, &tu)?;
        let iv = match_root(&root, &cv, &tv)?;
        out.push(PairPoint {
            point: AlgebraicPoint { chart, u: tu[iu].clone(), v: tv[iv].clone() },
            multiplicity: mult,
            witness: PointWitness { modulus: h.clone(), root, coords: reduced.clone() },
        });
    }
    Ok(())
}

/// Isolated roots of the minimal-degree square-free polynomial vanishing
/// at `c(u)` for every root `u` of `h`.
fn coordinate_roots(c: &RationalPolynomial, h: &RationalPolynomial) -> Result<Vec<IsolatingBox>> {
    let cp = char_poly_mod(c, h).squarefree_part()?;
    isolate_roots(&cp, &coord_precision())
}

/// Characteristic polynomial of multiplication by `c` on `Q[u]/(h)`
/// (Faddeev-LeVerrier).
pub fn char_poly_mod(c: &RationalPolynomial, h: &RationalPolynomial) -> RationalPolynomial {
    let n = h.deg();
    // column j holds the coefficients of c * u^j mod h
    let mut a = vec![vec![BigRational::zero(); n]; n];
    let mut col = c.rem(h);
    for j in 0..n {
        for (i, row) in a.iter_mut().enumerate() {
            row[j] = col.coeff(i);
        }
        col = (&col * &RationalPolynomial::x()).rem(h);
    }
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|l| &x[i][l] * &y[l][j]).sum()).collect()).collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let am = mul(&a, &mk);
        let trace: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / rat(k as i64);
    }
    RationalPolynomial::new(coeffs)
}

fn bits_below(width: &BigRational) -> u32 {
    let w = to_f64(width);
    if w > 0.0 && w.is_finite() {
        (-w.log2()).max(0.0).ceil() as u32
    } else {
        (width.denom().bits() as i64 - width.numer().bits() as i64 + 1).max(0) as u32
    }
}

/// Index of the target box holding `c(root)`.
fn match_root(root: &IsolatingBox, c: &RationalPolynomial, targets: &[IsolatingBox]) -> Result<usize> {
    let mut root = root.clone();
    for _ in 0..REFINE_CAP {
        let bits = bits_below(&root.width()) + 16;
        let image = root.as_box().eval_poly(c, bits);
        let mut hits = targets.iter().enumerate().filter(|(_, t)| t.as_box().intersects(&image));
        match (hits.next(), hits.next()) {
            (Some((i, _)), None) => return Ok(i),
            (None, _) => return Err(Error::Internal("coordinate image meets no root box".into())),
            _ => root = root.refine()?,
        }
    }
    Err(Error::PrecisionExhausted(REFINE_CAP))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx_on(curve: &ProjectiveCurve, p: &AlgebraicPoint) -> f64 {
        let v = p.approx();
        let c: Vec<f64> = curve.coeffs().iter().map(to_f64).collect();
        let val = match curve.kind() {
            CurveKind::Line => v[0] * c[0] + v[1] * c[1] + v[2] * c[2],
            CurveKind::Conic => {
                v[0] * v[0] * c[0]
                    + v[1] * v[1] * c[1]
                    + v[2] * v[2] * c[2]
                    + v[0] * v[1] * c[3]
                    + v[0] * v[2] * c[4]
                    + v[1] * v[2] * c[5]
            }
        };
        val.norm()
    }

    #[test]
    fn two_circles_meet_in_four_points() {
        // x^2 + y^2 = z^2 and x^2 + 4y^2 = 2z^2: the two imaginary points at
        // infinity are not shared, so all four points are affine
        let a = ProjectiveCurve::conic_i64([1, 1, -1, 0, 0, 0]).unwrap();
        let b = ProjectiveCurve::conic_i64([1, 4, -2, 0, 0, 0]).unwrap();
        let pts = intersect_pair(&a, &b).unwrap();
        assert_eq!(pts.len(), 4);
        for p in &pts {
            assert_eq!(p.multiplicity, 1);
            assert!(approx_on(&a, &p.point) < 1e-3);
            assert!(approx_on(&b, &p.point) < 1e-3);
            assert!(p.witness.lies_on(&a).unwrap() && p.witness.lies_on(&b).unwrap());
        }
    }

    #[test]
    fn tangent_line_flagged() {
        let c = ProjectiveCurve::conic_i64([1, 1, -1, 0, 0, 0]).unwrap();
        let l = ProjectiveCurve::line_i64(1, 0, -1).unwrap();
        assert!(!is_transversal(&l, &c).unwrap());
        let pts = intersect_pair(&l, &c).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].multiplicity, 2);
    }

    #[test]
    fn tangent_conics_flagged() {
        // both tangent to y = 0 at the origin (z = 1)
        let a = ProjectiveCurve::conic_i64([1, 1, 0, 0, 0, -1]).unwrap();
        let b = ProjectiveCurve::conic_i64([1, 2, 0, 0, 0, -1]).unwrap();
        assert!(!is_transversal(&a, &b).unwrap());
        let pts = intersect_pair(&a, &b).unwrap();
        let total: u32 = pts.iter().map(|p| p.multiplicity).sum();
        assert_eq!(total, 4);
        assert!(pts.iter().any(|p| p.is_tangent()));
    }

    #[test]
    fn points_at_infinity_use_other_charts() {
        // z = 0 meets x = 0 at (0:1:0)
        let a = ProjectiveCurve::line_i64(0, 0, 1).unwrap();
        let b = ProjectiveCurve::line_i64(1, 0, 0).unwrap();
        let pts = intersect_pair(&a, &b).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].point.chart, Chart::Y);
        // the coordinate triangle meets in three charts
        let c = ProjectiveCurve::line_i64(0, 1, 0).unwrap();
        assert_eq!(intersect_pair(&a, &c).unwrap()[0].point.chart, Chart::X);
        assert_eq!(intersect_pair(&b, &c).unwrap()[0].point.chart, Chart::Z);
    }

    #[test]
    fn char_poly_of_root_square() {
        // u^2 on Q[u]/(u^2 - 2) is the scalar 2
        let h = RationalPolynomial::from_i64(&[-2, 0, 1]);
        let c = RationalPolynomial::from_i64(&[0, 0, 1]);
        assert_eq!(char_poly_mod(&c, &h), RationalPolynomial::from_i64(&[4, -4, 1]));
    }

    #[test]
    fn duplicate_rejected() {
        let a = ProjectiveCurve::line_i64(1, 2, 3).unwrap();
        assert_eq!(is_transversal(&a, &a.clone()), Err(Error::DuplicateCurve(0, 1)));
    }
}
