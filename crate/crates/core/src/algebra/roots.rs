//! Certified isolation of the complex roots of square-free rational
//! polynomials, and exact equality of the algebraic numbers they define.
//!
//! Approximations come from a floating-point Aberth iteration followed by
//! Weierstrass (Durand-Kerner) steps in dyadic rational arithmetic. They are
//! certified with Gerschgorin discs of the Weierstrass matrix: with
//! corrections `W_i = f(z_i) / (lc * prod_{j != i} (z_i - z_j))` every
//! connected component of the union of the discs centred at `z_i - W_i`
//! with radius `(n-1)|W_i|` holds as many roots as discs. All decisions
//! are made on exact rationals.

use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::{ComplexBox, Interval};
use super::poly::RationalPolynomial;
use super::rational::{from_f64, round_dyadic, sqrt_upper, to_f64};
use super::resultant::MAX_DEGREE;
use crate::error::{Error, Result};

type CRat = Complex<BigRational>;

/// Iteration cap for refinement loops; reaching it is an internal error.
pub const REFINE_CAP: usize = 200;

const MAX_ROUNDS: usize = 60;

/// A box in the complex plane holding exactly one root of `defining_poly`.
///
/// The box grown by its larger side on every edge contains no other root,
/// which is what lets equality tests terminate when a root sits on an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingBox {
    real_interval: Interval,
    imag_interval: Interval,
    defining_poly: RationalPolynomial,
}

impl IsolatingBox {
    pub fn real_interval(&self) -> &Interval {
        &self.real_interval
    }

    pub fn imag_interval(&self) -> &Interval {
        &self.imag_interval
    }

    pub fn defining_poly(&self) -> &RationalPolynomial {
        &self.defining_poly
    }

    pub fn as_box(&self) -> ComplexBox {
        ComplexBox::new(self.real_interval.clone(), self.imag_interval.clone())
    }

    pub fn width(&self) -> BigRational {
        self.as_box().side()
    }

    /// Midpoint as floating point, for display only.
    pub fn approx(&self) -> Complex64 {
        Complex64::new(to_f64(&self.real_interval.mid()), to_f64(&self.imag_interval.mid()))
    }

    /// True when the box is symmetric about the real axis. For a square-free
    /// real polynomial this means the isolated root is real.
    pub fn is_real(&self) -> bool {
        self.imag_interval.lo == -&self.imag_interval.hi
    }

    /// Box at most half as wide holding the same root.
    pub fn refine(&self) -> Result<IsolatingBox> {
        let target = self.width() / BigRational::from_integer(2.into());
        if let Some(b) = self.newton_refine(&target) {
            return Ok(b);
        }
        // Fallback: isolate again at a finer width and pick the box that
        // meets the old one; other roots lie outside the grown box, farther
        // than the old width, so only one candidate can touch.
        let finer = &target / BigRational::from_integer(2.into());
        let boxes = isolate_roots(&self.defining_poly, &finer)?;
        let mine = self.as_box();
        let mut hits = boxes.into_iter().filter(|b| b.as_box().intersects(&mine));
        match (hits.next(), hits.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(Error::PrecisionExhausted(0)),
        }
    }

    fn newton_refine(&self, target: &BigRational) -> Option<IsolatingBox> {
        let f = &self.defining_poly;
        let df = f.derivative();
        let n = BigRational::from_integer(f.deg().into());
        let bits = bits_for(target) + 12;
        let outer = self.as_box().tripled();
        let mut z = self.as_box().center();
        for _ in 0..8 {
            let fz = f.eval_complex(&z);
            let dfz = df.eval_complex(&z);
            if dfz.norm_sqr().is_zero() {
                return None;
            }
            if !fz.norm_sqr().is_zero() {
                let step = fz.clone() / dfz.clone();
                z = round_c(&(z - step), bits);
            }
            let fz = f.eval_complex(&z);
            let dfz = df.eval_complex(&z);
            if dfz.norm_sqr().is_zero() {
                return None;
            }
            // some root lies within n |f/f'| of z
            let r2 = &n * &n * fz.norm_sqr() / dfz.norm_sqr();
            let r = positive_radius(&r2, bits);
            let b = square(&z, &r, bits);
            if &b.side() <= target && b.tripled().is_subset_of(&outer) {
                return Some(IsolatingBox { real_interval: b.re, imag_interval: b.im, defining_poly: f.clone() });
            }
        }
        None
    }
}

fn bits_for(width: &BigRational) -> u32 {
    // smallest b with 2^-b <= width
    let mut b = 0u32;
    let mut w = BigRational::one();
    while &w > width && b < 100_000 {
        w /= BigRational::from_integer(2.into());
        b += 1;
    }
    b
}

fn round_c(z: &CRat, bits: u32) -> CRat {
    Complex::new(round_dyadic(&z.re, bits), round_dyadic(&z.im, bits))
}

fn positive_radius(r2: &BigRational, bits: u32) -> BigRational {
    let r = sqrt_upper(r2, bits + 4);
    if r.is_zero() {
        BigRational::new(One::one(), num_bigint::BigInt::one() << (bits as usize + 4))
    } else {
        r
    }
}

fn square(c: &CRat, r: &BigRational, bits: u32) -> ComplexBox {
    ComplexBox::new(Interval::new(&c.re - r, &c.re + r), Interval::new(&c.im - r, &c.im + r)).round_out(bits + 4)
}

fn check_isolation_input(f: &RationalPolynomial) -> Result<()> {
    if f.is_zero() {
        return Err(Error::InvalidInput("zero polynomial has no isolated roots".into()));
    }
    if f.deg() > MAX_DEGREE {
        return Err(Error::InvalidInput(format!("degree {} above {MAX_DEGREE}", f.deg())));
    }
    if !f.is_squarefree() {
        return Err(Error::RequiresSquarefree);
    }
    Ok(())
}

/// Isolates all complex roots of a square-free `f` in boxes of side at
/// most `precision`. Conjugate roots get mirror-image boxes.
pub fn isolate_roots(f: &RationalPolynomial, precision: &BigRational) -> Result<Vec<IsolatingBox>> {
    check_isolation_input(f)?;
    if !precision.is_positive() {
        return Err(Error::InvalidInput("precision must be positive".into()));
    }
    let f = f.monic();
    let n = f.deg();
    if n == 0 {
        return Ok(Vec::new());
    }
    let target_bits = bits_for(precision);
    let mut zs: Vec<CRat> = aberth_f64(&f).into_iter().map(|z| Complex::new(from_f64(z.re), from_f64(z.im))).collect();
    let mut bits = target_bits.max(40) + 16;
    for round in 0..MAX_ROUNDS {
        if round > 0 {
            weierstrass_step(&f, &mut zs, bits);
            if round % 4 == 0 {
                bits += 32;
            }
        }
        let tol = BigRational::new(One::one(), num_bigint::BigInt::one() << (bits as usize / 2));
        if let Some(sym) = symmetrize(&zs, &tol) {
            if let Some(boxes) = certify(&f, &sym, bits) {
                if boxes.iter().all(|b| &b.side() <= precision) {
                    let mut out: Vec<IsolatingBox> = boxes
                        .into_iter()
                        .map(|b| IsolatingBox { real_interval: b.re, imag_interval: b.im, defining_poly: f.clone() })
                        .collect();
                    out.sort_by(|a, b| {
                        (&a.real_interval.lo, &a.imag_interval.lo).cmp(&(&b.real_interval.lo, &b.imag_interval.lo))
                    });
                    return Ok(out);
                }
            }
        }
    }
    Err(Error::PrecisionExhausted(MAX_ROUNDS))
}

fn aberth_f64(f: &RationalPolynomial) -> Vec<Complex64> {
    let n = f.deg();
    let df = f.derivative();
    let bound = to_f64(&f.root_bound()).min(1e150);
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(0.5 * bound.max(1e-3), theta)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let fz = f.eval_f64(zs[k]);
            let dfz = df.eval_f64(zs[k]);
            if fz.norm() == 0.0 {
                continue;
            }
            let ratio = fz / dfz;
            let s: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| {
                    let d = zs[k] - zs[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                zs[k] -= w;
                moved = moved.max(w.norm() / zs[k].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    zs
}

fn weierstrass_corrections(f: &RationalPolynomial, zs: &[CRat]) -> Option<Vec<CRat>> {
    let mut out = Vec::with_capacity(zs.len());
    for (i, zi) in zs.iter().enumerate() {
        let mut denom = Complex::new(BigRational::one(), BigRational::zero());
        for (j, zj) in zs.iter().enumerate() {
            if i != j {
                denom *= zi.clone() - zj.clone();
            }
        }
        if denom.norm_sqr().is_zero() {
            return None;
        }
        out.push(f.eval_complex(zi) / denom);
    }
    Some(out)
}

fn weierstrass_step(f: &RationalPolynomial, zs: &mut [CRat], bits: u32) {
    match weierstrass_corrections(f, zs) {
        Some(ws) => {
            for (z, w) in zs.iter_mut().zip(ws) {
                *z = round_c(&(z.clone() - w), bits);
            }
        }
        None => {
            // coincident approximations: nudge them apart
            let eps = BigRational::new(One::one(), num_bigint::BigInt::one() << (bits as usize / 2));
            for (i, z) in zs.iter_mut().enumerate() {
                let k = BigRational::from_integer((i as i64 + 1).into());
                *z = Complex::new(&z.re + &eps * &k, &z.im + &eps * k);
            }
        }
    }
}

/// Snaps near-real approximations onto the axis and pairs the rest into
/// exact conjugates. `None` if the pairing is not a perfect matching.
fn symmetrize(zs: &[CRat], tol: &BigRational) -> Option<Vec<CRat>> {
    let mut out: Vec<Option<CRat>> = vec![None; zs.len()];
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (i, z) in zs.iter().enumerate() {
        if z.im.abs() <= *tol {
            out[i] = Some(Complex::new(z.re.clone(), BigRational::zero()));
        } else if z.im.is_positive() {
            upper.push(i);
        } else {
            lower.push(i);
        }
    }
    if upper.len() != lower.len() {
        return None;
    }
    let mut taken = vec![false; lower.len()];
    for &u in &upper {
        let target = zs[u].conj();
        let best = lower
            .iter()
            .enumerate()
            .filter(|(k, _)| !taken[*k])
            .min_by(|(_, &a), (_, &b)| {
                let da = (zs[a].clone() - target.clone()).norm_sqr();
                let db = (zs[b].clone() - target.clone()).norm_sqr();
                da.cmp(&db)
            })
            .map(|(k, &l)| (k, l))?;
        taken[best.0] = true;
        out[u] = Some(zs[u].clone());
        out[best.1] = Some(target);
    }
    out.into_iter().collect()
}

fn certify(f: &RationalPolynomial, zs: &[CRat], bits: u32) -> Option<Vec<ComplexBox>> {
    let n = zs.len();
    let ws = weierstrass_corrections(f, zs)?;
    let scale = BigRational::from_integer(((n as i64 - 1).max(0)).into());
    let boxes: Vec<ComplexBox> = zs
        .iter()
        .zip(&ws)
        .map(|(z, w)| {
            let c = z.clone() - w.clone();
            let r2 = &scale * &scale * w.norm_sqr();
            let r = positive_radius(&r2, bits);
            square(&c, &r, bits)
        })
        .collect();
    for i in 0..n {
        let grown = boxes[i].tripled();
        for (j, bj) in boxes.iter().enumerate() {
            if i != j && grown.intersects(bj) {
                return None;
            }
        }
    }
    Some(boxes)
}

/// True when the root `r` (a root of a divisor of `a`'s polynomial) is the
/// root isolated by `a`.
fn same_root(r: &IsolatingBox, a: &IsolatingBox) -> Result<bool> {
    let target = a.as_box();
    let grown = target.tripled();
    let side_a = a.width();
    let mut r = r.clone();
    for _ in 0..REFINE_CAP {
        let rb = r.as_box();
        if !rb.intersects(&target) {
            return Ok(false);
        }
        if rb.side() <= side_a && rb.is_subset_of(&grown) {
            return Ok(true);
        }
        r = r.refine()?;
    }
    Err(Error::PrecisionExhausted(REFINE_CAP))
}

/// Decides whether `q` vanishes at the root isolated by `a`.
pub fn vanishes_at(q: &RationalPolynomial, a: &IsolatingBox) -> Result<bool> {
    if q.is_zero() {
        return Ok(true);
    }
    let g = q.gcd(&a.defining_poly);
    if g.is_constant() {
        return Ok(false);
    }
    for rho in isolate_roots(&g, &a.width())? {
        if same_root(&rho, a)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decides whether two isolating boxes denote the same algebraic number.
pub fn roots_equal(a: &IsolatingBox, b: &IsolatingBox) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    for round in 0..3 {
        if !a.as_box().intersects(&b.as_box()) {
            return Ok(false);
        }
        if round < 2 {
            a = a.refine()?;
            b = b.refine()?;
        }
    }
    let g = a.defining_poly.gcd(&b.defining_poly);
    if g.is_constant() {
        return Ok(false);
    }
    let width = a.width().min(b.width());
    for rho in isolate_roots(&g, &width)? {
        if same_root(&rho, &a)? {
            return same_root(&rho, &b);
        }
    }
    Ok(false)
}
