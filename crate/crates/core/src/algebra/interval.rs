//! Closed rational intervals and axis-aligned complex boxes with outward
//! dyadic rounding.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::RationalPolynomial;
use super::rational::{ceil_dyadic, floor_dyadic};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Same midpoint, every side pushed out by `by`.
    pub fn widen(&self, by: &BigRational) -> Interval {
        Interval { lo: &self.lo - by, hi: &self.hi + by }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().expect("nonempty").clone();
        let hi = c.iter().max().expect("nonempty").clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if c.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    pub fn round_out(&self, bits: u32) -> Interval {
        Interval { lo: floor_dyadic(&self.lo, bits), hi: ceil_dyadic(&self.hi, bits) }
    }
}

/// Rectangle `re x im` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(z: &Complex<BigRational>) -> Self {
        ComplexBox { re: Interval::point(z.re.clone()), im: Interval::point(z.im.clone()) }
    }

    /// Larger side length.
    pub fn side(&self) -> BigRational {
        let (a, b) = (self.re.width(), self.im.width());
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn center(&self) -> Complex<BigRational> {
        Complex::new(self.re.mid(), self.im.mid())
    }

    pub fn intersects(&self, other: &ComplexBox) -> bool {
        self.re.intersects(&other.re) && self.im.intersects(&other.im)
    }

    pub fn is_subset_of(&self, other: &ComplexBox) -> bool {
        self.re.is_subset_of(&other.re) && self.im.is_subset_of(&other.im)
    }

    pub fn contains(&self, z: &Complex<BigRational>) -> bool {
        self.re.contains(&z.re) && self.im.contains(&z.im)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    /// The box grown by its own larger side on every edge ("3x box").
    pub fn tripled(&self) -> ComplexBox {
        let s = self.side();
        ComplexBox { re: self.re.widen(&s), im: self.im.widen(&s) }
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox { re: self.re.clone(), im: Interval { lo: -&self.im.hi, hi: -&self.im.lo } }
    }

    pub fn add(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn mul(&self, o: &ComplexBox) -> ComplexBox {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        ComplexBox { re, im }
    }

    pub fn round_out(&self, bits: u32) -> ComplexBox {
        ComplexBox { re: self.re.round_out(bits), im: self.im.round_out(bits) }
    }

    /// Enclosure of `{ p(z) : z in self }` by Horner's rule, rounded
    /// outward to `2^-bits` after each step.
    pub fn eval_poly(&self, p: &RationalPolynomial, bits: u32) -> ComplexBox {
        let mut acc = ComplexBox::point(&Complex::new(BigRational::zero(), BigRational::zero()));
        for c in p.coeffs().iter().rev() {
            let prod = acc.mul(self);
            acc = ComplexBox { re: prod.re.add(&Interval::point(c.clone())), im: prod.im }.round_out(bits);
        }
        acc
    }
}
