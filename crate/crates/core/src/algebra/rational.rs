//! Helpers around `BigRational`: string form, dyadic rounding, square-root
//! bounds and decimal rendering.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `"p/q"` form, `"p"` when the denominator is one.
pub fn to_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p/q"` or `"p"` (optional sign on the numerator only).
pub fn parse(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.sign() != Sign::Plus {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

pub fn to_f64(x: &BigRational) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() && d != 0.0 => n / d,
        _ => {
            // Huge numerator or denominator: shift both down first.
            let nb = x.numer().bits() as i64;
            let db = x.denom().bits() as i64;
            let shift = (nb.max(db) - 900).max(0) as usize;
            let n = (x.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (x.denom() >> shift).to_f64().unwrap_or(1.0);
            if d == 0.0 {
                if n >= 0.0 {
                    f64::INFINITY
                } else {
                    f64::NEG_INFINITY
                }
            } else {
                n / d
            }
        }
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

/// Largest multiple of `2^-bits` not above `x`.
pub fn floor_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.floor().to_integer(), pow2(bits))
}

/// Smallest multiple of `2^-bits` not below `x`.
pub fn ceil_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.ceil().to_integer(), pow2(bits))
}

/// Nearest multiple of `2^-bits`.
pub fn round_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scaled = x * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.round().to_integer(), pow2(bits))
}

/// Dyadic upper bound for `sqrt(x)`, within `2^-bits` of the true value.
pub fn sqrt_upper(x: &BigRational, bits: u32) -> BigRational {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return BigRational::zero();
    }
    // sqrt(n/d) = sqrt(n*d*4^bits) / (d*2^bits)
    let n = x.numer().to_biguint().expect("nonnegative");
    let d = x.denom().to_biguint().expect("positive");
    let scaled: BigUint = &n * &d * (BigUint::one() << (2 * bits as usize));
    let mut s = scaled.sqrt();
    if &s * &s < scaled {
        s += 1u32;
    }
    let denom = d * (BigUint::one() << bits as usize);
    BigRational::new(BigInt::from(s), BigInt::from(denom))
}

/// Decimal rendering with `digits` significant digits (round half away
/// from zero). Only for human-readable fields.
pub fn to_decimal(x: &BigRational, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return format!("{:.*}", digits - 1, 0.0);
    }
    let neg = x.is_negative();
    let a = x.abs();
    // exponent e such that 10^e <= a < 10^(e+1)
    let mut e: i64 = (a.numer().to_string().len() as i64) - (a.denom().to_string().len() as i64);
    let pow10 = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(num_traits::pow(BigInt::from(10), k as usize))
        } else {
            BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), (-k) as usize))
        }
    };
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = &a * pow10(shift);
    let two = BigInt::from(2);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut m = q;
    if &r * &two >= *scaled.denom() {
        m += 1;
    }
    // rounding may carry into a new digit
    let mut shift = shift;
    if m.to_string().len() > digits {
        m /= BigInt::from(10);
        shift -= 1;
    }
    let s = m.to_string();
    let body = if shift <= 0 {
        let zeros = "0".repeat((-shift) as usize);
        format!("{s}{zeros}")
    } else if (shift as usize) >= s.len() {
        format!("0.{}{}", "0".repeat(shift as usize - s.len()), s)
    } else {
        let split = s.len() - shift as usize;
        format!("{}.{}", &s[..split], &s[split..])
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Serde adapter: rationals as `"p/q"` strings.
pub mod serde_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Option<BigRational>` (null when absent).
pub mod serde_opt_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_str(&to_string(v)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<BigRational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse(&s).map_err(serde::de::Error::custom)).transpose()
    }
}
