//! Invariants of the `Z_p`-cover `W_p` branched on the arrangement,
//! reported scaled by powers of `p`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::character::check_cover_exists;
use super::divisor::{canonical_q_divisor, divisor_self_intersection, BlowupData};
use crate::algebra::rational::{frac, rat, serde_opt_str, serde_str};
use crate::algebra::RationalPolynomial;
use crate::error::{Error, Result};
use crate::invariants::bounds::miyaoka_hypotheses;
use crate::invariants::{f_vector, log_chern_conic_line, IncidenceProfile};

/// `e(W_p)` divided by `p^(n-2)`, `n` the rank of the group, as a
/// polynomial in `p`: `c2 p^2 + 2 (d + k - f1 + f0) p + (f1 - t2)`.
///
/// Strata: the complement of the arrangement (`p^n` sheets), the curves
/// minus the points (`p^(n-1)`), double points (`p^(n-2)`), and the
/// exceptional curves over points of multiplicity `r >= 3`, each a
/// `p^(n-2)`-fold cover of a sphere minus `r` points plus `r` orbits.
pub fn euler_polynomial(profile: &IncidenceProfile) -> RationalPolynomial {
    let f = f_vector(profile);
    let c2 = log_chern_conic_line(profile).c2;
    let (d, k) = (profile.d as i64, profile.k as i64);
    let (f0, f1) = (f.f0 as i64, f.f1 as i64);
    RationalPolynomial::new(vec![rat(f1 - profile.t(2) as i64), rat(2 * (d + k - f1 + f0)), c2])
}

/// Human-readable scaling exponent of `e(W_p)`.
pub fn euler_scale_exponent(p: u64, d: usize) -> &'static str {
    if p == 2 && d == 0 {
        "k-2"
    } else {
        "d+k-3"
    }
}

/// Scaling exponent of `K_{W_p}^2`.
pub fn ksq_scale_exponent(p: u64, d: usize) -> &'static str {
    if p == 2 && d == 0 {
        "k"
    } else {
        "d+k-1"
    }
}

pub fn cover_euler_characteristic(p: u64, profile: &IncidenceProfile) -> Result<BigRational> {
    check_cover_exists(profile.d, profile.k, p)?;
    Ok(euler_polynomial(profile).eval(&rat(p as i64)))
}

/// `K_{W_p}^2 / p^(n)` equals `K_p^2` on `Y`.
pub fn cover_canonical_square(p: u64, basis: &BlowupData) -> Result<BigRational> {
    check_cover_exists(basis.d, basis.k, p)?;
    Ok(divisor_self_intersection(&canonical_q_divisor(p, basis)))
}

/// `81 - 56k - 32d + 16 f1 - 25 f0 + t2`, the closed form of `9 K_3^2`.
pub fn nine_k3_squared_closed_form(profile: &IncidenceProfile) -> BigRational {
    let f = f_vector(profile);
    let (d, k) = (profile.d as i64, profile.k as i64);
    rat(81 - 56 * k - 32 * d + 16 * f.f1 as i64 - 25 * f.f0 as i64 + profile.t(2) as i64)
}

/// `(3 e(W_p) - K_{W_p}^2) / p^(n-2)`, nonnegative by the
/// Bogomolov-Miyaoka-Yau inequality when `W_p` is of general type.
pub fn bmy_slack(p: u64, profile: &IncidenceProfile, basis: &BlowupData) -> Result<BigRational> {
    if p < 3 {
        return Err(Error::NotApplicable("the BMY route needs p >= 3".into()));
    }
    let e = cover_euler_characteristic(p, profile)?;
    let ksq = cover_canonical_square(p, basis)?;
    let p = rat(p as i64);
    Ok(rat(3) * e - &p * &p * ksq)
}

/// Log-Miyaoka slack for the double cover `W_2`, scaled by `2^(n-2)`:
/// `3 e - 4 K_2^2 - t4 - 9/4 t3`. The last two terms account for the
/// elliptic curves over quadruple points and the (-2)-curves over
/// triple points.
pub fn miyaoka_slack(profile: &IncidenceProfile, basis: &BlowupData) -> Result<BigRational> {
    let unmet: Vec<String> =
        miyaoka_hypotheses(profile).into_iter().filter(|h| h.holds != Some(true)).map(|h| h.name).collect();
    if !unmet.is_empty() {
        return Err(Error::NotApplicable(format!("hypotheses not certified: {}", unmet.join(", "))));
    }
    let e = cover_euler_characteristic(2, profile)?;
    let ksq = cover_canonical_square(2, basis)?;
    Ok(rat(3) * e - rat(4) * ksq - rat(profile.t(4) as i64) - frac(9, 4) * rat(profile.t(3) as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub p: u64,
    #[serde(with = "serde_str")]
    pub euler_scaled: BigRational,
    #[serde(with = "serde_str")]
    pub k_sq_scaled: BigRational,
    #[serde(with = "serde_opt_str")]
    pub bmy_slack: Option<BigRational>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "serde_opt_str")]
    pub miyaoka_slack: Option<BigRational>,
    pub scale_exponent: String,
    pub k_sq_scale_exponent: String,
}

pub fn cover_report(p: u64, profile: &IncidenceProfile, basis: &BlowupData) -> Result<CoverReport> {
    let euler_scaled = cover_euler_characteristic(p, profile)?;
    let k_sq_scaled = cover_canonical_square(p, basis)?;
    let bmy = if p >= 3 { Some(bmy_slack(p, profile, basis)?) } else { None };
    let miyaoka = if p == 2 { miyaoka_slack(profile, basis).ok() } else { None };
    Ok(CoverReport {
        p,
        euler_scaled,
        k_sq_scaled,
        bmy_slack: bmy,
        miyaoka_slack: miyaoka,
        scale_exponent: euler_scale_exponent(p, profile.d).into(),
        k_sq_scale_exponent: ksq_scale_exponent(p, profile.d).into(),
    })
}
