//! Characters of the Galois group of the cover branched on `d` lines and
//! `k` conics, and the line-bundle degrees they determine.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| !p.is_multiple_of(q))
}

/// A character, written by its values on the generators attached to the
/// curves: `x[i]` for line `i`, `y[j]` for conic `j`. It belongs to the
/// dual group exactly when `sum x + 2 sum y = 0 (mod p)`, the condition
/// that makes the branch degree divisible by `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterVector {
    pub p: u64,
    pub x: Vec<u64>,
    pub y: Vec<u64>,
}

impl CharacterVector {
    /// Reduces entries to `0..p` and checks membership.
    pub fn new(p: u64, x: Vec<u64>, y: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        let chi =
            CharacterVector { p, x: x.into_iter().map(|v| v % p).collect(), y: y.into_iter().map(|v| v % p).collect() };
        if !chi.is_member() {
            return Err(Error::InvalidInput(format!(
                "character not in the dual group: sum x + 2 sum y = {} mod {p}",
                chi.branch_degree() % p
            )));
        }
        Ok(chi)
    }

    /// `sum x_hat + 2 sum y_hat` with representatives in `0..p`: the degree
    /// of the branch divisor `sum chi_hat(g) D_g`.
    pub fn branch_degree(&self) -> u64 {
        self.x.iter().sum::<u64>() + 2 * self.y.iter().sum::<u64>()
    }

    pub fn is_member(&self) -> bool {
        self.branch_degree().is_multiple_of(self.p)
    }

    /// Degree of `L_chi` with `p L_chi = sum chi_hat(g) D_g`.
    pub fn line_bundle_degree(&self) -> Option<u64> {
        self.is_member().then(|| self.branch_degree() / self.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub p: u64,
    pub d: usize,
    pub k: usize,
    /// Rank of the Galois group over `Z_p`.
    pub rank: usize,
    /// A basis of the character group with `deg L_chi` for each element.
    pub generators: Vec<(CharacterVector, u64)>,
}

/// Certifies that the abelian cover branched on the arrangement exists by
/// solving `p L_chi = sum chi_hat(g) D_g` in degrees for a basis of
/// characters.
pub fn check_cover_exists(d: usize, k: usize, p: u64) -> Result<CoverCertificate> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if p == 2 && (d == 1 || d == 2) {
        return Err(Error::UnsupportedCoverCase { p, d });
    }
    if d + k == 0 {
        return Err(Error::TooFewCurves(0));
    }
    // weight of each coordinate: lines 1, conics 2
    let weights: Vec<u64> = (0..d + k).map(|i| (if i < d { 1 } else { 2 }) % p).collect();
    let unit = |i: usize| -> Vec<u64> { (0..d + k).map(|j| u64::from(i == j)).collect() };
    let mut basis = Vec::new();
    match weights.iter().position(|&w| w != 0) {
        Some(c) => {
            let inv_wc = mod_inverse(weights[c], p);
            for j in (0..d + k).filter(|&j| j != c) {
                let mut v = unit(j);
                v[c] = (p - weights[j] * inv_wc % p) % p;
                basis.push(v);
            }
        }
        // p = 2 and no lines: every character qualifies
        None => basis.extend((0..k).map(unit)),
    }
    let mut generators = Vec::with_capacity(basis.len());
    for v in basis {
        let chi = CharacterVector::new(p, v[..d].to_vec(), v[d..].to_vec())?;
        let deg =
            chi.line_bundle_degree().ok_or_else(|| Error::Internal("basis character not in dual group".into()))?;
        generators.push((chi, deg));
    }
    Ok(CoverCertificate { p, d, k, rank: generators.len(), generators })
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|x| a * x % p == 1).expect("unit mod prime")
}
