//! Combinatorial and geometric search over arrangements, ranked by the
//! characteristic number.

pub mod generate;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use generate::{generate, Family, Generated, GeneratorSpec, RETRY_CAP};

use crate::algebra::rational::{frac, serde_opt_str, serde_str, to_decimal, to_string};
use crate::error::{Error, Result};
use crate::invariants::profile::binom2;
use crate::invariants::{
    characteristic_number, f_vector, inequality_report, log_chern_conic_line, IncidenceProfile, InequalityReport,
    DEFAULT_DECIMAL_DIGITS,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub profile: IncidenceProfile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<GeneratorSpec>,
    #[serde(with = "serde_str")]
    pub gamma: BigRational,
    pub gamma_decimal: String,
    pub certified: bool,
    pub report: InequalityReport,
}

impl SearchRecord {
    pub fn new(profile: IncidenceProfile, spec: Option<GeneratorSpec>) -> Result<Self> {
        let gamma = characteristic_number(&log_chern_conic_line(&profile))?;
        let report = inequality_report(&profile);
        report.ensure_consistent()?;
        Ok(SearchRecord {
            gamma_decimal: to_decimal(&gamma, DEFAULT_DECIMAL_DIGITS),
            gamma,
            certified: profile.certified,
            report,
            profile,
            spec,
        })
    }

    /// Ranking: larger gamma first, then fewer points, then the t-vector.
    pub fn rank_cmp(&self, o: &Self) -> Ordering {
        o.gamma
            .cmp(&self.gamma)
            .then_with(|| f_vector(&self.profile).f0.cmp(&f_vector(&o.profile).f0))
            .then_with(|| (self.profile.d, self.profile.k).cmp(&(o.profile.d, o.profile.k)))
            .then_with(|| self.profile.counts().cmp(&o.profile.counts()))
    }
}

fn multiplicities(d: usize, k: usize, pairs: u64) -> Vec<usize> {
    (3..d + k).filter(|&r| binom2(r as u64) <= pairs).collect()
}

/// Number of vectors `(t_r)_{r >= 3}` with `sum C(r,2) t_r <= pairs`,
/// saturating at `cap + 1`.
fn count_vectors(rs: &[usize], pairs: u64, cap: u64) -> u64 {
    let n = pairs as usize;
    let mut ways = vec![1u64; n + 1];
    for &r in rs {
        let w = binom2(r as u64) as usize;
        for s in w..=n {
            ways[s] = (ways[s] + ways[s - w]).min(cap + 1);
        }
    }
    // starting from all ones makes ways[s] count weight <= s, not == s
    ways[n]
}

fn enumerate_vectors(rs: &[usize], pairs: u64, out: &mut Vec<Vec<u64>>) {
    fn rec(rs: &[usize], left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let Some((&r, rest)) = rs.split_first() else {
            out.push(cur.clone());
            return;
        };
        let w = binom2(r as u64);
        for c in 0..=left / w {
            cur.push(c);
            rec(rest, left - c * w, cur, out);
            cur.pop();
        }
    }
    rec(rs, pairs, &mut Vec::new(), out);
}

fn sample_vectors(rs: &[usize], pairs: u64, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let mut seen = BTreeSet::new();
    for _ in 0..n {
        let mut left = pairs;
        let mut v = vec![0u64; rs.len()];
        // fill from the largest multiplicity down, each a uniform share of
        // what is left
        for (i, &r) in rs.iter().enumerate().rev() {
            let w = binom2(r as u64);
            let c = rng.gen_range(0..=left / w);
            v[i] = c;
            left -= c * w;
        }
        seen.insert(v);
    }
    seen.into_iter().collect()
}

/// Profiles satisfying the count identity and every applicable bound,
/// best `top` by rank. Exhaustive per `(d, k)` when the number of
/// candidates fits the budget, otherwise `budget` seeded samples.
pub fn profile_search(
    d_range: RangeInclusive<usize>,
    k_range: RangeInclusive<usize>,
    budget: usize,
    top: usize,
    seed: u64,
) -> Result<Vec<SearchRecord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::new();
    for d in d_range {
        for k in k_range.clone() {
            if d + k < 3 {
                continue;
            }
            let (du, ku) = (d as u64, k as u64);
            let pairs = binom2(du) + 2 * du * ku + 4 * binom2(ku);
            let rs = multiplicities(d, k, pairs);
            let mut vectors = Vec::new();
            if count_vectors(&rs, pairs, budget as u64) <= budget as u64 {
                enumerate_vectors(&rs, pairs, &mut vectors);
            } else {
                vectors = sample_vectors(&rs, pairs, budget, &mut rng);
            }
            for v in vectors {
                let used: u64 = rs.iter().zip(&v).map(|(&r, &c)| binom2(r as u64) * c).sum();
                let t = std::iter::once((2, pairs - used)).chain(rs.iter().copied().zip(v));
                let Ok(profile) = IncidenceProfile::new(d, k, t) else { continue };
                let Ok(rec) = SearchRecord::new(profile, None) else { continue };
                if rec.report.feasible() {
                    records.push(rec);
                }
            }
        }
    }
    records.sort_by(SearchRecord::rank_cmp);
    records.truncate(top);
    Ok(records)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeSummary {
    #[serde(with = "serde_str")]
    pub epsilon: BigRational,
    #[serde(with = "serde_str")]
    pub threshold: BigRational,
    pub examined: usize,
    pub generation_failures: usize,
    #[serde(with = "serde_opt_str")]
    pub max_gamma: Option<BigRational>,
    pub witnesses: Vec<SearchRecord>,
    /// Every certified record, in generation order.
    #[serde(skip)]
    pub records: Vec<SearchRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeConfig {
    pub families: Vec<Family>,
    pub d: (usize, usize),
    pub k: (usize, usize),
    pub coefficient_height: u32,
    pub seed: u64,
}

impl ProbeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.d.0 > self.d.1 || self.k.0 > self.k.1 {
            return Err(Error::InvalidInput("empty degree range".into()));
        }
        if self.d.0 + self.k.0 < 3 {
            return Err(Error::InvalidInput("ranges must guarantee at least 3 curves".into()));
        }
        if self.families.is_empty() {
            return Err(Error::InvalidInput("no generator families given".into()));
        }
        Ok(())
    }
}

/// Specs drawn deterministically from the configuration.
pub fn probe_specs(cfg: &ProbeConfig, budget: usize) -> Vec<GeneratorSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(budget);
    for i in 0..budget {
        let family = cfg.families[i % cfg.families.len()].clone();
        let mut d = rng.gen_range(cfg.d.0..=cfg.d.1);
        let mut k = rng.gen_range(cfg.k.0..=cfg.k.1);
        match family {
            Family::CremonaExample => {
                d = 3;
                k = k.max(1);
            }
            Family::ConicsThroughCommonPoints { .. } => d = d.max(1),
            Family::PencilPlusLines => d = d.max(2),
            Family::RandomRational => {}
        }
        out.push(GeneratorSpec { family, d, k, seed: rng.gen(), coefficient_height: cfg.coefficient_height });
    }
    out
}

/// Generates `budget` arrangements and collects those with
/// `gamma > 5/2 + epsilon`. A certified arrangement violating a known
/// bound aborts with `TheoremContradiction`.
pub fn conjecture_probe(epsilon: &BigRational, budget: usize, cfg: &ProbeConfig) -> Result<ProbeSummary> {
    if *epsilon <= frac(0, 1) {
        return Err(Error::InvalidInput("epsilon must be positive".into()));
    }
    cfg.validate()?;
    let threshold = frac(5, 2) + epsilon;
    let mut summary = ProbeSummary {
        epsilon: epsilon.clone(),
        threshold: threshold.clone(),
        examined: 0,
        generation_failures: 0,
        max_gamma: None,
        witnesses: Vec::new(),
        records: Vec::new(),
    };
    for spec in probe_specs(cfg, budget) {
        let g = match generate(&spec) {
            Ok(g) => g,
            Err(Error::GenerationFailed(_)) => {
                summary.generation_failures += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        summary.examined += 1;
        let rec = match SearchRecord::new(g.profile, Some(spec)) {
            Ok(r) => r,
            Err(Error::UndefinedSlope) => continue,
            Err(e) => return Err(e),
        };
        if summary.max_gamma.as_ref().is_none_or(|m| rec.gamma > *m) {
            summary.max_gamma = Some(rec.gamma.clone());
        }
        if rec.gamma > threshold {
            summary.witnesses.push(rec.clone());
        }
        summary.records.push(rec);
    }
    Ok(summary)
}

/// Search job file. `combinatorial` ranks feasible profiles, which need
/// not be realizable; `geometric` generates and certifies curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SearchSpec {
    Combinatorial {
        d: (usize, usize),
        k: (usize, usize),
        budget: usize,
        #[serde(default = "default_top")]
        top: usize,
        #[serde(default)]
        seed: u64,
    },
    Geometric {
        #[serde(with = "serde_str")]
        epsilon: BigRational,
        budget: usize,
        #[serde(default = "default_families")]
        families: Vec<Family>,
        d: (usize, usize),
        k: (usize, usize),
        #[serde(default = "default_height")]
        coefficient_height: u32,
        #[serde(default)]
        seed: u64,
    },
}

fn default_top() -> usize {
    20
}

fn default_families() -> Vec<Family> {
    vec![Family::RandomRational]
}

fn default_height() -> u32 {
    50
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Combinatorial(Vec<SearchRecord>),
    Geometric(Box<ProbeSummary>),
}

impl SearchOutcome {
    /// Records for the archive: ranked profiles, or every certified
    /// arrangement examined.
    pub fn records(&self) -> &[SearchRecord] {
        match self {
            SearchOutcome::Combinatorial(r) => r,
            SearchOutcome::Geometric(s) => &s.records,
        }
    }
}

impl SearchSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn with_seed(mut self, new_seed: u64) -> Self {
        match &mut self {
            SearchSpec::Combinatorial { seed, .. } | SearchSpec::Geometric { seed, .. } => *seed = new_seed,
        }
        self
    }

    pub fn run(&self) -> Result<SearchOutcome> {
        match self {
            SearchSpec::Combinatorial { d, k, budget, top, seed } => {
                profile_search(d.0..=d.1, k.0..=k.1, *budget, *top, *seed).map(SearchOutcome::Combinatorial)
            }
            SearchSpec::Geometric { epsilon, budget, families, d, k, coefficient_height, seed } => {
                let cfg = ProbeConfig {
                    families: families.clone(),
                    d: *d,
                    k: *k,
                    coefficient_height: *coefficient_height,
                    seed: *seed,
                };
                conjecture_probe(epsilon, *budget, &cfg).map(|s| SearchOutcome::Geometric(Box::new(s)))
            }
        }
    }
}

/// One JSON object per line.
pub fn to_json_lines(records: &[SearchRecord]) -> String {
    let mut s = String::new();
    for r in records {
        s.push_str(&serde_json::to_string(r).expect("serializable"));
        s.push('\n');
    }
    s
}

pub fn to_csv(records: &[SearchRecord]) -> String {
    let mut s = String::from("d,k,t,gamma,gamma_decimal,f0,certified,feasible\n");
    for r in records {
        let t: Vec<String> = r.profile.t.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{}",
            r.profile.d,
            r.profile.k,
            t.join(" "),
            to_string(&r.gamma),
            r.gamma_decimal,
            f_vector(&r.profile).f0,
            r.certified,
            r.report.feasible()
        );
    }
    s
}
