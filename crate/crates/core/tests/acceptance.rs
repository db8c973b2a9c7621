//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line whatever the outcome.
//!
//! Criterion 5 contains an identity that does not hold (the BMY slack at
//! p = 3 is four times the Hirzebruch slack, not six times). It is checked
//! as stated and reported as FAIL; the run only fails when a criterion
//! fails for any other reason.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conicline::algebra::rational::{frac, from_f64, rat, to_decimal, to_string};
use conicline::covers::{
    bmy_slack, canonical_coefficients, cover_canonical_square, cover_euler_characteristic, divisor_self_intersection,
    euler_polynomial, log_canonical_divisor, nine_k3_squared_closed_form, pair_with_component, BlowupData,
};
use conicline::fixtures;
use conicline::geometry::curve::{det3, Mat3};
use conicline::geometry::{
    check_prop_miyaoka_hypotheses, exceptional_lines, incidence_profile, intersect_pair, is_transversal, Arrangement,
    Chart, ProjectiveCurve,
};
use conicline::invariants::bounds::hirzebruch_slack;
use conicline::invariants::profile::binom2;
use conicline::invariants::{
    characteristic_number, f_vector, inequality_report, log_chern_conic_line, IncidenceProfile, Status,
};
use conicline::search::{generate, Family, GeneratorSpec};
use conicline::Error;

struct Outcome {
    pass: bool,
    detail: String,
    /// Sub-checks that fail because the stated criterion is not a true
    /// statement; every other sub-check must pass.
    known_false: bool,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail, known_false: false }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

// 1 -----------------------------------------------------------------------

fn klein() -> Outcome {
    let t = Instant::now();
    let f = fixtures::klein();
    let general = f.gamma().unwrap();
    let specialized = characteristic_number(&log_chern_conic_line(&f.profile)).unwrap();
    let dec4 = to_decimal(&specialized, 4);
    let dec5 = to_decimal(&specialized, 5);
    let el = t.elapsed();
    let pass = specialized == frac(108, 43)
        && general == specialized
        && dec4 == "2.512"
        && dec5 == "2.5116"
        && el < Duration::from_secs(1);
    outcome(pass, format!("gamma {} ~ {dec5} (printed 2.512 -> {dec4}), {}", to_string(&specialized), secs(el)))
}

// 2 -----------------------------------------------------------------------

fn dual_hesse() -> Outcome {
    let t = Instant::now();
    let f = fixtures::dual_hesse();
    let c = f.log_chern().unwrap();
    let g = f.gamma().unwrap();
    let el = t.elapsed();
    let pass = f.curves.iter().map(|g| g.count).sum::<usize>() == 9
        && f.profile.t == BTreeMap::from([(3, 12)])
        && c.c1sq == rat(24)
        && c.c2 == rat(9)
        && g == frac(8, 3)
        && el < Duration::from_secs(1);
    outcome(
        pass,
        format!("c1^2 {}, c2 {}, gamma {}, {}", to_string(&c.c1sq), to_string(&c.c2), to_string(&g), secs(el)),
    )
}

// 3 -----------------------------------------------------------------------

fn conic_lower_bound() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for k in 3..=12i64 {
        let p = IncidenceProfile::from_counts(0, k as usize, &[(2 * k * (k - 1)) as u64]).unwrap();
        let g = characteristic_number(&log_chern_conic_line(&p)).unwrap();
        let expected = frac(4 * k * k - 12 * k + 9, 2 * k * k - 4 * k + 3);
        let report = inequality_report(&p);
        let entry = report.get("gamma_conic_lower").unwrap();
        if g != expected || entry.status != Status::Holds || !entry.equality {
            bad.push(k);
        }
    }
    let el = t.elapsed();
    outcome(
        bad.is_empty() && el < Duration::from_secs(1),
        format!("k = 3..12, mismatches {bad:?}, equality reported, {}", secs(el)),
    )
}

// 4 -----------------------------------------------------------------------

fn stress_specs(n: usize, seed: u64) -> Vec<GeneratorSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let (family, d) = match i % 4 {
                0 => (Family::RandomRational, rng.gen_range(0..=5)),
                1 => (Family::ConicsThroughCommonPoints { common: rng.gen_range(1..=4) }, rng.gen_range(1..=5)),
                2 => (Family::PencilPlusLines, rng.gen_range(2..=5)),
                _ => (Family::CremonaExample, 3),
            };
            let k = rng.gen_range(3..=8 - d);
            // below height 8 the draws repeat too often for eight generic curves
            GeneratorSpec { family, d, k, seed: rng.gen(), coefficient_height: rng.gen_range(8..=50) }
        })
        .collect()
}

fn stress(certified: &mut Vec<IncidenceProfile>) -> Outcome {
    let t = Instant::now();
    let bound = frac(8, 3);
    let mut exceptions = Vec::new();
    let mut max_gamma: Option<BigRational> = None;
    let mut count = 0;
    for spec in stress_specs(1000, 0xC0FFEE) {
        let g = match generate(&spec) {
            Ok(g) => g,
            Err(e) => {
                exceptions.push(format!("{:?}: {e}", spec.family));
                continue;
            }
        };
        count += 1;
        let p = g.profile;
        if !p.certified || inequality_report(&p).ensure_consistent().is_err() {
            exceptions.push(format!("{:?}: uncertified or inconsistent", spec.family));
        }
        match characteristic_number(&log_chern_conic_line(&p)) {
            Ok(gamma) => {
                if gamma >= bound {
                    exceptions.push(format!("gamma {} for {:?}", to_string(&gamma), p.t));
                }
                if max_gamma.as_ref().is_none_or(|m| gamma > *m) {
                    max_gamma = Some(gamma);
                }
            }
            Err(e) => exceptions.push(format!("{e}")),
        }
        certified.push(p);
    }
    let el = t.elapsed();
    let pass = exceptions.is_empty() && count == 1000 && el < Duration::from_secs(600);
    let max = max_gamma.map(|g| format!("{} ~ {}", to_string(&g), to_decimal(&g, 6))).unwrap_or_default();
    let first = exceptions.first().map(|e| format!("; first: {e}")).unwrap_or_default();
    outcome(
        pass,
        format!("{count}/1000 certified, max gamma {max}, exceptions {}{first}, {}", exceptions.len(), secs(el)),
    )
}

// 5 -----------------------------------------------------------------------

/// A random profile satisfying the count identity, with
/// multiplicities at most `d + k - 1`.
fn random_profile(rng: &mut ChaCha8Rng) -> IncidenceProfile {
    loop {
        let d = rng.gen_range(0..=8usize);
        let k = rng.gen_range(0..=8usize);
        if d + k < 3 {
            continue;
        }
        let (du, ku) = (d as u64, k as u64);
        let mut left = binom2(du) + 2 * du * ku + 4 * binom2(ku);
        let mut t = BTreeMap::new();
        let mut rs: Vec<usize> = (3..d + k).collect();
        rs.shuffle(rng);
        for r in rs {
            let w = binom2(r as u64);
            // keep most of the weight in double points
            let c = rng.gen_range(0..=left / w / 2);
            if c > 0 {
                t.insert(r, c);
                left -= c * w;
            }
        }
        if left > 0 {
            t.insert(2, left);
        }
        if let Ok(p) = IncidenceProfile::new(d, k, t) {
            return p;
        }
    }
}

/// `e(W_3) / 3^(n-2) = 9 c2 + 6 (d + k - f1 + f0) + f1 - t2`, written out
/// independently of the library's polynomial.
fn euler_line_p3(p: &IncidenceProfile) -> BigRational {
    let f = f_vector(p);
    let (d, k, f0, f1) = (p.d as i64, p.k as i64, f.f0 as i64, f.f1 as i64);
    let c2 = 3 - 2 * k - 2 * d + f1 - f0;
    rat(9 * c2 + 6 * (d + k - f1 + f0) + f1 - p.t(2) as i64)
}

fn closed_forms() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 10_000;
    let (mut ksq_ok, mut euler_ok, mut six_ok, mut four_ok) = (0, 0, 0, 0);
    for _ in 0..n {
        let p = random_profile(&mut rng);
        let basis = BlowupData::synthetic(&p);
        let nine_ksq = rat(9) * cover_canonical_square(3, &basis).unwrap();
        ksq_ok += usize::from(nine_ksq == nine_k3_squared_closed_form(&p));
        euler_ok += usize::from(cover_euler_characteristic(3, &p).unwrap() == euler_line_p3(&p));
        let bmy = bmy_slack(3, &p, &basis).unwrap();
        let h = hirzebruch_slack(&p);
        six_ok += usize::from(bmy == rat(6) * &h);
        four_ok += usize::from(bmy == rat(4) * &h);
    }
    let el = t.elapsed();
    let rest = ksq_ok == n && euler_ok == n && el < Duration::from_secs(60);
    Outcome {
        pass: rest && six_ok == n,
        known_false: rest && six_ok < n && four_ok == n,
        detail: format!(
            "9K_3^2 closed form {ksq_ok}/{n}, Euler line {euler_ok}/{n}, BMY = 6 x Hirzebruch {six_ok}/{n} \
             (BMY = 4 x Hirzebruch {four_ok}/{n}), {}",
            secs(el)
        ),
    }
}

// 6 -----------------------------------------------------------------------

fn f(x: &BigRational) -> f64 {
    x.to_f64().unwrap()
}

type CPoly = Vec<Complex64>;

fn cmul(a: &CPoly, b: &CPoly) -> CPoly {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn combine(a: &CPoly, b: &CPoly, sign: f64) -> CPoly {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).copied().unwrap_or_default() + sign * b.get(i).copied().unwrap_or_default()).collect()
}

fn cadd(a: &CPoly, b: &CPoly) -> CPoly {
    combine(a, b, 1.0)
}

fn csub(a: &CPoly, b: &CPoly) -> CPoly {
    combine(a, b, -1.0)
}

fn cderiv(p: &CPoly) -> CPoly {
    p.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect()
}

fn ceval(p: &CPoly, x: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
}

/// All roots of a polynomial by Durand-Kerner iteration.
fn durand_kerner(p: &CPoly) -> Vec<Complex64> {
    let mut p = p.clone();
    while p.last().is_some_and(|c| c.norm() < 1e-300) {
        p.pop();
    }
    let n = p.len() - 1;
    let lead = p[n];
    let monic: CPoly = p.iter().map(|c| c / lead).collect();
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..2000 {
        let prev = z.clone();
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = ceval(&monic, z[i]) / den;
            z[i] -= step;
        }
        if z.iter().zip(&prev).all(|(a, b)| (a - b).norm() < 1e-15 * (1.0 + a.norm())) {
            break;
        }
    }
    z
}

/// Curve in the affine chart `z = 1` as coefficients of `y^0, y^1, y^2`,
/// each a polynomial in `x`.
fn in_y(c: &ProjectiveCurve) -> [CPoly; 3] {
    let k: Vec<Complex64> = c.coeffs().iter().map(|x| Complex64::new(f(x), 0.0)).collect();
    if k.len() == 3 {
        // a x + b y + c
        [vec![k[2], k[0]], vec![k[1]], vec![Complex64::default()]]
    } else {
        // x2 x^2 + y2 y^2 + z2 + xy xy + xz x + yz y
        [vec![k[2], k[4], k[0]], vec![k[5], k[3]], vec![k[1]]]
    }
}

fn eval_affine(c: &ProjectiveCurve, x: Complex64, y: Complex64) -> Complex64 {
    let [a0, a1, a2] = in_y(c);
    ceval(&a0, x) + ceval(&a1, x) * y + ceval(&a2, x) * y * y
}

fn grad_affine(c: &ProjectiveCurve, x: Complex64, y: Complex64) -> (Complex64, Complex64) {
    let [a0, a1, a2] = in_y(c);
    let dx = ceval(&cderiv(&a0), x) + ceval(&cderiv(&a1), x) * y + ceval(&cderiv(&a2), x) * y * y;
    let dy = ceval(&a1, x) + 2.0 * ceval(&a2, x) * y;
    (dx, dy)
}

/// Floating-point intersection oracle in the chart `z = 1`: eliminate `y`
/// with the closed-form resultant of two quadratics (or substitution for a
/// line), solve in `x` by Durand-Kerner, recover `y` from the common root,
/// then polish with two-variable Newton steps.
fn oracle_points(a: &ProjectiveCurve, b: &ProjectiveCurve) -> Vec<(Complex64, Complex64)> {
    let (line, other) = if a.degree() == 1 {
        (a, b)
    } else if b.degree() == 1 {
        (b, a)
    } else {
        (a, a)
    };
    let mut pts = Vec::new();
    if line.degree() == 1 {
        let [l0, l1, _] = in_y(line);
        // y = -(l0(x)) / l1 with l1 constant
        let yx: CPoly = l0.iter().map(|c| -c / l1[0]).collect();
        let [c0, c1, c2] = in_y(other);
        let poly = cadd(&cadd(&c0, &cmul(&c1, &yx)), &cmul(&c2, &cmul(&yx, &yx)));
        for x in durand_kerner(&poly) {
            pts.push((x, ceval(&yx, x)));
        }
    } else {
        let [a0, a1, a2] = in_y(a);
        let [b0, b1, b2] = in_y(b);
        let p = csub(&cmul(&a2, &b0), &cmul(&b2, &a0));
        let q = csub(&cmul(&a2, &b1), &cmul(&b2, &a1));
        let r = csub(&cmul(&a1, &b0), &cmul(&b1, &a0));
        let res = csub(&cmul(&p, &p), &cmul(&q, &r));
        for x in durand_kerner(&res) {
            pts.push((x, -ceval(&p, x) / ceval(&q, x)));
        }
    }
    pts.into_iter()
        .map(|(mut x, mut y)| {
            for _ in 0..8 {
                let (fa, fb) = (eval_affine(a, x, y), eval_affine(b, x, y));
                let ((ax, ay), (bx, by)) = (grad_affine(a, x, y), grad_affine(b, x, y));
                let det = ax * by - ay * bx;
                if det.norm() == 0.0 {
                    break;
                }
                x -= (fa * by - fb * ay) / det;
                y -= (ax * fb - bx * fa) / det;
            }
            (x, y)
        })
        .collect()
}

fn random_pair(rng: &mut ChaCha8Rng, h: i64) -> (ProjectiveCurve, ProjectiveCurve) {
    let q = |rng: &mut ChaCha8Rng| frac(rng.gen_range(-h..=h), rng.gen_range(1..=h));
    loop {
        let conic = ProjectiveCurve::conic(std::array::from_fn(|_| q(rng)));
        let other = if rng.gen_bool(0.4) {
            ProjectiveCurve::line(q(rng), q(rng), q(rng))
        } else {
            ProjectiveCurve::conic(std::array::from_fn(|_| q(rng)))
        };
        if let (Ok(a), Ok(b)) = (conic, other) {
            // the oracle eliminates y, so keep y present in top degree
            let y_lead = |c: &ProjectiveCurve| !c.coeffs()[1].is_zero();
            if a != b && y_lead(&a) && y_lead(&b) && is_transversal(&a, &b).unwrap() {
                return (a, b);
            }
        }
    }
}

const ORACLE_TOLERANCE: f64 = 1e-9;

fn oracle_agreement(pair_points: &mut usize) -> (usize, usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    let mut agree = 0;
    let mut problems = Vec::new();
    let target = frac(1, 1 << 30);
    for i in 0..100 {
        let (a, b) = random_pair(&mut rng, 30);
        let exact = intersect_pair(&a, &b).unwrap();
        let oracle = oracle_points(&a, &b);
        *pair_points += usize::from(exact.len() == a.degree() * b.degree());
        let mut ok = exact.len() == oracle.len();
        for pt in &exact {
            let (mut u, mut v) = (pt.point.u.clone(), pt.point.v.clone());
            while u.width() > target {
                u = u.refine().unwrap();
            }
            while v.width() > target {
                v = v.refine().unwrap();
            }
            let inside = |bx: &conicline::algebra::IsolatingBox, z: Complex64| {
                let tol = from_f64(ORACLE_TOLERANCE);
                bx.real_interval().widen(&tol).contains(&from_f64(z.re))
                    && bx.imag_interval().widen(&tol).contains(&from_f64(z.im))
            };
            let hits = oracle
                .iter()
                .filter(|&&(x, y)| {
                    // oracle point [x : y : 1] in the chart of the exact point
                    let (cu, cv) = match pt.point.chart {
                        Chart::Z => (x, y),
                        Chart::Y => (x / y, 1.0 / y),
                        Chart::X => (y / x, 1.0 / x),
                    };
                    inside(&u, cu) && inside(&v, cv)
                })
                .count();
            ok &= hits == 1;
        }
        if ok {
            agree += 1;
        } else if problems.len() < 3 {
            problems.push(format!("pair {i}: {} exact, {} oracle", exact.len(), oracle.len()));
        }
    }
    (agree, 100, problems)
}

/// A smooth conic, one of its tangent lines and a third line, moved by a
/// random projective transformation.
fn tangency_fixture(rng: &mut ChaCha8Rng) -> Arrangement {
    loop {
        let t = frac(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        let one = rat(1);
        // rational point of x^2 + y^2 = z^2 and the tangent line there
        let p = [&one - &t * &t, rat(2) * &t, &one + &t * &t];
        let conic = ProjectiveCurve::conic_i64([1, 1, -1, 0, 0, 0]).unwrap();
        let tangent = ProjectiveCurve::line(p[0].clone(), p[1].clone(), -p[2].clone()).unwrap();
        let other = ProjectiveCurve::line_i64(rng.gen_range(-5..=5), rng.gen_range(-5..=5), 1).unwrap();
        let m: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| rat(rng.gen_range(-6..=6))));
        if det3(&m).is_zero() {
            continue;
        }
        if let Ok(arr) = Arrangement::new(vec![tangent, other], vec![conic]).and_then(|a| a.pullback(&m)) {
            return arr;
        }
    }
}

fn geometry_oracle(pair_points: &mut usize) -> Outcome {
    let t = Instant::now();
    let (agree, total, problems) = oracle_agreement(pair_points);
    let mut rng = ChaCha8Rng::seed_from_u64(67);
    let mut raised = 0;
    let fixtures = 20;
    for _ in 0..fixtures {
        let arr = tangency_fixture(&mut rng);
        if matches!(incidence_profile(&arr), Err(Error::NonOrdinarySingularity(..))) {
            raised += 1;
        }
    }
    let el = t.elapsed();
    let extra = if problems.is_empty() { String::new() } else { format!(" {problems:?}") };
    outcome(
        agree == total && raised == fixtures,
        format!(
            "{agree}/{total} pairs agree with the float oracle, tangency raised {raised}/{fixtures}{extra}, {}",
            secs(el)
        ),
    )
}

// 7 -----------------------------------------------------------------------

fn cremona(certified: &mut Vec<IncidenceProfile>) -> Outcome {
    let t = Instant::now();
    let mut runs = 0;
    let mut failures = Vec::new();
    for (seed, k) in [(1u64, 3usize), (2, 4), (3, 5), (4, 3), (5, 4)] {
        let spec = GeneratorSpec { family: Family::CremonaExample, d: 3, k, seed, coefficient_height: 20 };
        let g = generate(&spec).unwrap();
        runs += 1;
        let exc = exceptional_lines(&g.arrangement, &g.points);
        let basis = BlowupData::from_incidence(g.arrangement.d(), g.arrangement.k(), &g.points);
        let k_log = log_canonical_divisor(&basis);
        let degrees_zero =
            exc.iter().all(|&i| pair_with_component(&k_log, &basis.strict_transform(i).unwrap()).is_zero());
        let hyp_b = check_prop_miyaoka_hypotheses(&g.arrangement, &g.points).b;
        if exc.len() != 3 || !degrees_zero || hyp_b {
            failures.push(format!("seed {seed}: {} exceptional, K.G zero {degrees_zero}, (b) {hyp_b}", exc.len()));
        }
        certified.push(g.profile);
    }
    let el = t.elapsed();
    outcome(
        failures.is_empty() && el < Duration::from_secs(5),
        format!(
            "{runs} arrangements, 3 exceptional lines with K.G = 0 and (b) false in {}/{runs} {failures:?}, {}",
            runs - failures.len(),
            secs(el)
        ),
    )
}

// 8 -----------------------------------------------------------------------

fn limits(profiles: &[IncidenceProfile]) -> Outcome {
    let t = Instant::now();
    let primes = [3u64, 5, 7, 11, 13];
    let mut euler_bad = 0;
    let mut limit_bad = 0;
    let mut ksq_bad = 0;
    for p in profiles {
        let c = log_chern_conic_line(p);
        let e = euler_polynomial(p);
        let dist: Vec<BigRational> = primes
            .iter()
            .map(|&q| {
                let q = rat(q as i64);
                (e.eval(&q) / (&q * &q) - &c.c2).abs()
            })
            .collect();
        if dist.windows(2).any(|w| w[1] >= w[0]) {
            euler_bad += 1;
        }
        if e.deg() != 2 || e.coeff(2) != c.c2 {
            limit_bad += 1;
        }
        let basis = BlowupData::synthetic(p);
        if divisor_self_intersection(&log_canonical_divisor(&basis)) != c.c1sq {
            ksq_bad += 1;
        }
    }
    let limit = canonical_coefficients(None);
    let coeffs: Vec<_> = primes.iter().map(|&q| canonical_coefficients(Some(q))).collect();
    let increasing = coeffs.windows(2).all(|w| w[0].less_than(&w[1])) && coeffs.iter().all(|c| c.less_than(&limit));
    let converging = primes.iter().zip(&coeffs).all(|(&q, c)| {
        let gap = frac(1, q as i64);
        &limit.hyperplane - &c.hyperplane == rat(0)
            && &limit.exceptional - &c.exceptional == gap
            && &limit.curves - &c.curves == gap
    });
    let el = t.elapsed();
    outcome(
        euler_bad == 0 && limit_bad == 0 && ksq_bad == 0 && increasing && converging,
        format!(
            "{} profiles: |e/p^2 - c2| not decreasing {euler_bad}, limit != c2 {limit_bad}, K^2 != c1^2 {ksq_bad}; \
             K_p increasing {increasing}, gap 1/p {converging}, {}",
            profiles.len(),
            secs(el)
        ),
    )
}

// 9 -----------------------------------------------------------------------

fn count_identity(profiles: &[IncidenceProfile], pair_points: usize) -> Outcome {
    let violations = profiles.iter().filter(|p| !p.certified || !p.count_identity_holds()).count();
    outcome(
        violations == 0 && pair_points == 100,
        format!(
            "{} certified arrangements, {violations} violations; {pair_points}/100 pairs meet in deg * deg points",
            profiles.len()
        ),
    )
}

fn main() -> ExitCode {
    // `cargo test -- --list` and filters come through here too
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut certified = Vec::new();
    let mut pair_points = 0;
    let mut results: Vec<(&str, Outcome)> = vec![
        ("Klein fixture", klein()),
        ("dual Hesse fixture", dual_hesse()),
        ("conic-only lower bound", conic_lower_bound()),
        ("gamma < 8/3 stress test", stress(&mut certified)),
        ("closed-form equivalence", closed_forms()),
        ("geometry oracle", geometry_oracle(&mut pair_points)),
        ("exceptional lines", cremona(&mut certified)),
    ];
    let mut limit_profiles = vec![fixtures::klein().profile, fixtures::dual_hesse().profile];
    limit_profiles.extend(certified.iter().cloned());
    results.push(("limits", limits(&limit_profiles)));
    results.push(("count identity", count_identity(&certified, pair_points)));

    let mut unexpected = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && o.known_false { " [stated identity is false; see README]" } else { "" };
        println!("criterion {} ({name}): {tag}{note}: {}", i + 1, o.detail);
        if !o.pass && !o.known_false {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
