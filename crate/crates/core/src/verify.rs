//! One-shot verification suites with deterministic reports.
//!
//! Each suite produces a list of named checks. `render` prints only the
//! outcome and a deterministic detail line per check; wall-clock timings are
//! kept on the outcome for callers that want to show them separately.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, PartitionCache};
use crate::congruence::{hilbert_basis_bruteforce, hilbert_basis_with, verify_olson, CongruenceSystem, SearchOptions};
use crate::error::{Error, Result};
use crate::sl2;
use crate::torus::{self, WeightSystem};
use crate::weyl;
use crate::{Count, Integer, RootSystem};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Oracle,
    HarrisWehlau,
    Olson,
    Reciprocity,
    DimensionFacts,
    TorusBounds,
    Theorem2,
    Transport,
    Growth,
    Kac,
    HardyRamanujan,
    Weyl,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Oracle,
        Suite::HarrisWehlau,
        Suite::Olson,
        Suite::Reciprocity,
        Suite::DimensionFacts,
        Suite::TorusBounds,
        Suite::Theorem2,
        Suite::Transport,
        Suite::Growth,
        Suite::Kac,
        Suite::HardyRamanujan,
        Suite::Weyl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::HarrisWehlau => "harris-wehlau",
            Suite::Olson => "olson",
            Suite::Reciprocity => "reciprocity",
            Suite::DimensionFacts => "dimension-facts",
            Suite::TorusBounds => "torus-bounds",
            Suite::Theorem2 => "theorem2",
            Suite::Transport => "transport",
            Suite::Growth => "growth",
            Suite::Kac => "kac",
            Suite::HardyRamanujan => "hardy-ramanujan",
            Suite::Weyl => "weyl",
        }
    }

    /// Upper end of the suite's main parameter range when not overridden.
    pub fn default_max_n(self) -> u32 {
        match self {
            Suite::Oracle => 12,
            Suite::HarrisWehlau => 20,
            Suite::Olson => 40,
            Suite::Reciprocity => 40,
            Suite::DimensionFacts => 40,
            Suite::TorusBounds => 12,
            Suite::Theorem2 => 12,
            Suite::Transport => 10,
            Suite::Growth => 200,
            Suite::Kac => 101,
            Suite::HardyRamanujan => 1000,
            Suite::Weyl => 50,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            Error::param(format!("unknown suite {s:?}; expected one of {} or all", names.join(", ")))
        })
    }
}

/// Parses a suite name or `all`.
pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Replaces every selected suite's default upper parameter.
    pub max_n: Option<u32>,
    pub options: SearchOptions,
    /// Seeds the random systems of the oracle suite.
    pub seed: u64,
    pub random_systems: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: None, options: SearchOptions::default(), seed: DEFAULT_SEED, random_systems: 200 }
    }
}

impl VerifyConfig {
    fn max_n(&self, suite: Suite) -> u32 {
        self.max_n.unwrap_or_else(|| suite.default_max_n())
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: String,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Deterministic text: one line per check and a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}/{}: {}\n", c.suite, c.name, c.detail));
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict} {passed}/{} checks\n", self.checks.len()));
        out
    }
}

struct Recorder<'a> {
    suite: Suite,
    checks: &'a mut Vec<CheckOutcome>,
}

impl Recorder<'_> {
    /// Runs one check. Budget and overflow errors are reported as failures
    /// with the error text so the remaining checks still run.
    fn check(&mut self, name: &str, body: impl FnOnce() -> Result<(bool, String)>) {
        let start = Instant::now();
        let (pass, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
        self.checks.push(CheckOutcome {
            suite: self.suite,
            name: name.to_string(),
            pass,
            detail,
            elapsed: start.elapsed(),
        });
    }
}

pub fn run(suites: &[Suite], config: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    for &suite in suites {
        let mut rec = Recorder { suite, checks: &mut report.checks };
        let max = config.max_n(suite);
        match suite {
            Suite::Oracle => oracle(&mut rec, max, config),
            Suite::HarrisWehlau => harris_wehlau(&mut rec, max, config),
            Suite::Olson => olson(&mut rec, max, config),
            Suite::Reciprocity => reciprocity(&mut rec, max, config),
            Suite::DimensionFacts => dimension_facts(&mut rec, max),
            Suite::TorusBounds => torus_bounds(&mut rec, max, config),
            Suite::Theorem2 => theorem2(&mut rec, max, config),
            Suite::Transport => transport(&mut rec, max, config),
            Suite::Growth => growth(&mut rec, max, config),
            Suite::Kac => kac(&mut rec, max),
            Suite::HardyRamanujan => hardy_ramanujan(&mut rec, max),
            Suite::Weyl => weyl_suite(&mut rec, max),
        }
    }
    report
}

fn compare_with_oracle(system: &CongruenceSystem, options: &SearchOptions) -> Result<bool> {
    let cap = system.default_degree_cap();
    let fast = hilbert_basis_with(system, Some(cap), options)?;
    let slow = hilbert_basis_bruteforce(system, cap, options.budget)?;
    Ok(fast.elements() == slow.elements())
}

/// `count` random systems with `1 <= r <= 5` and modulus `0..=10`.
pub fn random_systems(seed: u64, count: usize) -> Vec<CongruenceSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = rng.gen_range(1..=5);
            let modulus = rng.gen_range(0..=10u64);
            let span = if modulus == 0 { 5 } else { 10 };
            let weights = (0..r).map(|_| rng.gen_range(-span..=span)).collect();
            CongruenceSystem::new(weights, modulus).expect("nonempty weights")
        })
        .collect()
}

fn oracle(rec: &mut Recorder, max: u32, config: &VerifyConfig) {
    rec.check("kac-systems", || {
        let mut bad = Vec::new();
        for n in 2..=max as u64 {
            if !compare_with_oracle(&CongruenceSystem::kac(n)?, &config.options)? {
                bad.push(n);
            }
        }
        Ok((bad.is_empty(), format!("kac_system(n) for 2 <= n <= {max}; mismatches {bad:?}")))
    });
    rec.check("random-systems", || {
        let systems = random_systems(config.seed, config.random_systems);
        let mut mismatched = 0;
        let mut first = None;
        for s in &systems {
            if !compare_with_oracle(s, &config.options)? {
                mismatched += 1;
                first.get_or_insert_with(|| format!("{:?} mod {}", s.weights(), s.modulus()));
            }
        }
        Ok((
            mismatched == 0,
            format!(
                "{} seeded systems (seed {}), {mismatched} mismatched{}",
                systems.len(),
                config.seed,
                first.map(|f| format!(", first {f}")).unwrap_or_default()
            ),
        ))
    });
}

fn harris_wehlau(rec: &mut Recorder, max: u32, config: &VerifyConfig) {
    rec.check("exact-counts", || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for n in 2..=max as u64 {
            let basis = hilbert_basis_with(&CongruenceSystem::kac(n)?, Some(n as u32), &config.options)?;
            for k in arith::harris_wehlau_threshold(n)..=n {
                let expected: Count = arith::harris_wehlau_count(n, k)?;
                checked += 1;
                if Count::from(basis.count_in_degree(k as u32)) != expected {
                    bad.push((n, k));
                }
            }
        }
        Ok((bad.is_empty(), format!("{checked} pairs (n, k), 2 <= n <= {max}; mismatches {bad:?}")))
    });
    rec.check("even-excess", || {
        let mut excess = Vec::new();
        let mut ok = true;
        for n in (6..=max as u64).step_by(2) {
            let k = n / 2 + 1;
            let basis = hilbert_basis_with(&CongruenceSystem::kac(n)?, Some(k as u32), &config.options)?;
            let formula = arith::partition::<u128>((n - k) as usize)? * arith::totient(n)? as u128;
            let found = basis.count_in_degree(k as u32) as u128;
            ok &= found > formula;
            excess.push(format!("{n}:{found}>{formula}"));
        }
        Ok((ok, format!("at even n >= 6, degree n/2 + 1 exceeds p(n-k)·φ(n) [{}]", excess.join(" "))))
    });
}

fn olson(rec: &mut Recorder, max: u32, config: &VerifyConfig) {
    rec.check("zero-sum-free-bound", || {
        let mut worst = (0u64, 0u32);
        let mut bad = Vec::new();
        for n in 2..=max as u64 {
            let r = verify_olson(n, config.options.budget)?;
            if !r.pass {
                bad.push(n);
            }
            if r.max_zero_sum_free > worst.1 {
                worst = (n, r.max_zero_sum_free);
            }
        }
        Ok((
            bad.is_empty(),
            format!("max zero-sum-free < 3√n for 2 <= n <= {max}; largest {} at n = {}; failures {bad:?}", worst.1, worst.0),
        ))
    });
}

fn reciprocity(rec: &mut Recorder, max: u32, config: &VerifyConfig) {
    rec.check("fast-path", || {
        let r = sl2::reciprocity_check(max, max, config.options.workers)?;
        let first = r.violations.first().map(|v| format!(", first ({}, {})", v.n, v.d)).unwrap_or_default();
        Ok((r.holds(), format!("a_n(d) = a_d(n) for n, d <= {max}: {} pairs, {} violations{first}", r.checked, r.violations.len())))
    });
    rec.check("brute-force", || {
        let m = max.min(10);
        let mut bad = Vec::new();
        for n in 0..=m {
            for d in 0..=m {
                let fast: u64 = sl2::invariant_dim(n, d)?;
                if fast != sl2::invariant_dim_bruteforce(n, d, config.options.budget)? {
                    bad.push((n, d));
                }
            }
        }
        Ok((bad.is_empty(), format!("fast path equals weight enumeration for n, d <= {m}; mismatches {bad:?}")))
    });
}

fn dimension_facts(rec: &mut Recorder, max: u32) {
    rec.check("linear-forms", || {
        let bad: Vec<u32> = (1..=max).filter(|&d| sl2::invariant_dim::<Count>(1, d).map_or(true, |v| v != Count::from(0u8))).collect();
        Ok((bad.is_empty(), format!("a_1(d) = 0 for 1 <= d <= {max}; failures {bad:?}")))
    });
    rec.check("quadratic-forms", || {
        let bad: Vec<u32> = (1..=max)
            .filter(|&d| {
                let expected = Count::from(u8::from(d % 2 == 0));
                sl2::invariant_dim::<Count>(2, d).map_or(true, |v| v != expected)
            })
            .collect();
        Ok((bad.is_empty(), format!("a_2(d) = 1 iff d even for 1 <= d <= {max}; failures {bad:?}")))
    });
    rec.check("odd-weight", || {
        let mut bad = Vec::new();
        for n in 1..=max {
            for d in 1..=max {
                if n * d % 2 == 1 && sl2::invariant_dim::<Count>(n, d)? != Count::from(0u8) {
                    bad.push((n, d));
                }
            }
        }
        Ok((bad.is_empty(), format!("a_n(d) = 0 for odd nd, n, d <= {max}; failures {bad:?}")))
    });
}

/// Binary presets and `gm_standard` for `1 <= n <= max`.
fn presets(max: u32) -> Result<Vec<WeightSystem>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.push(WeightSystem::gm_standard(n)?);
        out.push(WeightSystem::binary(n)?);
    }
    Ok(out)
}

fn torus_bounds(rec: &mut Recorder, max: u32, config: &VerifyConfig) {
    rec.check("degree-bound", || {
        let mut bad = Vec::new();
        let mut checked = 0;
        for ws in presets(max)? {
            let w = ws.max_abs_weight();
            let basis = torus::generators(&ws, None, &config.options)?;
            checked += basis.len();
            let limit = if w >= 2 { 2 * w - 1 } else { 2 };
            if basis.max_degree() as u64 > limit {
                bad.push(ws.label().to_string());
            }
        }
        Ok((bad.is_empty(), format!("{checked} generators within 2·max|w| - 1 (2 when max|w| = 1); failures {bad:?}")))
    });
    rec.check("unit-weight-exception", || {
        let basis = torus::generators(&WeightSystem::binary_even(2)?, None, &config.options)?;
        let degree_two = basis.count_in_degree(2);
        Ok((degree_two == 1 && basis.max_degree() == 2, format!("binary_even(2) has {degree_two} generator of degree 2 > 2·1 - 1")))
    });
    rec.check("support-bound", || {
        let mut bad = Vec::new();
        for ws in presets(max)? {
            let basis = torus::generators(&ws, None, &config.options)?;
            for g in basis.elements() {
                let ok = match ws.label() {
                    torus::Preset::GmStandard(n) => {
                        let s = g.exponents()[..n as usize].iter().filter(|&&a| a > 0).count() as u64;
                        s * s < 9 * n as u64
                    }
                    _ => {
                        let (r, s) = torus::support_outside_extreme(&ws, g);
                        (s as u64).pow(2) < 36 * r.max(1)
                    }
                };
                if !ok {
                    bad.push(format!("{} {:?}", ws.label(), g.exponents()));
                }
            }
        }
        Ok((bad.is_empty(), format!("distinct-variable bounds 3√n and 2·3√r hold for n <= {max}; failures {bad:?}")))
    });
    rec.check("above-cap", || {
        let m = max.min(8);
        let mut bad = Vec::new();
        for ws in presets(m)? {
            let cap = ws.default_degree_cap();
            let wide = torus::generators(&ws, Some(2 * cap), &config.options)?;
            if wide.max_degree() > cap {
                bad.push(ws.label().to_string());
            }
        }
        for n in 2..=m as u64 {
            let wide = hilbert_basis_with(&CongruenceSystem::kac(n)?, Some(2 * n as u32), &config.options)?;
            if wide.max_degree() as u64 > n {
                bad.push(format!("kac({n})"));
            }
        }
        Ok((bad.is_empty(), format!("search to twice the cap finds nothing new for n <= {m}; failures {bad:?}")))
    });
}

fn theorem2(rec: &mut Recorder, max: u32, config: &VerifyConfig) {
    rec.check("binomial-bounds", || {
        let mut lines = Vec::new();
        let mut ok = true;
        for n in 1..=max {
            let r = torus::bound_report(&WeightSystem::binary(n)?, &config.options)?;
            let good = r.satisfied && r.envelope_ratio <= 1.0;
            ok &= good;
            lines.push(format!("n={n}:{}≤{}", r.aggregate_actual, r.aggregate_bound));
        }
        Ok((ok, format!("generator counts within per-degree bounds and envelope for 1 <= n <= {max} [{}]", lines.join(" "))))
    });
}

fn transport(rec: &mut Recorder, max: u32, config: &VerifyConfig) {
    rec.check("evaluation-bijection", || {
        let mut counts = Vec::new();
        let mut ok = true;
        for n in 2..=max {
            let r = torus::evaluation_transport(n, &config.options)?;
            ok &= r.torus_count == r.cyclic_count && r.image_counts_by_degree == r.cyclic_counts_by_degree;
            counts.push(format!("{n}:{}", r.cyclic_count));
        }
        Ok((ok, format!("gm_standard(n) ↔ (1..n) mod n for 2 <= n <= {max} [{}]", counts.join(" "))))
    });
}

fn growth(rec: &mut Recorder, max: u32, config: &VerifyConfig) {
    let fit_from = 50.min(max);
    let report = sl2::growth_diagnostic(6, max, Some(fit_from), config.options.workers);
    rec.check("slope", || {
        let r = report.clone()?;
        let slope = r.slope.ok_or_else(|| Error::param("too few samples for a fit"))?;
        Ok(((slope - 3.0).abs() <= 0.3, format!("d = 6, {} <= n <= {max}: slope {slope:.6}", fit_from)))
    });
    rec.check("lower-bound-positive", || {
        let r = report.clone()?;
        let bad: Vec<u32> = r.fit_samples().filter(|s| s.lower_bound <= Integer::from(0)).map(|s| s.n).collect();
        Ok((bad.is_empty(), format!("generator lower bound > 0 for {} <= n <= {max}; failures {bad:?}", fit_from)))
    });
}

fn kac(rec: &mut Recorder, max: u32) {
    rec.check("lower-bound-values", || {
        let mut cache = PartitionCache::<u128>::new();
        let mut bad = Vec::new();
        for n in (3..=max).step_by(2) {
            let m = n - 2;
            let expected = cache.get(m as usize)? + arith::totient(m as u64)? as u128 - 1;
            let big: Count = sl2::kac_lower_bound(n)?;
            if big != Count::from(expected) {
                bad.push(n);
            }
        }
        let five: Count = sl2::kac_lower_bound(5)?;
        Ok((bad.is_empty() && five == Count::from(4u8), format!("odd 3 <= n <= {max}, value at 5 is {five}; mismatches {bad:?}")))
    });
}

fn hardy_ramanujan(rec: &mut Recorder, max: u32) {
    rec.check("ratio", || {
        let hi = max.max(2) as u64;
        let lo = (hi / 10).max(1);
        let r_hi = arith::hardy_ramanujan_ratio(hi)?;
        let r_lo = arith::hardy_ramanujan_ratio(lo)?;
        let ok = (0.95..=1.05).contains(&r_hi) && (r_hi - 1.0).abs() < (r_lo - 1.0).abs();
        Ok((ok, format!("p(k)/HR(k) = {r_hi:.6} at k = {hi}, {r_lo:.6} at k = {lo}")))
    });
}

fn weyl_suite(rec: &mut Recorder, max: u32) {
    let presets = [RootSystem::a1(), RootSystem::a2(), RootSystem::b2(), RootSystem::g2()];
    rec.check("integrality", || {
        let mut evaluated = 0;
        for rs in &presets {
            for coords in dominant_coordinates(rs.rank(), 3) {
                let lambda = rs.weight_from_fundamental(&coords)?;
                for n in 0..=max as u64 {
                    weyl::weyl_dimension(rs, &lambda, n)?;
                    evaluated += 1;
                }
            }
        }
        Ok((true, format!("{evaluated} evaluations integral for coordinates <= 3, n <= {max}")))
    });
    rec.check("sl2-dimension", || {
        let a1 = RootSystem::a1();
        let omega = a1.weight_from_fundamental(&[1])?;
        let bad: Vec<u64> = (0..=max as u64)
            .filter(|&n| weyl::weyl_dimension(&a1, &omega, n).map_or(true, |v| v != Integer::from(n + 1)))
            .collect();
        Ok((bad.is_empty(), format!("dim V_(nω) = n + 1 for A1, n <= {max}; failures {bad:?}")))
    });
    rec.check("degree-law", || {
        let mut bad = Vec::new();
        for rs in &presets {
            for coords in dominant_coordinates(rs.rank(), 3) {
                let lambda = rs.weight_from_fundamental(&coords)?;
                let poly = weyl::dimension_polynomial(rs, &lambda)?;
                // degree equals the number of positive roots not orthogonal to λ
                let expected = rs.positive_roots().iter().filter(|a| rs.pairing(&lambda, a).is_ok_and(|p| p != Ratio::from(Integer::from(0)))).count();
                let agrees = (0..=10u64).all(|n| match (poly.evaluate(n), weyl::weyl_dimension(rs, &lambda, n)) {
                    (Ok(p), Ok(v)) => p == Ratio::from_integer(v),
                    _ => false,
                });
                if poly.degree() != expected || poly.degree() > rs.positive_root_count() || !agrees {
                    bad.push(format!("{} {coords:?}", rs.name()));
                }
            }
        }
        Ok((bad.is_empty(), format!("polynomial degree = #{{α > 0 : (λ, α) ≠ 0}} <= r on presets; failures {bad:?}")))
    });
}

/// All coordinate vectors in `0..=top` of the given length.
fn dominant_coordinates(rank: usize, top: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|v| (0..=top).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(parse_selection("all").unwrap().len(), 12);
    }

    #[test]
    fn random_systems_are_seeded() {
        let a = random_systems(7, 20);
        assert_eq!(a, random_systems(7, 20));
        assert_ne!(a, random_systems(8, 20));
        assert!(a.iter().all(|s| s.rank() <= 5 && s.modulus() <= 10));
    }

    #[test]
    fn small_run_passes_and_renders() {
        let config = VerifyConfig { max_n: Some(6), random_systems: 10, ..VerifyConfig::default() };
        let suites = [Suite::Oracle, Suite::Olson, Suite::DimensionFacts, Suite::Kac, Suite::Weyl];
        let report = run(&suites, &config);
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.render(), run(&suites, &config).render());
        assert!(report.render().ends_with(&format!("PASS {0}/{0} checks\n", report.checks.len())));
    }

    #[test]
    fn failures_are_reported() {
        let config = VerifyConfig { options: SearchOptions::default().with_budget(10), ..VerifyConfig::default() };
        let report = run(&[Suite::Olson], &config);
        assert!(!report.passed());
        assert!(report.render().starts_with("FAIL olson/"));
    }
}
