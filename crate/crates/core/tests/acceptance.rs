//! Acceptance criteria 1–13. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion.
//!
//! Two criteria are stated over a range where the underlying claim is false.
//! They are evaluated literally and print FAIL, but the run only exits
//! nonzero when the failing cases differ from the known counterexamples or
//! when the corrected statement fails too.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gencount::arith;
use gencount::congruence::{hilbert_basis_bruteforce, hilbert_basis_with, max_zero_sum_free, CongruenceSystem, SearchOptions};
use gencount::sl2;
use gencount::torus::{self, Preset, WeightSystem};
use gencount::verify::{self, Suite, VerifyConfig};
use gencount::weyl;
use gencount::{Count, Integer, RootSystem};
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

const SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;

enum Verdict {
    Pass(String),
    /// The literal criterion fails exactly on the known counterexamples.
    Known(String),
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// ---------------------------------------------------------------- oracles

/// Partition numbers by the coin-change recurrence.
fn oracle_partitions(max: usize) -> Vec<u128> {
    let mut p = vec![0u128; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for k in part..=max {
            p[k] += p[k - part];
        }
    }
    p
}

/// Euler's totient by counting units.
fn oracle_totient(k: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=k).filter(|&j| gcd(j, k) == 1).count() as u64
}

/// Partitions of `w` with at most `parts` parts, each at most `top`.
fn oracle_box_partitions(w: u32, parts: u32, top: u32) -> u64 {
    if w == 0 {
        return 1;
    }
    if parts == 0 || top == 0 {
        return 0;
    }
    (1..=top.min(w)).map(|largest| oracle_box_partitions(w - largest, parts - 1, largest)).sum()
}

/// `a_n(d)` as weight-0 minus weight-2 multiplicity of `S^d(V_n)`.
fn oracle_invariant_dim(n: u32, d: u32) -> i64 {
    if n * d % 2 == 1 {
        return 0;
    }
    let w = n * d / 2;
    let zero = oracle_box_partitions(w, d, n) as i64;
    let two = if w == 0 { 0 } else { oracle_box_partitions(w - 1, d, n) as i64 };
    zero - two
}

fn oracle_binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

// ---------------------------------------------------------------- criteria

fn c1_oracle_equivalence() -> Outcome {
    let options = SearchOptions::default();
    let same = |s: &CongruenceSystem| -> Result<bool, String> {
        let cap = s.default_degree_cap();
        let fast = hilbert_basis_with(s, Some(cap), &options).map_err(err)?;
        let slow = hilbert_basis_bruteforce(s, cap, options.budget).map_err(err)?;
        Ok(fast.elements() == slow.elements())
    };
    for n in 2..=12 {
        let s = CongruenceSystem::kac(n).map_err(err)?;
        ensure(same(&s)?, || format!("kac_system({n}) differs from the oracle"))?;
    }
    let systems = verify::random_systems(SEED, 200);
    ensure(systems.iter().all(|s| s.rank() <= 5 && s.modulus() <= 10), || "random system out of range".into())?;
    for s in &systems {
        ensure(same(s)?, || format!("{:?} mod {} differs from the oracle", s.weights(), s.modulus()))?;
    }
    Ok(format!("kac_system(2..=12) and {} random systems match exactly", systems.len()))
}

fn c2_harris_wehlau() -> Result<Verdict, String> {
    let p = oracle_partitions(20);
    let mut pairs = 0;
    let mut literal_failures = Vec::new();
    for n in 2..=20u64 {
        let basis = hilbert_basis_with(&CongruenceSystem::kac(n).map_err(err)?, Some(n as u32), &SearchOptions::default())
            .map_err(err)?;
        for k in n.div_ceil(2) + 1..=n {
            let expected = p[(n - k) as usize] * oracle_totient(n) as u128;
            let found = basis.count_in_degree(k as u32) as u128;
            pairs += 1;
            if found != expected {
                // the only tolerated shape: even n >= 6 at k = n/2 + 1, with a surplus
                ensure(n % 2 == 0 && n >= 6 && k == n / 2 + 1 && found > expected, || {
                    format!("n = {n}, k = {k}: {found} != p(n-k)·φ(n) = {expected}")
                })?;
                literal_failures.push(format!("({n},{k}):{found}>{expected}"));
            }
        }
    }
    if literal_failures.is_empty() {
        return Ok(Verdict::Pass(format!("{pairs} (n, k) pairs equal p(n-k)·φ(n)")));
    }
    ensure(literal_failures.len() == 8, || format!("unexpected failure set {literal_failures:?}"))?;
    Ok(Verdict::Known(format!(
        "{} of {pairs} pairs differ, all at even n >= 6 and k = n/2 + 1 [{}]; the count holds for every k >= n/2 + 2",
        literal_failures.len(),
        literal_failures.join(" ")
    )))
}

fn c3_olson() -> Outcome {
    let mut largest = 0;
    for n in 2..=40u64 {
        let m = max_zero_sum_free(n).map_err(err)? as u64;
        ensure(m * m < 9 * n, || format!("n = {n}: zero-sum-free set of size {m} >= 3√n"))?;
        largest = largest.max(m);
    }
    Ok(format!("max zero-sum-free < 3√n for 2 <= n <= 40 (largest {largest})"))
}

fn c4_reciprocity() -> Outcome {
    for n in 1..=40 {
        for d in 1..=40 {
            let a: Count = sl2::invariant_dim(n, d).map_err(err)?;
            let b: Count = sl2::invariant_dim(d, n).map_err(err)?;
            ensure(a == b, || format!("a_{n}({d}) = {a} but a_{d}({n}) = {b}"))?;
        }
    }
    let report = sl2::reciprocity_check(40, 40, 4).map_err(err)?;
    ensure(report.holds(), || format!("{} violations reported", report.violations.len()))?;
    for n in 0..=10 {
        for d in 0..=10 {
            let fast: u64 = sl2::invariant_dim(n, d).map_err(err)?;
            let brute = sl2::invariant_dim_bruteforce(n, d, 100_000_000).map_err(err)?;
            let independent = oracle_invariant_dim(n, d);
            ensure(fast == brute && fast as i64 == independent, || {
                format!("a_{n}({d}): fast {fast}, enumeration {brute}, box partitions {independent}")
            })?;
        }
    }
    Ok("symmetric on 1..=40 squared; fast path equals enumeration for n, d <= 10".into())
}

fn c5_dimension_facts() -> Outcome {
    for d in 1..=40 {
        let a1: Count = sl2::invariant_dim(1, d).map_err(err)?;
        ensure(a1.is_zero(), || format!("a_1({d}) = {a1}"))?;
        let a2: Count = sl2::invariant_dim(2, d).map_err(err)?;
        ensure(a2 == Count::from(u8::from(d % 2 == 0)), || format!("a_2({d}) = {a2}"))?;
    }
    for n in 1..=40u32 {
        for d in (1..=40u32).filter(|d| n * d % 2 == 1) {
            let a: Count = sl2::invariant_dim(n, d).map_err(err)?;
            ensure(a.is_zero(), || format!("a_{n}({d}) = {a} with nd odd"))?;
        }
    }
    Ok("a_1 = 0, a_2(d) = [d even], a_n(d) = 0 for odd nd".into())
}

fn c6_degree_and_support() -> Result<Verdict, String> {
    let options = SearchOptions::default();
    let mut generators = 0;
    let mut literal_failures = Vec::new();
    for n in 1..=12 {
        for ws in [WeightSystem::gm_standard(n).map_err(err)?, WeightSystem::binary(n).map_err(err)?] {
            let w = ws.max_abs_weight();
            let basis = torus::generators(&ws, None, &options).map_err(err)?;
            generators += basis.len();
            if basis.max_degree() as u64 > 2 * w - 1 {
                // with max|w| = 1 the product x_1 x_{-1} has degree 2 = 2W
                ensure(w == 1 && basis.max_degree() == 2, || format!("{} reaches degree {}", ws.label(), basis.max_degree()))?;
                literal_failures.push(ws.label().to_string());
            }
            for g in basis.elements() {
                match ws.label() {
                    Preset::GmStandard(m) => {
                        let s = g.exponents()[..m as usize].iter().filter(|&&a| a > 0).count() as u64;
                        ensure(s * s < 9 * m as u64, || format!("{}: {:?} uses {s} >= 3√n residues", ws.label(), g.exponents()))?;
                    }
                    _ => {
                        let (r, s) = torus::support_outside_extreme(&ws, g);
                        ensure(s == 0 || (s as u64).pow(2) < 36 * r, || {
                            format!("{}: {:?} uses {s} >= 2·3√r variables", ws.label(), g.exponents())
                        })?;
                    }
                }
            }
        }
    }

    for n in 1..=8 {
        for ws in [WeightSystem::gm_standard(n).map_err(err)?, WeightSystem::binary(n).map_err(err)?] {
            let cap = ws.default_degree_cap();
            let wide = torus::generators(&ws, Some(2 * cap), &options).map_err(err)?;
            ensure(wide.max_degree() <= cap, || format!("{} has a generator above {cap}", ws.label()))?;
            // exhaustive listing where the box is small enough
            let r = ws.weights().len() as u64;
            if oracle_binomial(r + 2 * cap as u64, r) <= 3_000_000 {
                let brute = hilbert_basis_bruteforce(&ws.system(), 2 * cap, 10_000_000).map_err(err)?;
                ensure(brute.max_degree() <= cap, || format!("{}: brute force finds degree {}", ws.label(), brute.max_degree()))?;
            }
        }
        let kac = CongruenceSystem::kac(n as u64 + 1).map_err(err)?;
        let brute = hilbert_basis_bruteforce(&kac, 2 * (n + 1), 50_000_000).map_err(err)?;
        ensure(brute.max_degree() <= n + 1, || format!("kac_system({}) has degree {}", n + 1, brute.max_degree()))?;
    }
    let summary = format!("{generators} preset generators; support bounds hold; nothing above the cap up to 2× cap");
    if literal_failures.is_empty() {
        return Ok(Verdict::Pass(summary));
    }
    ensure(literal_failures.len() == 3, || format!("unexpected failure set {literal_failures:?}"))?;
    Ok(Verdict::Known(format!(
        "2·max|w| - 1 fails only where max|w| = 1, each reaching degree 2 via x_1 x_-1 [{}]; {summary}",
        literal_failures.join(" ")
    )))
}

fn c7_theorem2() -> Outcome {
    let mut summary = Vec::new();
    for n in 1..=12 {
        let ws = WeightSystem::binary(n).map_err(err)?;
        let report = torus::bound_report(&ws, &SearchOptions::default()).map_err(err)?;
        let r = ws.max_abs_weight();
        let vars = 2 * r;
        let s = ((36 * r) as f64).sqrt().floor() as u64;
        let s = s.min(vars);
        let bound: u128 = (1..=report.complete_to_degree as u64)
            .map(|d| oracle_binomial(vars, s) * oracle_binomial(s + d - 1, s - 1))
            .sum();
        ensure(report.aggregate_bound == Count::from(bound), || format!("n = {n}: bound {} != {bound}", report.aggregate_bound))?;
        ensure((report.aggregate_actual as u128) <= bound && report.satisfied, || format!("n = {n}: {} > {bound}", report.aggregate_actual))?;
        ensure(report.envelope_ratio <= 1.0, || format!("n = {n}: envelope ratio {}", report.envelope_ratio))?;
        summary.push(format!("{n}:{}", report.aggregate_actual));
    }
    Ok(format!("counts within bounds and envelope [{}]", summary.join(" ")))
}

fn c8_transport() -> Outcome {
    for n in 2..=10u32 {
        let r = torus::evaluation_transport(n, &SearchOptions::default()).map_err(err)?;
        ensure(r.torus_count == r.cyclic_count, || format!("n = {n}: {} vs {}", r.torus_count, r.cyclic_count))?;
        ensure(r.image_counts_by_degree == r.cyclic_counts_by_degree, || format!("n = {n}: degree counts differ"))?;
        for (g, image) in &r.pairs {
            let forgotten = g.exponents()[n as usize];
            ensure(g.degree() == image.degree() + forgotten, || format!("n = {n}: {:?} maps badly", g.exponents()))?;
        }
    }
    Ok("gm_standard(n) and (1..n) mod n agree degree by degree for 2 <= n <= 10".into())
}

fn c9_growth() -> Outcome {
    let report = sl2::growth_diagnostic(6, 200, Some(50), 4).map_err(err)?;
    let points: Vec<(f64, f64)> = report
        .samples
        .iter()
        .filter(|s| s.n >= 50)
        .map(|s| ((s.n as f64).ln(), s.dim.to_f64().unwrap().ln()))
        .collect();
    ensure(points.len() == 151, || format!("{} fit samples", points.len()))?;
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let slope = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>() / points.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    ensure((slope - 3.0).abs() <= 0.3, || format!("slope {slope}"))?;
    ensure(report.slope.is_some_and(|s| (s - slope).abs() < 1e-9), || format!("library slope {:?} vs {slope}", report.slope))?;
    for s in report.samples.iter().filter(|s| s.n >= 50) {
        ensure(s.lower_bound > Integer::zero(), || format!("lower bound at n = {} is {}", s.n, s.lower_bound))?;
    }
    Ok(format!("slope {slope:.4} on 50 <= n <= 200; lower bound positive"))
}

fn c10_kac() -> Outcome {
    let p = oracle_partitions(99);
    for n in (3..=101u32).step_by(2) {
        let m = (n - 2) as usize;
        let expected = p[m] + oracle_totient(m as u64) as u128 - 1;
        let value: Count = sl2::kac_lower_bound(n).map_err(err)?;
        ensure(value == Count::from(expected), || format!("n = {n}: {value} != {expected}"))?;
    }
    let five: Count = sl2::kac_lower_bound(5).map_err(err)?;
    ensure(five == Count::from(4u8), || format!("value at 5 is {five}"))?;
    Ok("odd 3 <= n <= 101 reproduced; value 4 at n = 5".into())
}

fn c11_hardy_ramanujan() -> Outcome {
    let p = oracle_partitions(1000);
    let hr = |k: f64| (std::f64::consts::PI * (2.0 * k / 3.0).sqrt()).exp() / (4.0 * k * 3f64.sqrt());
    let ratio_at = |k: usize| p[k] as f64 / hr(k as f64);
    let (r100, r1000) = (ratio_at(100), ratio_at(1000));
    ensure((0.95..=1.05).contains(&r1000), || format!("ratio at 1000 is {r1000}"))?;
    ensure((r1000 - 1.0).abs() < (r100 - 1.0).abs(), || format!("{r1000} not closer to 1 than {r100}"))?;
    let lib = arith::hardy_ramanujan_ratio(1000).map_err(err)?;
    ensure((lib - r1000).abs() < 1e-9, || format!("library ratio {lib} vs {r1000}"))?;
    Ok(format!("p/HR = {r100:.5} at 100, {r1000:.5} at 1000"))
}

fn c12_weyl() -> Outcome {
    let presets = [RootSystem::a1(), RootSystem::a2(), RootSystem::b2(), RootSystem::g2()];
    let mut evaluations = 0;
    for rs in &presets {
        let mut coords = vec![vec![]];
        for _ in 0..rs.rank() {
            coords = coords.into_iter().flat_map(|v: Vec<i64>| (0..=3).map(move |c| [v.clone(), vec![c]].concat())).collect();
        }
        for c in coords {
            let lambda = rs.weight_from_fundamental(&c).map_err(err)?;
            let poly = weyl::dimension_polynomial(rs, &lambda).map_err(err)?;
            let moving = rs.positive_roots().iter().filter(|a| !rs.pairing(&lambda, a).unwrap().is_zero()).count();
            ensure(poly.degree() == moving && moving <= rs.positive_root_count(), || {
                format!("{} {c:?}: degree {} vs {moving}", rs.name(), poly.degree())
            })?;
            for n in 0..=50 {
                let v = weyl::weyl_dimension(rs, &lambda, n).map_err(err)?;
                ensure(poly.evaluate(n).map_err(err)? == Ratio::from_integer(v.clone()), || format!("{} {c:?} n = {n}", rs.name()))?;
                evaluations += 1;
            }
        }
    }
    let a1 = RootSystem::a1();
    let omega = a1.weight_from_fundamental(&[1]).map_err(err)?;
    for n in 0..=50u64 {
        let v = weyl::weyl_dimension(&a1, &omega, n).map_err(err)?;
        ensure(v == Integer::from(n + 1), || format!("A1 at n = {n}: {v}"))?;
    }
    Ok(format!("{evaluations} integral evaluations; A1 gives n + 1; degree law holds"))
}

fn c13_determinism() -> Outcome {
    let config = |workers| VerifyConfig { options: SearchOptions::default().with_workers(workers), ..VerifyConfig::default() };
    let first = verify::run(&Suite::ALL, &config(8));
    let second = verify::run(&Suite::ALL, &config(8));
    let serial = verify::run(&Suite::ALL, &config(1));
    ensure(first.passed(), || format!("verify all failed:\n{}", first.render()))?;
    ensure(first.render() == second.render(), || "two 8-worker runs differ".into())?;
    ensure(first.render() == serial.render(), || "1-worker and 8-worker runs differ".into())?;
    Ok(format!("{} checks, byte-identical across three runs", first.checks.len()))
}

fn pass(f: fn() -> Outcome) -> Result<Verdict, String> {
    f().map(Verdict::Pass)
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Duration, fn() -> Result<Verdict, String>);
    let criteria: [Criterion; 13] = [
        (1, "oracle equivalence", Duration::from_secs(120), || pass(c1_oracle_equivalence)),
        (2, "Harris–Wehlau counts", Duration::from_secs(300), c2_harris_wehlau),
        (3, "Olson bound", Duration::from_secs(600), || pass(c3_olson)),
        (4, "reciprocity", Duration::from_secs(120), || pass(c4_reciprocity)),
        (5, "dimension facts", Duration::from_secs(30), || pass(c5_dimension_facts)),
        (6, "degree and support bounds", Duration::from_secs(600), c6_degree_and_support),
        (7, "generator count bounds", Duration::from_secs(600), || pass(c7_theorem2)),
        (8, "evaluation transport", Duration::from_secs(120), || pass(c8_transport)),
        (9, "growth exponent", Duration::from_secs(120), || pass(c9_growth)),
        (10, "Kac lower bound", Duration::from_secs(30), || pass(c10_kac)),
        (11, "Hardy–Ramanujan", Duration::from_secs(30), || pass(c11_hardy_ramanujan)),
        (12, "Weyl formula", Duration::from_secs(30), || pass(c12_weyl)),
        (13, "determinism", Duration::MAX, || pass(c13_determinism)),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (mut failed, mut known) = (0, 0);
    for (id, name, limit, run) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|v| {
            if elapsed <= limit {
                Ok(v)
            } else {
                Err(format!("took {elapsed:.1?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(Verdict::Pass(msg)) => println!("PASS criterion {id:>2} ({name}): {msg} [{elapsed:.2?}]"),
            Ok(Verdict::Known(msg)) => {
                known += 1;
                println!("FAIL criterion {id:>2} ({name}) [known counterexample]: {msg} [{elapsed:.2?}]");
            }
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {id:>2} ({name}): {msg} [{elapsed:.2?}]");
            }
        }
    }
    println!("{failed} unexpected failure(s), {known} known counterexample(s)");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
