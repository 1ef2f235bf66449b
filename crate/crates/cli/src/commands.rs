use std::path::Path;
use std::time::Duration;

use gencount::congruence::{hilbert_basis_with, CongruenceSystem, SearchOptions};
use gencount::torus::{self, WeightSystem};
use gencount::verify::{self, VerifyConfig};
use gencount::{sl2, weyl, Count, Error, Integer, Rational, RootSystem};
use num_bigint::Sign;
use serde_json::json;

use crate::output::{Output, Table};

/// Everything that ends a run with a nonzero status.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Io(std::io::Error),
    /// The verification report was produced and contains failures.
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parameter(_) | Error::Domain(_) | Error::Dimension { .. }) => 2,
            Failure::Core(Error::Budget { .. }) => 3,
            Failure::Core(Error::Consistency(_)) => 4,
            Failure::Core(Error::Overflow(_)) | Failure::Io(_) | Failure::Verify => 1,
        }
    }
}

fn warn(msg: &str) {
    eprintln!("warning: {msg}");
}

fn exponents_table(rank: usize, elements: &[gencount::ExponentVector]) -> Table {
    let mut t = Table::new(std::iter::once("degree".to_string()).chain((1..=rank).map(|i| format!("x{i}"))));
    for e in elements {
        t.push(std::iter::once(e.degree().to_string()).chain(e.exponents().iter().map(u32::to_string)).collect());
    }
    t
}

pub fn hilbert_basis(weights: Vec<i64>, modulus: u64, cap: Option<u32>, options: &SearchOptions) -> Result<Output, Failure> {
    let system = CongruenceSystem::new(weights, modulus)?;
    if modulus == 0 && system.is_one_sided() {
        warn("weights do not take both signs; only zero-weight coordinates give solutions");
    }
    if modulus > 0 && cap.is_none() && !system.is_kac() {
        warn(&format!("degree cap {modulus} is carried over from Kac systems and is not proven for these weights"));
    }
    let basis = hilbert_basis_with(&system, cap, options)?;
    let preface = vec![format!(
        "weights {:?} mod {}: {} elements, complete to degree {}",
        system.weights(),
        modulus,
        basis.len(),
        basis.complete_to_degree()
    )];
    Ok(Output::with_json_text(basis.to_json() + "\n", exponents_table(system.rank(), basis.elements()), &preface))
}

pub fn binary_forms(n: u32, options: &SearchOptions) -> Result<Output, Failure> {
    let ws = WeightSystem::binary(n)?;
    let report = torus::bound_report(&ws, options)?;
    let mut table = Table::new(["degree", "generators", "bound"]);
    for row in &report.rows {
        table.push(vec![row.degree.to_string(), row.actual.to_string(), row.bound.to_string()]);
    }
    let json = json!({
        "preset": report.preset.to_string(),
        "n": report.n,
        "weights": ws.weights(),
        "complete_to_degree": report.complete_to_degree,
        "generators": report.aggregate_actual,
        "aggregate_bound": report.aggregate_bound.to_string(),
        "envelope": report.envelope,
        "envelope_ratio": report.envelope_ratio,
        "satisfied": report.satisfied,
        "rows": report.rows.iter().map(|r| json!({
            "degree": r.degree,
            "generators": r.actual,
            "bound": r.bound.to_string(),
        })).collect::<Vec<_>>(),
    });
    let preface = vec![
        format!("{} with weights {:?}", report.preset, ws.weights()),
        format!("generators: {} (complete to degree {})", report.aggregate_actual, report.complete_to_degree),
        format!("summed per-degree bound: {}", report.aggregate_bound),
        format!("envelope: {:e}, ratio {:e}", report.envelope, report.envelope_ratio),
        format!("satisfied: {}", report.satisfied),
    ];
    Ok(Output::new(json, table, &preface))
}

fn clamp_display(v: &Integer) -> String {
    if v.sign() == Sign::Minus {
        "0".into()
    } else {
        v.to_string()
    }
}

pub fn sl2_table(n_max: u32, d_max: u32, workers: usize) -> Result<Output, Failure> {
    if n_max < 1 {
        return Err(Error::Parameter("--n-max must be at least 1".into()).into());
    }
    let table = sl2::SeriesTable::<Count>::compute(1..=n_max, 0..=d_max, workers)?;
    let reciprocity = sl2::reciprocity_check(n_max, d_max, workers)?;
    if let Some(v) = reciprocity.violations.first() {
        return Err(Error::Consistency(format!(
            "reciprocity fails at (n, d) = ({}, {}): a_n(d) = {}, a_d(n) = {}",
            v.n, v.d, v.a_n_d, v.a_d_n
        ))
        .into());
    }

    let mut csv = Table::new(["n", "d", "dim", "lower_bound"]);
    let mut rows_json = Vec::new();
    let mut dims_text = Table::new(std::iter::once("n\\d".to_string()).chain((0..=d_max).map(|d| d.to_string())));
    let mut lb_text = Table::new(std::iter::once("n\\d".to_string()).chain((1..=d_max).map(|d| d.to_string())));
    for (n, dims) in table.rows() {
        let lower: Vec<Integer> = (1..=d_max).map(|d| sl2::generator_lower_bound::<Count>(n, d)).collect::<Result<_, _>>()?;
        for (d, dim) in (0..=d_max).zip(dims) {
            let lb = if d == 0 { String::new() } else { lower[d as usize - 1].to_string() };
            csv.push(vec![n.to_string(), d.to_string(), dim.to_string(), lb]);
        }
        dims_text.push(std::iter::once(n.to_string()).chain(dims.iter().map(Count::to_string)).collect());
        lb_text.push(std::iter::once(n.to_string()).chain(lower.iter().map(clamp_display)).collect());
        rows_json.push(json!({
            "n": n,
            "dims": dims.iter().map(Count::to_string).collect::<Vec<_>>(),
            "lower_bounds": lower.iter().map(Integer::to_string).collect::<Vec<_>>(),
        }));
    }
    let json = json!({
        "n_max": n_max,
        "d_max": d_max,
        "d_start": 0,
        "lower_bound_d_start": 1,
        "rows": rows_json,
        "reciprocity": { "checked": reciprocity.checked, "violations": 0 },
    });
    let mut text = format!("a_n(d) for 1 <= n <= {n_max}, 0 <= d <= {d_max}\n\n{}", dims_text.to_text());
    if d_max >= 1 {
        text.push_str(&format!("\ngenerator lower bound (negative values shown as 0)\n\n{}", lb_text.to_text()));
    }
    text.push_str(&format!("\nreciprocity a_n(d) = a_d(n): {} pairs, no violations\n", reciprocity.checked));
    let mut out = Output::new(json, csv, &[]);
    out.text = text;
    Ok(out)
}

pub fn growth(d: u32, n_max: u32, fit_from: Option<u32>, plot_data: bool, workers: usize) -> Result<Output, Failure> {
    let report = sl2::growth_diagnostic(d, n_max, fit_from, workers)?;
    if plot_data {
        let text: String = report.plot_points().iter().map(|(x, y)| format!("{x:.12} {y:.12}\n")).collect();
        return Ok(Output::raw(text));
    }
    let mut table = Table::new(["n", "dim", "lower_bound", "dim_ratio", "lower_bound_ratio"]);
    for s in &report.samples {
        table.push(vec![
            s.n.to_string(),
            s.dim.to_string(),
            s.lower_bound.to_string(),
            format!("{:.9e}", s.dim_ratio),
            format!("{:.9e}", s.lower_bound_ratio),
        ]);
    }
    let json = json!({
        "d": d,
        "n_max": n_max,
        "fit_from": report.fit_range.start(),
        "slope": report.slope,
        "samples": report.samples.iter().map(|s| json!({
            "n": s.n,
            "dim": s.dim.to_string(),
            "lower_bound": s.lower_bound.to_string(),
            "dim_ratio": s.dim_ratio,
            "lower_bound_ratio": s.lower_bound_ratio,
        })).collect::<Vec<_>>(),
    });
    let slope = report.slope.map_or("n/a".to_string(), |s| format!("{s:.6}"));
    let preface = vec![format!(
        "d = {d}: slope of ln a_n(d) against ln n over {}..={} is {slope} (reference {})",
        report.fit_range.start(),
        report.fit_range.end(),
        d as i64 - 3
    )];
    Ok(Output::new(json, table, &preface))
}

pub fn verify(selection: &str, config: &VerifyConfig) -> Result<(Output, bool), Failure> {
    let suites = verify::parse_selection(selection)?;
    let report = verify::run(&suites, config);
    for c in &report.checks {
        eprintln!("{:>12.3?}  {}/{}", round_ms(c.elapsed), c.suite, c.name);
    }
    let mut table = Table::new(["suite", "check", "status", "detail"]);
    for c in &report.checks {
        table.push(vec![c.suite.to_string(), c.name.clone(), status(c.pass).into(), c.detail.clone()]);
    }
    let json = json!({
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| json!({
            "suite": c.suite.to_string(),
            "check": c.name,
            "pass": c.pass,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    });
    let mut out = Output::new(json, table, &[]);
    out.text = report.render();
    Ok((out, report.passed()))
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn round_ms(d: Duration) -> Duration {
    Duration::from_micros(d.as_micros() as u64)
}

pub enum WeylSource<'a> {
    Preset(&'a str),
    File(&'a Path),
}

pub enum WeylQuery {
    At(u64),
    Polynomial,
}

pub fn weyl(source: WeylSource, lambda: &[String], query: WeylQuery) -> Result<Output, Failure> {
    let (rs, weight) = match source {
        WeylSource::Preset(name) => {
            let rs = RootSystem::preset(name)?;
            let coords: Vec<i64> = lambda
                .iter()
                .map(|s| s.trim().parse().map_err(|_| Error::Parameter(format!("λ coordinate {s:?} is not an integer"))))
                .collect::<Result<_, _>>()?;
            let weight = rs.weight_from_fundamental(&coords)?;
            (rs, weight)
        }
        WeylSource::File(path) => {
            let text = std::fs::read_to_string(path)?;
            let rs = RootSystem::from_json(&text)?;
            let weight: Vec<Rational> = lambda.iter().map(|s| weyl::parse_rational_str(s)).collect::<Result<_, _>>()?;
            (rs, weight)
        }
    };
    let exponent = weyl::growth_exponent(&rs);
    let lambda_json: Vec<String> = lambda.iter().map(|s| s.trim().to_string()).collect();
    let header = format!(
        "{}: rank {}, {} positive roots, dim G = {}",
        rs.name(),
        rs.rank(),
        exponent.positive_roots,
        exponent.group_dimension
    );
    match query {
        WeylQuery::At(n) => {
            let dim = weyl::weyl_dimension(&rs, &weight, n)?;
            let json = json!({
                "root_system": rs.name(),
                "lambda": lambda_json,
                "n": n,
                "dimension": dim.to_string(),
                "positive_roots": exponent.positive_roots,
                "group_dimension": exponent.group_dimension,
            });
            let mut table = Table::new(["n", "dimension"]);
            table.push(vec![n.to_string(), dim.to_string()]);
            Ok(Output::new(json, table, &[header]))
        }
        WeylQuery::Polynomial => {
            let poly = weyl::dimension_polynomial(&rs, &weight)?;
            let coefficients: Vec<String> = poly.coefficients().iter().map(Rational::to_string).collect();
            let json = json!({
                "root_system": rs.name(),
                "lambda": lambda_json,
                "coefficients": coefficients,
                "degree": poly.degree(),
                "positive_roots": exponent.positive_roots,
                "group_dimension": exponent.group_dimension,
            });
            let mut table = Table::new(["power", "coefficient"]);
            for (k, c) in coefficients.iter().enumerate() {
                table.push(vec![k.to_string(), c.clone()]);
            }
            let preface = vec![header, format!("dim V_(nλ) has degree {} in n", poly.degree())];
            Ok(Output::new(json, table, &preface))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kind() {
        assert_eq!(Failure::Core(Error::Parameter("x".into())).exit_code(), 2);
        assert_eq!(Failure::Core(Error::Domain("x".into())).exit_code(), 2);
        assert_eq!(Failure::Core(Error::Dimension { expected: 1, found: 2 }).exit_code(), 2);
        assert_eq!(Failure::Core(Error::Budget { budget: 1, what: "x".into() }).exit_code(), 3);
        assert_eq!(Failure::Core(Error::Consistency("x".into())).exit_code(), 4);
        assert_eq!(Failure::Verify.exit_code(), 1);
    }

    #[test]
    fn negative_lower_bounds_are_clamped_for_display() {
        assert_eq!(clamp_display(&Integer::from(-3)), "0");
        assert_eq!(clamp_display(&Integer::from(7)), "7");
    }

    #[test]
    fn sl2_csv_keeps_raw_lower_bounds() {
        let out = sl2_table(4, 4, 1).unwrap();
        // a_4(4) = 1, a_4(2)^2 = 1, so the bound is 0; a_4(3) = 1 with nothing below it
        assert!(out.csv.rows.contains(&vec!["4".into(), "4".into(), "1".into(), "0".into()]));
        assert!(out.csv.rows.contains(&vec!["4".into(), "3".into(), "1".into(), "1".into()]));
        assert!(out.csv.rows.iter().all(|r| r[1] != "0" || r[3].is_empty()));
    }
}
