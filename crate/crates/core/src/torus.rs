//! Rank-1 torus invariants: the weight systems of binary forms and of `G_m`
//! on `k[x_1, ..., x_n, x_{-n}]`, the evaluation isomorphism onto cyclic
//! invariants, and binomial upper bounds on minimal generating sets.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::congruence::{hilbert_basis_with, CongruenceSystem, ExponentVector, HilbertBasis, SearchOptions};
use crate::error::{Error, Result};
use crate::Count;

/// Which weight system a [`WeightSystem`] was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    Generic,
    /// weights `1, 2, ..., n, -n`
    GmStandard(u32),
    /// odd `n`: weights `n, n-2, ..., 1, -1, ..., -n`
    BinaryOdd(u32),
    /// even `n`: weights `-n/2, ..., 0, ..., n/2`
    BinaryEven(u32),
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Generic => write!(f, "generic"),
            Preset::GmStandard(n) => write!(f, "gm_standard({n})"),
            Preset::BinaryOdd(n) => write!(f, "binary_odd({n})"),
            Preset::BinaryEven(n) => write!(f, "binary_even({n})"),
        }
    }
}

/// Torus weights of the coordinate variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<i64>,
    label: Preset,
}

impl WeightSystem {
    pub fn generic(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::param("weight list must be nonempty"));
        }
        Ok(WeightSystem { weights, label: Preset::Generic })
    }

    pub fn gm_standard(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::param("gm_standard needs n >= 1"));
        }
        let mut weights: Vec<i64> = (1..=n as i64).collect();
        weights.push(-(n as i64));
        Ok(WeightSystem { weights, label: Preset::GmStandard(n) })
    }

    pub fn binary_odd(n: u32) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::param(format!("binary_odd needs odd n, got {n}")));
        }
        let weights = (0..=n as i64).map(|i| n as i64 - 2 * i).collect();
        Ok(WeightSystem { weights, label: Preset::BinaryOdd(n) })
    }

    pub fn binary_even(n: u32) -> Result<Self> {
        if n == 0 || n % 2 == 1 {
            return Err(Error::param(format!("binary_even needs even n >= 2, got {n}")));
        }
        let h = n as i64 / 2;
        Ok(WeightSystem { weights: (-h..=h).collect(), label: Preset::BinaryEven(n) })
    }

    /// The binary-form system of degree `n`, by parity.
    pub fn binary(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("binary forms need degree n >= 1"));
        }
        if n % 2 == 1 { Self::binary_odd(n) } else { Self::binary_even(n) }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn label(&self) -> Preset {
        self.label
    }

    pub fn max_abs_weight(&self) -> u64 {
        self.weights.iter().map(|w| w.unsigned_abs()).max().unwrap_or(0)
    }

    /// `Σ w_i x_i = 0` over the integers.
    pub fn system(&self) -> CongruenceSystem {
        CongruenceSystem::new(self.weights.clone(), 0).expect("weight systems are nonempty")
    }

    /// Default degree cap `2·max|w| - 1`, raised to 2 when `max|w| = 1`
    /// where `x_1 x_{-1}` already has degree 2.
    pub fn default_degree_cap(&self) -> u32 {
        self.system().default_degree_cap()
    }
}

/// `generators(ws)`: minimal generating monomials of `k[x]^T`, i.e. the
/// Hilbert basis of `Σ w_i a_i = 0`.
pub fn generators(ws: &WeightSystem, degree_cap: Option<u32>, options: &SearchOptions) -> Result<HilbertBasis> {
    hilbert_basis_with(&ws.system(), degree_cap, options)
}

/// Generators of the raw even weight set `n, n-2, ..., -n` equal those of the
/// halved preset, coordinate for coordinate (after reordering).
pub fn raw_binary_even_consistency(n: u32, options: &SearchOptions) -> Result<bool> {
    let halved = WeightSystem::binary_even(n)?;
    let cap = halved.default_degree_cap();
    let raw = CongruenceSystem::new(halved.weights().iter().map(|w| 2 * w).collect(), 0)?;
    let a = generators(&halved, Some(cap), options)?;
    let b = hilbert_basis_with(&raw, Some(cap), options)?;
    Ok(a.elements() == b.elements())
}

/// The bijection induced by `f(x_1..x_n, x_{-n}) ↦ f(x_1..x_n, 1)` between
/// generators of `k[x_1..x_n, x_{-n}]^T` and of `k[x_1..x_n]^{Z_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportReport {
    pub n: u32,
    pub torus_count: usize,
    pub cyclic_count: usize,
    /// (torus generator, its image), ordered by the image
    pub pairs: Vec<(ExponentVector, ExponentVector)>,
    /// image degree ↦ number of torus generators
    pub image_counts_by_degree: BTreeMap<u32, usize>,
    pub cyclic_counts_by_degree: BTreeMap<u32, usize>,
}

pub fn evaluation_transport(n: u32, options: &SearchOptions) -> Result<TransportReport> {
    let torus = generators(&WeightSystem::gm_standard(n)?, None, options)?;
    let cyclic_system = CongruenceSystem::new((1..=n as i64).collect(), n as u64)?;
    let cyclic = hilbert_basis_with(&cyclic_system, None, options)?;

    let mut pairs: Vec<(ExponentVector, ExponentVector)> = torus
        .elements()
        .iter()
        .map(|g| {
            let image = ExponentVector::new(g.exponents()[..n as usize].to_vec())?;
            Ok((g.clone(), image))
        })
        .collect::<Result<_>>()?;
    pairs.sort_by(|a, b| a.1.cmp(&b.1));
    let mut image_counts_by_degree = BTreeMap::new();
    for (_, image) in &pairs {
        *image_counts_by_degree.entry(image.degree()).or_insert(0) += 1;
    }

    let images: Vec<&ExponentVector> = pairs.iter().map(|p| &p.1).collect();
    let targets: Vec<&ExponentVector> = cyclic.elements().iter().collect();
    let distinct: BTreeSet<&ExponentVector> = images.iter().copied().collect();
    if distinct.len() != images.len() || images != targets {
        return Err(Error::Consistency(format!(
            "evaluation map is not a bijection for n = {n}: {} torus generators, {} cyclic generators",
            torus.len(),
            cyclic.len()
        )));
    }
    Ok(TransportReport {
        n,
        torus_count: torus.len(),
        cyclic_count: cyclic.len(),
        pairs,
        image_counts_by_degree,
        cyclic_counts_by_degree: cyclic.counts_by_degree().clone(),
    })
}

/// `C(n, k)` exactly; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Support size and variable count behind the binomial bound of a preset.
fn support_parameters(ws: &WeightSystem) -> Result<(u64, u64)> {
    match ws.label() {
        Preset::GmStandard(n) => {
            let n = n as u64;
            Ok((n, isqrt(9 * n).min(n)))
        }
        Preset::BinaryOdd(_) | Preset::BinaryEven(_) => {
            let r = ws.max_abs_weight();
            // ⌊2·3√r⌋ = ⌊√(36r)⌋
            Ok((2 * r, isqrt(36 * r).min(2 * r)))
        }
        Preset::Generic => Err(Error::param("binomial bounds are defined for the named presets only")),
    }
}

fn isqrt(v: u64) -> u64 {
    let mut r = (v as f64).sqrt() as u64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// `C(vars, s)·C(s+d-1, s-1)`: choices of `s` variables times degree-`d`
/// monomials in them. For `gm_standard(n)`, `vars = n` and `s = ⌊3√n⌋`; for
/// binary presets `vars = 2r` and `s = ⌊2·3√r⌋` with `r = max|w|`. `s` is
/// clamped to `vars`. Degree 0 gives 1.
pub fn per_degree_upper_bound(ws: &WeightSystem, d: u32) -> Result<Count> {
    let (vars, s) = support_parameters(ws)?;
    if d == 0 {
        return Ok(Count::one());
    }
    if s == 0 {
        return Ok(Count::zero());
    }
    Ok(binomial(vars, s) * binomial(s + d as u64 - 1, s - 1))
}

/// Parity of a binary-form degree, selecting the envelope formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// `n·e^{6√n·ln 2n}` (odd) or `n·e^{12√(n/2)·ln n}` (even), with implied
/// constant 1, rounded upward by a relative `1e-12`.
pub fn theorem2_envelope(n: u32, parity: Parity) -> Result<f64> {
    let parity_ok = match parity {
        Parity::Odd => n % 2 == 1,
        Parity::Even => n % 2 == 0 && n > 0,
    };
    if n == 0 || !parity_ok {
        return Err(Error::param(format!("envelope parity {parity:?} does not match n = {n}")));
    }
    let nf = n as f64;
    let exponent = match parity {
        Parity::Odd => 6.0 * nf.sqrt() * (2.0 * nf).ln(),
        Parity::Even => 12.0 * (nf / 2.0).sqrt() * nf.ln(),
    };
    Ok(round_up(nf * exponent.exp()))
}

/// `e^{6√n·ln 2n}` for `k[x_1, ..., x_n, x_{-n}]^T`, constant 1, rounded up.
pub fn gm_envelope(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::param("gm envelope needs n >= 1"));
    }
    let nf = n as f64;
    Ok(round_up((6.0 * nf.sqrt() * (2.0 * nf).ln()).exp()))
}

fn round_up(v: f64) -> f64 {
    v * (1.0 + 1e-12)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundRow {
    pub degree: u32,
    pub actual: usize,
    pub bound: Count,
}

/// Exact generator counts of a preset against the binomial bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub preset: Preset,
    pub n: u32,
    pub complete_to_degree: u32,
    pub rows: Vec<BoundRow>,
    pub aggregate_actual: usize,
    /// sum of the per-degree bounds over `1..=complete_to_degree`
    pub aggregate_bound: Count,
    pub envelope: f64,
    /// `aggregate_actual / envelope`
    pub envelope_ratio: f64,
    pub satisfied: bool,
}

pub fn bound_report(ws: &WeightSystem, options: &SearchOptions) -> Result<BoundReport> {
    let (n, envelope) = match ws.label() {
        Preset::GmStandard(n) => (n, gm_envelope(n)?),
        Preset::BinaryOdd(n) => (n, theorem2_envelope(n, Parity::Odd)?),
        Preset::BinaryEven(n) => (n, theorem2_envelope(n, Parity::Even)?),
        Preset::Generic => return Err(Error::param("bound reports are defined for the named presets only")),
    };
    let basis = generators(ws, None, options)?;
    let cap = basis.complete_to_degree();
    let rows: Vec<BoundRow> = (1..=cap)
        .map(|degree| {
            Ok(BoundRow { degree, actual: basis.count_in_degree(degree), bound: per_degree_upper_bound(ws, degree)? })
        })
        .collect::<Result<_>>()?;
    let aggregate_actual = basis.len();
    let aggregate_bound: Count = rows.iter().map(|r| &r.bound).sum();
    let satisfied = rows.iter().all(|r| Count::from(r.actual) <= r.bound)
        && Count::from(aggregate_actual) <= aggregate_bound;
    Ok(BoundReport {
        preset: ws.label(),
        n,
        complete_to_degree: cap,
        rows,
        aggregate_actual,
        envelope_ratio: aggregate_actual.to_f64().unwrap_or(f64::INFINITY) / envelope,
        aggregate_bound,
        envelope,
        satisfied,
    })
}

/// Distinct variables of a generator other than those carrying its extreme
/// weight `±r`, where `r` is the largest `|w|` it involves.
pub fn support_outside_extreme(ws: &WeightSystem, g: &ExponentVector) -> (u64, usize) {
    let r = g
        .exponents()
        .iter()
        .zip(ws.weights())
        .filter(|(&a, _)| a > 0)
        .map(|(_, w)| w.unsigned_abs())
        .max()
        .unwrap_or(0);
    let count = g
        .exponents()
        .iter()
        .zip(ws.weights())
        .filter(|(&a, &w)| a > 0 && w.unsigned_abs() != r)
        .count();
    (r, count)
}
