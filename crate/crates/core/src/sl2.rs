//! Dimensions `a_n(d) = dim S^d(V_n)^{SL_2}` of invariants of binary forms.
//!
//! `a_n(d)` is the multiplicity of torus weight 0 minus that of weight 2 in
//! `S^d(V_n)`. Shifting the weights `n, n-2, ..., -n` to `0..=n`, a degree-`d`
//! monomial of weight `n·d - 2w` corresponds to a partition of `w` into at
//! most `d` parts each at most `n`, counted by the coefficient of `q^w` in
//! the Gaussian binomial `[n+d choose d]_q`.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith;
use crate::error::{Error, Result};
use crate::scalar::{self, Natural};
use crate::{Count, Integer};

/// Coefficients of `q^0..=q^upto` in `[n+d choose d]_q`.
///
/// Builds `[n+j choose j]_q` for `j = 1..=d`, dividing by `1 - q^j` before
/// multiplying by `1 - q^{n+j}` so every intermediate coefficient is a
/// genuine nonnegative count.
pub fn gaussian_binomial_prefix<T: Natural>(n: u32, d: u32, upto: usize) -> Result<Vec<T>> {
    let top = (n as usize) * (d as usize);
    let len = upto.min(top) + 1;
    let mut c = vec![T::zero(); len];
    c[0] = T::one();
    for j in 1..=d as usize {
        for k in j..len {
            c[k] = scalar::add(&c[k], &c[k - j], "gaussian binomial")?;
        }
        let shift = n as usize + j;
        for k in (shift..len).rev() {
            c[k] = scalar::sub(&c[k], &c[k - shift], "gaussian binomial")?;
        }
    }
    c.resize(upto + 1, T::zero());
    Ok(c)
}

/// Partitions of `w` into at most `d` parts, each at most `n`.
pub fn restricted_partitions<T: Natural>(w: u64, d: u32, n: u32) -> Result<T> {
    if w > n as u64 * d as u64 {
        return Ok(T::zero());
    }
    let c = gaussian_binomial_prefix::<T>(n, d, w as usize)?;
    Ok(c[w as usize].clone())
}

/// `dim S^d(V_n)^{SL_2}`.
pub fn invariant_dim<T: Natural>(n: u32, d: u32) -> Result<T> {
    let nd = n as u64 * d as u64;
    if nd % 2 == 1 {
        return Ok(T::zero());
    }
    let w = (nd / 2) as usize;
    let c = gaussian_binomial_prefix::<T>(n, d, w)?;
    if w == 0 {
        return Ok(c[0].clone());
    }
    scalar::sub(&c[w], &c[w - 1], "invariant dimension")
}

/// `a_n(d)` by listing every degree-`d` monomial in the `n+1` coordinates of
/// weights `n, n-2, ..., -n` and counting weight 0 minus weight 2.
pub fn invariant_dim_bruteforce(n: u32, d: u32, budget: u64) -> Result<u64> {
    let monomials = binomial_u128(n as u128 + d as u128, d as u128);
    if monomials > budget as u128 {
        return Err(Error::Budget { budget, what: format!("listing {monomials} monomials of S^{d}(V_{n})") });
    }
    let weights: Vec<i64> = (0..=n as i64).map(|i| n as i64 - 2 * i).collect();
    let mut zero = 0u64;
    let mut two = 0u64;
    fn walk(weights: &[i64], from: usize, left: u32, weight: i64, zero: &mut u64, two: &mut u64) {
        if left == 0 {
            match weight {
                0 => *zero += 1,
                2 => *two += 1,
                _ => {}
            }
            return;
        }
        for i in from..weights.len() {
            walk(weights, i, left - 1, weight + weights[i], zero, two);
        }
    }
    walk(&weights, 0, d, 0, &mut zero, &mut two);
    Ok(zero - two)
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = match acc.checked_mul(n - k + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc
}

/// Exact `a_n(d)` over a rectangle of `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable<T> {
    n_range: RangeInclusive<u32>,
    d_range: RangeInclusive<u32>,
    values: Vec<Vec<T>>,
}

impl<T: Natural> SeriesTable<T> {
    /// Fills the table; cells are computed independently, `workers` at a time.
    pub fn compute(n_range: RangeInclusive<u32>, d_range: RangeInclusive<u32>, workers: usize) -> Result<Self> {
        if n_range.is_empty() || d_range.is_empty() {
            return Err(Error::param("series table ranges must be nonempty"));
        }
        let ns: Vec<u32> = n_range.clone().collect();
        let row = |&n: &u32| -> Result<Vec<T>> { d_range.clone().map(|d| invariant_dim(n, d)).collect() };
        let values: Result<Vec<Vec<T>>> = if workers <= 1 {
            ns.iter().map(row).collect()
        } else {
            crate::pool::install(workers, || ns.par_iter().map(row).collect())?
        };
        Ok(SeriesTable { n_range, d_range, values: values? })
    }

    pub fn n_range(&self) -> RangeInclusive<u32> {
        self.n_range.clone()
    }

    pub fn d_range(&self) -> RangeInclusive<u32> {
        self.d_range.clone()
    }

    pub fn get(&self, n: u32, d: u32) -> Option<&T> {
        if !self.n_range.contains(&n) || !self.d_range.contains(&d) {
            return None;
        }
        Some(&self.values[(n - self.n_range.start()) as usize][(d - self.d_range.start()) as usize])
    }

    /// Rows indexed by `n`, each listing `a_n(d)` across the `d` range.
    pub fn rows(&self) -> impl Iterator<Item = (u32, &[T])> {
        self.n_range.clone().zip(self.values.iter().map(Vec::as_slice))
    }

    /// Pairs `(n, d)` inside the table where `a_n(d) ≠ a_d(n)`.
    pub fn reciprocity_violations(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (n, row) in self.rows() {
            for (d, v) in self.d_range.clone().zip(row) {
                if let Some(w) = self.get(d, n) {
                    if v != w {
                        out.push((n, d));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityViolation {
    pub n: u32,
    pub d: u32,
    pub a_n_d: Count,
    pub a_d_n: Count,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub n_max: u32,
    pub d_max: u32,
    pub checked: usize,
    pub violations: Vec<ReciprocityViolation>,
}

impl ReciprocityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `a_n(d) = a_d(n)` for every `0 <= n <= n_max`, `0 <= d <= d_max`,
/// evaluating both sides directly.
pub fn reciprocity_check(n_max: u32, d_max: u32, workers: usize) -> Result<ReciprocityReport> {
    let pairs: Vec<(u32, u32)> = (0..=n_max).flat_map(|n| (0..=d_max).map(move |d| (n, d))).collect();
    let check = |&(n, d): &(u32, u32)| -> Result<Option<ReciprocityViolation>> {
        let a_n_d: Count = invariant_dim(n, d)?;
        let a_d_n: Count = invariant_dim(d, n)?;
        Ok((a_n_d != a_d_n).then_some(ReciprocityViolation { n, d, a_n_d, a_d_n }))
    };
    let results: Vec<Result<Option<ReciprocityViolation>>> = if workers <= 1 {
        pairs.iter().map(check).collect()
    } else {
        crate::pool::install(workers, || pairs.par_iter().map(check).collect())?
    };
    let mut violations = Vec::new();
    for r in results {
        violations.extend(r?);
    }
    Ok(ReciprocityReport { n_max, d_max, checked: pairs.len(), violations })
}

/// `a_n(d) - Σ_{i=1}^{⌊d/2⌋} a_n(i)·a_n(d-i)`, a lower bound on the number of
/// degree-`d` generators that ignores relations among products. May be
/// negative.
pub fn generator_lower_bound<T: Natural>(n: u32, d: u32) -> Result<Integer> {
    if n < 1 || d < 1 {
        return Err(Error::param("generator lower bound needs n, d >= 1"));
    }
    let dims: Vec<BigInt> = (0..=d)
        .map(|i| invariant_dim::<T>(n, i).map(|v| v.to_bigint().expect("naturals embed in BigInt")))
        .collect::<Result<_>>()?;
    let products: BigInt = (1..=d / 2).map(|i| &dims[i as usize] * &dims[(d - i) as usize]).sum();
    Ok(&dims[d as usize] - products)
}

/// One sampled `n` of a growth diagnostic.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthSample {
    pub n: u32,
    pub dim: Count,
    pub lower_bound: Integer,
    /// `a_n(d) / n^{d-3}`
    pub dim_ratio: f64,
    /// `lower_bound / n^{d-3}`
    pub lower_bound_ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub d: u32,
    pub samples: Vec<GrowthSample>,
    pub fit_range: RangeInclusive<u32>,
    /// Least-squares slope of `ln a_n(d)` against `ln n` over the fit range,
    /// on samples with `nd` even and `a_n(d) > 0`.
    pub slope: Option<f64>,
}

impl GrowthReport {
    /// `(ln n, ln a_n(d))` for every sample with a positive dimension.
    pub fn plot_points(&self) -> Vec<(f64, f64)> {
        self.samples
            .iter()
            .filter(|s| s.dim > Count::from(0u32))
            .map(|s| ((s.n as f64).ln(), scalar::ln_big(&s.dim)))
            .collect()
    }

    pub fn fit_samples(&self) -> impl Iterator<Item = &GrowthSample> {
        self.samples.iter().filter(move |s| {
            self.fit_range.contains(&s.n) && (s.n as u64 * self.d as u64) % 2 == 0 && s.dim > Count::from(0u32)
        })
    }
}

/// Samples `a_n(d)` and its generator lower bound for `n = 1..=n_max` and fits
/// the growth exponent in `n`. The fit starts at `fit_from`, defaulting to
/// the last half-decade `⌈n_max/√10⌉`.
pub fn growth_diagnostic(d: u32, n_max: u32, fit_from: Option<u32>, workers: usize) -> Result<GrowthReport> {
    if d < 1 || n_max < 1 {
        return Err(Error::param("growth diagnostic needs d >= 1 and n_max >= 1"));
    }
    let fit_lo = fit_from.unwrap_or_else(|| (n_max as f64 / 10f64.sqrt()).ceil() as u32).clamp(1, n_max);
    let ns: Vec<u32> = (1..=n_max).collect();
    let sample = |&n: &u32| -> Result<GrowthSample> {
        let dim: Count = invariant_dim(n, d)?;
        let lower_bound = generator_lower_bound::<Count>(n, d)?;
        let scale = (n as f64).powi(d as i32 - 3);
        let dim_f = scalar::ln_big(&dim).exp();
        let lb_f = num_traits::ToPrimitive::to_f64(&lower_bound).unwrap_or(f64::NAN);
        Ok(GrowthSample { n, dim, lower_bound, dim_ratio: dim_f / scale, lower_bound_ratio: lb_f / scale })
    };
    let samples: Result<Vec<GrowthSample>> = if workers <= 1 {
        ns.iter().map(sample).collect()
    } else {
        crate::pool::install(workers, || ns.par_iter().map(sample).collect())?
    };
    let mut report = GrowthReport { d, samples: samples?, fit_range: fit_lo..=n_max, slope: None };
    let points: Vec<(f64, f64)> =
        report.fit_samples().map(|s| ((s.n as f64).ln(), scalar::ln_big(&s.dim))).collect();
    report.slope = least_squares_slope(&points);
    Ok(report)
}

fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// `dim V_n // SL_2 = n - 2` for `n >= 3`.
pub fn quotient_dim(n: u32) -> Result<u32> {
    if n < 3 {
        return Err(Error::domain(format!("the quotient dimension n - 2 assumes n >= 3, got {n}")));
    }
    Ok(n - 2)
}

/// `p(n-2) + φ(n-2) - 1` for odd `n >= 3`.
pub fn kac_lower_bound<T: Natural>(n: u32) -> Result<T> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::domain(format!(
            "the bound p(n-2) + φ(n-2) - 1 is derived for odd n >= 3 only, got {n}"
        )));
    }
    let m = n - 2;
    let p: T = arith::partition(m as usize)?;
    let phi: T = scalar::from_u64(arith::totient(m as u64)?, "kac lower bound")?;
    scalar::sub(&scalar::add(&p, &phi, "kac lower bound")?, &T::one(), "kac lower bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Partitions of `w` into at most `d` parts each at most `n`, by listing.
    fn box_partitions(w: u32, d: u32, n: u32) -> u64 {
        if w == 0 {
            return 1;
        }
        if d == 0 {
            return 0;
        }
        (1..=n.min(w)).map(|largest| box_partitions(w - largest, d - 1, largest)).sum()
    }

    #[test]
    fn restricted_partition_examples() {
        assert_eq!(restricted_partitions::<u64>(2, 2, 2).unwrap(), 2);
        assert_eq!(restricted_partitions::<u64>(0, 5, 3).unwrap(), 1);
        assert_eq!(restricted_partitions::<u64>(3, 2, 2).unwrap(), 1);
        assert_eq!(restricted_partitions::<u64>(5, 2, 2).unwrap(), 0);
        for w in 0..=20 {
            for d in 0..=5 {
                for n in 0..=5 {
                    assert_eq!(restricted_partitions::<u64>(w as u64, d, n).unwrap(), box_partitions(w, d, n));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn gaussian_binomial_is_palindromic(n in 0u32..=20, d in 0u32..=20, frac in 0.0f64..=1.0) {
            let top = n as u64 * d as u64;
            let w = (frac * top as f64).floor() as u64;
            prop_assert_eq!(
                restricted_partitions::<Count>(w, d, n).unwrap(),
                restricted_partitions::<Count>(top - w, d, n).unwrap()
            );
        }
    }

    #[test]
    fn dimension_examples() {
        for d in 1..=30 {
            assert_eq!(invariant_dim::<u64>(1, d).unwrap(), 0);
            assert_eq!(invariant_dim::<u64>(2, d).unwrap(), u64::from(d % 2 == 0));
        }
        assert_eq!(invariant_dim::<u64>(4, 6).unwrap(), 2);
        assert_eq!(invariant_dim::<u64>(6, 4).unwrap(), 2);
        assert_eq!(invariant_dim::<u64>(5, 0).unwrap(), 1);
        assert_eq!(invariant_dim::<u64>(0, 5).unwrap(), 1);
    }

    #[test]
    fn bruteforce_examples_and_agreement() {
        assert_eq!(invariant_dim_bruteforce(2, 2, 1 << 20).unwrap(), 1);
        assert_eq!(invariant_dim_bruteforce(3, 4, 1 << 20).unwrap(), 1);
        assert_eq!(invariant_dim_bruteforce(1, 7, 1 << 20).unwrap(), 0);
        for n in 0..=8 {
            for d in 0..=8 {
                assert_eq!(invariant_dim::<u64>(n, d).unwrap(), invariant_dim_bruteforce(n, d, 1 << 24).unwrap());
            }
        }
        assert!(matches!(invariant_dim_bruteforce(30, 30, 1000), Err(Error::Budget { .. })));
    }

    #[test]
    fn table_and_reciprocity() {
        let t = SeriesTable::<u64>::compute(0..=12, 0..=12, 1).unwrap();
        assert!(t.reciprocity_violations().is_empty());
        assert_eq!(t.get(6, 4), Some(&2));
        assert_eq!(t.get(13, 0), None);
        let par = SeriesTable::<u64>::compute(0..=12, 0..=12, 4).unwrap();
        assert_eq!(t, par);
        let r = reciprocity_check(10, 10, 1).unwrap();
        assert!(r.holds());
        assert_eq!(r.checked, 121);
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(generator_lower_bound::<u64>(2, 4).unwrap(), BigInt::from(0));
        assert_eq!(generator_lower_bound::<u64>(3, 4).unwrap(), BigInt::from(1));
        for d in 1..=12 {
            assert_eq!(generator_lower_bound::<u64>(1, d).unwrap(), BigInt::from(0));
        }
        assert!(generator_lower_bound::<u64>(0, 3).is_err());
    }

    #[test]
    fn growth_examples() {
        let r = growth_diagnostic(4, 2, None, 1).unwrap();
        assert_eq!(r.samples[1].dim_ratio, 0.5);
        assert_eq!(r.samples[0].dim_ratio, 0.0);
        let r = growth_diagnostic(6, 200, Some(50), 1).unwrap();
        let slope = r.slope.unwrap();
        assert!((slope - 3.0).abs() <= 0.3, "slope {slope}");
    }

    #[test]
    fn quotient_and_kac() {
        assert_eq!(quotient_dim(3).unwrap(), 1);
        assert_eq!(quotient_dim(5).unwrap(), 3);
        assert!(matches!(quotient_dim(2), Err(Error::Domain(_))));
        assert_eq!(kac_lower_bound::<u64>(5).unwrap(), 4);
        assert_eq!(kac_lower_bound::<u64>(3).unwrap(), 1);
        assert_eq!(kac_lower_bound::<u64>(7).unwrap(), 10);
        assert!(matches!(kac_lower_bound::<u64>(6), Err(Error::Domain(_))));
        assert!(matches!(kac_lower_bound::<u64>(1), Err(Error::Domain(_))));
    }
}
