//! Exact number-theoretic kernels: partition numbers, Euler's totient, the
//! Hardy-Ramanujan estimate and the Harris-Wehlau degree count.

use crate::error::{Error, Result};
use crate::scalar::{self, Natural};

/// Partition numbers `p(0..=N)`, grown on demand by Euler's pentagonal
/// number recurrence. Entries are append-only; `&self` readers only ever see
/// published values.
#[derive(Clone, Debug)]
pub struct PartitionCache<T> {
    values: Vec<T>,
}

impl<T: Natural> Default for PartitionCache<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Natural> PartitionCache<T> {
    pub fn new() -> Self {
        PartitionCache { values: vec![T::one()] }
    }

    /// Largest `k` with `p(k)` stored.
    pub fn high_water(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `p(k)` if already computed.
    pub fn peek(&self, k: usize) -> Option<&T> {
        self.values.get(k)
    }

    pub fn get(&mut self, k: usize) -> Result<T> {
        self.extend_to(k)?;
        Ok(self.values[k].clone())
    }

    pub fn extend_to(&mut self, k: usize) -> Result<()> {
        self.values.reserve(k.saturating_sub(self.high_water()));
        for i in self.values.len()..=k {
            // p(i) = sum_{j>=1} (-1)^{j+1} [p(i - j(3j-1)/2) + p(i - j(3j+1)/2)]
            let mut plus = T::zero();
            let mut minus = T::zero();
            for j in 1.. {
                let g1 = j * (3 * j - 1) / 2;
                if g1 > i {
                    break;
                }
                let acc = if j % 2 == 1 { &mut plus } else { &mut minus };
                *acc = scalar::add(acc, &self.values[i - g1], "partition recurrence")?;
                let g2 = j * (3 * j + 1) / 2;
                if g2 <= i {
                    *acc = scalar::add(acc, &self.values[i - g2], "partition recurrence")?;
                }
            }
            let p = scalar::sub(&plus, &minus, "partition recurrence")?;
            self.values.push(p);
        }
        Ok(())
    }
}

/// The number of partitions of `k`.
pub fn partition<T: Natural>(k: usize) -> Result<T> {
    PartitionCache::new().get(k)
}

/// Euler's totient by trial factorization, with `φ(1) = 1`.
pub fn totient(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::param("totient is defined for k >= 1"));
    }
    let mut rest = k;
    let mut phi = k;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

/// Leading Hardy-Ramanujan term `e^{π√(2k/3)} / (4√3 k)`.
pub fn hardy_ramanujan(k: u64) -> Result<f64> {
    if k == 0 {
        return Err(Error::param("Hardy-Ramanujan estimate needs k >= 1"));
    }
    let k = k as f64;
    Ok((std::f64::consts::PI * (2.0 * k / 3.0).sqrt()).exp() / (4.0 * 3f64.sqrt() * k))
}

/// `p(k) / HR(k)`, evaluated in log space so it stays finite for large `k`.
pub fn hardy_ramanujan_ratio(k: u64) -> Result<f64> {
    let p: crate::Count = partition(k as usize)?;
    let kf = k as f64;
    let ln_hr = std::f64::consts::PI * (2.0 * kf / 3.0).sqrt() - (4.0 * 3f64.sqrt() * kf).ln();
    Ok((scalar::ln_big(&p) - ln_hr).exp())
}

/// Smallest degree at which the closed-form count applies: `⌈n/2⌉ + 1`,
/// except `n/2 + 2` for even `n >= 6`.
pub fn harris_wehlau_threshold(n: u64) -> u64 {
    if n % 2 == 0 && n >= 6 {
        n / 2 + 2
    } else {
        n.div_ceil(2) + 1
    }
}

/// `p(n-k)·φ(n)`, the exact number of degree-`k` indecomposable solutions of
/// `x_1 + 2x_2 + ... + (n-1)x_{n-1} ≡ 0 (mod n)` for `k` at or above
/// [`harris_wehlau_threshold`].
///
/// The usual hypothesis `k ≥ ⌈n/2⌉ + 1` is too weak for even `n ≥ 6`: the
/// count at `k = n/2 + 1` is strictly larger (kac(6) has 6 solutions of
/// degree 4, not 4), so that degree is rejected.
pub fn harris_wehlau_count<T: Natural>(n: u64, k: u64) -> Result<T> {
    let threshold = harris_wehlau_threshold(n);
    if k < threshold || k > n || k == 0 {
        return Err(Error::domain(format!(
            "count p(n-k)φ(n) holds only for threshold <= k <= n; got n={n}, k={k} (threshold {threshold})"
        )));
    }
    let p: T = partition((n - k) as usize)?;
    let phi = scalar::from_u64(totient(n)?, "harris-wehlau count")?;
    scalar::mul(&p, &phi, "harris-wehlau count")
}
