//! Zero-sum questions over `Z_n`.

use crate::bits::BitSet;
use crate::error::{Error, Result};

use super::DEFAULT_BUDGET;

/// Whether some nonempty sub-multiset of `residues` sums to `0 mod n`.
pub fn has_zero_subset_sum(residues: &[i64], n: u64) -> Result<bool> {
    if n < 1 {
        return Err(Error::param("modulus must be at least 1"));
    }
    if residues.is_empty() {
        return Err(Error::param("residue multiset must be nonempty"));
    }
    let n = n as usize;
    // reachable[s]: some nonempty sub-multiset of the prefix sums to s
    let mut reachable = vec![false; n];
    for &a in residues {
        let a = (a as i128).rem_euclid(n as i128) as usize;
        let mut next = reachable.clone();
        next[a] = true;
        for (s, _) in reachable.iter().enumerate().filter(|(_, &hit)| hit) {
            next[(s + a) % n] = true;
        }
        reachable = next;
        if reachable[0] {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Largest zero-sum-free subset of `Z_n \ {0}`, with the default budget.
pub fn max_zero_sum_free(n: u64) -> Result<u32> {
    max_zero_sum_free_with(n, DEFAULT_BUDGET)
}

/// Largest `S ⊆ {1, ..., n-1}` such that no nonempty subset of `S` sums to
/// `0 mod n`, by branch and bound over subsets in increasing order.
pub fn max_zero_sum_free_with(n: u64, budget: u64) -> Result<u32> {
    if n < 2 {
        return Err(Error::param(format!("zero-sum-free sets need n >= 2, got {n}")));
    }
    let n = usize::try_from(n).map_err(|_| Error::param("modulus too large"))?;
    let mut search = FreeSetSearch {
        n,
        budget,
        visited: 0,
        best: 0,
        levels: (0..n).map(|_| BitSet::new(n)).collect(),
    };
    search.descend(1, 0)?;
    Ok(search.best as u32)
}

struct FreeSetSearch {
    n: usize,
    budget: u64,
    visited: u64,
    best: usize,
    /// levels[k]: subset sums reachable from the current k-element set
    levels: Vec<BitSet>,
}

impl FreeSetSearch {
    fn descend(&mut self, next: usize, size: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::Budget { budget: self.budget, what: format!("searching zero-sum-free subsets of Z_{}", self.n) });
        }
        self.best = self.best.max(size);
        for a in next..self.n {
            if size + (self.n - a) <= self.best {
                break;
            }
            let (lo, hi) = self.levels.split_at_mut(size + 1);
            let cur = &mut hi[0];
            cur.copy_from(&lo[size]);
            cur.or_rotated(&lo[size], a);
            cur.insert(a);
            if cur.contains(0) {
                continue;
            }
            self.descend(a + 1, size + 1)?;
        }
        Ok(())
    }
}

/// Outcome of comparing the largest zero-sum-free subset of `Z_n` with `3√n`.
#[derive(Clone, Debug, PartialEq)]
pub struct OlsonReport {
    pub n: u64,
    pub max_zero_sum_free: u32,
    pub threshold: f64,
    /// `max_zero_sum_free < 3√n`, decided exactly as `max² < 9n`.
    pub pass: bool,
}

pub fn verify_olson(n: u64, budget: u64) -> Result<OlsonReport> {
    let m = max_zero_sum_free_with(n, budget)?;
    Ok(OlsonReport {
        n,
        max_zero_sum_free: m,
        threshold: 3.0 * (n as f64).sqrt(),
        pass: (m as u128) * (m as u128) < 9 * n as u128,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain subset enumeration, for small n.
    fn max_free_by_subsets(n: usize) -> u32 {
        let mut best = 0;
        for mask in 0u64..(1 << (n - 1)) {
            let elems: Vec<usize> = (0..n - 1).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let free = (1u64..(1 << elems.len()))
                .all(|sub| (0..elems.len()).filter(|j| sub >> j & 1 == 1).map(|j| elems[j]).sum::<usize>() % n != 0);
            if free {
                best = best.max(elems.len() as u32);
            }
        }
        best
    }

    #[test]
    fn zero_subset_sum_examples() {
        assert!(has_zero_subset_sum(&[1, 2], 3).unwrap());
        assert!(!has_zero_subset_sum(&[1, 2], 5).unwrap());
        assert!(has_zero_subset_sum(&[0], 7).unwrap());
        assert!(has_zero_subset_sum(&[-1, 1], 9).unwrap());
        assert!(has_zero_subset_sum(&[2, 2, 2], 6).unwrap());
        assert!(!has_zero_subset_sum(&[2, 2], 6).unwrap());
        assert!(has_zero_subset_sum(&[1], 0).is_err());
    }

    #[test]
    fn max_free_examples() {
        assert_eq!(max_zero_sum_free(3).unwrap(), 1);
        assert_eq!(max_zero_sum_free(4).unwrap(), 2);
        assert_eq!(max_zero_sum_free(5).unwrap(), 2);
        assert!(max_zero_sum_free(1).is_err());
    }

    #[test]
    fn branch_and_bound_matches_subsets() {
        for n in 2..=16 {
            assert_eq!(max_zero_sum_free(n as u64).unwrap(), max_free_by_subsets(n), "n = {n}");
        }
    }

    #[test]
    fn olson_examples() {
        let r = verify_olson(5, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.max_zero_sum_free, 2);
        assert!((r.threshold - 6.708).abs() < 1e-3 && r.pass);
        let r = verify_olson(4, DEFAULT_BUDGET).unwrap();
        assert_eq!((r.max_zero_sum_free, r.threshold, r.pass), (2, 6.0, true));
        let r = verify_olson(9, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.threshold, 9.0);
        assert!(r.pass);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(max_zero_sum_free_with(30, 50), Err(Error::Budget { .. })));
    }
}
