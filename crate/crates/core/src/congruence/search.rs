//! Pruned enumeration of Hilbert bases.
//!
//! Both searches rest on one fact: a nonzero solution `T` (read as a
//! multiset of coordinates) is indecomposable iff `T` minus any single
//! coordinate is zero-sum free, i.e. has no nonempty sub-multiset of weight
//! zero. A zero-sum sub-multiset of `T - e_j` would be a proper sub-solution
//! of `T`; conversely a proper sub-solution either avoids that copy of `j`
//! or its complement does.
//!
//! The searches therefore walk zero-sum-free multisets, carrying the set of
//! reachable sub-multiset weights as a bitset, and cut a branch the moment
//! zero becomes reachable. Cutting there is exactly the domination test
//! against the basis found so far: a partial vector dominates a basis
//! element iff it contains a nonzero sub-solution.
//!
//! * Modulus `n`: `T = S + e_j` where `j` is the largest coordinate of `T`.
//!   Walk `S` in nondecreasing coordinate order and close it with every
//!   `j ≥ max(S)` whose residue is `-σ(S)`. Each `T` is produced once.
//! * Modulus 0: order `T` greedily, taking the next positive coordinate when
//!   the running sum is `<= 0` and the next negative one otherwise, each
//!   sign in nondecreasing coordinate order. The running sums stay in
//!   `[-W₋+1, W₊]` and must be distinct, so the walk stops by itself at
//!   length `W₊ + W₋` even without a degree cap.

use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Integer;
use rayon::prelude::*;

use super::{CongruenceSystem, ExponentVector, HilbertBasis, SearchOptions};
use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Bits allowed across the per-depth reachable-sum tables.
const MAX_TABLE_BITS: u128 = 1 << 33;

/// Hilbert basis with the default degree cap and search options.
pub fn hilbert_basis(system: &CongruenceSystem, degree_cap: Option<u32>) -> Result<HilbertBasis> {
    hilbert_basis_with(system, degree_cap, &SearchOptions::default())
}

/// All indecomposable solutions of degree `<= degree_cap` (default
/// [`CongruenceSystem::default_degree_cap`]).
pub fn hilbert_basis_with(
    system: &CongruenceSystem,
    degree_cap: Option<u32>,
    options: &SearchOptions,
) -> Result<HilbertBasis> {
    let cap = degree_cap.unwrap_or_else(|| system.default_degree_cap());
    if cap < 1 {
        return Err(Error::param("degree cap must be at least 1"));
    }
    let budget = Budget::new(options.budget);
    let mut elements: Vec<ExponentVector> = system
        .weights()
        .iter()
        .enumerate()
        .filter(|&(_, &w)| is_zero_weight(w, system.modulus()))
        .map(|(i, _)| ExponentVector::unit(system.rank(), i))
        .collect();
    let found = if system.modulus() > 0 {
        CyclicSearch::new(system, cap)?.run(options, &budget)?
    } else {
        IntegerSearch::new(system, cap)?.run(options, &budget)?
    };
    elements.extend(found);
    HilbertBasis::from_elements(system.clone(), elements, cap)
}

fn is_zero_weight(w: i64, modulus: u64) -> bool {
    if modulus > 0 { (w as i128).rem_euclid(modulus as i128) == 0 } else { w == 0 }
}

struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    #[inline]
    fn charge(&self) -> Result<()> {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::Budget { budget: self.limit, what: "enumerating indecomposable solutions".into() });
        }
        Ok(())
    }
}

/// Runs `branch` for every top-level choice, in a pool of `workers` threads,
/// returning results in branch order.
fn fan_out<F>(branches: usize, workers: usize, branch: F) -> Result<Vec<ExponentVector>>
where
    F: Fn(usize) -> Result<Vec<ExponentVector>> + Sync,
{
    let parts: Vec<Result<Vec<ExponentVector>>> = if workers <= 1 {
        (0..branches).map(&branch).collect()
    } else {
        crate::pool::install(workers, || (0..branches).into_par_iter().map(&branch).collect())?
    };
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn table_guard(width: u128, depth: u128) -> Result<()> {
    if width.saturating_mul(depth + 1) > MAX_TABLE_BITS {
        return Err(Error::Budget {
            budget: MAX_TABLE_BITS as u64,
            what: format!("allocating reachable-sum tables of {width} bits x {} levels", depth + 1),
        });
    }
    Ok(())
}

struct CyclicSearch {
    rank: usize,
    cap: u32,
    modulus: usize,
    /// (coordinate, residue) for coordinates of nonzero residue, by coordinate.
    letters: Vec<(usize, usize)>,
    /// letter positions grouped by residue
    by_residue: Vec<Vec<usize>>,
}

impl CyclicSearch {
    fn new(system: &CongruenceSystem, cap: u32) -> Result<Self> {
        let n = system.modulus();
        let residues: Vec<u64> = system.weights().iter().map(|&w| (w as i128).rem_euclid(n as i128) as u64).collect();
        // the monoid only sees residues up to a common factor with n
        let g = residues.iter().fold(n, |g, &r| g.gcd(&r));
        let modulus = (n / g) as usize;
        let letters: Vec<(usize, usize)> = residues
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r != 0)
            .map(|(i, &r)| (i, (r / g) as usize))
            .collect();
        let depth = (cap as usize).min(modulus);
        if !letters.is_empty() {
            table_guard(modulus as u128, depth as u128)?;
        }
        let mut by_residue = vec![Vec::new(); if letters.is_empty() { 0 } else { modulus }];
        for (pos, &(_, r)) in letters.iter().enumerate() {
            by_residue[r].push(pos);
        }
        Ok(CyclicSearch { rank: system.rank(), cap, modulus, letters, by_residue })
    }

    fn run(&self, options: &SearchOptions, budget: &Budget) -> Result<Vec<ExponentVector>> {
        if self.letters.is_empty() || self.cap < 2 {
            return Ok(Vec::new());
        }
        fan_out(self.letters.len(), options.workers, |first| {
            let mut walk = CyclicWalk {
                search: self,
                budget,
                exps: vec![0; self.rank],
                reach: (0..self.cap.min(self.modulus as u32) as usize + 1).map(|_| BitSet::new(self.modulus)).collect(),
                out: Vec::new(),
            };
            let (coord, r) = self.letters[first];
            walk.reach[1].insert(r);
            walk.exps[coord] = 1;
            walk.descend(first, 1, r)?;
            Ok(walk.out)
        })
    }
}

struct CyclicWalk<'a> {
    search: &'a CyclicSearch,
    budget: &'a Budget,
    exps: Vec<u32>,
    /// reach[d]: residues of nonempty sub-multisets of the current S, |S| = d
    reach: Vec<BitSet>,
    out: Vec<ExponentVector>,
}

impl CyclicWalk<'_> {
    fn descend(&mut self, last: usize, depth: usize, sum: usize) -> Result<()> {
        self.budget.charge()?;
        let s = self.search;
        let n = s.modulus;
        if depth < s.cap as usize {
            let need = (n - sum) % n;
            for &q in s.by_residue[need].iter().filter(|&&q| q >= last) {
                let c = s.letters[q].0;
                self.exps[c] += 1;
                self.out.push(ExponentVector::from_trusted(self.exps.clone(), depth as u32 + 1));
                self.exps[c] -= 1;
            }
        }
        // S can grow while |S| + 1 stays within the cap; a zero-sum-free
        // multiset over Z_n has fewer than n elements
        if depth + 2 > s.cap as usize || depth + 1 >= n {
            return Ok(());
        }
        for q in last..s.letters.len() {
            let (c, r) = s.letters[q];
            let (lo, hi) = self.reach.split_at_mut(depth + 1);
            let next = &mut hi[0];
            next.copy_from(&lo[depth]);
            next.or_rotated(&lo[depth], r);
            next.insert(r);
            if next.contains(0) {
                continue;
            }
            self.exps[c] += 1;
            self.descend(q, depth + 1, (sum + r) % n)?;
            self.exps[c] -= 1;
        }
        Ok(())
    }
}

struct IntegerSearch {
    rank: usize,
    /// (coordinate, weight / g) by coordinate, split by sign
    positive: Vec<(usize, u64)>,
    negative: Vec<(usize, u64)>,
    /// longest word the walk may build
    max_len: usize,
    /// index of weight 0 in the reachable-sum window
    offset: usize,
    width: usize,
}

impl IntegerSearch {
    fn new(system: &CongruenceSystem, cap: u32) -> Result<Self> {
        let g = system.weights().iter().fold(0u64, |g, &w| g.gcd(&w.unsigned_abs()));
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (i, &w) in system.weights().iter().enumerate() {
            match w.signum() {
                1 => positive.push((i, w.unsigned_abs() / g)),
                -1 => negative.push((i, w.unsigned_abs() / g)),
                _ => {}
            }
        }
        let wp = positive.iter().map(|p| p.1).max().unwrap_or(0) as u128;
        let wn = negative.iter().map(|p| p.1).max().unwrap_or(0) as u128;
        let max_len = (cap as u128).min(wp + wn) as usize;
        let (offset, width) = if positive.is_empty() || negative.is_empty() {
            (0, 0)
        } else {
            let width = (wp + wn) * max_len as u128 + 1;
            table_guard(width, max_len as u128)?;
            ((wn * max_len as u128) as usize, width as usize)
        };
        Ok(IntegerSearch { rank: system.rank(), positive, negative, max_len, offset, width })
    }

    fn run(&self, options: &SearchOptions, budget: &Budget) -> Result<Vec<ExponentVector>> {
        if self.positive.is_empty() || self.negative.is_empty() || self.max_len < 2 {
            return Ok(Vec::new());
        }
        fan_out(self.positive.len(), options.workers, |first| {
            let mut walk = IntegerWalk {
                search: self,
                budget,
                exps: vec![0; self.rank],
                reach: (0..=self.max_len).map(|_| BitSet::new(self.width)).collect(),
                out: Vec::new(),
            };
            let (coord, w) = self.positive[first];
            walk.reach[1].insert(self.offset + w as usize);
            walk.exps[coord] = 1;
            walk.descend(first, 0, 1, w as i64)?;
            Ok(walk.out)
        })
    }
}

struct IntegerWalk<'a> {
    search: &'a IntegerSearch,
    budget: &'a Budget,
    exps: Vec<u32>,
    reach: Vec<BitSet>,
    out: Vec<ExponentVector>,
}

impl IntegerWalk<'_> {
    fn descend(&mut self, next_pos: usize, next_neg: usize, depth: usize, sum: i64) -> Result<()> {
        self.budget.charge()?;
        let s = self.search;
        if depth >= s.max_len {
            return Ok(());
        }
        let (letters, start, sign) =
            if sum <= 0 { (&s.positive, next_pos, 1i64) } else { (&s.negative, next_neg, -1i64) };
        for q in start..letters.len() {
            let (c, w) = letters[q];
            let new_sum = sum + sign * w as i64;
            if new_sum == 0 {
                self.exps[c] += 1;
                self.out.push(ExponentVector::from_trusted(self.exps.clone(), depth as u32 + 1));
                self.exps[c] -= 1;
                continue;
            }
            let (lo, hi) = self.reach.split_at_mut(depth + 1);
            let next = &mut hi[0];
            next.copy_from(&lo[depth]);
            let single = s.offset as i64 + sign * w as i64;
            if sign > 0 {
                next.or_shifted_up(&lo[depth], w as usize);
            } else {
                next.or_shifted_down(&lo[depth], w as usize);
            }
            next.insert(single as usize);
            if next.contains(s.offset) {
                continue;
            }
            self.exps[c] += 1;
            if sign > 0 {
                self.descend(q, next_neg, depth + 1, new_sum)?;
            } else {
                self.descend(next_pos, q, depth + 1, new_sum)?;
            }
            self.exps[c] -= 1;
        }
        Ok(())
    }
}
