//! The monoid of nonnegative integer solutions to `Σ w_i x_i ≡ 0 (mod n)`
//! (or `= 0` over the integers when the modulus is zero) and its Hilbert
//! basis, the set of indecomposable solutions.

mod bruteforce;
mod search;
mod zero_sum;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bruteforce::hilbert_basis_bruteforce;
pub use search::{hilbert_basis, hilbert_basis_with};
pub use zero_sum::{has_zero_subset_sum, max_zero_sum_free, max_zero_sum_free_with, verify_olson, OlsonReport};

/// Default node budget for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Knobs shared by the searches: a visited-node budget and a worker count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, workers: 1 }
    }
}

impl SearchOptions {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

/// A weight list with a modulus. Modulus `0` means the equation holds over
/// the integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CongruenceSystem {
    weights: Vec<i64>,
    modulus: u64,
}

impl CongruenceSystem {
    pub fn new(weights: Vec<i64>, modulus: u64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::param("weight list must be nonempty"));
        }
        if modulus > i64::MAX as u64 {
            return Err(Error::param("modulus exceeds the supported range"));
        }
        Ok(CongruenceSystem { weights, modulus })
    }

    /// `x_1 + 2x_2 + ... + (n-1)x_{n-1} ≡ 0 (mod n)`.
    pub fn kac(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::param(format!("Kac system needs n >= 2, got {n}")));
        }
        Self::new((1..n as i64).collect(), n)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    /// Largest absolute weight.
    pub fn max_abs_weight(&self) -> u64 {
        self.weights.iter().map(|w| w.unsigned_abs()).max().unwrap_or(0)
    }

    /// Modulus 0 with weights of one sign only: the zero-weight unit vectors
    /// are the only generators.
    pub fn is_one_sided(&self) -> bool {
        self.modulus == 0
            && !(self.weights.iter().any(|&w| w > 0) && self.weights.iter().any(|&w| w < 0))
    }

    /// Weight list equals `1, 2, ..., n-1` for modulus `n`.
    pub fn is_kac(&self) -> bool {
        self.modulus >= 2
            && self.weights.len() as u64 == self.modulus - 1
            && self.weights.iter().enumerate().all(|(i, &w)| w == i as i64 + 1)
    }

    /// Degree cap used when the caller gives none: `n` for modulus `n`, and
    /// `max(2·max|w| - 1, 2)` over the integers.
    pub fn default_degree_cap(&self) -> u32 {
        let cap = if self.modulus > 0 {
            self.modulus
        } else {
            let w = self.max_abs_weight();
            if w == 0 { 1 } else { (2 * w - 1).max(2) }
        };
        cap.min(u32::MAX as u64) as u32
    }

    /// Weight of an exponent vector, reduced mod `n` when the modulus is positive.
    pub fn weight_of(&self, exps: &[u32]) -> Result<i128> {
        self.check_len(exps.len())?;
        let total: i128 = self.weights.iter().zip(exps).map(|(&w, &a)| w as i128 * a as i128).sum();
        Ok(if self.modulus > 0 { total.rem_euclid(self.modulus as i128) } else { total })
    }

    pub fn is_solution(&self, v: &ExponentVector) -> Result<bool> {
        Ok(self.weight_of(v.exponents())? == 0)
    }

    /// True iff no solution `u` satisfies `0 < u < v` componentwise. Any such
    /// `u` makes `v - u` a solution too, so this is the same as `v` not being
    /// a sum of two nonzero solutions.
    pub fn is_indecomposable(&self, v: &ExponentVector) -> Result<bool> {
        if v.degree() == 0 {
            return Err(Error::domain("the zero vector is not a generator candidate"));
        }
        if !self.is_solution(v)? {
            return Err(Error::domain(format!("{v:?} is not a solution")));
        }
        let mut u = vec![0u32; v.len()];
        // odometer over the box [0, v], skipping 0 and v itself
        loop {
            let mut i = 0;
            while i < u.len() {
                if u[i] < v.exponents()[i] {
                    u[i] += 1;
                    break;
                }
                u[i] = 0;
                i += 1;
            }
            if i == u.len() || u == v.exponents() {
                return Ok(true);
            }
            if self.weight_of(&u)? == 0 {
                return Ok(false);
            }
        }
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), found: len });
        }
        Ok(())
    }
}

/// A monomial exponent `(a_1, ..., a_r)` with its degree `Σ a_i`. Ordered by
/// degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    exponents: Vec<u32>,
    degree: u32,
}

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        let degree = exponents
            .iter()
            .try_fold(0u32, |acc, &a| acc.checked_add(a))
            .ok_or(Error::Overflow("exponent degree"))?;
        Ok(ExponentVector { exponents, degree })
    }

    /// Builds a vector with a claimed degree, rejecting a mismatch.
    pub fn from_parts(exponents: Vec<u32>, degree: u32) -> Result<Self> {
        let v = Self::new(exponents)?;
        if v.degree != degree {
            return Err(Error::Consistency(format!("stored degree {degree} but exponents sum to {}", v.degree)));
        }
        Ok(v)
    }

    pub(crate) fn from_trusted(exponents: Vec<u32>, degree: u32) -> Self {
        debug_assert_eq!(exponents.iter().sum::<u32>(), degree);
        ExponentVector { exponents, degree }
    }

    pub fn zero(rank: usize) -> Self {
        ExponentVector { exponents: vec![0; rank], degree: 0 }
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut exponents = vec![0; rank];
        exponents[i] = 1;
        ExponentVector { exponents, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.exponents.len() == other.exponents.len()
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a >= b)
    }

    /// `self - other` when `self` dominates `other`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if !self.dominates(other) {
            return None;
        }
        let exponents = self.exponents.iter().zip(&other.exponents).map(|(a, b)| a - b).collect();
        Some(ExponentVector { exponents, degree: self.degree - other.degree })
    }

    /// Number of coordinates with a nonzero exponent.
    pub fn support_size(&self) -> usize {
        self.exponents.iter().filter(|&&a| a > 0).count()
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The indecomposable solutions of a system up to `complete_to_degree`, in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    system: CongruenceSystem,
    elements: Vec<ExponentVector>,
    complete_to_degree: u32,
    counts_by_degree: BTreeMap<u32, usize>,
}

#[derive(Serialize, Deserialize)]
struct BasisDocument {
    weights: Vec<i64>,
    modulus: u64,
    complete_to_degree: u32,
    elements: Vec<Vec<u32>>,
}

impl HilbertBasis {
    /// Sorts `elements` canonically; duplicates are a consistency failure.
    pub(crate) fn from_elements(
        system: CongruenceSystem,
        mut elements: Vec<ExponentVector>,
        complete_to_degree: u32,
    ) -> Result<Self> {
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Consistency(format!("duplicate basis element {:?}", w[0])));
        }
        let mut counts_by_degree = BTreeMap::new();
        for e in &elements {
            *counts_by_degree.entry(e.degree()).or_insert(0) += 1;
        }
        Ok(HilbertBasis { system, elements, complete_to_degree, counts_by_degree })
    }

    pub fn system(&self) -> &CongruenceSystem {
        &self.system
    }

    pub fn elements(&self) -> &[ExponentVector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn complete_to_degree(&self) -> u32 {
        self.complete_to_degree
    }

    pub fn counts_by_degree(&self) -> &BTreeMap<u32, usize> {
        &self.counts_by_degree
    }

    pub fn count_in_degree(&self, k: u32) -> usize {
        self.counts_by_degree.get(&k).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.last().map_or(0, ExponentVector::degree)
    }

    /// Some element `u ≠ v` with `u ≤ v` componentwise.
    pub fn dominated_element(&self, v: &ExponentVector) -> Option<&ExponentVector> {
        self.elements.iter().take_while(|u| u.degree() <= v.degree()).find(|u| *u != v && v.dominates(u))
    }

    /// Canonical JSON:
    /// `{"weights":[..],"modulus":n,"complete_to_degree":c,"elements":[[..],..]}`.
    pub fn to_json(&self) -> String {
        let doc = BasisDocument {
            weights: self.system.weights.clone(),
            modulus: self.system.modulus,
            complete_to_degree: self.complete_to_degree,
            elements: self.elements.iter().map(|e| e.exponents.clone()).collect(),
        };
        serde_json::to_string(&doc).expect("basis document serializes")
    }

    /// Parses the canonical JSON form, checking every element is a solution
    /// and the order is canonical.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: BasisDocument =
            serde_json::from_str(text).map_err(|e| Error::param(format!("malformed basis document: {e}")))?;
        let system = CongruenceSystem::new(doc.weights, doc.modulus)?;
        let elements = doc
            .elements
            .into_iter()
            .map(|e| {
                system.check_len(e.len())?;
                let v = ExponentVector::new(e)?;
                if !system.is_solution(&v)? {
                    return Err(Error::Consistency(format!("{v:?} is not a solution")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Consistency("elements are not in canonical order".into()));
        }
        Self::from_elements(system, elements, doc.complete_to_degree)
    }
}

/// Number of Hilbert basis elements of degree exactly `k`.
pub fn indecomposables_in_degree(system: &CongruenceSystem, k: u32, options: &SearchOptions) -> Result<usize> {
    if k == 0 {
        return Err(Error::param("degree must be at least 1"));
    }
    Ok(hilbert_basis_with(system, Some(k), options)?.count_in_degree(k))
}
