//! Exhaustive reference enumeration. Lists every vector of degree at most the
//! cap, keeps the solutions, and tests each against the smaller ones. Shares
//! nothing with the pruned search beyond the system's own weight evaluation.

use super::{CongruenceSystem, ExponentVector, HilbertBasis};
use crate::error::{Error, Result};

/// Hilbert basis up to `degree_cap` by exhaustive listing. Fails with a
/// budget error when the number of vectors to list exceeds `budget`.
pub fn hilbert_basis_bruteforce(system: &CongruenceSystem, degree_cap: u32, budget: u64) -> Result<HilbertBasis> {
    if degree_cap < 1 {
        return Err(Error::param("degree cap must be at least 1"));
    }
    let r = system.rank();
    let vectors = multichoose_upto(r, degree_cap);
    if vectors > budget as u128 {
        return Err(Error::Budget {
            budget,
            what: format!("listing {vectors} vectors of degree <= {degree_cap} in {r} variables"),
        });
    }

    let mut solutions = Vec::new();
    let mut current = vec![0u32; r];
    for degree in 1..=degree_cap {
        fill(system, &mut current, 0, degree, degree, &mut solutions)?;
    }
    // solutions arrive degree by degree; a solution is decomposable iff some
    // smaller nonzero solution sits below it, and every such one sits above an
    // indecomposable already accepted
    let mut basis: Vec<ExponentVector> = Vec::new();
    for v in solutions {
        let below = basis.iter().any(|u| u.degree() < v.degree() && v.dominates(u));
        if !below {
            basis.push(v);
        }
    }
    HilbertBasis::from_elements(system.clone(), basis, degree_cap)
}

/// Writes every composition of `remaining` into `current[i..]`.
fn fill(
    system: &CongruenceSystem,
    current: &mut [u32],
    i: usize,
    remaining: u32,
    degree: u32,
    out: &mut Vec<ExponentVector>,
) -> Result<()> {
    if i + 1 == current.len() {
        current[i] = remaining;
        if system.weight_of(current)? == 0 {
            out.push(ExponentVector::from_trusted(current.to_vec(), degree));
        }
        current[i] = 0;
        return Ok(());
    }
    for a in (0..=remaining).rev() {
        current[i] = a;
        fill(system, current, i + 1, remaining - a, degree, out)?;
    }
    current[i] = 0;
    Ok(())
}

/// Number of vectors in `N^r` of degree `1..=d`, i.e. `C(r+d, r) - 1`,
/// saturating.
fn multichoose_upto(r: usize, d: u32) -> u128 {
    let mut acc: u128 = 1;
    for i in 1..=r as u128 {
        acc = match acc.checked_mul(d as u128 + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elems(b: &HilbertBasis) -> Vec<Vec<u32>> {
        b.elements().iter().map(|e| e.exponents().to_vec()).collect()
    }

    #[test]
    fn oracle_examples() {
        let s = CongruenceSystem::new(vec![1, 2], 3).unwrap();
        assert_eq!(elems(&hilbert_basis_bruteforce(&s, 3, 1 << 20).unwrap()), vec![vec![1, 1], vec![0, 3], vec![3, 0]]);
        let s = CongruenceSystem::new(vec![1], 2).unwrap();
        assert_eq!(elems(&hilbert_basis_bruteforce(&s, 2, 1 << 20).unwrap()), vec![vec![2]]);
        let s = CongruenceSystem::new(vec![1], 1).unwrap();
        assert_eq!(elems(&hilbert_basis_bruteforce(&s, 1, 1 << 20).unwrap()), vec![vec![1]]);
    }

    #[test]
    fn signed_oracle_example() {
        let s = CongruenceSystem::new(vec![1, 2, 3, -3], 0).unwrap();
        let b = hilbert_basis_bruteforce(&s, 5, 1 << 20).unwrap();
        assert_eq!(elems(&b), vec![vec![0, 0, 1, 1], vec![1, 1, 0, 1], vec![3, 0, 0, 1], vec![0, 3, 0, 2]]);
    }

    #[test]
    fn vector_count_and_budget() {
        assert_eq!(multichoose_upto(2, 3), 9);
        assert_eq!(multichoose_upto(1, 7), 7);
        let s = CongruenceSystem::kac(12).unwrap();
        assert!(matches!(hilbert_basis_bruteforce(&s, 24, 1000), Err(Error::Budget { .. })));
        assert!(matches!(hilbert_basis_bruteforce(&s, 0, 1000), Err(Error::Parameter(_))));
    }
}
