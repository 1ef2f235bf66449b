//! Exact counting of generating invariants for rank-1 torus and cyclic group
//! actions, plus dimension counting for invariants of binary forms.
//!
//! The crate is organized by subject:
//!
//! - [`congruence`]: Hilbert bases of the monoid of nonnegative solutions to a
//!   weighted linear congruence (or a weighted equation over the integers),
//!   zero-sum-free sets over `Z_n`.
//! - [`torus`]: the weight systems of binary forms and `G_m` acting on
//!   `k[x_1, ..., x_n, x_{-n}]`, the evaluation isomorphism to cyclic
//!   invariants, and the binomial upper bounds on generator counts.
//! - [`sl2`]: `dim S^d(V_n)^{SL_2}` through Gaussian binomial coefficients,
//!   Hermite reciprocity, and generator lower bounds.
//! - [`arith`]: partition numbers, totients and the Hardy-Ramanujan estimate.
//! - [`weyl`]: the Weyl dimension formula over exact rationals.
//! - [`verify`]: runnable verification suites for every counting claim.
//!
//! Counting kernels are generic over the integer type (see [`scalar`]); the
//! aliases below pick arbitrary precision, which is what the CLI uses.

pub mod arith;
mod bits;
mod pool;
pub mod congruence;
mod error;
pub mod scalar;
pub mod sl2;
pub mod torus;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use scalar::{Natural, RationalBase};

pub use congruence::{
    hilbert_basis, hilbert_basis_bruteforce, hilbert_basis_with, CongruenceSystem,
    ExponentVector, HilbertBasis, SearchOptions,
};
pub use torus::{BoundReport, Preset, WeightSystem};
pub use weyl::{DimensionPolynomial, RootSystemData};

/// Arbitrary-precision nonnegative count.
pub type Count = num_bigint::BigUint;
/// Arbitrary-precision signed integer, used where a formula can go negative.
pub type Integer = num_bigint::BigInt;
/// Exact rational number.
pub type Rational = num_rational::BigRational;
/// Root system over arbitrary-precision rationals.
pub type RootSystem = RootSystemData<Integer>;
/// Dimension polynomial with arbitrary-precision rational coefficients.
pub type WeylPolynomial = DimensionPolynomial<Integer>;
/// Partition cache over arbitrary-precision integers.
pub type PartitionTable = arith::PartitionCache<Count>;
/// Series table over arbitrary-precision integers.
pub type Sl2Table = sl2::SeriesTable<Count>;
