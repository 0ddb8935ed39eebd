//! Longest increasing subsequences of random colored and signed permutations.
//!
//! The crate ties together three layers of machinery:
//!
//! * **Exact combinatorics** — Young diagrams ([`partitions`]), the m-core /
//!   m-quotient decomposition realizing the rim hook lattice as a product of
//!   Young lattices ([`quotient`]), and colored/signed permutations with
//!   their LIS statistics ([`permutations`]).
//! * **Exact probability** — the Plancherel distribution on tuples of Young
//!   diagrams and rational-arithmetic distributions of the longest increasing
//!   subsequence length ([`plancherel`]), plus Haar-unitary trace moments
//!   that must reproduce those distributions ([`unitary`]).
//! * **Asymptotics** — the Tracy-Widom distribution F(x) evaluated through a
//!   Painlevé II boundary-value solve, certified against an independent
//!   Airy-kernel Fredholm determinant, and the composite limit law
//!   F(m^{-2/3}x)^m for m-colored permutations ([`tracywidom`]).
//!
//! Everything stochastic takes an explicit seed; parallel estimators are
//! deterministic for a fixed (seed, worker count) pair.

pub mod error;
pub mod partitions;
pub mod permutations;
pub mod plancherel;
pub mod quotient;
pub mod rng;
pub mod tracywidom;
pub mod unitary;

mod gauss;

pub use error::Error;
pub use partitions::Partition;
pub use quotient::PartitionTuple;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
