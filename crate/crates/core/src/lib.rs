//! Associated primes of powers of the Alexander dual of uniform hypergraph
//! edge ideals.
//!
//! Everything here is monomial, so the algebra reduces to exact integer
//! combinatorics on exponent vectors:
//!
//! * [`hypergraph`] holds the m-uniform hypergraph model, structural
//!   predicates and the family constructions.
//! * [`cover`] works with k-covers: minimal vertex covers, decomposition of a
//!   cover into a sum of 1-covers, and the 2-cover attached to an independent
//!   set.
//! * [`ideal`] is a small monomial-ideal engine (minimalization, membership,
//!   colon, intersection, powers) plus edge ideals and Alexander duals.
//! * [`ass`] computes associated primes, both through the cover-witness
//!   search and through an independent colon-ideal oracle.
//! * [`audit`] bundles the cross-checks that tie the two routes together.
//!
//! Vertices and variables are 1-indexed throughout, matching `x_1..x_n`.

pub mod ass;
pub mod audit;
pub mod cover;
pub mod error;
pub mod hypergraph;
pub mod ideal;
pub mod rng;

pub use ass::{AssProfile, MonomialPrime, WitnessedPrime};
pub use cover::CoverVector;
pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, VertexSet};
pub use ideal::{Monomial, MonomialIdeal};

/// Default cap on the number of lattice points an exhaustive scan may visit.
pub const DEFAULT_MAX_SPACE: u128 = 1 << 24;

/// Returns `base^exp`, saturating at `u128::MAX`.
pub(crate) fn lattice_size(base: u128, exp: usize) -> u128 {
    let mut size: u128 = 1;
    for _ in 0..exp {
        size = size.saturating_mul(base);
    }
    size
}

pub(crate) fn guard(what: &'static str, size: u128, limit: u128) -> Result<()> {
    if size > limit {
        return Err(Error::GuardExceeded { what, size, limit });
    }
    Ok(())
}
