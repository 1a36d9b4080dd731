//! Frobenius-theoretic invariants of quotient rings `S/I` over prime fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: the prime field, monomials, monomial orders and sparse polynomials.
//! * [`groebner`]: ideals, reduced Gröbner bases, membership, intersection and colon.
//! * [`frobenius`]: bracket powers, e-th root ideals, the trace map, Fedder's
//!   criterion, compatibility of ideals with a Cartier map and Cartier-stable closures.
//! * [`stanley_reisner`]: simplicial complexes and the combinatorial fast path for
//!   square-free monomial ideals.
//! * [`quotient`]: ideals of `S/I` presented by preimages, with minimal generator counts.
//! * [`cli`]: the session file grammar and the command surface of the `fsplit` binary.

pub mod cli;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod poly;
pub mod quotient;
pub mod stanley_reisner;

pub use error::{Error, Result};
pub use frobenius::{CartierMap, FedderReport, FrobeniusPower};
pub use groebner::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial, PrimeField, RingContext};
pub use quotient::QuotientIdeal;
pub use stanley_reisner::{CompatiblePrimesReport, FVectorReport, SimplicialComplex};
