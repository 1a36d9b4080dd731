//! Prime fields, monomials, monomial orders and sparse polynomials.

mod field;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use field::{frobenius_exponent, is_prime, PrimeField, MAX_CHARACTERISTIC};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::Polynomial;
pub use ring::{same_ring, RingContext};
