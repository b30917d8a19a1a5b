//! Exact sparse multivariate polynomials over Q and GF(p).

mod coeff;
mod monomial;
mod order;
mod parse;
mod poly;

pub use coeff::{Coefficient, Field};
pub use monomial::{binomial, count_of_degree, Monomial};
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Polynomial, Ring};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable '{name}' at offset {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("{value} is not representable in GF({p})")]
    NotRepresentable { value: String, p: u64 },
    #[error("{0} is not a prime below 2^32")]
    BadPrime(u64),
    #[error("characteristic {p} too small for degree {degree}")]
    CharacteristicTooSmall { degree: u32, p: u64 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomials live in different rings")]
    RingMismatch,
}
