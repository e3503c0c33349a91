//! Exact linear algebra over prime fields GF(p).

mod field;
mod matrix;
mod text;

pub use field::{is_prime, primes_up_to, Felt, Prime, MAX_PRIME};
pub use matrix::{Matrix, Rref, Vector};
pub use text::{format_matrix, parse_matrix};
