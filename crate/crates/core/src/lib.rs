//! Twisted centralizer codes over prime fields.
//!
//! For a fixed `n × n` matrix `A` and twist `a`, the twisted centralizer
//! `C(A, a) = { B : AB = aBA }` is a subspace of `n × n` matrices. Reading
//! each `B` as a length-`n²` word (column-stacked) makes it a linear code.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: GF(p) scalars, dense matrices, RREF, kernels, Kronecker products.
//! - [`comb`]: combinatorial matrices `xJₙ + yIₙ`, their spectra and diagonalization.
//! - [`centralizer`]: the kernel solver for `C(A, a)`, a brute-force oracle, and
//!   transfer of centralizers along a similarity.
//! - [`code`]: `[N, k, d]` parameters, MDS check, encoding and nearest-codeword decoding.
//! - [`channel`]: fixed-weight symbol-error channel, exhaustive sweeps and Monte Carlo.

pub mod centralizer;
pub mod channel;
pub mod code;
pub mod comb;
mod error;
pub mod linalg;

pub use error::{Error, Result};

/// Largest supported matrix order `n`; codeword length is at most `n² = 4096`.
pub const MAX_ORDER: usize = 64;
