//! Exact-arithmetic kernel for ideals of adjacent minors of generic matrices.
//!
//! The crate builds multivariate polynomials over the rationals or a prime
//! field, runs Buchberger's algorithm with the normal selection strategy, and
//! implements the combinatorial families that index the minimal primes of
//! adjacent-minor ideals: prime partitions of a grid, prime sequences of
//! column intervals, and the variable-pair specifications for 2x2x...x2xm
//! arrays. Everything here is deterministic and IO-free; the companion CLI
//! crate carries file formats and reporting.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod field;
pub mod groebner;
pub mod matrix;
pub mod minors;
pub mod monomial;
pub mod multidim;
pub mod order;
pub mod partitions;
pub mod poly;
pub mod ring;
pub mod sequences;
pub mod text;

pub use error::Error;
pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{GroebnerBasis, Ideal, MonomialIdeal, DEFAULT_PAIR_BUDGET};
pub use matrix::NumericMatrix;
pub use monomial::Monomial;
pub use multidim::Prime22m;
pub use order::MonomialOrder;
pub use partitions::{GridPartition, Rectangle, Violation};
pub use poly::Polynomial;
pub use ring::{Ring, Shape, VarId, VarKind};
pub use sequences::{GammaPoset, Interval, PhiPoint, PrimeSequence};

// Downstream crates speak the same exact-number types.
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
