//! Exact workbench for the symmetric group algebra with polynomial
//! coefficients: Young's orthogonal matrix units from tableau
//! combinatorics, the quasi-idempotents `Omega_lambda`, staircase
//! specializations, and code polynomials — everything verified by exact
//! identities, no floating point anywhere.

pub mod algebra;
pub mod checks;
pub mod error;
pub mod json;
pub mod omega;
pub mod pair;
pub mod perm;
pub mod poly;
pub mod scalar;
pub mod specht;
pub mod tableau;
pub mod units;

pub use algebra::AlgebraElement;
pub use error::{Error, Result};
pub use pair::PairAlgebraElement;
pub use perm::Permutation;
pub use poly::{Monomial, Polynomial, VarFamily};
pub use scalar::{Rational, RadicalRational};
pub use tableau::{Partition, StandardTableau};
