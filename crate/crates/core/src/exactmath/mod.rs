//! Exact arithmetic substrate: arbitrary-precision rationals and sparse
//! integer-coefficient polynomials in the six variables (a, b, g, d, q, u).

mod monomial;
mod poly;
mod rational;

pub use monomial::{Monomial, Var, NVARS};
pub use poly::GfPoly;
pub use rational::{parse_rational, rational_pow};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
