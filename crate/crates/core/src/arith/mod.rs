//! Exact arithmetic over prime fields: scalars, monomials, polynomials,
//! monomial orders and dense linear algebra.

pub mod field;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use field::{PrimeField, Scalar, DEFAULT_PRIME};
pub use linalg::{solve_linear, EchelonSpan, LinearSolution, Matrix};
pub use monomial::{Monomial, MAX_VARS};
pub use parse::{poly_parse, poly_print};
pub use poly::{OrderSpec, Poly, PolyRing};
