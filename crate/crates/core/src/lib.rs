//! Support varieties of modules over graded complete intersections.
//!
//! The pipeline runs from exact arithmetic ([`arith`]) through Gröbner
//! bases ([`groebner`]), minimal free resolutions ([`resolve`]) and
//! Eisenbud operators ([`cohomology`]) to the module constructions in
//! [`construct`]: cutting a variety by a cohomology operator, realizing a
//! homogeneous variety, and splitting modules whose variety is disconnected.

pub mod arith;
pub mod cli;
pub mod cohomology;
pub mod construct;
pub mod error;
pub mod groebner;
pub mod resolve;

pub use error::{Error, ErrorKind, Result};
