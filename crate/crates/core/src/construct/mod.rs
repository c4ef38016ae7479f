//! Module constructions: `φ`, the pushout `K_θ`, realization of
//! homogeneous varieties, idempotent splitting and the Carlson check.

pub mod carlson;
pub mod cut;
pub mod decompose;
pub mod univariate;

pub use carlson::{check_carlson, AssignedSummand, CarlsonReport};
pub use cut::{cut, phi, phi_of, pushout_cut, realize, ExtElement, Realization};
pub use decompose::{decompose, DecomposeConfig, Decomposition, Summand};
