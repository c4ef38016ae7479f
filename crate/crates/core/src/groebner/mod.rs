//! Gröbner bases for ideals and submodules of graded free modules over a
//! polynomial ring, with quotient-ring computations routed through the
//! ambient ring by adjoining the defining relations.

pub mod buchberger;
pub mod ideal;
pub mod syzygy;
pub mod vector;

pub use buchberger::{
    basis_polys, groebner_basis, ideal_groebner_basis, leading_monomials_by_comp, GbBudget, GroebnerBasis,
};
pub use ideal::{
    dimension_from_basis, ideal_basis_any, ideal_contains, ideal_dimension, ideal_ops, radical_contains,
    radical_membership, IdealOp,
};
pub use syzygy::{is_syzygy, reduce_componentwise, syzygies};
pub use vector::{Term, VecOps, Vector};
