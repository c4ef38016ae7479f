//! Eisenbud operators, the `H`-module `E(M, k)` and support varieties.

pub mod ext;
pub mod operators;
pub mod support;
pub mod variety;

pub use ext::{ext_k_module, ExtKModule};
pub use operators::{lift_and_operators, operator_identity_holds};
pub use support::{candidate, complexity, complexity_of, support_variety, SupportVariety, VarietyConfig};
pub use variety::{annihilator_window, VarietyIdeal};
