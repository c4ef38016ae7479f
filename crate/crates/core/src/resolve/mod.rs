//! Graded modules over `Q = P/(f)`: presentations, minimal free
//! resolutions, syzygy modules, the MCM test and finite-length models.

pub mod graded;
pub mod mcm;
pub mod presentation;
pub mod resolution;
pub mod ring;
pub mod vector_model;

pub use mcm::is_mcm;
pub use presentation::{present_module, GradedMatrix, ModulePresentation};
pub use resolution::{resolve_min, syzygy_module, Operators, Resolution};
pub use ring::{Ring, RingFile, RingSpec};
pub use vector_model::{vector_model, VectorModel};
