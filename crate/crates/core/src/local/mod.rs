//! Local rings at the origin, initial forms, associated graded objects and
//! minimal local resolutions.

mod equigen;
mod lazard;
mod module;
mod resolution;
mod ring;

pub use equigen::{equigenerated_check, EquigenReport};
pub use module::{assoc_graded_module, submodule_initial, InitialData, LocalModule};
pub use resolution::{
    initial_matrix, local_minimal_resolution, minimal_generator_count, LocalResolution, ResolutionStatus,
};
pub use ring::{tangent_cone, LocalRing};
