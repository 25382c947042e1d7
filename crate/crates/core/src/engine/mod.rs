//! Standard bases, normal forms, syzygies and complexes of free modules.

mod basis;
mod complex;
mod syzygy;

pub use basis::{ideal_basis, minimal_generators, standard_basis, NormalForm, StandardBasis};
pub use complex::{drop_component, minimalize, Complex, FreeLayout, Matrix};
pub use syzygy::{apply, column_degrees, minimal_syzygies, syzygies, verify_syzygies, SyzygyMatrix};
