//! The graded complex `F•*` of initial forms of a minimal resolution, the
//! purity verdict, filtration checks and fibre products.

mod complex;
mod fibre;
mod purity;

pub use complex::{build_fstar, verify_fstar, FStarComplex, FStarVerdict, HomologyWitness, PurityConclusion};
pub use fibre::{fiber_product_presentation, koszul_fp_check, KoszulFpReport};
pub use purity::{purity_verdict, purity_verdict_from, syzygy_filtration_check, FiltrationRow, Purity, PurityVerdict};

#[cfg(test)]
mod tests;
