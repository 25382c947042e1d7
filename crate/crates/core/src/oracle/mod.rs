//! Truncated linear-algebra models of `R/mᵗ` and `F/mᵗF`, used to verify
//! orders, layer dimensions and filtration intersections independently of
//! standard bases.

mod linalg;
mod model;

pub use linalg::{rank, Echelon};
pub use model::{
    build_model, build_model_with_bound, compare_layer, filtration_intersection, fit_truncation, stable,
    window_truncation,
    GradedDims, LayerComparison, Subspace, TruncatedModel, DEFAULT_SIZE_BOUND,
};
