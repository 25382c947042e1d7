//! Graded algebras and modules: minimal resolutions, Betti tables, Hilbert
//! series, numeric invariants and purity classification.

mod analysis;
mod hilbert;
mod module;
mod resolution;
mod ring;

pub use analysis::{
    betti_analysis, numeric_invariants, poincare_from_hilbert, NumericInvariants, PoincareSeries,
    PurityReport,
};
pub use hilbert::{hilbert_series, monomial_numerator, series_from_betti, HilbertSeries};
pub use module::GradedModule;
pub use resolution::{minimal_graded_resolution, BettiTable, GradedResolution, PdimStatus};
pub use ring::GradedRing;
