//! Hilbert series and numeric invariants of a standard graded algebra.

use aggraded::graded::{hilbert_series, numeric_invariants, GradedModule, GradedRing};
use aggraded::poly::{OrderSpec, PolyRing, PrimeField};
use aggraded::session::parse_polynomial;

fn main() -> aggraded::Result<()> {
    let r = PolyRing::new(PrimeField::default(), vec!["x".into(), "y".into(), "z".into()], OrderSpec::global());
    let ideal = ["x*z", "y*z", "z^2", "y^4"]
        .iter()
        .map(|t| parse_polynomial(&r, t))
        .collect::<aggraded::Result<Vec<_>>>()?;
    let a = GradedRing::from_ring(&r, ideal)?;
    let m = GradedModule::ring_itself(a);
    let h = hilbert_series(&m)?;
    println!("H(z) = {h}");
    println!("H(0..8) = {:?}", h.values(8));
    let inv = numeric_invariants(&m, 6)?;
    println!(
        "dim {}, depth {}, cmd {}, e {}, pdim over the cover {}",
        inv.dim, inv.depth, inv.cmd, inv.multiplicity, inv.pdim_cover
    );
    Ok(())
}
