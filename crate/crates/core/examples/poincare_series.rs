//! Poincaré series of the residue field of a graded algebra.

use aggraded::graded::{minimal_graded_resolution, poincare_from_hilbert, GradedModule, GradedRing};
use aggraded::poly::{OrderSpec, PolyRing, PrimeField};
use aggraded::session::parse_polynomial;

fn main() -> aggraded::Result<()> {
    let r = PolyRing::new(PrimeField::default(), vec!["x".into(), "y".into()], OrderSpec::global());
    let ideal = vec![parse_polynomial(&r, "x^2")?, parse_polynomial(&r, "y^2")?];
    let a = GradedRing::from_ring(&r, ideal)?;
    let k = GradedModule::residue_field(a);
    let res = minimal_graded_resolution(&k, 5)?;
    print!("{}", res.betti.render());
    let p = poincare_from_hilbert(&k, 5)?;
    println!("P(t) = {:?} + …", p.coefficients);
    if let Some(c) = p.closed_form {
        println!("closed form {c}");
    }
    Ok(())
}
