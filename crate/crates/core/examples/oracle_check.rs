//! Dense truncated models as an independent check on orders and N*.

use aggraded::local::{submodule_initial, LocalModule, LocalRing};
use aggraded::oracle::{compare_layer, fit_truncation, stable, TruncatedModel};
use aggraded::poly::{OrderSpec, PolyRing, PrimeField};
use aggraded::session::parse_polynomial;

fn main() -> aggraded::Result<()> {
    let r = PolyRing::new(PrimeField::default(), vec!["X".into(), "Y".into(), "Z".into()], OrderSpec::local());
    let ideal = ["X*Z - Y^3", "Y*Z - X^4", "Z^2 - X^3*Y^2"]
        .iter()
        .map(|t| parse_polynomial(&r, t))
        .collect::<aggraded::Result<Vec<_>>>()?;
    let rr = LocalRing::from_ring(&r, ideal)?;
    let ring_model = TruncatedModel::for_ring(&rr, 8)?;
    println!("dim m^j/m^(j+1): {:?}", ring_model.layer_dims());
    let m = LocalModule::new(rr, 1, vec![r.poly_times_unit(&r.var(0), 0)])?;
    let gens = m.generators().to_vec();
    let t = fit_truncation(&gens, 4, 0, |t| TruncatedModel::for_free(&m, t))?;
    let degrees = stable(t, |t| Ok(TruncatedModel::for_free(&m, t)?.nstar_dims(&gens, 4)?.generator_degrees()))?;
    println!("N* degrees: oracle {degrees:?}, standard basis {:?}", submodule_initial(&m)?.generator_degrees);
    let model = TruncatedModel::for_free(&m, t)?;
    for j in 1..=4 {
        let c = compare_layer(&model, &gens, 1, j)?;
        println!("N ∩ m^{j}F = m^{}N: {}", j - 1, c.holds());
    }
    Ok(())
}
