//! Equigeneration of N* by generator degrees and by the intersection test.

use aggraded::local::{equigenerated_check, LocalModule, LocalRing};
use aggraded::poly::{OrderSpec, PolyRing, PrimeField};
use aggraded::session::parse_polynomial;

fn cyclic(rr: &LocalRing, gens: &[&str]) -> aggraded::Result<LocalModule> {
    let r = rr.ring();
    let cols = gens
        .iter()
        .map(|g| Ok(r.poly_times_unit(&parse_polynomial(r, g)?, 0)))
        .collect::<aggraded::Result<Vec<_>>>()?;
    LocalModule::new(rr.clone(), 1, cols)
}

fn main() -> aggraded::Result<()> {
    let plane = LocalRing::regular(PrimeField::default(), vec!["x".into(), "y".into()]);
    let r = PolyRing::new(PrimeField::default(), vec!["X".into(), "Y".into(), "Z".into()], OrderSpec::local());
    let ideal = ["X*Z - Y^3", "Y*Z - X^4", "Z^2 - X^3*Y^2"]
        .iter()
        .map(|t| parse_polynomial(&r, t))
        .collect::<aggraded::Result<Vec<_>>>()?;
    let semigroup = LocalRing::from_ring(&r, ideal)?;
    let cases = [
        ("(x^2, xy) in k[[x,y]]", cyclic(&plane, &["x^2", "x*y"])?),
        ("(x + y^2, y^3) in k[[x,y]]", cyclic(&plane, &["x + y^2", "y^3"])?),
        ("(X) in k[[t^3,t^4,t^5]]", cyclic(&semigroup, &["X"])?),
    ];
    for (name, m) in cases {
        let rep = equigenerated_check(&m, 6)?;
        println!(
            "{name}: s = {}, N* degrees {:?}, equigenerated {}, N ∩ m^(s+1)F = mN {}, μ(N*) = {}, μ(N) = {}",
            rep.s, rep.path_a_degrees, rep.verdict, rep.intersection_is_mn, rep.mu_nstar, rep.mu_n
        );
        if let Some(w) = rep.witness {
            println!("  first failing layer {:?}: {w}", rep.witness_layer);
        }
    }
    Ok(())
}
