//! R/(X) over k[[t^3, t^4, t^5]]: F•* is not acyclic and G(M) is not pure.

use aggraded::fstar::{build_fstar, purity_verdict_from, verify_fstar};
use aggraded::local::{local_minimal_resolution, LocalModule, LocalRing};
use aggraded::poly::{OrderSpec, PolyRing, PrimeField};
use aggraded::session::parse_polynomial;

fn main() -> aggraded::Result<()> {
    let r = PolyRing::new(PrimeField::default(), vec!["X".into(), "Y".into(), "Z".into()], OrderSpec::local());
    let ideal = ["X*Z - Y^3", "Y*Z - X^4", "Z^2 - X^3*Y^2"]
        .iter()
        .map(|t| parse_polynomial(&r, t))
        .collect::<aggraded::Result<Vec<_>>>()?;
    let rr = LocalRing::from_ring(&r, ideal)?;
    let m = LocalModule::new(rr, 1, vec![r.poly_times_unit(&r.var(0), 0)])?;
    let cutoff = 6;
    let res = local_minimal_resolution(&m, cutoff)?;
    println!("local Betti numbers {:?}, twists {:?}", res.betti, res.delta);
    let fs = build_fstar(&res)?;
    println!("F•* differentials {:?}", fs.render());
    let v = verify_fstar(&fs, cutoff)?;
    if let Some(w) = &v.homology_witness {
        println!("homology at position {}: {}", w.position, w.class);
    }
    println!("cokernel is G(M): {}", v.coker_is_gm);
    let p = purity_verdict_from(&m, &res, cutoff)?;
    println!("verdict {:?}", p.verdict);
    if let Some(w) = p.route_a.witness {
        println!("β_{} of G(M) lives in degrees {:?}", w.homological_degree, w.degrees);
    }
    print!("{}", p.graded_betti.render());
    Ok(())
}
