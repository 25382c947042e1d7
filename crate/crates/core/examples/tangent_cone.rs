//! Tangent cone of the semigroup ring k[[t^3, t^4, t^5]].

use aggraded::local::LocalRing;
use aggraded::poly::{OrderSpec, PolyRing, PrimeField};
use aggraded::session::parse_polynomial;

fn main() -> aggraded::Result<()> {
    let r = PolyRing::new(PrimeField::default(), vec!["X".into(), "Y".into(), "Z".into()], OrderSpec::local());
    let ideal = ["X*Z - Y^3", "Y*Z - X^4", "Z^2 - X^3*Y^2"]
        .iter()
        .map(|t| parse_polynomial(&r, t))
        .collect::<aggraded::Result<Vec<_>>>()?;
    let rr = LocalRing::from_ring(&r, ideal)?;
    let a = rr.associated_graded();
    let cone: Vec<String> = rr.tangent_cone().iter().map(|p| a.ring().fmt_poly(p)).collect();
    println!("in(I) = <{}>", cone.join(", "));
    for f in ["X", "X*Z", "Z^2", "Y + Z"] {
        let (nu, inf) = rr.order_in_quotient(&parse_polynomial(&r, f)?)?;
        println!("ν({f}) = {nu}, initial form {}", a.ring().fmt_poly(&inf));
    }
    Ok(())
}
