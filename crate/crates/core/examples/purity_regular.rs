//! S/(x1^2, x2^2, x3^2) over a regular local ring: a pure resolution.

use aggraded::fstar::purity_verdict;
use aggraded::local::{LocalModule, LocalRing};
use aggraded::poly::PrimeField;

fn main() -> aggraded::Result<()> {
    let rr = LocalRing::regular(PrimeField::default(), vec!["x1".into(), "x2".into(), "x3".into()]);
    let r = rr.ring().clone();
    let gens = (0..3).map(|i| r.poly_times_unit(&r.ppow(&r.var(i), 2), 0)).collect();
    let m = LocalModule::new(rr, 1, gens)?;
    let p = purity_verdict(&m, 8)?;
    println!("verdict {:?}, degree type {:?}", p.verdict, p.delta);
    println!("β over R {:?}", p.local_betti);
    for (i, (over_r, over_a)) in &p.betti_transfer {
        println!("  position {i}: β over R {over_r}, over A {over_a}");
    }
    print!("{}", p.graded_betti.render());
    Ok(())
}
