//! The squares module over k[[x1,x2,x3]] ×_k k[[y1,y2,y3]].

use aggraded::fstar::{fiber_product_presentation, koszul_fp_check, purity_verdict};
use aggraded::local::{LocalModule, LocalRing};
use aggraded::poly::PrimeField;

fn main() -> aggraded::Result<()> {
    let f = PrimeField::default();
    let r1 = LocalRing::regular(f, vec!["x1".into(), "x2".into(), "x3".into()]);
    let r2 = LocalRing::regular(f, vec!["y1".into(), "y2".into(), "y3".into()]);
    let rr = fiber_product_presentation(&r1, &r2)?;
    let r = rr.ring().clone();
    let ideal: Vec<String> = rr.ideal().iter().map(|p| r.fmt_poly(p)).collect();
    println!("R = k[[x, y]]/({})", ideal.join(", "));
    let mut gens: Vec<_> = (0..3).map(|i| r.poly_times_unit(&r.ppow(&r.var(i), 2), 0)).collect();
    gens.extend((3..6).map(|i| r.poly_times_unit(&r.var(i), 0)));
    let m = LocalModule::new(rr, 1, gens)?;
    let rep = koszul_fp_check(&m, 3)?;
    println!("Ω_2 linear: {}, certifies not pure: {}", rep.omega2_linear, rep.certifies_not_pure);
    if let Some((i, degs)) = rep.omega2_witness {
        println!("β_{i} of G(M) in degrees {degs:?}");
    }
    println!("purity verdict {:?}", purity_verdict(&m, 3)?.verdict);
    Ok(())
}
