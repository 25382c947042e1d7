//! Herzog–Kühl coefficients and the Cohen–Macaulay comparisons.

use aggraded::hk::{cm_purity_report, cmd_equivalence_report, finite_pdim_consequences, hk_coefficients};
use aggraded::local::{LocalModule, LocalRing};
use aggraded::poly::PrimeField;

fn main() -> aggraded::Result<()> {
    for delta in [vec![0, 1, 2, 3], vec![0, 2, 4, 6], vec![0, 2, 3], vec![0, 3, 5, 6]] {
        let b: Vec<String> = hk_coefficients(&delta)?.b.iter().map(|x| x.to_string()).collect();
        println!("δ = {delta:?}: b = ({})", b.join(", "));
    }
    let rr = LocalRing::regular(PrimeField::default(), vec!["x".into(), "y".into(), "z".into()]);
    let r = rr.ring().clone();
    let gens = (0..3).map(|i| r.poly_times_unit(&r.ppow(&r.var(i), 2), 0)).collect();
    let m = LocalModule::new(rr, 1, gens)?;
    let rep = cmd_equivalence_report(&m, 8)?;
    println!(
        "conditions ({}, {}, {}), e(M) = {}, e(R)·β_0/p!·∏δ_i = {}",
        rep.condition_i, rep.condition_ii, rep.condition_iii, rep.multiplicity, rep.multiplicity_formula
    );
    let cm = cm_purity_report(&m, 8)?;
    println!("G(M) pure and Cohen–Macaulay: {}", cm.condition_i);
    let fp = finite_pdim_consequences(&m, 8)?;
    println!("pdim {} = pdim over A: {:?}; codim {}", fp.pdim_r, fp.hypothesis_holds, fp.codim);
    Ok(())
}
