use super::*;
use crate::local::{local_minimal_resolution, LocalModule, LocalRing};
use crate::poly::{OrderSpec, PolyRing, PrimeField};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn semigroup() -> LocalRing {
    let r = PolyRing::new(PrimeField::default(), names(&["X", "Y", "Z"]), OrderSpec::local());
    let (x, y, z) = (r.var(0), r.var(1), r.var(2));
    let gens = vec![
        r.psub(&r.pmul(&x, &z), &r.ppow(&y, 3)),
        r.psub(&r.pmul(&y, &z), &r.ppow(&x, 4)),
        r.psub(&r.pmul(&z, &z), &r.pmul(&r.ppow(&x, 3), &r.ppow(&y, 2))),
    ];
    LocalRing::from_ring(&r, gens).unwrap()
}

fn x_module() -> LocalModule {
    let rr = semigroup();
    let r = rr.ring().clone();
    LocalModule::new(rr, 1, vec![r.poly_times_unit(&r.var(0), 0)]).unwrap()
}

fn squares() -> LocalModule {
    let rr = LocalRing::regular(PrimeField::default(), names(&["x1", "x2", "x3"]));
    let r = rr.ring().clone();
    let gens = (0..3).map(|i| r.poly_times_unit(&r.ppow(&r.var(i), 2), 0)).collect();
    LocalModule::new(rr, 1, gens).unwrap()
}

#[test]
fn semigroup_fstar_has_homology_at_one() {
    let res = local_minimal_resolution(&x_module(), 8).unwrap();
    let fs = build_fstar(&res).unwrap();
    assert_eq!(fs.delta, vec![0, 1]);
    assert_eq!(fs.render(), vec![vec![vec!["X".to_string()]]]);
    let v = verify_fstar(&fs, 8).unwrap();
    assert!(v.is_complex);
    assert!(!v.coker_is_gm);
    let w = v.homology_witness.unwrap();
    assert_eq!(w.position, 1);
    assert_eq!(w.class, "[Z]");
    assert!(matches!(v.purity_conclusion, PurityConclusion::NotPure { .. }));
}

#[test]
fn semigroup_is_not_pure_by_both_routes() {
    let p = purity_verdict(&x_module(), 6).unwrap();
    assert_eq!(p.verdict, Purity::NotPure);
    let w = p.route_a.witness.unwrap();
    assert_eq!((w.homological_degree, w.degrees), (1, vec![1, 3]));
}

#[test]
fn squares_are_pure_with_transfer() {
    let p = purity_verdict(&squares(), 8).unwrap();
    assert_eq!(p.verdict, Purity::Pure);
    assert_eq!(p.delta, vec![0, 2, 4, 6]);
    assert_eq!(p.route_a.degree_type, vec![0, 2, 4, 6]);
    let transfer: Vec<usize> = p.betti_transfer.values().map(|v| v.0).collect();
    assert_eq!(transfer, vec![1, 3, 3, 1]);
    assert!(p.route_b.coker_is_gm && p.route_b.is_minimal && p.route_b.fully_acyclic);
}

#[test]
fn free_module_is_trivially_pure() {
    let rr = LocalRing::regular(PrimeField::default(), names(&["x", "y"]));
    let p = purity_verdict(&LocalModule::free(rr, 2), 4).unwrap();
    assert_eq!(p.verdict, Purity::Pure);
    assert!(p.route_b.coker_is_gm);
}

#[test]
fn filtration_for_x_fails_at_three() {
    let rows = syzygy_filtration_check(&x_module(), 1, 1..=4, 8).unwrap();
    let holds: Vec<bool> = rows.iter().map(|r| r.holds).collect();
    assert_eq!(holds[..3], [true, true, false]);
    assert!(rows[2].witness.is_some());
}

#[test]
fn filtration_for_maximal_ideal_holds() {
    let rr = LocalRing::regular(PrimeField::default(), names(&["x", "y"]));
    let m = LocalModule::residue_field(rr);
    let rows = syzygy_filtration_check(&m, 1, 1..=4, 6).unwrap();
    assert!(rows.iter().all(|r| r.holds));
}

#[test]
fn fibre_product_of_lines_is_the_node() {
    let f = PrimeField::default();
    let r1 = LocalRing::regular(f, names(&["x"]));
    let r2 = LocalRing::regular(f, names(&["x"]));
    let fp = fiber_product_presentation(&r1, &r2).unwrap();
    assert_eq!(fp.names(), &["x".to_string(), "x'".to_string()]);
    assert_eq!(fp.tangent_cone().len(), 1);
    assert_eq!(fp.ring().fmt_poly(&fp.tangent_cone()[0]), "x*x'");
}

#[test]
fn residue_field_of_node_has_linear_second_syzygy() {
    let f = PrimeField::default();
    let fp = fiber_product_presentation(
        &LocalRing::regular(f, names(&["x"])),
        &LocalRing::regular(f, names(&["y"])),
    )
    .unwrap();
    let rep = koszul_fp_check(&LocalModule::residue_field(fp), 5).unwrap();
    assert!(rep.omega2_linear);
    assert!(!rep.certifies_not_pure);
}
