mod common;

use aggraded::fstar::Purity;
use aggraded::hk::{
    cm_purity_report, cmd_equivalence_report, finite_pdim_consequences, hk_coefficients, local_depth, Rational,
};
use aggraded::local::LocalModule;
use aggraded::Error;
use common::{corpus, cyclic, local_ring, semigroup_module, semigroup_ring, squares_module, CUTOFF};
use proptest::prelude::*;

fn binomial(n: i64, k: i64) -> i64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

#[test]
fn equally_spaced_degree_types_give_binomials() {
    for p in 1..=8i64 {
        for step in 1..=3 {
            let delta: Vec<i64> = (0..=p).map(|i| step * i).collect();
            let b = hk_coefficients(&delta).unwrap().b;
            let expected: Vec<Rational> = (1..=p).map(|i| r(binomial(p, i))).collect();
            assert_eq!(b, expected, "p = {p}, step = {step}");
        }
    }
}

#[test]
fn invalid_degree_types_are_rejected() {
    for bad in [&[][..], &[0], &[1, 2], &[0, 3, 3], &[0, 4, 2]] {
        assert!(matches!(hk_coefficients(bad), Err(Error::InvalidDegreeType(_))));
    }
}

#[test]
fn squares_satisfy_all_three_conditions() {
    let rep = cmd_equivalence_report(&squares_module(), 8).unwrap();
    assert_eq!(rep.coefficients.delta, vec![0, 2, 4, 6]);
    assert_eq!(rep.coefficients.b, vec![r(3), r(3), r(1)]);
    assert_eq!(rep.betti, vec![1, 3, 3, 1]);
    assert!(rep.condition_i && rep.condition_ii && rep.condition_iii);
    assert_eq!(rep.multiplicity, 8);
    assert_eq!(rep.multiplicity_formula, r(8));
    assert!(rep.multiplicity_identity_holds);
    let inv = &rep.invariants;
    assert_eq!((inv.dim_m, inv.depth_m, inv.cmd_m), (0, 0, 0));
    assert_eq!((inv.dim_r, inv.depth_r, inv.cmd_r), (3, 3, 0));
    assert_eq!((inv.e_m, inv.e_r, inv.codim_m), (8, 1, 3));
}

#[test]
fn mixed_degree_ideal_fails_all_three() {
    let plane = local_ring(&["x", "y"], &[]);
    let rep = cmd_equivalence_report(&cyclic(&plane, &["x^2", "x*y"]), 8).unwrap();
    assert_eq!(rep.coefficients.b, vec![r(3), r(2)]);
    assert_eq!(rep.betti, vec![1, 2, 1]);
    assert!(!rep.condition_i && !rep.condition_ii && !rep.condition_iii);
    assert_eq!((rep.invariants.dim_m, rep.invariants.depth_m), (1, 0));
}

#[test]
fn a_tangent_cone_with_mixed_degrees_is_rejected() {
    // in(x^2 + y^3, xy) = (x^2, xy, y^4)
    let plane = local_ring(&["x", "y"], &[]);
    let m = cyclic(&plane, &["x^2 + y^3", "x*y"]);
    assert!(matches!(cmd_equivalence_report(&m, 8), Err(Error::Precondition(_))));
    let fp = finite_pdim_consequences(&m, 8).unwrap();
    assert_eq!((fp.pdim_r, fp.codim), (2, 2));
    assert_eq!(fp.hypothesis_holds, Some(true));
    assert!(fp.module_cm);
    assert_eq!(fp.ring_cm_verdict, Some(true));
}

#[test]
fn not_pure_modules_are_rejected() {
    assert!(matches!(cmd_equivalence_report(&semigroup_module(), 6), Err(Error::Precondition(_))));
}

#[test]
fn cm_purity_on_examples() {
    let cm = cm_purity_report(&squares_module(), 8).unwrap();
    assert!(cm.condition_i && cm.condition_ii && cm.condition_iii);
    assert!(cm.acyclic && cm.betti_equations && cm.multiplicity_formula);
    assert_eq!(cm.gm_pure, Purity::Pure);

    let cm = cm_purity_report(&semigroup_module(), 6).unwrap();
    assert_eq!(cm.gm_pure, Purity::NotPure);
    assert!(!cm.acyclic);
    assert!(!cm.condition_i && !cm.condition_ii && !cm.condition_iii);

    let plane = local_ring(&["x", "y"], &[]);
    let cm = cm_purity_report(&LocalModule::residue_field(plane), 6).unwrap();
    assert!(cm.condition_i && cm.condition_ii && cm.condition_iii);
}

#[test]
fn finite_pdim_consequences_on_examples() {
    let fp = finite_pdim_consequences(&squares_module(), 8).unwrap();
    assert_eq!(fp.hypothesis_holds, Some(true));
    assert_eq!((fp.pdim_r, fp.codim), (3, 3));
    assert_eq!(fp.codim_le_pdim, Some(true));
    assert_eq!(fp.ring_cm_verdict, Some(true));

    let fp = finite_pdim_consequences(&semigroup_module(), 5).unwrap();
    assert_eq!(fp.pdim_r, 1);
    assert_eq!(fp.hypothesis_holds, None);
    assert_eq!(fp.codim_le_pdim, None);

    let plane = local_ring(&["x", "y"], &[]);
    let fp = finite_pdim_consequences(&cyclic(&plane, &["x^2", "x*y"]), 6).unwrap();
    assert_eq!(fp.hypothesis_holds, Some(true));
    assert_eq!((fp.pdim_r, fp.codim), (2, 1));
    assert!(!fp.module_cm);
    assert_eq!(fp.ring_cm_verdict, None);
}

#[test]
fn depth_of_rings() {
    assert_eq!(local_depth(&local_ring(&["x", "y", "z"], &[])).unwrap(), 3);
    assert_eq!(local_depth(&local_ring(&["x", "y"], &["x*y"])).unwrap(), 1);
    assert_eq!(local_depth(&local_ring(&["x", "y"], &["x^2", "x*y"])).unwrap(), 0);
    assert_eq!(local_depth(&semigroup_ring()).unwrap(), 1);
}

#[test]
fn equivalence_holds_across_the_corpus() {
    for (name, m) in corpus() {
        match cmd_equivalence_report(&m, CUTOFF) {
            Ok(rep) => {
                let c = [rep.condition_i, rep.condition_ii, rep.condition_iii];
                assert!(c.iter().all(|x| *x == c[0]), "{name}");
                if c[0] {
                    assert!(rep.multiplicity_identity_holds, "{name}");
                }
            }
            Err(Error::Precondition(_)) | Err(Error::Inconclusive { .. }) => {}
            Err(e) => panic!("{name}: {e}"),
        }
    }
}

proptest! {
    #[test]
    fn coefficients_solve_the_defining_equations(
        gaps in prop::collection::vec(1i64..6, 1..=7)
    ) {
        let delta: Vec<i64> = std::iter::once(0)
            .chain(gaps.iter().scan(0, |s, g| { *s += g; Some(*s) }))
            .collect();
        let p = delta.len() - 1;
        let hk = hk_coefficients(&delta).unwrap();
        let beta: Vec<Rational> = std::iter::once(r(1)).chain(hk.b.iter().copied()).collect();
        for k in 0..p as u32 {
            let sum: Rational = (0..=p)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    beta[i] * r(sign * delta[i].pow(k))
                })
                .sum();
            prop_assert_eq!(sum, r(0), "k = {}", k);
        }
        prop_assert!(hk.b.iter().all(|b| *b > r(0)));
    }
}
