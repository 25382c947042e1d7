mod common;

use aggraded::local::minimal_generator_count;
use aggraded::oracle::{
    build_model_with_bound, compare_layer, filtration_intersection, fit_truncation, stable, window_truncation, TruncatedModel,
};
use aggraded::poly::PrimeField;
use aggraded::Error;
use common::{col, corpus, cyclic, local_ring, names, poly, random, semigroup_module, semigroup_ring};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn binomial(n: usize, k: usize) -> usize {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

#[test]
fn regular_rings_have_all_monomials() {
    for n in 1..=4 {
        let vars: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
        let m = TruncatedModel::for_ring(&local_ring(&refs, &[]), 5).unwrap();
        let expected: Vec<usize> = (0..5).map(|d| binomial(n + d - 1, d)).collect();
        assert_eq!(m.layer_dims(), expected.as_slice());
        assert_eq!(m.dim(), expected.iter().sum::<usize>());
    }
}

#[test]
fn semigroup_ring_layers_follow_its_tangent_cone() {
    // A = k[x,y,z]/(xz, yz, z^2, y^4) counted by hand
    let m = TruncatedModel::for_ring(&semigroup_ring(), 7).unwrap();
    assert_eq!(m.layer_dims(), &[1, 3, 3, 4, 4, 4, 4]);
    let g = m.graded_dims(5).unwrap();
    assert_eq!(g.hilbert, vec![1, 3, 3, 4, 4, 4]);
    assert_eq!(g.generator_degrees(), vec![0]);
}

#[test]
fn orders_in_the_semigroup_ring() {
    let rr = semigroup_ring();
    let m = TruncatedModel::for_ring(&rr, 8).unwrap();
    let r = rr.ring();
    assert_eq!(m.order_poly(&poly(r, "X")), Some(1));
    assert_eq!(m.order_poly(&poly(r, "X*Z")), Some(3));
    assert_eq!(m.order_poly(&poly(r, "Z^2")), Some(5));
    assert_eq!(m.order_poly(&poly(r, "X*Z - Y^3")), None);
    assert!(m.is_member(&col(r, &["Y*Z - X^4"])));
    for f in ["X*Z", "Z^2", "Y + Z", "X^2*Y"] {
        let p = poly(r, f);
        let (nu, _) = rr.order_in_quotient(&p).unwrap();
        assert_eq!(m.order_poly(&p), Some(nu), "{f}");
    }
    // Y^3 is the initial form of XZ
    assert!(m.same_initial_form(&col(r, &["X*Z"]), &col(r, &["Y^3"]), 3));
    assert!(!m.same_initial_form(&col(r, &["X*Z"]), &col(r, &["X*Z"]), 2));
}

#[test]
fn module_models() {
    let plane = local_ring(&["x", "y"], &[]);
    let m = TruncatedModel::for_module(&cyclic(&plane, &["x^2", "x*y"]), 6).unwrap();
    assert_eq!(m.layer_dims(), &[1, 2, 1, 1, 1, 1]);
    let free = TruncatedModel::for_free(&cyclic(&plane, &["x"]), 4).unwrap();
    assert_eq!(free.layer_dims(), &[1, 2, 3, 4]);
}

#[test]
fn nstar_of_x_in_the_semigroup_ring() {
    let m = semigroup_module();
    let gens = m.generators().to_vec();
    let model = TruncatedModel::for_free(&m, 8).unwrap();
    let ns = model.nstar_dims(&gens, 5).unwrap();
    // N* = (x, y^3) in A
    assert_eq!(ns.generator_degrees(), vec![1, 3]);
    assert_eq!(ns.hilbert, vec![0, 1, 2, 4, 4, 4]);
    assert_eq!(model.mu(&gens).unwrap(), 1);
}

#[test]
fn filtration_intersections_of_x() {
    let m = semigroup_module();
    let gens = m.generators().to_vec();
    let model = TruncatedModel::for_free(&m, 9).unwrap();
    let whole = filtration_intersection(&model, &gens, 0).unwrap().len();
    let dims: Vec<usize> = (0..=4).map(|i| filtration_intersection(&model, &gens, i).unwrap().len()).collect();
    assert_eq!(dims[0], whole);
    assert_eq!(dims[0], dims[1]);
    assert!(dims.windows(2).all(|w| w[0] >= w[1]));
    let c = compare_layer(&model, &gens, 1, 3).unwrap();
    assert!(!c.holds());
    assert_eq!(c.intersection_dim, c.power_dim + 1);
    let w = c.witness.unwrap();
    assert_eq!(model.order(&w), Some(3));
}

#[test]
fn validity_window_is_enforced() {
    let m = semigroup_module();
    let gens = m.generators().to_vec();
    assert_eq!(window_truncation(&gens, 3), 6);
    let small = TruncatedModel::for_free(&m, 5).unwrap();
    assert!(matches!(compare_layer(&small, &gens, 1, 3), Err(Error::OracleWindow(_))));
    assert!(matches!(small.graded_dims(5), Err(Error::OracleWindow(_))));
    let fine = TruncatedModel::for_free(&m, 6).unwrap();
    assert!(compare_layer(&fine, &gens, 1, 3).is_ok());
}

#[test]
fn window_accounts_for_hidden_orders() {
    // X*Z^2 = X^4*Y^2 in the semigroup ring
    let rr = semigroup_ring();
    let m = cyclic(&rr, &["X*Z^2"]);
    let gens = m.generators().to_vec();
    assert_eq!(window_truncation(&gens, 1), 6);
    let at6 = TruncatedModel::for_free(&m, 6).unwrap();
    assert_eq!(at6.order(&gens[0]), None);
    assert!(matches!(at6.mu(&gens), Err(Error::OracleWindow(_))));
    let t = fit_truncation(&gens, 1, 0, |t| TruncatedModel::for_free(&m, t)).unwrap();
    assert_eq!(t, 9);
    assert_eq!(TruncatedModel::for_free(&m, t).unwrap().mu(&gens).unwrap(), 1);
}

#[test]
fn size_bound_is_enforced() {
    let f = PrimeField::default();
    let e = build_model_with_bound(f, names(&["a", "b", "c", "d"]), &[], 2, &[], 10, 100).unwrap_err();
    assert!(matches!(e, Error::ModelTooLarge { size: 1430, bound: 100 }));
}

#[test]
fn stability_between_consecutive_truncations() {
    let m = semigroup_module();
    let gens = m.generators().to_vec();
    let holds = |j: u32| {
        let (m, gens) = (&m, &gens);
        move |t: u32| {
            let model = TruncatedModel::for_free(m, t)?;
            Ok(compare_layer(&model, gens, 1, j)?.holds())
        }
    };
    assert!(stable(8, holds(2)).unwrap());
    assert!(!stable(8, holds(3)).unwrap());
    assert!(matches!(stable(3, |t| Ok(t)), Err(Error::OracleWindow(_))));
}

#[test]
fn mu_matches_the_local_generator_count() {
    for (name, m) in corpus() {
        let gens = m.nonzero_generators().unwrap();
        let t = fit_truncation(&gens, 1, 0, |t| TruncatedModel::for_free(&m, t)).unwrap();
        let model = TruncatedModel::for_free(&m, t).unwrap();
        assert_eq!(model.mu(&gens).unwrap(), minimal_generator_count(&m).unwrap(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orders_in_a_regular_ring_are_lowest_degrees(seed in any::<u64>()) {
        let rr = local_ring(&["x", "y", "z"], &[]);
        let model = TruncatedModel::for_ring(&rr, 6).unwrap();
        let f = random::poly(&mut ChaCha8Rng::seed_from_u64(seed), rr.ring(), 4);
        let expected = f.min_degree().filter(|d| *d < 6);
        prop_assert_eq!(model.order_poly(&f), expected);
    }

    #[test]
    fn orders_are_additive_in_a_regular_ring(s1 in any::<u64>(), s2 in any::<u64>()) {
        let rr = local_ring(&["x", "y"], &[]);
        let r = rr.ring();
        let model = TruncatedModel::for_ring(&rr, 9).unwrap();
        let f = random::poly(&mut ChaCha8Rng::seed_from_u64(s1), r, 3);
        let g = random::poly(&mut ChaCha8Rng::seed_from_u64(s2), r, 3);
        if let (Some(a), Some(b)) = (model.order_poly(&f), model.order_poly(&g)) {
            prop_assert_eq!(model.order_poly(&r.pmul(&f, &g)), Some(a + b));
        }
    }

    #[test]
    fn model_answers_are_stable(seed in 2000u64..100_000) {
        let (_, m) = random::module(seed);
        let gens = m.nonzero_generators().unwrap();
        if gens.is_empty() { return Ok(()); }
        let t = fit_truncation(&gens, 1, 0, |t| TruncatedModel::for_free(&m, t)).unwrap();
        let mu = stable(t, |t| TruncatedModel::for_free(&m, t)?.mu(&gens));
        prop_assert_eq!(mu.unwrap(), minimal_generator_count(&m).unwrap());
    }
}
