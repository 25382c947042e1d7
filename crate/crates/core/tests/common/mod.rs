#![allow(dead_code)]

use std::sync::atomic::{AtomicUsize, Ordering};

use aggraded::engine::FreeLayout;
use aggraded::fstar::{build_fstar, fiber_product_presentation, FStarComplex};
use aggraded::graded::{minimal_graded_resolution, GradedModule, GradedResolution, GradedRing};
use aggraded::local::{local_minimal_resolution, LocalModule, LocalResolution, LocalRing};
use aggraded::poly::{ModuleElement, OrderSpec, PolyRing, Polynomial, PrimeField};
use aggraded::session::parse_polynomial;

pub const CUTOFF: usize = 6;

static AUDITED: AtomicUsize = AtomicUsize::new(0);

pub fn audited_count() -> usize {
    AUDITED.load(Ordering::SeqCst)
}

pub fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn poly(r: &PolyRing, text: &str) -> Polynomial {
    parse_polynomial(r, text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn col(r: &PolyRing, entries: &[&str]) -> ModuleElement {
    let e: Vec<Polynomial> = entries.iter().map(|t| poly(r, t)).collect();
    r.column(&e)
}

pub fn local_ring(vars: &[&str], ideal: &[&str]) -> LocalRing {
    let r = PolyRing::new(PrimeField::default(), names(vars), OrderSpec::local());
    let gens = ideal.iter().map(|t| poly(&r, t)).collect();
    LocalRing::from_ring(&r, gens).unwrap()
}

pub fn graded_ring(vars: &[&str], ideal: &[&str]) -> GradedRing {
    let r = PolyRing::new(PrimeField::default(), names(vars), OrderSpec::global());
    let gens = ideal.iter().map(|t| poly(&r, t)).collect();
    GradedRing::from_ring(&r, gens).unwrap()
}

/// `F/N` with `F` of rank `cols[0].len()` and `N` spanned by the columns.
pub fn local_module(rr: &LocalRing, rank: usize, cols: &[&[&str]]) -> LocalModule {
    let r = rr.ring().clone();
    let gens = cols.iter().map(|c| col(&r, c)).collect();
    LocalModule::new(rr.clone(), rank, gens).unwrap()
}

pub fn cyclic(rr: &LocalRing, gens: &[&str]) -> LocalModule {
    let cols: Vec<[&str; 1]> = gens.iter().map(|g| [*g]).collect();
    let refs: Vec<&[&str]> = cols.iter().map(|c| c.as_slice()).collect();
    local_module(rr, 1, &refs)
}

pub fn graded_cyclic(a: &GradedRing, rels: &[&str]) -> GradedModule {
    let r = a.module_ring(&[0]);
    let rels = rels.iter().map(|t| col(&r, &[t])).collect();
    GradedModule::new(a.clone(), FreeLayout::untwisted(1), rels).unwrap()
}

pub fn semigroup_ring() -> LocalRing {
    local_ring(&["X", "Y", "Z"], &["X*Z - Y^3", "Y*Z - X^4", "Z^2 - X^3*Y^2"])
}

pub fn semigroup_module() -> LocalModule {
    cyclic(&semigroup_ring(), &["X"])
}

pub fn tangent_cone_algebra() -> GradedRing {
    graded_ring(&["x", "y", "z"], &["x*z", "y*z", "z^2", "y^4"])
}

pub fn squares_module() -> LocalModule {
    cyclic(&local_ring(&["x1", "x2", "x3"], &[]), &["x1^2", "x2^2", "x3^2"])
}

pub fn fibre_ring() -> LocalRing {
    let r1 = local_ring(&["x1", "x2", "x3"], &[]);
    let r2 = local_ring(&["y1", "y2", "y3"], &[]);
    fiber_product_presentation(&r1, &r2).unwrap()
}

pub fn fibre_module() -> LocalModule {
    cyclic(&fibre_ring(), &["x1^2", "x2^2", "x3^2", "y1", "y2", "y3"])
}

/// Named modules used across the suite.
pub fn corpus() -> Vec<(&'static str, LocalModule)> {
    let plane = local_ring(&["x", "y"], &[]);
    let node = local_ring(&["x", "y"], &["x*y"]);
    let cusp = local_ring(&["x", "y"], &["y^2 - x^3"]);
    let double_line = local_ring(&["x", "y"], &["x^2"]);
    vec![
        ("semigroup R/(X)", semigroup_module()),
        ("semigroup residue field", LocalModule::residue_field(semigroup_ring())),
        ("squares", squares_module()),
        ("plane residue field", LocalModule::residue_field(plane.clone())),
        ("plane (x^2, xy)", cyclic(&plane, &["x^2", "x*y"])),
        ("plane (x + x^2, y)", cyclic(&plane, &["x + x^2", "y"])),
        ("plane (x^2 - y^3)", cyclic(&plane, &["x^2 - y^3"])),
        ("plane (x^2 + y^3, x*y)", cyclic(&plane, &["x^2 + y^3", "x*y"])),
        ("plane free rank 2", LocalModule::free(plane.clone(), 2)),
        (
            "plane rank 2 quotient",
            local_module(&plane, 2, &[&["x", "y"], &["y^2", "x^2"]]),
        ),
        ("node residue field", LocalModule::residue_field(node.clone())),
        ("node R/(x)", cyclic(&node, &["x"])),
        ("node R/(x + y)", cyclic(&node, &["x + y"])),
        ("cusp residue field", LocalModule::residue_field(cusp.clone())),
        ("cusp R/(x)", cyclic(&cusp, &["x"])),
        ("double line R/(y)", cyclic(&double_line, &["y"])),
        ("double line residue field", LocalModule::residue_field(double_line)),
    ]
}

/// Local resolution with both composition checks: `φ_i ∘ φ_{i+1} = 0`
/// over `R` and `φ_i* ∘ φ_{i+1}* = 0` over `A`.
pub fn audited_resolution(m: &LocalModule, cutoff: usize) -> (LocalResolution, FStarComplex) {
    let res = local_minimal_resolution(m, cutoff).unwrap();
    res.check_complex().unwrap();
    let fs = build_fstar(&res).unwrap();
    let a = &fs.ring;
    assert!(
        fs.complex.is_complex(a.ring(), a.modulus()).unwrap(),
        "initial matrices do not compose to zero"
    );
    AUDITED.fetch_add(1, Ordering::SeqCst);
    (res, fs)
}

/// Graded resolution with `d_i ∘ d_{i+1} = 0` checked over the algebra.
pub fn audited_graded(m: &GradedModule, cutoff: usize) -> GradedResolution {
    let res = minimal_graded_resolution(m, cutoff).unwrap();
    let a = m.ring();
    assert!(res.complex.is_complex(a.ring(), a.modulus()).unwrap());
    AUDITED.fetch_add(1, Ordering::SeqCst);
    res
}

pub mod random {
    use super::*;
    use aggraded::poly::Monomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub const RINGS: &[(&[&str], &[&str])] = &[
        (&["x", "y"], &[]),
        (&["x", "y", "z"], &[]),
        (&["x", "y"], &["x*y"]),
        (&["x", "y"], &["y^2 - x^3"]),
        (&["X", "Y", "Z"], &["X*Z - Y^3", "Y*Z - X^4", "Z^2 - X^3*Y^2"]),
    ];

    fn monomials(n: usize, lo: u32, hi: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in lo..=hi {
            out.extend(aggraded::poly::monomials_of_degree(n, d));
        }
        out
    }

    /// A random polynomial with terms of degree `1..=max_deg`.
    pub fn poly(rng: &mut ChaCha8Rng, r: &PolyRing, max_deg: u32) -> Polynomial {
        let pool = monomials(r.nvars(), 1, max_deg);
        let nterms = rng.gen_range(1..=3);
        let terms: Vec<(i64, Monomial)> = (0..nterms)
            .map(|_| {
                let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
                (c, pool[rng.gen_range(0..pool.len())].clone())
            })
            .collect();
        r.poly(terms)
    }

    /// `(ring index, module)` with at most three generators of degree at
    /// most three; the generators are nonzero in `R`.
    pub fn module(seed: u64) -> (usize, LocalModule) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(0..RINGS.len());
        let (vars, ideal) = RINGS[k];
        let rr = local_ring(vars, ideal);
        let r = rr.ring().clone();
        let rank = if rng.gen_bool(0.25) { 2 } else { 1 };
        loop {
            let ngens = rng.gen_range(1..=3);
            let gens: Vec<ModuleElement> = (0..ngens)
                .map(|_| {
                    let entries: Vec<Polynomial> = (0..rank)
                        .map(|_| {
                            if rank > 1 && rng.gen_bool(0.3) {
                                Polynomial::zero()
                            } else {
                                poly(&mut rng, &r, 3)
                            }
                        })
                        .collect();
                    r.column(&entries)
                })
                .collect();
            let nonzero = gens
                .iter()
                .all(|g| !rr.is_zero_element(rank, g).unwrap());
            if nonzero {
                return (k, LocalModule::new(rr, rank, gens).unwrap());
            }
        }
    }
}
