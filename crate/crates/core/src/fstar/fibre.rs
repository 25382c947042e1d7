use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{minimal_graded_resolution, GradedRing};
use crate::local::{assoc_graded_module, local_minimal_resolution, LocalModule, LocalRing};
use crate::poly::{Monomial, OrderSpec, PolyRing, Polynomial};

fn embed(p: &Polynomial, offset: usize, n: usize, ring: &PolyRing) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(c, m)| {
            let mut e = vec![0u16; n];
            e[offset..offset + m.nvars()].copy_from_slice(m.exps());
            (*c, Monomial::new(e))
        })
        .collect();
    ring.poly_from_coeffs(terms)
}

/// `R_1 ×_k R_2` presented on the union of the variables, clashing names of
/// the second factor being primed.
pub fn fiber_product_presentation(r1: &LocalRing, r2: &LocalRing) -> Result<LocalRing> {
    if r1.field() != r2.field() {
        return Err(Error::Precondition("factors over different fields".into()));
    }
    let n1 = r1.nvars();
    let n2 = r2.nvars();
    let mut names: Vec<String> = r1.names().to_vec();
    for name in r2.names() {
        let mut name = name.clone();
        while names.contains(&name) {
            name.push('\'');
        }
        names.push(name);
    }
    let n = n1 + n2;
    let ring = PolyRing::new(*r1.field(), names.clone(), OrderSpec::local());
    let mut ideal: Vec<Polynomial> = Vec::new();
    ideal.extend(r1.ideal().iter().map(|g| embed(g, 0, n, &ring)));
    ideal.extend(r2.ideal().iter().map(|g| embed(g, n1, n, &ring)));
    for i in 0..n1 {
        for j in 0..n2 {
            ideal.push(ring.pmul(&ring.var(i), &ring.var(n1 + j)));
        }
    }
    let fp = LocalRing::from_ring(&ring, ideal)?;

    let graded = ring.with_order(OrderSpec::global());
    let mut expected: Vec<Polynomial> = Vec::new();
    expected.extend(r1.tangent_cone().iter().map(|g| embed(g, 0, n, &graded)));
    expected.extend(r2.tangent_cone().iter().map(|g| embed(g, n1, n, &graded)));
    for i in 0..n1 {
        for j in 0..n2 {
            expected.push(graded.pmul(&graded.var(i), &graded.var(n1 + j)));
        }
    }
    let a = fp.associated_graded();
    let b = GradedRing::new(*r1.field(), names, expected.clone())?;
    let same = expected.iter().all(|g| a.reduce(g).is_zero())
        && a.ideal().iter().all(|g| b.reduce(g).is_zero());
    if !same {
        return Err(Error::Consistency(
            "tangent cone of the fibre product differs from the fibre product of tangent cones".into(),
        ));
    }
    Ok(fp)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulFpReport {
    /// `Ω_2` of `G(M)` over `A` has a linear resolution within the cutoff.
    pub omega2_linear: bool,
    /// Degrees at the first homological position (≥ 2) breaking linearity.
    pub omega2_witness: Option<(usize, Vec<i64>)>,
    /// `j ↦` every column of `φ_j` has order one, for `j > 2`.
    pub column_orders_ok: BTreeMap<usize, bool>,
    /// One of the necessary conditions fails, so `G(M)` is not pure.
    pub certifies_not_pure: bool,
    pub cutoff: usize,
}

/// The two necessary conditions for purity over a fibre product of Koszul
/// algebras, checked up to `cutoff`.
pub fn koszul_fp_check(m: &LocalModule, cutoff: usize) -> Result<KoszulFpReport> {
    let gm = assoc_graded_module(m)?;
    let graded = minimal_graded_resolution(&gm, cutoff)?;
    let betti = &graded.betti;
    let mut omega2_linear = true;
    let mut omega2_witness = None;
    if let Some(base) = betti.degrees(2).first().copied() {
        for i in 2..=betti.max_homological_degree().unwrap_or(0) {
            let degs = betti.degrees(i);
            if degs.iter().any(|&d| d != base + (i as i64 - 2)) {
                omega2_linear = false;
                omega2_witness = Some((i, degs));
                break;
            }
        }
    }
    let res = local_minimal_resolution(m, cutoff)?;
    let column_orders_ok: BTreeMap<usize, bool> = res
        .column_orders
        .iter()
        .enumerate()
        .filter(|(k, _)| k + 1 > 2)
        .map(|(k, o)| (k + 1, o.iter().all(|&x| x == 1)))
        .collect();
    let certifies_not_pure = !omega2_linear || column_orders_ok.values().any(|ok| !ok);
    Ok(KoszulFpReport {
        omega2_linear,
        omega2_witness,
        column_orders_ok,
        certifies_not_pure,
        cutoff,
    })
}
