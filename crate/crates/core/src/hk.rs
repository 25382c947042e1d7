//! Herzog–Kühl coefficients and the Cohen–Macaulay comparisons between a
//! local module, its ring and their associated graded objects.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fstar::{purity_verdict_from, Purity, PurityVerdict};
use crate::graded::{minimal_graded_resolution, numeric_invariants, GradedModule, PdimStatus};
use crate::local::{assoc_graded_module, local_minimal_resolution, LocalModule, LocalResolution, LocalRing};

pub type Rational = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HkCoefficients {
    pub delta: Vec<i64>,
    /// `b_1, …, b_p`.
    pub b: Vec<Rational>,
}

/// `b_i = (−1)^{i−1} ∏_{j≠i} δ_j/(δ_j − δ_i)` for `1 ≤ i ≤ p`.
pub fn hk_coefficients(delta: &[i64]) -> Result<HkCoefficients> {
    let increasing = delta.windows(2).all(|w| w[0] < w[1]);
    if delta.len() < 2 || delta[0] != 0 || !increasing {
        return Err(Error::InvalidDegreeType(delta.to_vec()));
    }
    let p = delta.len() - 1;
    let b = (1..=p)
        .map(|i| {
            let mut acc = Rational::from_integer(if i % 2 == 1 { 1 } else { -1 });
            for j in (1..=p).filter(|&j| j != i) {
                acc *= Rational::new(delta[j], delta[j] - delta[i]);
            }
            acc
        })
        .collect();
    Ok(HkCoefficients { delta: delta.to_vec(), b })
}

/// Dimensions, depths and multiplicities of `M`, `R`, `G(M)` and `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalInvariants {
    pub pdim: usize,
    pub dim_m: i64,
    pub depth_m: i64,
    pub cmd_m: i64,
    pub dim_r: i64,
    pub depth_r: i64,
    pub cmd_r: i64,
    pub cmd_gm: i64,
    pub cmd_a: i64,
    pub e_m: i64,
    pub e_r: i64,
    pub codim_m: i64,
}

/// `depth R = n − pdim` of `R` over the localized polynomial ring.
pub fn local_depth(rr: &LocalRing) -> Result<i64> {
    let n = rr.nvars();
    if rr.ideal().is_empty() {
        return Ok(n as i64);
    }
    let regular = LocalRing::regular(*rr.field(), rr.names().to_vec());
    let r = regular.ring().clone();
    let gens = rr.ideal().iter().map(|g| r.poly_times_unit(&r.resort_poly(g), 0)).collect();
    let quotient = LocalModule::new(regular, 1, gens)?;
    let res = local_minimal_resolution(&quotient, n + 1)?;
    let p = res
        .pdim()
        .ok_or_else(|| Error::Consistency("resolution over a regular ring exceeded its dimension".into()))?;
    Ok(n as i64 - p as i64)
}

pub fn local_invariants(m: &LocalModule, res: &LocalResolution, cutoff: usize) -> Result<LocalInvariants> {
    let pdim = res
        .pdim()
        .ok_or_else(|| not_finite(cutoff, "pdim not finite within the cutoff"))?;
    let rr = m.ring();
    let a = rr.associated_graded().clone();
    let gm = assoc_graded_module(m)?;
    let inv_gm = numeric_invariants(&gm, cutoff)?;
    let inv_a = numeric_invariants(&GradedModule::ring_itself(a), cutoff)?;
    let depth_r = local_depth(rr)?;
    let depth_m = depth_r - pdim as i64;
    Ok(LocalInvariants {
        pdim,
        dim_m: inv_gm.dim,
        depth_m,
        cmd_m: inv_gm.dim - depth_m,
        dim_r: inv_a.dim,
        depth_r,
        cmd_r: inv_a.dim - depth_r,
        cmd_gm: inv_gm.cmd,
        cmd_a: inv_a.cmd,
        e_m: inv_gm.multiplicity,
        e_r: inv_a.multiplicity,
        codim_m: inv_a.dim - inv_gm.dim,
    })
}

fn not_finite(cutoff: usize, message: &str) -> Error {
    Error::Inconclusive {
        cutoff,
        message: message.into(),
    }
}

fn betti_match(betti: &[usize], hk: &HkCoefficients) -> bool {
    let b0 = betti[0] as i64;
    hk.b
        .iter()
        .enumerate()
        .all(|(k, bi)| *bi * b0 == Rational::from_integer(betti[k + 1] as i64))
}

/// `e(R)·β_0/p!·∏ δ_i`.
fn multiplicity_formula(e_r: i64, beta0: usize, delta: &[i64]) -> Rational {
    let mut acc = Rational::from_integer(e_r * beta0 as i64);
    for (i, d) in delta.iter().enumerate().skip(1) {
        acc *= Rational::from_integer(*d);
        acc /= Rational::from_integer(i as i64);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HkReport {
    pub coefficients: HkCoefficients,
    pub betti: Vec<usize>,
    /// `cmd M = cmd R`.
    pub condition_i: bool,
    /// `β_i = b_i·β_0` for all `i`.
    pub condition_ii: bool,
    /// `cmd G(M) = cmd A`.
    pub condition_iii: bool,
    pub invariants: LocalInvariants,
    /// `e(M)` from the Hilbert series.
    pub multiplicity: i64,
    /// `e(R)·β_0/p!·∏ δ_i`.
    pub multiplicity_formula: Rational,
    pub multiplicity_identity_holds: bool,
}

fn pure_and_finite(m: &LocalModule, cutoff: usize) -> Result<(LocalResolution, PurityVerdict)> {
    let res = local_minimal_resolution(m, cutoff)?;
    let pv = purity_verdict_from(m, &res, cutoff)?;
    match pv.verdict {
        Purity::Pure => {}
        Purity::NotPure => return Err(Error::Precondition("G(M) is not pure".into())),
        Purity::InconclusiveAtCutoff => return Err(not_finite(cutoff, "purity undecided")),
    }
    if !res.is_finite() {
        return Err(not_finite(cutoff, "pdim not finite within the cutoff"));
    }
    Ok((res, pv))
}

/// The three equivalent conditions for a module whose associated graded
/// module is pure and whose projective dimension is finite.
pub fn cmd_equivalence_report(m: &LocalModule, cutoff: usize) -> Result<HkReport> {
    let (res, _) = pure_and_finite(m, cutoff)?;
    let inv = local_invariants(m, &res, cutoff)?;
    let (coefficients, condition_ii, formula) = if res.delta.len() > 1 {
        let hk = hk_coefficients(&res.delta)?;
        let ok = betti_match(&res.betti, &hk);
        (hk, ok, multiplicity_formula(inv.e_r, res.betti[0], &res.delta))
    } else {
        let hk = HkCoefficients { delta: res.delta.clone(), b: Vec::new() };
        (hk, true, Rational::from_integer(inv.e_r * res.betti[0] as i64))
    };
    let condition_i = inv.cmd_m == inv.cmd_r;
    let condition_iii = inv.cmd_gm == inv.cmd_a;
    if condition_i != condition_ii || condition_ii != condition_iii {
        return Err(Error::Consistency(format!(
            "cmd conditions disagree: {condition_i}, {condition_ii}, {condition_iii}"
        )));
    }
    let holds = formula == Rational::from_integer(inv.e_m);
    if condition_i && !holds {
        return Err(Error::Consistency(format!(
            "multiplicity {} differs from {}",
            inv.e_m, formula
        )));
    }
    Ok(HkReport {
        coefficients,
        betti: res.betti.clone(),
        condition_i,
        condition_ii,
        condition_iii,
        multiplicity: inv.e_m,
        multiplicity_formula: formula,
        multiplicity_identity_holds: holds,
        invariants: inv,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmPurityReport {
    /// `G(M)` pure and Cohen–Macaulay.
    pub condition_i: bool,
    /// `A` Cohen–Macaulay, `F•*` acyclic, Herzog–Kühl equations, multiplicity formula.
    pub condition_ii: bool,
    pub acyclic: bool,
    pub betti_equations: bool,
    pub multiplicity_formula: bool,
    /// `G(M)` pure, `A` and `M` Cohen–Macaulay.
    pub condition_iii: bool,
    pub gm_pure: Purity,
    pub invariants: LocalInvariants,
}

/// The three equivalent descriptions of "`G(M)` pure and Cohen–Macaulay".
pub fn cm_purity_report(m: &LocalModule, cutoff: usize) -> Result<CmPurityReport> {
    let res = local_minimal_resolution(m, cutoff)?;
    if !res.is_finite() {
        return Err(not_finite(cutoff, "pdim not finite within the cutoff"));
    }
    let pv = purity_verdict_from(m, &res, cutoff)?;
    let inv = local_invariants(m, &res, cutoff)?;
    let pure = pv.verdict == Purity::Pure;
    let acyclic = pv.route_b.fully_acyclic;
    let (betti_equations, multiplicity_formula) = if res.delta.len() > 1 {
        let hk = hk_coefficients(&res.delta)?;
        let f = self::multiplicity_formula(inv.e_r, res.betti[0], &res.delta);
        (betti_match(&res.betti, &hk), f == Rational::from_integer(inv.e_m))
    } else {
        (true, Rational::from_integer(inv.e_r * res.betti[0] as i64) == Rational::from_integer(inv.e_m))
    };
    let a_cm = inv.cmd_a == 0;
    let condition_i = pure && inv.cmd_gm == 0;
    let condition_ii = a_cm && acyclic && betti_equations && multiplicity_formula;
    let condition_iii = pure && a_cm && inv.cmd_m == 0;
    if pv.verdict != Purity::InconclusiveAtCutoff && (condition_i != condition_ii || condition_ii != condition_iii) {
        return Err(Error::Consistency(format!(
            "Cohen–Macaulay purity conditions disagree: {condition_i}, {condition_ii}, {condition_iii}"
        )));
    }
    Ok(CmPurityReport {
        condition_i,
        condition_ii,
        acyclic,
        betti_equations,
        multiplicity_formula,
        condition_iii,
        gm_pure: pv.verdict,
        invariants: inv,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePdimReport {
    pub pdim_r: usize,
    pub pdim_a: PdimStatus,
    /// `pdim_R M = pdim_A G(M)`; `None` when not resolved within the cutoff.
    pub hypothesis_holds: Option<bool>,
    pub codim: i64,
    pub codim_le_pdim: Option<bool>,
    pub module_cm: bool,
    /// `Some(R is CM)` when the hypothesis holds and `M` is Cohen–Macaulay.
    pub ring_cm_verdict: Option<bool>,
    pub cutoff: usize,
}

/// Consequences of `pdim_R M = pdim_A G(M) < ∞`.
pub fn finite_pdim_consequences(m: &LocalModule, cutoff: usize) -> Result<FinitePdimReport> {
    let res = local_minimal_resolution(m, cutoff)?;
    let inv = local_invariants(m, &res, cutoff)?;
    let gm = assoc_graded_module(m)?;
    let pdim_a = minimal_graded_resolution(&gm, cutoff)?.status;
    let hypothesis_holds = pdim_a.finite().map(|q| q == inv.pdim);
    let module_cm = inv.cmd_m == 0;
    let (codim_le_pdim, ring_cm_verdict) = if hypothesis_holds == Some(true) {
        let le = inv.codim_m <= inv.pdim as i64;
        if !le {
            return Err(Error::Consistency(format!("codim {} exceeds pdim {}", inv.codim_m, inv.pdim)));
        }
        let ring_cm = module_cm.then_some(inv.cmd_r == 0);
        if ring_cm == Some(false) {
            return Err(Error::Consistency("a Cohen–Macaulay module of finite pdim over a non-CM ring".into()));
        }
        (Some(le), ring_cm)
    } else {
        (None, None)
    };
    Ok(FinitePdimReport {
        pdim_r: inv.pdim,
        pdim_a,
        hypothesis_holds,
        codim: inv.codim_m,
        codim_le_pdim,
        module_cm,
        ring_cm_verdict,
        cutoff,
    })
}
