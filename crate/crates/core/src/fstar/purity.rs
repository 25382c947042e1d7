use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{betti_analysis, minimal_graded_resolution, BettiTable, PurityReport};
use crate::local::{assoc_graded_module, local_minimal_resolution, LocalModule, LocalResolution};
use crate::oracle::{compare_layer, fit_truncation, stable, TruncatedModel};

use super::complex::{build_fstar, verify_fstar, FStarVerdict, PurityConclusion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Purity {
    Pure,
    NotPure,
    InconclusiveAtCutoff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityVerdict {
    pub verdict: Purity,
    pub route_a: PurityReport,
    pub route_b: FStarVerdict,
    /// `i ↦ (β_i over R, β_{i,δ_i} of G(M) over A)`, recorded when pure.
    pub betti_transfer: BTreeMap<usize, (usize, usize)>,
    pub local_betti: Vec<usize>,
    pub delta: Vec<i64>,
    pub graded_betti: BettiTable,
    pub cutoff: usize,
}

/// Decide purity of `G(M)` from its own minimal resolution and,
/// independently, from `F•*`; the two must agree when both are decided.
pub fn purity_verdict(m: &LocalModule, cutoff: usize) -> Result<PurityVerdict> {
    let res = local_minimal_resolution(m, cutoff)?;
    purity_verdict_from(m, &res, cutoff)
}

pub fn purity_verdict_from(m: &LocalModule, res: &LocalResolution, cutoff: usize) -> Result<PurityVerdict> {
    let gm = assoc_graded_module(m)?;
    let graded = minimal_graded_resolution(&gm, cutoff)?;
    let route_a = betti_analysis(&graded.betti);
    let fs = build_fstar(res)?;
    let route_b = verify_fstar(&fs, cutoff)?;
    if !route_b.is_complex {
        return Err(Error::NotAComplex("initial forms of the differentials do not compose to zero".into()));
    }
    let b = match route_b.purity_conclusion {
        PurityConclusion::Pure => Some(true),
        PurityConclusion::NotPure { .. } => Some(false),
        PurityConclusion::InconclusiveAtCutoff { .. } => None,
    };
    let verdict = match (route_a.decided(), b) {
        (Some(x), Some(y)) if x != y => {
            return Err(Error::Consistency(format!(
                "purity: graded resolution says {x}, F•* says {y}"
            )))
        }
        (Some(true), _) | (_, Some(true)) => Purity::Pure,
        (Some(false), _) | (_, Some(false)) => Purity::NotPure,
        (None, None) => Purity::InconclusiveAtCutoff,
    };
    let mut betti_transfer = BTreeMap::new();
    if verdict == Purity::Pure {
        for (i, &beta) in res.betti.iter().enumerate().take(cutoff + 1) {
            let graded_beta = graded.betti.get(i, res.delta[i]);
            if beta != graded_beta || graded.betti.total(i) != graded_beta {
                return Err(Error::Consistency(format!(
                    "Betti transfer fails at {i}: β^R = {beta}, β^A_(i,δ_i) = {graded_beta}"
                )));
            }
            betti_transfer.insert(i, (beta, graded_beta));
        }
    }
    Ok(PurityVerdict {
        verdict,
        route_a,
        route_b,
        betti_transfer,
        local_betti: res.betti.clone(),
        delta: res.delta.clone(),
        graded_betti: graded.betti,
        cutoff,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationRow {
    pub j: u32,
    pub holds: bool,
    pub intersection_dim: usize,
    pub power_dim: usize,
    pub witness: Option<String>,
}

/// For `Ω_i = im φ_i ⊆ F_{i−1}`, compare `Ω_i ∩ mʲF_{i−1}` with
/// `m^{j−s_i}Ω_i` for each `j` in the range.
pub fn syzygy_filtration_check(
    m: &LocalModule,
    i: usize,
    js: RangeInclusive<u32>,
    truncation: u32,
) -> Result<Vec<FiltrationRow>> {
    if i == 0 {
        return Err(Error::Precondition("syzygy index must be at least 1".into()));
    }
    let res = local_minimal_resolution(m, i)?;
    let Some(phi) = res.matrices.get(i - 1) else {
        return Err(Error::Precondition(format!("the resolution has no map φ_{i}")));
    };
    let omega = LocalModule::new(res.ring.clone(), phi.nrows, phi.cols.clone())?;
    let gens = omega.generators().to_vec();
    let s = res.s[i - 1];
    let t = fit_truncation(&gens, *js.end(), truncation, |t| TruncatedModel::for_free(&omega, t))?;
    let mut out = Vec::new();
    for j in js {
        stable(t, |t| {
            let model = TruncatedModel::for_free(&omega, t)?;
            Ok(compare_layer(&model, &gens, s, j)?.holds())
        })?;
        let model = TruncatedModel::for_free(&omega, t)?;
        let c = compare_layer(&model, &gens, s, j)?;
        out.push(FiltrationRow {
            j,
            holds: c.holds(),
            intersection_dim: c.intersection_dim,
            power_dim: c.power_dim,
            witness: c.witness.map(|w| model.ring().fmt_element(&w, omega.rank())),
        });
    }
    Ok(out)
}
