use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{compare_layer, fit_truncation, stable, window_truncation, TruncatedModel};

use super::module::{submodule_initial, LocalModule};

/// Equigeneration of `N*` decided by generator degrees and, independently,
/// by `N ∩ m^{s+1}F = mN` together with `μ(N*) = μ(N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquigenReport {
    pub verdict: bool,
    pub s: u32,
    pub path_a_degrees: Vec<u32>,
    pub path_a: bool,
    pub intersection_is_mn: bool,
    pub mu_nstar: usize,
    pub mu_n: usize,
    pub path_b: bool,
    pub oracle_degrees: Vec<u32>,
    pub witness_layer: Option<u32>,
    pub witness: Option<String>,
    pub truncation: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct OracleAnswer {
    s: Option<u32>,
    intersection_is_mn: bool,
    mu_n: usize,
    degrees: Vec<u32>,
}

/// Run both tests for equigeneration; `truncation` is a lower bound for the
/// oracle depth, which is raised to cover the validity window.
pub fn equigenerated_check(m: &LocalModule, truncation: u32) -> Result<EquigenReport> {
    let data = submodule_initial(m)?;
    let s = data.s;
    let gens = m.nonzero_generators()?;
    let top_nstar = *data.generator_degrees.last().unwrap_or(&s);
    let t = fit_truncation(&gens, (s + 1).max(top_nstar + 1), truncation, |t| TruncatedModel::for_free(m, t))?;
    let upto = |t: u32| t - window_truncation(&gens, 0);
    let answer = stable(t, |t| {
        let model = TruncatedModel::for_free(m, t)?;
        let whole = model.span(&gens, 0);
        let cmp = compare_layer(&model, &gens, s, s + 1)?;
        let dims = model.nstar_dims(&gens, upto(t).min(top_nstar + 1))?;
        Ok(OracleAnswer {
            s: whole.min_degree(),
            intersection_is_mn: cmp.holds(),
            mu_n: model.mu(&gens)?,
            degrees: dims.generator_degrees(),
        })
    })?;
    if answer.s != Some(s) {
        return Err(Error::Consistency(format!(
            "engine order ν(N) = {s}, oracle order {:?}",
            answer.s
        )));
    }
    if answer.degrees != data.generator_degrees {
        return Err(Error::Consistency(format!(
            "generator degrees of N*: engine {:?}, oracle {:?}",
            data.generator_degrees, answer.degrees
        )));
    }
    let path_a = data.generator_degrees.iter().all(|&d| d == s);
    let mu_nstar = answer.degrees.len();
    let path_b = answer.intersection_is_mn && mu_nstar == answer.mu_n;
    if path_a != path_b {
        return Err(Error::Consistency(format!(
            "equigeneration: generator degrees say {path_a}, intersection test says {path_b}"
        )));
    }
    let mut witness_layer = None;
    let mut witness = None;
    if !path_a {
        let model = TruncatedModel::for_free(m, t)?;
        let mut j = s + 1;
        while model.check_window(&gens, j).is_ok() {
            let c = compare_layer(&model, &gens, s, j)?;
            if !c.holds() {
                witness_layer = Some(j);
                witness = c.witness.map(|w| model.ring().fmt_element(&w, m.rank()));
                break;
            }
            j += 1;
        }
    }
    Ok(EquigenReport {
        verdict: path_a,
        s,
        path_a_degrees: data.generator_degrees,
        path_a,
        intersection_is_mn: answer.intersection_is_mn,
        mu_nstar,
        mu_n: answer.mu_n,
        path_b,
        oracle_degrees: answer.degrees,
        witness_layer,
        witness,
        truncation: t,
    })
}
