use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::hilbert::{fmt_ratio, hilbert_series};
use super::module::GradedModule;
use super::resolution::{minimal_graded_resolution, BettiTable, PdimStatus};

/// Where purity fails: a homological degree with several internal degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityWitness {
    pub homological_degree: usize,
    pub degrees: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityReport {
    /// Every computed homological degree has exactly one internal degree.
    pub is_pure: bool,
    /// `δ_i` for each computed homological degree (smallest degree when impure).
    pub degree_type: Vec<i64>,
    /// The table stops at the cutoff without a certified end.
    pub infinite_tail: bool,
    /// Pure with `δ_i = δ_0 + i`.
    pub is_linear: bool,
    /// `max(j − i)` over the computed table.
    pub regularity_within_cutoff: i64,
    pub witness: Option<PurityWitness>,
}

impl PurityReport {
    /// `Some(true)`/`Some(false)` when decided, `None` when the table is
    /// pure so far but incomplete.
    pub fn decided(&self) -> Option<bool> {
        if !self.is_pure {
            Some(false)
        } else if self.infinite_tail {
            None
        } else {
            Some(true)
        }
    }
}

pub fn betti_analysis(b: &BettiTable) -> PurityReport {
    let mut degree_type = Vec::new();
    let mut witness = None;
    let mut reg = i64::MIN;
    for (i, row) in &b.entries {
        let degs: Vec<i64> = row.keys().copied().collect();
        degree_type.push(degs[0]);
        if degs.len() > 1 && witness.is_none() {
            witness = Some(PurityWitness {
                homological_degree: *i,
                degrees: degs.clone(),
            });
        }
        for j in &degs {
            reg = reg.max(j - *i as i64);
        }
    }
    let is_pure = witness.is_none();
    let is_linear = is_pure
        && degree_type
            .iter()
            .enumerate()
            .all(|(i, d)| *d == degree_type[0] + i as i64);
    PurityReport {
        is_pure,
        degree_type,
        infinite_tail: !b.complete,
        is_linear,
        regularity_within_cutoff: if reg == i64::MIN { 0 } else { reg },
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericInvariants {
    pub dim: i64,
    pub depth: i64,
    pub codim: i64,
    pub cmd: i64,
    pub multiplicity: i64,
    /// Projective dimension over the algebra itself.
    pub pdim: PdimStatus,
    /// Projective dimension over the polynomial cover.
    pub pdim_cover: usize,
    /// Castelnuovo–Mumford regularity over the polynomial cover.
    pub regularity_cover: i64,
    pub ring_dim: i64,
}

/// Dimension, depth, multiplicity and friends; depth and regularity are
/// computed over the polynomial cover, pdim over the algebra to `cutoff`.
pub fn numeric_invariants(m: &GradedModule, cutoff: usize) -> Result<NumericInvariants> {
    let n = m.ring().nvars();
    let hs = hilbert_series(m)?;
    let ring_dim = hilbert_series(&GradedModule::ring_itself(m.ring().clone()))?.dim;
    let cover = minimal_graded_resolution(&m.over_cover(), n + 1)?;
    let pdim_cover = cover.status.finite().ok_or_else(|| {
        Error::Consistency("resolution over the polynomial cover exceeded the number of variables".into())
    })?;
    let regularity_cover = betti_analysis(&cover.betti).regularity_within_cutoff;
    let pdim = if m.ring().is_polynomial_ring() {
        cover.status
    } else {
        minimal_graded_resolution(m, cutoff)?.status
    };
    let (depth, cmd) = if hs.is_zero() {
        (-1, 0)
    } else {
        let depth = n as i64 - pdim_cover as i64;
        (depth, hs.dim - depth)
    };
    Ok(NumericInvariants {
        dim: hs.dim,
        depth,
        codim: ring_dim - hs.dim,
        cmd,
        multiplicity: hs.multiplicity(),
        pdim,
        pdim_cover,
        regularity_cover,
        ring_dim,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareSeries {
    pub coefficients: Vec<i64>,
    pub closed_form: Option<String>,
}

fn binomial_power(sign: i64, k: usize, upto: usize) -> Vec<i64> {
    // (1 + sign·z)^k truncated
    let mut p = vec![0i64; upto.max(1)];
    p[0] = 1;
    for _ in 0..k {
        for i in (1..p.len()).rev() {
            p[i] += sign * p[i - 1];
        }
    }
    p
}

fn inverse_one_minus_z_power(k: usize, upto: usize) -> Vec<i64> {
    let mut p = vec![1i64; upto.max(1)];
    if k == 0 {
        p.iter_mut().skip(1).for_each(|c| *c = 0);
        return p;
    }
    for _ in 1..k {
        for i in 1..p.len() {
            p[i] += p[i - 1];
        }
    }
    p
}

fn mul_trunc(a: &[i64], b: &[i64], upto: usize) -> Vec<i64> {
    let mut out = vec![0i64; upto];
    for (i, x) in a.iter().enumerate().take(upto) {
        for (j, y) in b.iter().enumerate() {
            if i + j >= upto {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

fn neg_z(p: &[i64]) -> Vec<i64> {
    p.iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { *c })
        .collect()
}

fn as_terms(p: &[i64]) -> BTreeMap<i64, i64> {
    p.iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i as i64, *c))
        .collect()
}

/// Total Betti numbers of a module with a linear resolution, read off from
/// `H_M(z) = z^{δ_0} H_A(z) P_M(−z)` and compared with a direct resolution.
/// `a / b` when `b` divides `a` over the integers and `b(0) = ±1`.
fn exact_quotient(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let b0 = *b.first()?;
    if b0.abs() != 1 || a.len() < b.len() {
        return None;
    }
    let n = a.len() - b.len() + 1;
    let mut q = vec![0i64; n];
    for i in 0..n {
        let mut v = a[i];
        for j in 1..b.len().min(i + 1) {
            v -= b[j] * q[i - j];
        }
        q[i] = v * b0;
    }
    let back = mul_trunc(&q, b, a.len());
    (back.len() == a.len() && back == a).then_some(q)
}

pub fn poincare_from_hilbert(m: &GradedModule, cutoff: usize) -> Result<PoincareSeries> {
    let res = minimal_graded_resolution(m, cutoff)?;
    let report = betti_analysis(&res.betti);
    if !report.is_linear || report.degree_type.is_empty() {
        return Err(Error::Precondition("resolution is not linear within the cutoff".into()));
    }
    let delta0 = report.degree_type[0];
    let hm = hilbert_series(m)?;
    let ha = hilbert_series(&GradedModule::ring_itself(m.ring().clone()))?;
    if hm.shift != delta0 {
        return Err(Error::Consistency("lowest Hilbert degree differs from δ_0".into()));
    }
    let upto = cutoff + 1;
    let k = ha.dim - hm.dim;
    let base = if k >= 0 {
        mul_trunc(&hm.numerator, &binomial_power(-1, k as usize, upto), upto)
    } else {
        mul_trunc(&hm.numerator, &inverse_one_minus_z_power((-k) as usize, upto), upto)
    };
    let fa = &ha.numerator;
    let mut q = vec![0i64; upto];
    for i in 0..upto {
        let mut v = base[i];
        for (j, c) in fa.iter().enumerate().skip(1) {
            if j <= i {
                v -= c * q[i - j];
            }
        }
        q[i] = v;
    }
    let coefficients: Vec<i64> = q
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { *c } else { -c })
        .collect();
    let direct = res.betti.totals();
    for (i, c) in coefficients.iter().enumerate() {
        let d = direct.get(i).copied().unwrap_or(0) as i64;
        let known = i < direct.len() || res.betti.complete;
        if known && *c != d {
            return Err(Error::Consistency(format!(
                "Poincaré coefficient {i}: series gives {c}, resolution gives {d}"
            )));
        }
    }
    // closed form: f_M(−z)·(1+z)^k / f_A(−z), with k moved down when negative
    let (mut num, mut den) = (neg_z(&hm.numerator), neg_z(fa));
    let kk = k.unsigned_abs() as usize;
    let bin = binomial_power(1, kk, kk + 1);
    if k >= 0 {
        num = mul_trunc(&num, &bin, num.len() + kk);
    } else {
        den = mul_trunc(&den, &bin, den.len() + kk);
    }
    if let Some(q) = exact_quotient(&num, &den) {
        (num, den) = (q, vec![1]);
    }
    let den_terms = as_terms(&den);
    let closed = fmt_ratio(&as_terms(&num), &den_terms);
    Ok(PoincareSeries {
        coefficients,
        closed_form: Some(closed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedRing;
    use crate::poly::PrimeField;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn residue_field_over_dual_numbers() {
        let s = GradedRing::polynomial(PrimeField::default(), names(&["x"]));
        let x = s.ring().var(0);
        let a = GradedRing::new(PrimeField::default(), names(&["x"]), vec![s.ring().pmul(&x, &x)]).unwrap();
        let p = poincare_from_hilbert(&GradedModule::residue_field(a), 6).unwrap();
        assert_eq!(p.coefficients, vec![1; 7]);
        assert_eq!(p.closed_form.as_deref(), Some("1/(1 - z)"));
    }

    #[test]
    fn residue_field_over_two_variables() {
        let a = GradedRing::polynomial(PrimeField::default(), names(&["x", "y"]));
        let p = poincare_from_hilbert(&GradedModule::residue_field(a), 4).unwrap();
        assert_eq!(p.coefficients, vec![1, 2, 1, 0, 0]);
        assert_eq!(p.closed_form.as_deref(), Some("1 + 2*z + z^2"));
    }

    #[test]
    fn residue_field_over_node() {
        let s = GradedRing::polynomial(PrimeField::default(), names(&["x", "y"]));
        let xy = s.ring().pmul(&s.ring().var(0), &s.ring().var(1));
        let a = GradedRing::new(PrimeField::default(), names(&["x", "y"]), vec![xy]).unwrap();
        let p = poincare_from_hilbert(&GradedModule::residue_field(a), 5).unwrap();
        assert_eq!(p.coefficients, vec![1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn analysis_of_koszul_tables() {
        let mut t = BettiTable::default();
        for (i, j, b) in [(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)] {
            t.entries.entry(i).or_default().insert(j, b);
        }
        t.complete = true;
        let r = betti_analysis(&t);
        assert!(r.is_pure && !r.is_linear);
        assert_eq!(r.degree_type, vec![0, 2, 4, 6]);
        assert_eq!(r.regularity_within_cutoff, 3);
        let mut u = BettiTable::default();
        for (i, j, b) in [(0, 0, 1), (1, 1, 2), (2, 2, 1)] {
            u.entries.entry(i).or_default().insert(j, b);
        }
        u.complete = true;
        let r = betti_analysis(&u);
        assert!(r.is_pure && r.is_linear);
        assert_eq!(r.decided(), Some(true));
    }
}
