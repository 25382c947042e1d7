use serde::{Deserialize, Serialize};

use crate::engine::{FreeLayout, Matrix};
use crate::error::{Error, Result};
use crate::graded::{minimal_graded_resolution, GradedModule};
use crate::poly::{ModuleElement, PolyRing, Polynomial};

use super::lazard::Homogenization;
use super::module::LocalModule;
use super::ring::LocalRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum ResolutionStatus {
    Finite(usize),
    TruncatedAt(usize),
}

/// A minimal free resolution `F_0 ← F_1 ← …` over the local ring.
#[derive(Clone, Debug)]
pub struct LocalResolution {
    pub ring: LocalRing,
    /// `φ_1, φ_2, …`; `φ_i` has `betti[i-1]` rows and `betti[i]` columns.
    pub matrices: Vec<Matrix>,
    pub betti: Vec<usize>,
    /// Order of every column of every `φ_i`.
    pub column_orders: Vec<Vec<u32>>,
    /// `s_i = ν(φ_i)`.
    pub s: Vec<u32>,
    /// `δ_0 = 0`, `δ_i = δ_{i−1} + s_i`.
    pub delta: Vec<i64>,
    pub status: ResolutionStatus,
}

/// Drop columns made redundant by syzygies with a unit entry; returns the
/// surviving columns and generators of their syzygies.
///
/// Each round drops columns whose witnessing syzygies vanish on the columns
/// dropped before them in that round, so the survivors still generate.
fn trim_generators(
    rr: &LocalRing,
    hom: &Homogenization,
    rank: usize,
    mut cols: Vec<ModuleElement>,
) -> Result<(Vec<ModuleElement>, Vec<ModuleElement>)> {
    let ring = rr.ring();
    loop {
        let syz = hom.syzygies(rank, &cols)?;
        let mut dropped: Vec<usize> = Vec::new();
        for s in &syz {
            if s.terms().iter().any(|t| dropped.contains(&t.comp)) {
                continue;
            }
            if let Some(t) = s.terms().iter().find(|t| t.mon.is_one()) {
                dropped.push(t.comp);
            }
        }
        if dropped.is_empty() {
            let mut out = Vec::new();
            for s in syz {
                if !rr.is_zero_element(cols.len(), &s)? {
                    out.push(ring.resort_element(&s));
                }
            }
            return Ok((cols, out));
        }
        cols = cols
            .into_iter()
            .enumerate()
            .filter_map(|(k, c)| (!dropped.contains(&k)).then_some(c))
            .collect();
    }
}

/// `μ(N)`: the number of minimal generators of `N` over the local ring.
pub fn minimal_generator_count(m: &LocalModule) -> Result<usize> {
    let gens = m.nonzero_generators()?;
    if gens.is_empty() {
        return Ok(0);
    }
    let hom = Homogenization::new(m.ring())?;
    Ok(trim_generators(m.ring(), &hom, m.rank(), gens)?.0.len())
}

fn entry_orders(rr: &LocalRing, col: &ModuleElement, rows: usize) -> Result<Vec<Option<(u32, Polynomial)>>> {
    let ring = rr.ring();
    ring.entries(col, rows)
        .iter()
        .map(|p| {
            if p.is_zero() {
                return Ok(None);
            }
            match rr.order_in_quotient(p) {
                Ok(x) => Ok(Some(x)),
                Err(Error::ZeroInQuotient) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect()
}

/// `(s, φ*)`: the order of a matrix over `R` and its initial form over `A`.
pub fn initial_matrix(rr: &LocalRing, phi: &Matrix) -> Result<(u32, Matrix)> {
    let mut orders = Vec::with_capacity(phi.ncols());
    for col in &phi.cols {
        orders.push(entry_orders(rr, col, phi.nrows)?);
    }
    let s = orders
        .iter()
        .flatten()
        .flatten()
        .map(|(nu, _)| *nu)
        .min()
        .ok_or(Error::ZeroMatrix)?;
    let a = rr.associated_graded().ring();
    let cols = orders
        .iter()
        .map(|col| {
            let entries: Vec<Polynomial> = col
                .iter()
                .map(|e| match e {
                    Some((nu, inf)) if *nu == s => inf.clone(),
                    _ => Polynomial::zero(),
                })
                .collect();
            a.column(&entries)
        })
        .collect();
    Ok((s, Matrix::new(phi.nrows, cols)))
}

fn column_orders(rr: &LocalRing, phi: &Matrix) -> Result<Vec<u32>> {
    phi.cols
        .iter()
        .map(|c| {
            entry_orders(rr, c, phi.nrows)?
                .into_iter()
                .flatten()
                .map(|(nu, _)| nu)
                .min()
                .ok_or(Error::ZeroMatrix)
        })
        .collect()
}

fn finish(rr: &LocalRing, rank0: usize, matrices: Vec<Matrix>, status: ResolutionStatus) -> Result<LocalResolution> {
    let mut betti = vec![rank0];
    betti.extend(matrices.iter().map(|m| m.ncols()));
    let mut orders = Vec::new();
    let mut s = Vec::new();
    let mut delta = vec![0i64];
    for m in &matrices {
        let o = column_orders(rr, m)?;
        let si = *o.iter().min().ok_or(Error::ZeroMatrix)?;
        delta.push(delta.last().unwrap() + si as i64);
        s.push(si);
        orders.push(o);
    }
    Ok(LocalResolution {
        ring: rr.clone(),
        matrices,
        betti,
        column_orders: orders,
        s,
        delta,
        status,
    })
}

fn homogeneous_input(m: &LocalModule) -> bool {
    m.ring().is_homogeneous() && m.generators().iter().all(|g| g.is_homogeneous(m.ring().ring().order()))
}

/// Minimal free resolution over `R` up to `cutoff` maps. Homogeneous input
/// is resolved as a graded module, which is then minimal over `R` as well.
pub fn local_minimal_resolution(m: &LocalModule, cutoff: usize) -> Result<LocalResolution> {
    let rr = m.ring();
    let gens = m.nonzero_generators()?;
    if gens.is_empty() || cutoff == 0 {
        let status = if gens.is_empty() {
            ResolutionStatus::Finite(0)
        } else {
            ResolutionStatus::TruncatedAt(0)
        };
        return finish(rr, m.rank(), Vec::new(), status);
    }
    if homogeneous_input(m) {
        if let Some(g) = rr.as_graded() {
            let gm = GradedModule::new(g, FreeLayout::untwisted(m.rank()), gens)?;
            let res = minimal_graded_resolution(&gm, cutoff)?;
            let local = rr.ring();
            let maps: Vec<Matrix> = res.complex.maps.iter().map(|mm| mm.resorted(local)).collect();
            let status = match res.status.finite() {
                Some(p) => ResolutionStatus::Finite(p),
                None => ResolutionStatus::TruncatedAt(cutoff),
            };
            return finish(rr, m.rank(), maps, status);
        }
    }
    let hom = Homogenization::new(rr)?;
    let mut matrices = Vec::new();
    let mut rank = m.rank();
    let mut cols = gens;
    let status;
    loop {
        let (kept, syz) = trim_generators(rr, &hom, rank, cols)?;
        let n = kept.len();
        matrices.push(Matrix::new(rank, kept));
        if syz.is_empty() {
            status = ResolutionStatus::Finite(matrices.len());
            break;
        }
        if matrices.len() == cutoff {
            status = ResolutionStatus::TruncatedAt(cutoff);
            break;
        }
        rank = n;
        cols = syz;
    }
    finish(rr, m.rank(), matrices, status)
}

impl LocalResolution {
    pub fn is_finite(&self) -> bool {
        matches!(self.status, ResolutionStatus::Finite(_))
    }

    pub fn pdim(&self) -> Option<usize> {
        match self.status {
            ResolutionStatus::Finite(p) => Some(p),
            ResolutionStatus::TruncatedAt(_) => None,
        }
    }

    pub fn local_ring(&self) -> &PolyRing {
        self.ring.ring()
    }

    /// Check `φ_i ∘ φ_{i+1} = 0` in `R`.
    pub fn check_complex(&self) -> Result<()> {
        let ring = self.ring.ring();
        for i in 0..self.matrices.len().saturating_sub(1) {
            let prod = self.matrices[i].compose(ring, &self.matrices[i + 1]);
            for c in &prod.cols {
                if !self.ring.is_zero_element(prod.nrows, c)? {
                    return Err(Error::NotAComplex(format!("φ_{} ∘ φ_{} ≠ 0", i + 1, i + 2)));
                }
            }
        }
        Ok(())
    }
}
