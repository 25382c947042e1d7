use serde::{Deserialize, Serialize};

use crate::engine::{syzygies, Complex, FreeLayout, Matrix};
use crate::error::Result;
use crate::graded::GradedRing;
use crate::local::{initial_matrix, submodule_initial, LocalModule, LocalResolution};
use crate::poly::ModuleElement;

/// The graded complex `F•*` over `A`: `G(F_i)(−δ_i)` with the initial
/// matrices of the differentials.
#[derive(Clone, Debug)]
pub struct FStarComplex {
    pub ring: GradedRing,
    pub complex: Complex,
    pub delta: Vec<i64>,
    pub s: Vec<u32>,
    /// The source resolution stops because it is complete.
    pub finite: bool,
    /// Minimal generators of `N* ⊆ G(F_0)`.
    pub nstar: Vec<ModuleElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum PurityConclusion {
    Pure,
    NotPure { reason: String },
    InconclusiveAtCutoff { cutoff: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyWitness {
    pub position: usize,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FStarVerdict {
    pub is_complex: bool,
    /// Largest `k` with zero homology at positions `1..=k`.
    pub acyclic_up_to: usize,
    /// Every position of a finite complex was checked and found exact.
    pub fully_acyclic: bool,
    pub homology_witness: Option<HomologyWitness>,
    pub coker_is_gm: bool,
    pub is_minimal: bool,
    pub purity_conclusion: PurityConclusion,
    /// Acyclic yet `coker φ_1* ≠ G(M)`: worth reporting, no conclusion drawn.
    pub noteworthy: bool,
}

pub fn build_fstar(res: &LocalResolution) -> Result<FStarComplex> {
    let rr = &res.ring;
    let a = rr.associated_graded().clone();
    let mut layouts = vec![FreeLayout::new(vec![0; res.betti[0]])];
    let mut maps = Vec::with_capacity(res.matrices.len());
    for (i, phi) in res.matrices.iter().enumerate() {
        let (_, star) = initial_matrix(rr, phi)?;
        let ring = a.module_ring(&layouts[i].twists);
        maps.push(star.resorted(&ring));
        layouts.push(FreeLayout::new(vec![res.delta[i + 1]; res.betti[i + 1]]));
    }
    let complex = Complex::new(layouts, maps)?;
    let nstar = match res.matrices.first() {
        Some(phi) => {
            let n = LocalModule::new(rr.clone(), phi.nrows, phi.cols.clone())?;
            submodule_initial(&n)?.nstar_generators
        }
        None => Vec::new(),
    };
    Ok(FStarComplex {
        ring: a,
        complex,
        delta: res.delta.clone(),
        s: res.s.clone(),
        finite: res.is_finite(),
        nstar,
    })
}

impl FStarComplex {
    pub fn maps(&self) -> &[Matrix] {
        &self.complex.maps
    }

    /// Rendered matrices of the differentials.
    pub fn render(&self) -> Vec<Vec<Vec<String>>> {
        self.complex.maps.iter().map(|m| m.render(self.ring.ring())).collect()
    }
}

/// Kernel of `d_i` not contained in the image of `d_{i+1}`, if any.
fn homology_at(fs: &FStarComplex, i: usize) -> Result<Option<ModuleElement>> {
    let a = &fs.ring;
    let src = &fs.complex.layouts[i - 1];
    let ring = a.module_ring(&src.twists);
    let d = &fs.complex.maps[i - 1];
    let cols: Vec<ModuleElement> = d.cols.iter().map(|c| ring.resort_element(c)).collect();
    let ker = syzygies(&ring, src.rank, &cols, a.modulus())?;
    let here = &fs.complex.layouts[i];
    let image: Vec<ModuleElement> = fs.complex.maps.get(i).map(|m| m.cols.clone()).unwrap_or_default();
    let span = a.submodule_basis(here, &image)?;
    let target = a.module_ring(&here.twists);
    for k in ker.columns {
        let k = target.resort_element(&k);
        if !span.contains(&k) {
            return Ok(Some(span.reduce(&k)));
        }
    }
    Ok(None)
}

/// Check complex, exactness, cokernel and minimality of `F•*` up to `cutoff`.
pub fn verify_fstar(fs: &FStarComplex, cutoff: usize) -> Result<FStarVerdict> {
    let a = &fs.ring;
    let is_complex = fs.complex.is_complex(a.ring(), a.modulus())?;
    let is_minimal = fs.complex.is_minimal();
    let l = fs.complex.maps.len();
    let coker_is_gm = match fs.complex.maps.first() {
        Some(d) => {
            let span = a.submodule_basis(&fs.complex.layouts[0], &d.cols)?;
            fs.nstar.iter().all(|v| span.contains(v))
        }
        None => true,
    };
    let last = if fs.finite { l } else { l.saturating_sub(1) };
    let last = last.min(cutoff);
    let mut acyclic_up_to = 0;
    let mut witness = None;
    for i in 1..=last {
        match homology_at(fs, i)? {
            None => acyclic_up_to = i,
            Some(h) => {
                let ring = a.module_ring(&fs.complex.layouts[i].twists);
                witness = Some(HomologyWitness {
                    position: i,
                    class: ring.fmt_element(&h, fs.complex.layouts[i].rank),
                });
                break;
            }
        }
    }
    let fully_acyclic = witness.is_none() && fs.finite && last == l;
    let purity_conclusion = if !is_complex {
        PurityConclusion::NotPure { reason: "not a complex".into() }
    } else if let Some(w) = &witness {
        PurityConclusion::NotPure {
            reason: format!("homology at position {}", w.position),
        }
    } else if !coker_is_gm {
        PurityConclusion::NotPure {
            reason: "coker φ_1* ≠ G(M)".into(),
        }
    } else if !is_minimal {
        PurityConclusion::NotPure { reason: "not minimal".into() }
    } else if fully_acyclic {
        PurityConclusion::Pure
    } else {
        PurityConclusion::InconclusiveAtCutoff { cutoff }
    };
    Ok(FStarVerdict {
        is_complex,
        acyclic_up_to,
        fully_acyclic,
        homology_witness: witness,
        coker_is_gm,
        is_minimal,
        purity_conclusion,
        noteworthy: fully_acyclic && !coker_is_gm,
    })
}
