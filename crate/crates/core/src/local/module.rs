use crate::engine::{minimal_generators, FreeLayout};
use crate::error::{Error, Result};
use crate::graded::GradedModule;
use crate::poly::{ModuleElement, PolyRing};

use super::lazard::Homogenization;
use super::ring::LocalRing;

/// `M = F/N` with `F = R^rank` and `N ⊆ mF` given by generating columns.
#[derive(Clone, Debug)]
pub struct LocalModule {
    ring: LocalRing,
    rank: usize,
    gens: Vec<ModuleElement>,
}

/// The graded data attached to `N ⊆ F`.
#[derive(Clone, Debug)]
pub struct InitialData {
    /// `s = ν(N)`.
    pub s: u32,
    /// Minimal homogeneous generators of `N* ⊆ A^rank`.
    pub nstar_generators: Vec<ModuleElement>,
    /// The initial forms of the given generators already generate `N*`.
    pub input_is_standard_basis: bool,
    /// Degrees of the minimal generators of `N*`, ascending.
    pub generator_degrees: Vec<u32>,
}

impl LocalModule {
    pub fn new(ring: LocalRing, rank: usize, gens: Vec<ModuleElement>) -> Result<Self> {
        let r = ring.ring().clone();
        let mut out = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            let g = r.resort_element(g);
            if g.max_comp().map_or(false, |c| c >= rank) {
                return Err(Error::Precondition(format!("generator {i} exceeds the free rank")));
            }
            if g.has_unit_entry() {
                return Err(Error::NotInMaximalIdeal(i));
            }
            out.push(g);
        }
        Ok(LocalModule { ring, rank, gens: out })
    }

    pub fn free(ring: LocalRing, rank: usize) -> Self {
        LocalModule {
            ring,
            rank,
            gens: Vec::new(),
        }
    }

    /// The residue field `R/m`.
    pub fn residue_field(ring: LocalRing) -> Self {
        let r = ring.ring().clone();
        let gens = (0..r.nvars()).map(|i| r.poly_times_unit(&r.var(i), 0)).collect();
        LocalModule::new(ring, 1, gens).expect("variables lie in m")
    }

    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    /// Generators that are nonzero in `F`.
    pub fn nonzero_generators(&self) -> Result<Vec<ModuleElement>> {
        let mut out = Vec::new();
        for g in &self.gens {
            if !self.ring.is_zero_element(self.rank, g)? {
                out.push(g.clone());
            }
        }
        Ok(out)
    }

    /// Largest total degree occurring in a generator.
    pub fn max_generator_degree(&self) -> u32 {
        self.gens
            .iter()
            .flat_map(|g| g.terms().iter().map(|t| t.mon.degree()))
            .max()
            .unwrap_or(0)
    }

    /// `ν(N)`: least order of a given generator; `None` when `N = 0`.
    pub fn order(&self) -> Result<Option<u32>> {
        let mut best: Option<u32> = None;
        for g in self.nonzero_generators()? {
            let (nu, _) = self.ring.initial_form_element(self.rank, &g)?;
            best = Some(best.map_or(nu, |b: u32| b.min(nu)));
        }
        Ok(best)
    }

    pub fn graded_ring(&self) -> PolyRing {
        self.ring.associated_graded().module_ring(&vec![0; self.rank])
    }
}

/// Initial forms of a local standard basis of `N + I·F`, trimmed to a
/// minimal generating set of `N*` over `A`.
pub fn submodule_initial(m: &LocalModule) -> Result<InitialData> {
    let rr = m.ring();
    let gens = m.nonzero_generators()?;
    if gens.is_empty() {
        return Err(Error::ZeroSubmodule);
    }
    let local = rr.ring();
    let sb = Homogenization::new(rr)?.standard_basis(m.rank(), &gens)?;
    let a = rr.associated_graded();
    let layout = FreeLayout::untwisted(m.rank());
    let ga = m.graded_ring();
    let mut forms = Vec::new();
    for g in sb {
        let (_, inf) = local.order_and_initial_form(&g)?;
        let v = a.reduce_element(&layout, &ga.resort_element(&inf))?;
        if !v.is_zero() {
            forms.push(v);
        }
    }
    let (_, kept) = minimal_generators(&ga, m.rank(), &forms, a.modulus())?;
    let mut nstar: Vec<ModuleElement> = kept.into_iter().map(|k| ga.monic(&forms[k])).collect();
    nstar.sort_by_key(|v| v.degree_range(ga.order()).map(|d| d.0));
    let generator_degrees: Vec<u32> = nstar
        .iter()
        .map(|v| v.degree_range(ga.order()).unwrap().0 as u32)
        .collect();

    let mut given = Vec::new();
    let mut s = u32::MAX;
    for g in &gens {
        let (nu, inf) = rr.initial_form_element(m.rank(), g)?;
        s = s.min(nu);
        given.push(inf);
    }
    if generator_degrees.first() != Some(&s) {
        return Err(Error::Consistency(format!(
            "ν(N) = {s} but the lowest generator degree of N* is {:?}",
            generator_degrees.first()
        )));
    }
    let span = a.submodule_basis(&layout, &given)?;
    let input_is_standard_basis = nstar.iter().all(|v| span.contains(v));
    Ok(InitialData {
        s,
        nstar_generators: nstar,
        input_is_standard_basis,
        generator_degrees,
    })
}

/// `G_m(M) = G_m(F)/N*` as a graded module over `A`.
pub fn assoc_graded_module(m: &LocalModule) -> Result<GradedModule> {
    let a = m.ring().associated_graded().clone();
    let layout = FreeLayout::untwisted(m.rank());
    if m.nonzero_generators()?.is_empty() {
        return Ok(GradedModule::free(a, layout));
    }
    let data = submodule_initial(m)?;
    GradedModule::new(a, layout, data.nstar_generators)
}
