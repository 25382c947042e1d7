use crate::engine::{ideal_basis, minimal_syzygies, standard_basis};
use crate::error::Result;
use crate::graded::GradedRing;
use crate::poly::{ModuleElement, Monomial, OrderSpec, PolyRing, Polynomial, Term};

use super::ring::LocalRing;

/// The ring `k[x,t]/I^h`, with `I^h` homogenized from a degree-compatible
/// Gröbner basis of `I`. Setting `t = 1` is exact and returns `k[x]/I`.
pub(crate) struct Homogenization {
    local: PolyRing,
    graded: GradedRing,
}

impl Homogenization {
    pub fn new(rr: &LocalRing) -> Result<Self> {
        let local = rr.ring().clone();
        let mut names = local.names().to_vec();
        let mut t = String::from("t");
        while names.contains(&t) {
            t.push('_');
        }
        names.push(t);
        let hring = PolyRing::new(local.field().clone(), names, OrderSpec::global());
        let ideal: Vec<Polynomial> = if rr.ideal().is_empty() {
            Vec::new()
        } else {
            let global = local.with_order(OrderSpec::global());
            let polys: Vec<Polynomial> = rr.ideal().iter().map(|p| global.resort_poly(p)).collect();
            ideal_basis(&global, &polys)?
                .polynomials()
                .iter()
                .map(|p| hring.entry(&homogenize(&hring, &global.poly_times_unit(p, 0)), 0))
                .collect()
        };
        Ok(Homogenization {
            graded: GradedRing::from_ring(&hring, ideal)?,
            local,
        })
    }

    /// Generators of the syzygies of `cols` over the local ring.
    pub fn syzygies(&self, rank: usize, cols: &[ModuleElement]) -> Result<Vec<ModuleElement>> {
        let ring = self.graded.module_ring(&vec![0; rank]);
        let hcols: Vec<ModuleElement> = cols.iter().map(|c| homogenize(&ring, c)).collect();
        let syz = minimal_syzygies(&ring, rank, &hcols, self.graded.modulus())?;
        Ok(syz.columns.iter().map(|c| dehomogenize(&self.local, c)).collect())
    }

    /// A local standard basis of `N + I·F`, without the `I·F` part: a
    /// homogeneous Gröbner basis under the Lazard order, with `t = 1`.
    pub fn standard_basis(&self, rank: usize, gens: &[ModuleElement]) -> Result<Vec<ModuleElement>> {
        let ring = self.graded.ring().with_order(OrderSpec::lazard());
        let ideal = if self.graded.ideal().is_empty() {
            None
        } else {
            Some(ideal_basis(&ring, self.graded.ideal())?)
        };
        let hgens: Vec<ModuleElement> = gens.iter().map(|g| homogenize(&ring, g)).collect();
        let sb = standard_basis(&ring, rank, &hgens, ideal.as_ref())?;
        Ok(sb.generators().iter().map(|g| dehomogenize(&self.local, g)).collect())
    }
}

fn homogenize(ring: &PolyRing, v: &ModuleElement) -> ModuleElement {
    let d = v.terms().iter().map(|t| t.mon.degree()).max().unwrap_or(0);
    let terms = v
        .terms()
        .iter()
        .map(|t| {
            let mut e = t.mon.exps().to_vec();
            e.push((d - t.mon.degree()) as u16);
            Term {
                coeff: t.coeff,
                mon: Monomial::new(e),
                comp: t.comp,
            }
        })
        .collect();
    ring.element_from_terms(terms)
}

fn dehomogenize(ring: &PolyRing, v: &ModuleElement) -> ModuleElement {
    let n = ring.nvars();
    let terms = v
        .terms()
        .iter()
        .map(|t| Term {
            coeff: t.coeff,
            mon: Monomial::new(t.mon.exps()[..n].iter().copied()),
            comp: t.comp,
        })
        .collect();
    ring.element_from_terms(terms)
}
