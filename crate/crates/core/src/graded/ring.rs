use crate::engine::{ideal_basis, standard_basis, FreeLayout, StandardBasis};
use crate::error::{Error, Result};
use crate::poly::{ModuleElement, OrderSpec, PolyRing, Polynomial, PrimeField};

/// A standard graded algebra `A = k[x]/J` with `J` homogeneous.
#[derive(Clone, Debug)]
pub struct GradedRing {
    ring: PolyRing,
    ideal: Vec<Polynomial>,
    basis: Option<StandardBasis>,
}

impl GradedRing {
    pub fn new(field: PrimeField, names: Vec<String>, ideal: Vec<Polynomial>) -> Result<Self> {
        let ring = PolyRing::new(field, names, OrderSpec::global());
        Self::from_ring(&ring, ideal)
    }

    /// `ring` supplies field and variables; its order is replaced by grevlex.
    pub fn from_ring(ring: &PolyRing, ideal: Vec<Polynomial>) -> Result<Self> {
        let ring = ring.with_order(OrderSpec::global());
        let ideal: Vec<Polynomial> = ideal
            .iter()
            .map(|g| ring.resort_poly(g))
            .filter(|g| !g.is_zero())
            .collect();
        for (i, g) in ideal.iter().enumerate() {
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous(format!(
                    "ideal generator {} ({})",
                    i,
                    ring.fmt_poly(g)
                )));
            }
        }
        let basis = if ideal.is_empty() {
            None
        } else {
            let b = ideal_basis(&ring, &ideal)?;
            if b.contains_unit() {
                return Err(Error::UnitIdeal);
            }
            Some(b)
        };
        Ok(GradedRing { ring, ideal, basis })
    }

    pub fn polynomial(field: PrimeField, names: Vec<String>) -> Self {
        GradedRing::new(field, names, Vec::new()).expect("zero ideal")
    }

    /// The polynomial ring this algebra is a quotient of.
    pub fn cover(&self) -> GradedRing {
        GradedRing {
            ring: self.ring.clone(),
            ideal: Vec::new(),
            basis: None,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn modulus(&self) -> Option<&StandardBasis> {
        self.basis.as_ref()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.basis.is_none()
    }

    /// The polynomial ring ordered for a free module with the given twists.
    pub fn module_ring(&self, twists: &[i64]) -> PolyRing {
        self.ring.with_order(OrderSpec::global().with_shifts(twists.to_vec()))
    }

    /// Normal form of a polynomial modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let f = self.ring.resort_poly(f);
        match &self.basis {
            Some(b) => b.reduce_poly(&f),
            None => f,
        }
    }

    /// Normal form of a free-module element modulo `J·F`.
    pub fn reduce_element(&self, layout: &FreeLayout, v: &ModuleElement) -> Result<ModuleElement> {
        let r = self.module_ring(&layout.twists);
        let v = r.resort_element(v);
        Ok(match &self.basis {
            Some(b) => b.extended_to_rank(&r, layout.rank)?.reduce(&v),
            None => v,
        })
    }

    /// Standard basis of the submodule spanned by `gens` plus `J·F`.
    pub fn submodule_basis(&self, layout: &FreeLayout, gens: &[ModuleElement]) -> Result<StandardBasis> {
        let r = self.module_ring(&layout.twists);
        let gens: Vec<ModuleElement> = gens.iter().map(|g| r.resort_element(g)).collect();
        standard_basis(&r, layout.rank, &gens, self.modulus())
    }

    /// Mutual containment of two submodules of the same free module, modulo `J·F`.
    pub fn same_submodule(&self, layout: &FreeLayout, a: &[ModuleElement], b: &[ModuleElement]) -> Result<bool> {
        let sa = self.submodule_basis(layout, a)?;
        let sb = self.submodule_basis(layout, b)?;
        Ok(b.iter().all(|v| sa.contains(v)) && a.iter().all(|v| sb.contains(v)))
    }
}
