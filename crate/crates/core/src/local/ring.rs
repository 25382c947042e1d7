use crate::engine::{ideal_basis, minimal_generators, StandardBasis};
use crate::error::{Error, Result};
use crate::graded::GradedRing;
use crate::poly::{ModuleElement, OrderSpec, PolyRing, Polynomial, PrimeField};

/// `R = k[x]_(x) / I`, represented by the polynomial generators of `I`.
#[derive(Clone, Debug)]
pub struct LocalRing {
    ring: PolyRing,
    ideal: Vec<Polynomial>,
    basis: Option<StandardBasis>,
    tangent_cone: Vec<Polynomial>,
    graded: GradedRing,
}

/// Generators of the tangent cone `in(I)`: initial forms of a local
/// standard basis, trimmed to a minimal homogeneous generating set.
pub fn tangent_cone(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let local = ring.with_order(OrderSpec::local());
    let gens: Vec<Polynomial> = gens.iter().map(|g| local.resort_poly(g)).filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let sb = ideal_basis(&local, &gens)?;
    initial_ideal(ring, &sb)
}

fn initial_ideal(ring: &PolyRing, sb: &StandardBasis) -> Result<Vec<Polynomial>> {
    if sb.contains_unit() {
        return Err(Error::UnitIdeal);
    }
    let global = ring.with_order(OrderSpec::global());
    let forms: Vec<ModuleElement> = sb
        .polynomials()
        .iter()
        .map(|p| {
            let (_, inf) = global.poly_order_and_initial_form(p).expect("nonzero basis element");
            global.poly_times_unit(&global.resort_poly(&inf), 0)
        })
        .collect();
    let (_, kept) = minimal_generators(&global, 1, &forms, None)?;
    Ok(kept
        .into_iter()
        .map(|k| {
            let v = global.monic(&forms[k]);
            global.entry(&v, 0)
        })
        .collect())
}

impl LocalRing {
    pub fn new(field: PrimeField, names: Vec<String>, ideal: Vec<Polynomial>) -> Result<Self> {
        let ring = PolyRing::new(field, names, OrderSpec::local());
        Self::from_ring(&ring, ideal)
    }

    pub fn regular(field: PrimeField, names: Vec<String>) -> Self {
        LocalRing::new(field, names, Vec::new()).expect("zero ideal")
    }

    /// `ring` supplies field and variables; its order is replaced by the local one.
    pub fn from_ring(ring: &PolyRing, ideal: Vec<Polynomial>) -> Result<Self> {
        let ring = ring.with_order(OrderSpec::local());
        let ideal: Vec<Polynomial> = ideal
            .iter()
            .map(|g| ring.resort_poly(g))
            .filter(|g| !g.is_zero())
            .collect();
        let (basis, cone) = if ideal.is_empty() {
            (None, Vec::new())
        } else {
            let sb = ideal_basis(&ring, &ideal)?;
            let cone = initial_ideal(&ring, &sb)?;
            (Some(sb), cone)
        };
        let graded = GradedRing::from_ring(&ring, cone.clone())?;
        Ok(LocalRing {
            ring,
            ideal,
            basis,
            tangent_cone: cone,
            graded,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    pub fn names(&self) -> &[String] {
        self.ring.names()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn basis(&self) -> Option<&StandardBasis> {
        self.basis.as_ref()
    }

    /// Minimal homogeneous generators of `in(I)` (grevlex-sorted).
    pub fn tangent_cone(&self) -> &[Polynomial] {
        &self.tangent_cone
    }

    /// `A = G_m(R) = k[x]/in(I)`.
    pub fn associated_graded(&self) -> &GradedRing {
        &self.graded
    }

    pub fn is_homogeneous(&self) -> bool {
        self.ideal.iter().all(|g| g.is_homogeneous())
    }

    /// The same ring as a graded algebra `k[x]/I`, when `I` is homogeneous.
    pub fn as_graded(&self) -> Option<GradedRing> {
        self.is_homogeneous()
            .then(|| GradedRing::from_ring(&self.ring, self.ideal.clone()).ok())
            .flatten()
    }

    /// Mora normal form of a column modulo `I·F`.
    pub fn reduce_element(&self, rank: usize, v: &ModuleElement) -> Result<ModuleElement> {
        let v = self.ring.resort_element(v);
        Ok(match &self.basis {
            Some(b) => b.extended_to_rank(&self.ring, rank)?.reduce(&v),
            None => v,
        })
    }

    pub fn is_zero_element(&self, rank: usize, v: &ModuleElement) -> Result<bool> {
        Ok(self.reduce_element(rank, v)?.is_zero())
    }

    /// `ν(f)` in `R` and the class of the initial form in `A`.
    pub fn order_in_quotient(&self, f: &Polynomial) -> Result<(u32, Polynomial)> {
        let v = self.ring.poly_times_unit(f, 0);
        let (nu, inf) = self.initial_form_element(1, &v)?;
        Ok((nu, self.graded.ring().entry(&inf, 0)))
    }

    /// `ν(v)` for `v ∈ F = R^rank` and its initial form in `G_m(F) = A^rank`.
    pub fn initial_form_element(&self, rank: usize, v: &ModuleElement) -> Result<(u32, ModuleElement)> {
        let h = self.reduce_element(rank, v)?;
        if h.is_zero() {
            return Err(if v.is_zero() { Error::ZeroOrder } else { Error::ZeroInQuotient });
        }
        let (nu, inf) = self.ring.order_and_initial_form(&h)?;
        let a = self.graded.module_ring(&vec![0; rank]);
        let layout = crate::engine::FreeLayout::untwisted(rank);
        let class = self.graded.reduce_element(&layout, &a.resort_element(&inf))?;
        if class.is_zero() {
            return Err(Error::Consistency("initial form of a weak normal form vanished in A".into()));
        }
        Ok((nu, class))
    }
}
