use crate::engine::FreeLayout;
use crate::error::{Error, Result};
use crate::poly::{ModuleElement, PolyRing};

use super::ring::GradedRing;

/// A graded module `F/N` over a graded algebra, `N` spanned by homogeneous
/// relation columns.
#[derive(Clone, Debug)]
pub struct GradedModule {
    ring: GradedRing,
    layout: FreeLayout,
    relations: Vec<ModuleElement>,
}

impl GradedModule {
    pub fn new(ring: GradedRing, layout: FreeLayout, relations: Vec<ModuleElement>) -> Result<Self> {
        let r = ring.module_ring(&layout.twists);
        let mut rels = Vec::with_capacity(relations.len());
        for (i, v) in relations.iter().enumerate() {
            let v = r.resort_element(v);
            if v.max_comp().map_or(false, |c| c >= layout.rank) {
                return Err(Error::Precondition(format!("relation {i} exceeds the free rank")));
            }
            if !v.is_homogeneous(r.order()) {
                return Err(Error::NonHomogeneous(format!("relation {i}")));
            }
            if !v.is_zero() {
                rels.push(v);
            }
        }
        Ok(GradedModule {
            ring,
            layout,
            relations: rels,
        })
    }

    pub fn free(ring: GradedRing, layout: FreeLayout) -> Self {
        GradedModule {
            ring,
            layout,
            relations: Vec::new(),
        }
    }

    /// The algebra itself as a cyclic module.
    pub fn ring_itself(ring: GradedRing) -> Self {
        GradedModule::free(ring, FreeLayout::untwisted(1))
    }

    /// The residue field `A/A₊`.
    pub fn residue_field(ring: GradedRing) -> Self {
        let r = ring.module_ring(&[0]);
        let rels = (0..r.nvars()).map(|i| r.poly_times_unit(&r.var(i), 0)).collect();
        GradedModule::new(ring, FreeLayout::untwisted(1), rels).expect("variables are homogeneous")
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn layout(&self) -> &FreeLayout {
        &self.layout
    }

    pub fn relations(&self) -> &[ModuleElement] {
        &self.relations
    }

    pub fn poly_ring(&self) -> PolyRing {
        self.ring.module_ring(&self.layout.twists)
    }

    /// The same module viewed over the polynomial cover: relations gain
    /// `J·e_c` for every component.
    pub fn over_cover(&self) -> GradedModule {
        let r = self.poly_ring();
        let mut rels = self.relations.clone();
        for c in 0..self.layout.rank {
            for g in self.ring.ideal() {
                rels.push(r.poly_times_unit(g, c));
            }
        }
        GradedModule::new(self.ring.cover(), self.layout.clone(), rels).expect("homogeneous")
    }

    /// Whether `M = 0`, i.e. the relations together with `J·F` span `F`.
    pub fn is_zero(&self) -> Result<bool> {
        if self.layout.rank == 0 {
            return Ok(true);
        }
        let sb = self.ring.submodule_basis(&self.layout, &self.relations)?;
        let r = self.poly_ring();
        Ok((0..self.layout.rank).all(|c| sb.contains(&r.unit_vector(c))))
    }
}
