use crate::error::{Error, Result};
use crate::poly::{Flavor, ModuleElement, ModuleRule, OrderSpec, PolyRing};

use super::basis::{ideal_basis, minimal_generators, standard_basis, StandardBasis};

/// Generators of the syzygy module of a list of columns.
///
/// Column `k` lives in the free module on the input columns; `source_twists`
/// gives the degree of each input column (degree of its leading term).
#[derive(Clone, Debug)]
pub struct SyzygyMatrix {
    pub columns: Vec<ModuleElement>,
    pub source_rank: usize,
    pub source_twists: Vec<i64>,
}

/// Degree of the leading term of each column (zero for zero columns).
pub fn column_degrees(ring: &PolyRing, columns: &[ModuleElement]) -> Vec<i64> {
    columns
        .iter()
        .map(|c| {
            c.leading()
                .map_or(0, |t| ring.order().weighted_degree(&t.mon, t.comp))
        })
        .collect()
}

/// The syzygy module of `columns` (elements of a free module of rank
/// `rank`), over the base ring modulo the optional ideal `modulus`.
///
/// Computed by a standard basis of the graph module `{(f_j, e_j)}` under a
/// position-over-term order in which the target components dominate. For
/// local orders the computation runs over the polynomial ring; its
/// syzygies generate the localized syzygy module.
pub fn syzygies(
    ring: &PolyRing,
    rank: usize,
    columns: &[ModuleElement],
    modulus: Option<&StandardBasis>,
) -> Result<SyzygyMatrix> {
    let m = columns.len();
    let twists = column_degrees(ring, columns);
    if m == 0 {
        return Ok(SyzygyMatrix {
            columns: Vec::new(),
            source_rank: 0,
            source_twists: twists,
        });
    }
    let mut shifts: Vec<i64> = (0..rank).map(|c| ring.order().shift(c)).collect();
    shifts.extend(&twists);
    let elim = ring.with_order(OrderSpec {
        flavor: Flavor::Global,
        rule: ModuleRule::PositionOverTerm,
        shifts,
    });
    let global_modulus = match modulus {
        Some(q) if q.ring().order().is_local() => {
            let polys: Vec<_> = q.polynomials().iter().map(|p| elim.resort_poly(p)).collect();
            Some(ideal_basis(&elim.with_order(OrderSpec::global()), &polys)?)
        }
        _ => None,
    };
    let modulus_for_elim = global_modulus.as_ref().or(modulus);
    let inputs: Vec<ModuleElement> = columns
        .iter()
        .enumerate()
        .map(|(j, c)| elim.vadd(&elim.resort_element(c), &elim.unit_vector(rank + j)))
        .collect();
    let sb = standard_basis(&elim, rank + m, &inputs, modulus_for_elim)?;

    let target = ring.with_order(ring.order().clone().with_shifts(twists.clone()));
    let zero_test = match modulus {
        Some(q) => Some(q.extended_to_rank(&target, m)?),
        None => None,
    };
    let mut out = Vec::new();
    for g in sb.generators() {
        let lead = g.leading().expect("nonzero");
        if lead.comp < rank {
            continue;
        }
        let s = target.resort_element(&target.remap_components(&g, |c| c.checked_sub(rank)));
        if let Some(z) = &zero_test {
            if z.contains(&s) {
                continue;
            }
        }
        out.push(s);
    }
    Ok(SyzygyMatrix {
        columns: out,
        source_rank: m,
        source_twists: twists,
    })
}

/// Graded minimal generators of the syzygy module of homogeneous columns.
pub fn minimal_syzygies(
    ring: &PolyRing,
    rank: usize,
    columns: &[ModuleElement],
    modulus: Option<&StandardBasis>,
) -> Result<SyzygyMatrix> {
    let mut syz = syzygies(ring, rank, columns, modulus)?;
    if syz.columns.is_empty() {
        return Ok(syz);
    }
    let target = ring.with_order(ring.order().clone().with_shifts(syz.source_twists.clone()));
    let cols: Vec<ModuleElement> = syz.columns.iter().map(|c| target.resort_element(c)).collect();
    let (_, kept) = minimal_generators(&target, syz.source_rank, &cols, modulus)?;
    syz.columns = kept.into_iter().map(|k| cols[k].clone()).collect();
    Ok(syz)
}

/// `Σ_r v_r · columns[r]`, reduced modulo `I·F` when a modulus is given.
pub fn apply(
    ring: &PolyRing,
    rank: usize,
    columns: &[ModuleElement],
    v: &ModuleElement,
    modulus: Option<&StandardBasis>,
) -> Result<ModuleElement> {
    let w = ring.apply_columns(columns, v);
    match modulus {
        Some(q) => Ok(q.extended_to_rank(ring, rank)?.reduce(&w)),
        None => Ok(w),
    }
}

/// Check that every syzygy column annihilates the input matrix exactly.
pub fn verify_syzygies(
    ring: &PolyRing,
    rank: usize,
    columns: &[ModuleElement],
    syz: &SyzygyMatrix,
    modulus: Option<&StandardBasis>,
) -> Result<()> {
    let z = match modulus {
        Some(q) => Some(q.extended_to_rank(ring, rank)?),
        None => None,
    };
    for (k, s) in syz.columns.iter().enumerate() {
        let w = ring.apply_columns(columns, s);
        let zero = match &z {
            Some(z) => z.contains(&w),
            None => w.is_zero(),
        };
        if !zero {
            return Err(Error::Consistency(format!("syzygy column {k} does not annihilate the input")));
        }
    }
    Ok(())
}
