use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{ModuleElement, PolyRing, Polynomial};

use super::basis::StandardBasis;

/// Rank and basis degrees of a free module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeLayout {
    pub rank: usize,
    pub twists: Vec<i64>,
}

impl FreeLayout {
    pub fn new(twists: Vec<i64>) -> Self {
        FreeLayout {
            rank: twists.len(),
            twists,
        }
    }

    pub fn untwisted(rank: usize) -> Self {
        FreeLayout::new(vec![0; rank])
    }

    fn without(&self, i: usize) -> Self {
        let mut t = self.twists.clone();
        t.remove(i);
        FreeLayout::new(t)
    }
}

/// A matrix stored by columns; each column is an element of a free module
/// with `nrows` components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub nrows: usize,
    pub cols: Vec<ModuleElement>,
}

impl Matrix {
    pub fn new(nrows: usize, cols: Vec<ModuleElement>) -> Self {
        Matrix { nrows, cols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            cols: vec![ModuleElement::zero(); ncols],
        }
    }

    pub fn from_rows(ring: &PolyRing, rows: &[Vec<Polynomial>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let cols = (0..ncols)
            .map(|c| {
                let entries: Vec<Polynomial> = rows.iter().map(|r| r[c].clone()).collect();
                ring.column(&entries)
            })
            .collect();
        Matrix { nrows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, ring: &PolyRing, r: usize, c: usize) -> Polynomial {
        ring.entry(&self.cols[c], r)
    }

    pub fn rows(&self, ring: &PolyRing) -> Vec<Vec<Polynomial>> {
        let cols: Vec<Vec<Polynomial>> = self.cols.iter().map(|c| ring.entries(c, self.nrows)).collect();
        (0..self.nrows)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// `self ∘ other`.
    pub fn compose(&self, ring: &PolyRing, other: &Matrix) -> Matrix {
        Matrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| ring.apply_columns(&self.cols, c)).collect(),
        }
    }

    /// Position `(row, col)` of an entry with nonzero constant term.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for (c, col) in self.cols.iter().enumerate() {
            if let Some(t) = col.terms().iter().find(|t| t.mon.is_one()) {
                return Some((t.comp, c));
            }
        }
        None
    }

    pub fn resorted(&self, ring: &PolyRing) -> Matrix {
        Matrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|c| ring.resort_element(c)).collect(),
        }
    }

    pub fn render(&self, ring: &PolyRing) -> Vec<Vec<String>> {
        self.rows(ring)
            .iter()
            .map(|r| r.iter().map(|p| ring.fmt_poly(p)).collect())
            .collect()
    }
}

/// A chain complex of free modules `F_0 ← F_1 ← … ← F_k`; `maps[i]` is the
/// differential `F_{i+1} → F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub layouts: Vec<FreeLayout>,
    pub maps: Vec<Matrix>,
}

fn zero_mod(ring: &PolyRing, rank: usize, v: &ModuleElement, modulus: Option<&StandardBasis>) -> Result<bool> {
    Ok(match modulus {
        Some(q) => q.extended_to_rank(ring, rank)?.contains(v),
        None => v.is_zero(),
    })
}

impl Complex {
    pub fn new(layouts: Vec<FreeLayout>, maps: Vec<Matrix>) -> Result<Self> {
        if layouts.len() != maps.len() + 1 {
            return Err(Error::Precondition("need one more layout than maps".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.nrows != layouts[i].rank || m.ncols() != layouts[i + 1].rank {
                return Err(Error::Precondition(format!("map {} has the wrong shape", i + 1)));
            }
        }
        Ok(Complex { layouts, maps })
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.layouts.iter().map(|l| l.rank).collect()
    }

    /// First position `i` with `d_i ∘ d_{i+1} ≠ 0`, if any.
    pub fn first_noncomplex(&self, ring: &PolyRing, modulus: Option<&StandardBasis>) -> Result<Option<usize>> {
        for i in 0..self.maps.len().saturating_sub(1) {
            let prod = self.maps[i].compose(ring, &self.maps[i + 1]);
            for c in &prod.cols {
                if !zero_mod(ring, prod.nrows, c, modulus)? {
                    return Ok(Some(i + 1));
                }
            }
        }
        Ok(None)
    }

    pub fn is_complex(&self, ring: &PolyRing, modulus: Option<&StandardBasis>) -> Result<bool> {
        Ok(self.first_noncomplex(ring, modulus)?.is_none())
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.find_unit().is_none())
    }
}

/// Cancel unit entries until every differential has entries in the maximal
/// ideal. The result is homotopy equivalent to the input (over the local
/// ring, or over the graded ring when the input is homogeneous).
pub fn minimalize(ring: &PolyRing, complex: &Complex, modulus: Option<&StandardBasis>) -> Result<Complex> {
    if let Some(i) = complex.first_noncomplex(ring, modulus)? {
        return Err(Error::NotAComplex(format!("d_{i} ∘ d_{} ≠ 0", i + 1)));
    }
    let mut cx = complex.clone();
    let f = ring.field();
    loop {
        let Some((i, (r, c))) = cx
            .maps
            .iter()
            .enumerate()
            .find_map(|(i, m)| m.find_unit().map(|p| (i, p)))
        else {
            return Ok(cx);
        };
        let m = &cx.maps[i];
        let u = m.entry(ring, r, c);
        let pivot = m.cols[c].clone();
        let constant_unit = u.len() == 1;
        let uinv = f.inv(u.constant_term());
        let mut cols = Vec::with_capacity(m.ncols() - 1);
        for (b, col) in m.cols.iter().enumerate() {
            if b == c {
                continue;
            }
            let a = ring.entry(col, r);
            let new = if constant_unit {
                if a.is_zero() {
                    col.clone()
                } else {
                    let s = ring.vmul_poly(&pivot, &ring.pscale(&a, uinv));
                    ring.vsub(col, &s)
                }
            } else if a.is_zero() {
                ring.vmul_poly(col, &u)
            } else {
                ring.vsub(&ring.vmul_poly(col, &u), &ring.vmul_poly(&pivot, &a))
            };
            cols.push(drop_component(ring, &new, r));
        }
        cx.maps[i] = Matrix::new(m.nrows - 1, cols);
        if i + 1 < cx.maps.len() {
            let next = &cx.maps[i + 1];
            cx.maps[i + 1] = Matrix::new(
                next.nrows - 1,
                next.cols.iter().map(|v| drop_component(ring, v, c)).collect(),
            );
        }
        if i >= 1 {
            let prev = &mut cx.maps[i - 1];
            prev.cols.remove(r);
        }
        cx.layouts[i] = cx.layouts[i].without(r);
        cx.layouts[i + 1] = cx.layouts[i + 1].without(c);
        if let Some(q) = modulus {
            if !ring.order().is_local() {
                for m in cx.maps.iter_mut() {
                    let z = q.extended_to_rank(ring, m.nrows)?;
                    for col in m.cols.iter_mut() {
                        *col = z.reduce(col);
                    }
                }
            }
        }
    }
}

/// Remove component `k` (its terms are discarded) and renumber the rest.
pub fn drop_component(ring: &PolyRing, v: &ModuleElement, k: usize) -> ModuleElement {
    ring.remap_components(v, |c| match c.cmp(&k) {
        std::cmp::Ordering::Less => Some(c),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(c - 1),
    })
}
