use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::{column_degrees, minimal_generators, minimal_syzygies, minimalize, Complex, FreeLayout, Matrix};
use crate::error::Result;

use super::module::GradedModule;

/// Projective dimension as far as a bounded computation can tell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value")]
pub enum PdimStatus {
    Finite(usize),
    /// Not finished within the homological cutoff; pdim is at least this.
    AtLeast(usize),
}

impl PdimStatus {
    pub fn finite(&self) -> Option<usize> {
        match self {
            PdimStatus::Finite(p) => Some(*p),
            PdimStatus::AtLeast(_) => None,
        }
    }
}

impl fmt::Display for PdimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdimStatus::Finite(p) => write!(f, "{p}"),
            PdimStatus::AtLeast(p) => write!(f, ">= {p} (inconclusive)"),
        }
    }
}

/// Graded Betti numbers `β_{i,j}` up to a homological cutoff.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<usize, BTreeMap<i64, usize>>,
    pub cutoff: usize,
    pub complete: bool,
}

impl BettiTable {
    pub fn from_layouts(layouts: &[FreeLayout], cutoff: usize, complete: bool) -> Self {
        let mut entries: BTreeMap<usize, BTreeMap<i64, usize>> = BTreeMap::new();
        for (i, l) in layouts.iter().enumerate() {
            for &j in &l.twists {
                *entries.entry(i).or_default().entry(j).or_default() += 1;
            }
        }
        BettiTable {
            entries,
            cutoff,
            complete,
        }
    }

    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&i).and_then(|r| r.get(&j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.get(&i).map_or(0, |r| r.values().sum())
    }

    /// Total Betti numbers `β_0, β_1, …` up to the last nonzero one.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.entries.keys().next_back().copied().map_or(0, |k| k + 1);
        (0..top).map(|i| self.total(i)).collect()
    }

    /// Internal degrees occurring in homological degree `i`.
    pub fn degrees(&self, i: usize) -> Vec<i64> {
        self.entries.get(&i).map_or(Vec::new(), |r| r.keys().copied().collect())
    }

    pub fn max_homological_degree(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// Rows `j − i`, columns `i`, right-aligned counts, `.` for zero.
    pub fn render(&self) -> String {
        let Some(top) = self.max_homological_degree() else {
            return "0\n".to_string();
        };
        let rows: Vec<i64> = self
            .entries
            .iter()
            .flat_map(|(i, r)| r.keys().map(move |j| j - *i as i64))
            .collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=top).map(|i| i.to_string()));
        cells.push(header);
        let mut total = vec!["total:".to_string()];
        total.extend((0..=top).map(|i| self.total(i).to_string()));
        cells.push(total);
        for row in lo..=hi {
            let mut line = vec![format!("{row}:")];
            for i in 0..=top {
                let b = self.get(i, row + i as i64);
                line.push(if b == 0 { ".".into() } else { b.to_string() });
            }
            cells.push(line);
        }
        let ncols = top + 2;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for r in &cells {
            let parts: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{:>w$}", s, w = *w))
                .collect();
            out.push_str(parts.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// A minimal graded free resolution, truncated at the cutoff.
#[derive(Clone, Debug)]
pub struct GradedResolution {
    pub complex: Complex,
    pub betti: BettiTable,
    pub status: PdimStatus,
}

/// Minimal graded free resolution of `M` over its ring, homological
/// degrees `0..=cutoff`.
pub fn minimal_graded_resolution(m: &GradedModule, cutoff: usize) -> Result<GradedResolution> {
    let a = m.ring();
    let modulus = a.modulus();
    let mut layouts = vec![m.layout().clone()];
    let mut maps: Vec<Matrix> = Vec::new();
    let mut status = PdimStatus::AtLeast(cutoff + 1);

    let r0 = m.poly_ring();
    let (_, kept) = minimal_generators(&r0, m.layout().rank, m.relations(), modulus)?;
    let first: Vec<_> = kept.iter().map(|&k| m.relations()[k].clone()).collect();
    if first.is_empty() || cutoff == 0 {
        if first.is_empty() {
            status = PdimStatus::Finite(0);
        }
    } else {
        layouts.push(FreeLayout::new(column_degrees(&r0, &first)));
        maps.push(Matrix::new(m.layout().rank, first));
        for k in 1..=cutoff {
            let src = &layouts[k - 1];
            let ring = a.module_ring(&src.twists);
            let syz = minimal_syzygies(&ring, src.rank, &maps[k - 1].cols, modulus)?;
            if syz.columns.is_empty() {
                status = PdimStatus::Finite(k);
                break;
            }
            if k == cutoff {
                break;
            }
            let ring_k = a.module_ring(&syz.source_twists);
            let cols: Vec<_> = syz.columns.iter().map(|c| ring_k.resort_element(c)).collect();
            layouts.push(FreeLayout::new(column_degrees(&ring_k, &cols)));
            maps.push(Matrix::new(syz.source_rank, cols));
        }
    }
    let complex = Complex::new(layouts, maps)?;
    let complex = if complex.is_minimal() {
        complex
    } else {
        minimalize(a.ring(), &complex, modulus)?
    };
    if let PdimStatus::Finite(_) = status {
        let p = complex.layouts.iter().rposition(|l| l.rank > 0).unwrap_or(0);
        status = PdimStatus::Finite(p);
    }
    let betti = BettiTable::from_layouts(&complex.layouts, cutoff, matches!(status, PdimStatus::Finite(_)));
    Ok(GradedResolution {
        complex,
        betti,
        status,
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
    fn residue_field_of_one_variable() {
        let a = GradedRing::polynomial(PrimeField::default(), names(&["x"]));
        let res = minimal_graded_resolution(&GradedModule::residue_field(a), 8).unwrap();
        assert_eq!(res.betti.totals(), vec![1, 1]);
        assert_eq!(res.betti.get(1, 1), 1);
        assert_eq!(res.status, PdimStatus::Finite(1));
    }

    #[test]
    fn koszul_on_squares_is_pure() {
        let a = GradedRing::polynomial(PrimeField::default(), names(&["x1", "x2", "x3"]));
        let r = a.module_ring(&[0]);
        let rels = (0..3).map(|i| r.poly_times_unit(&r.ppow(&r.var(i), 2), 0)).collect();
        let m = GradedModule::new(a, FreeLayout::untwisted(1), rels).unwrap();
        let res = minimal_graded_resolution(&m, 8).unwrap();
        assert_eq!(res.betti.get(0, 0), 1);
        assert_eq!(res.betti.get(1, 2), 3);
        assert_eq!(res.betti.get(2, 4), 3);
        assert_eq!(res.betti.get(3, 6), 1);
        assert_eq!(res.betti.totals(), vec![1, 3, 3, 1]);
        assert_eq!(res.status, PdimStatus::Finite(3));
    }

    #[test]
    fn non_minimal_presentation_is_trimmed() {
        let a = GradedRing::polynomial(PrimeField::default(), names(&["x", "y"]));
        let r = a.module_ring(&[0, 1]);
        let (x, y) = (r.var(0), r.var(1));
        // e0 = x·e1 makes the first generator redundant
        let rel = r.vsub(&r.poly_times_unit(&x, 1), &r.unit_vector(0));
        let rel2 = r.poly_times_unit(&y, 1);
        let m = GradedModule::new(a, FreeLayout::new(vec![1, 0]), vec![rel, rel2]).unwrap();
        let res = minimal_graded_resolution(&m, 8).unwrap();
        assert_eq!(res.betti.totals(), vec![1, 1]);
        assert_eq!(res.betti.get(0, 0), 1);
        assert_eq!(res.betti.get(1, 1), 1);
        let _ = y;
    }

    #[test]
    fn renders_rows_by_shifted_degree() {
        let mut t = BettiTable::default();
        t.entries.entry(0).or_default().insert(0, 1);
        t.entries.entry(1).or_default().insert(2, 3);
        t.entries.entry(2).or_default().insert(4, 3);
        t.entries.entry(3).or_default().insert(6, 1);
        let s = t.render();
        assert_eq!(
            s,
            "       0 1 2 3\ntotal: 1 3 3 1\n    0: 1 . . .\n    1: . 3 . .\n    2: . . 3 .\n    3: . . . 1\n"
        );
    }
}
