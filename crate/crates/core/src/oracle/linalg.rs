use crate::poly::{Coeff, PrimeField};

/// A subspace of `F_p^n` kept in reduced row echelon form; pivots are the
/// leftmost nonzero entries and are normalized to one.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn from_rows(field: PrimeField, ncols: usize, rows: impl IntoIterator<Item = Vec<Coeff>>) -> Self {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Eliminate every pivot column from `v`.
    pub fn reduce(&self, v: &mut [Coeff]) {
        let f = self.field;
        for c in 0..self.ncols {
            if v[c] == 0 {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let k = f.neg(v[c]);
                let row = &self.rows[r];
                for (x, y) in v.iter_mut().zip(row).skip(c) {
                    if *y != 0 {
                        *x = f.add(*x, f.mul(k, *y));
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| *c == 0)
    }

    /// Add a vector to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Coeff>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| *c != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[p]);
        for x in v.iter_mut().skip(p) {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let k = row[p];
            if k != 0 {
                let k = f.neg(k);
                for (x, y) in row.iter_mut().zip(&v).skip(p) {
                    if *y != 0 {
                        *x = f.add(*x, f.mul(k, *y));
                    }
                }
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.pivots.push(p);
        self.rows.push(v);
        true
    }
}

/// Rank of a list of vectors.
pub fn rank(field: PrimeField, ncols: usize, rows: impl IntoIterator<Item = Vec<Coeff>>) -> usize {
    Echelon::from_rows(field, ncols, rows).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_rank_and_membership() {
        let f = PrimeField::new(7).unwrap();
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(vec![1, 2, 3]));
        assert!(e.insert(vec![2, 4, 0]));
        assert!(!e.insert(vec![3, 6, 3]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[0, 0, 1]));
        assert!(!e.contains(&[0, 1, 0]));
        assert_eq!(e.pivots(), &[0, 2]);
    }

    #[test]
    fn rows_stay_fully_reduced() {
        let f = PrimeField::new(11).unwrap();
        let e = Echelon::from_rows(f, 3, vec![vec![0, 1, 1], vec![1, 1, 0], vec![1, 0, 5]]);
        for (i, &p) in e.pivots().iter().enumerate() {
            for (j, row) in e.rows().iter().enumerate() {
                assert_eq!(row[p], if i == j { 1 } else { 0 });
            }
        }
    }
}
