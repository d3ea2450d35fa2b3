//! Incremental sparse row echelon forms.
//!
//! Rows are kept with a unit leading entry (smallest index). Vectors living in disjoint
//! index blocks never interact, so block-diagonal matrices are eliminated block by block
//! without any explicit bookkeeping.

use std::collections::HashMap;

use super::sparse::{axpy_into, normalize, SparseVec};
use crate::field::Field;

#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: Vec<SparseVec<F>>,
    pivot: HashMap<usize, usize>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), pivot: HashMap::new() }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot.contains_key(&col)
    }

    /// Eliminates leading entries until the leading index is not a pivot.
    /// The result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: SparseVec<F>) -> SparseVec<F> {
        let mut v = v;
        let mut buf = Vec::new();
        while let Some((c, x)) = v.first() {
            let Some(&r) = self.pivot.get(c) else { break };
            let x = x.neg();
            axpy_into(&v, &x, &self.rows[r], &mut buf);
            std::mem::swap(&mut v, &mut buf);
        }
        v
    }

    /// Returns true if `v` was independent of the rows so far.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let mut v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        normalize(&mut v);
        self.pivot.insert(v[0].0, self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Canonical reduced row echelon form, rows ordered by ascending pivot.
    pub fn into_rref(self) -> Vec<SparseVec<F>> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let pivot: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        let mut buf = Vec::new();
        for idx in (0..rows.len()).rev() {
            let hits: Vec<(usize, F)> = rows[idx][1..]
                .iter()
                .filter_map(|(c, x)| pivot.get(c).map(|&j| (j, x.neg())))
                .collect();
            for (j, x) in hits {
                let (lo, hi) = rows.split_at_mut(j);
                axpy_into(&lo[idx], &x, &hi[0], &mut buf);
                std::mem::swap(&mut lo[idx], &mut buf);
            }
        }
        rows
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }
}

pub fn rank_of<F: Field>(vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

pub fn rref<F: Field>(vectors: impl IntoIterator<Item = SparseVec<F>>) -> Vec<SparseVec<F>> {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.into_rref()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational as Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn rref_is_reduced() {
        let rows = rref(vec![
            vec![(0, q(1)), (1, q(2)), (3, q(1))],
            vec![(1, q(1)), (2, q(1))],
            vec![(0, q(1)), (2, q(-2)), (3, q(1))],
        ]);
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0], vec![(0, q(1)), (2, q(-2)), (3, q(1))]);
        assert_eq!(rows[1], vec![(1, q(1)), (2, q(1))]);
    }
}
