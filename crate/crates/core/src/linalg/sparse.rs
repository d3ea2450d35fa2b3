//! Sorted sparse vectors and column-major sparse matrices.

use crate::field::Field;

/// Entries sorted by index, no stored zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn scale<F: Field>(v: &[(usize, F)], c: &F) -> SparseVec<F> {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x.mul(c))).collect()
}

/// `a + c * b`
pub fn axpy<F: Field>(a: &[(usize, F)], c: &F, b: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    axpy_into(a, c, b, &mut out);
    out
}

pub fn axpy_into<F: Field>(a: &[(usize, F)], c: &F, b: &[(usize, F)], out: &mut SparseVec<F>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ia, ib) = (a[i].0, b[j].0);
        if ia < ib {
            out.push(a[i].clone());
            i += 1;
        } else if ib < ia {
            out.push((ib, b[j].1.mul(c)));
            j += 1;
        } else {
            let mut s = b[j].1.mul(c);
            s.add_assign(&a[i].1);
            if !s.is_zero() {
                out.push((ia, s));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(k, x)| (*k, x.mul(c))));
}

pub fn get<F: Field>(v: &[(usize, F)], idx: usize) -> Option<&F> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|p| &v[p].1)
}

/// Builds a sorted vector from unsorted entries, summing duplicates and dropping zeros.
pub fn from_entries<F: Field>(mut entries: Vec<(usize, F)>) -> SparseVec<F> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<F> = Vec::with_capacity(entries.len());
    for (i, x) in entries {
        match out.last_mut() {
            Some((j, y)) if *j == i => y.add_assign(&x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, y)| !y.is_zero());
    out
}

/// Scales so that the leading entry is one.
pub fn normalize<F: Field>(v: &mut SparseVec<F>) {
    if let Some((_, lead)) = v.first() {
        if !lead.is_one() {
            let inv = lead.inv();
            for (_, x) in v.iter_mut() {
                *x = x.mul(&inv);
            }
        }
    }
}

pub fn dot<F: Field>(a: &[(usize, F)], b: &[(usize, F)]) -> F {
    let (mut i, mut j) = (0, 0);
    let mut s = F::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s.add_mul(&a[i].1, &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    s
}

/// Accumulates scattered contributions; cheaper than repeated merges for many small terms.
pub struct Accumulator<F> {
    entries: Vec<(usize, F)>,
}

impl<F: Field> Default for Accumulator<F> {
    fn default() -> Self {
        Accumulator { entries: Vec::new() }
    }
}

impl<F: Field> Accumulator<F> {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn add(&mut self, idx: usize, c: F) {
        if !c.is_zero() {
            self.entries.push((idx, c));
        }
    }
    pub fn add_scaled(&mut self, v: &[(usize, F)], c: &F) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v {
            self.entries.push((*i, x.mul(c)));
        }
    }
    pub fn finish(self) -> SparseVec<F> {
        from_entries(self.entries)
    }
}

/// Column-major sparse matrix: `cols[j]` is the image of the j-th source basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F> {
    pub nrows: usize,
    pub cols: Vec<SparseVec<F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }
    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }
    /// `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &SparseMatrix<F>) -> SparseMatrix<F> {
        assert_eq!(rhs.nrows, self.ncols(), "shape mismatch in composition");
        let cols = rhs
            .cols
            .iter()
            .map(|c| {
                let mut acc = Accumulator::new();
                for (k, x) in c {
                    acc.add_scaled(&self.cols[*k], x);
                }
                acc.finish()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, cols }
    }
    pub fn apply(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut acc = Accumulator::new();
        for (k, x) in v {
            acc.add_scaled(&self.cols[*k], x);
        }
        acc.finish()
    }
    pub fn add(&self, other: &SparseMatrix<F>) -> SparseMatrix<F> {
        self.lin_comb(&F::one(), other)
    }
    /// `self + c * other`
    pub fn lin_comb(&self, c: &F, other: &SparseMatrix<F>) -> SparseMatrix<F> {
        assert_eq!(self.nrows, other.nrows);
        assert_eq!(self.ncols(), other.ncols());
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| axpy(a, c, b)).collect();
        SparseMatrix { nrows: self.nrows, cols }
    }
    pub fn rank(&self) -> usize {
        super::echelon::rank_of(self.cols.iter().cloned())
    }
    pub fn transpose(&self) -> SparseMatrix<F> {
        let mut rows: Vec<SparseVec<F>> = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                rows[*i].push((j, x.clone()));
            }
        }
        SparseMatrix { nrows: self.ncols(), cols: rows }
    }
    pub fn to_dense(&self) -> super::dense::Matrix<F> {
        let mut m = super::dense::Matrix::zero(self.nrows, self.ncols());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                m.set(*i, j, x.clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational as Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn axpy_cancels() {
        let a = vec![(0, q(1)), (2, q(3))];
        let b = vec![(2, q(1)), (5, q(1))];
        assert_eq!(axpy(&a, &q(-3), &b), vec![(0, q(1)), (5, q(-3))]);
    }

    #[test]
    fn entries_merge() {
        let v = from_entries(vec![(3, q(1)), (1, q(2)), (3, q(-1)), (0, q(0))]);
        assert_eq!(v, vec![(1, q(2))]);
    }
}
