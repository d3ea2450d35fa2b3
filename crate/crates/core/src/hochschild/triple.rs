//! Index bookkeeping for `A ⊗ X ⊗ A` in a fixed total A-degree T, X a space of dimension e.
//! Basis element `a ⊗ e_l ⊗ b` with `deg a = t1` lives at `offset[t1] + (pos(a)·e + l)·dim A_{T−t1} + pos(b)`.

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug)]
pub struct TripleIndex {
    pub total: usize,
    pub middle: usize,
    offsets: Vec<usize>,
    dims: Vec<usize>,
    len: usize,
}

impl TripleIndex {
    pub fn new<F: Field>(view: &GradedAlgebra<F>, total: usize, middle: usize) -> Result<Self> {
        let dims = (0..=total).map(|t| view.dim(t)).collect::<Result<Vec<_>>>()?;
        let mut offsets = Vec::with_capacity(total + 1);
        let mut len = 0;
        for t1 in 0..=total {
            offsets.push(len);
            len += dims[t1] * middle * dims[total - t1];
        }
        Ok(TripleIndex { total, middle, offsets, dims, len })
    }

    /// Empty index for a negative total degree.
    pub fn empty(middle: usize) -> Self {
        TripleIndex { total: 0, middle, offsets: vec![0], dims: vec![0], len: 0 }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn index(&self, t1: usize, a: usize, l: usize, b: usize) -> usize {
        self.offsets[t1] + (a * self.middle + l) * self.dims[self.total - t1] + b
    }

    /// Iterates `(t1, pos a, l, pos b)` in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        (0..=self.total).filter(move |_| self.len > 0).flat_map(move |t1| {
            let (da, db) = (self.dims[t1], self.dims[self.total - t1]);
            (0..da).flat_map(move |a| (0..self.middle).flat_map(move |l| (0..db).map(move |b| (t1, a, l, b))))
        })
    }
}

pub(crate) fn pos<F: Field>(view: &GradedAlgebra<F>, n: usize, code: usize) -> Result<usize> {
    view.position(n, code).ok_or_else(|| Error::Consistency(format!("normal form produced a reducible word {code} in degree {n}")))
}
