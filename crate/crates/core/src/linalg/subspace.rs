//! Subspaces of word spaces in canonical reduced row echelon form.

use super::echelon::{rref, Echelon};
use super::sparse::SparseVec;
use super::words::{pow, WordSpace};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    space: WordSpace,
    rows: Vec<SparseVec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(space: WordSpace) -> Self {
        Subspace { space, rows: Vec::new() }
    }

    pub fn full(space: WordSpace) -> Self {
        Subspace { space, rows: (0..space.dim()).map(|i| vec![(i, F::one())]).collect() }
    }

    pub fn from_vectors(space: WordSpace, vectors: impl IntoIterator<Item = SparseVec<F>>) -> Result<Self> {
        let dim = space.dim();
        let mut e = Echelon::new();
        for v in vectors {
            if let Some((i, _)) = v.iter().find(|(i, _)| *i >= dim) {
                return Err(Error::Dimension(format!("coordinate {i} outside a space of dimension {dim}")));
            }
            e.insert(v);
        }
        Ok(Subspace { space, rows: e.into_rref() })
    }

    pub fn space(&self) -> WordSpace {
        self.space
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::Dimension(format!("ambient spaces differ: {:?} vs {:?}", self.space, other.space)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(Subspace { space: self.space, rows: rref(self.rows.iter().chain(&other.rows).cloned()) })
    }

    /// Zassenhaus: echelonize `[u | u]` and `[w | 0]`; rows with vanishing first half span U∩W.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.space));
        }
        let (small, big) = if self.dim() <= other.dim() { (self, other) } else { (other, self) };
        if big.dim() == self.space.dim() {
            return Ok(small.clone());
        }
        let n = self.space.dim();
        let mut e = Echelon::new();
        for r in &big.rows {
            e.insert(r.clone());
        }
        let mut result = Echelon::new();
        for r in &small.rows {
            let mut doubled = r.clone();
            doubled.extend(r.iter().map(|(i, x)| (i + n, x.clone())));
            let red = e.reduce(doubled);
            if red.is_empty() {
                continue;
            }
            if red[0].0 >= n {
                result.insert(red.iter().map(|(i, x)| (i - n, x.clone())).collect());
            } else {
                e.insert(red);
            }
        }
        Ok(Subspace { space: self.space, rows: result.into_rref() })
    }

    pub fn contains_vector(&self, v: &SparseVec<F>) -> bool {
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r.clone());
        }
        e.contains(v.clone())
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.same_space(other)?;
        let mut e = Echelon::new();
        for r in &self.rows {
            e.insert(r.clone());
        }
        Ok(other.rows.iter().all(|r| e.contains(r.clone())))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.rows == other.rows)
    }

    /// `V^{⊗left} ⊗ self ⊗ V^{⊗right}`.
    pub fn embed(&self, left: usize, right: usize) -> Result<Self> {
        let d = self.space.alphabet;
        let space = WordSpace::new(d, left + self.space.degree + right)?;
        let shift = pow(d, self.space.degree + right);
        let rp = pow(d, right);
        let lp = pow(d, left);
        let mut rows = Vec::with_capacity(self.dim() * lp * rp);
        for a in 0..lp {
            for r in &self.rows {
                for b in 0..rp {
                    rows.push(r.iter().map(|(c, x)| (a * shift + c * rp + b, x.clone())).collect::<SparseVec<F>>());
                }
            }
        }
        // Already reduced: distinct (a, b) blocks have disjoint supports.
        rows.sort_by_key(|r: &SparseVec<F>| r[0].0);
        Ok(Subspace { space, rows })
    }

    /// Forms vanishing on the subspace, in the dual word space (same indexing).
    pub fn annihilator(&self) -> Self {
        let n = self.space.dim();
        let pivots = self.pivots();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        // For each non-pivot column c: f_c = 1, f_{pivot(r)} = -r_c.
        let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); n];
        for r in &self.rows {
            let p = r[0].0;
            for (c, x) in &r[1..] {
                cols[*c].push((p, x.neg()));
            }
        }
        let mut rows = Vec::with_capacity(n - pivots.len());
        for c in 0..n {
            if is_pivot[c] {
                continue;
            }
            let mut v = std::mem::take(&mut cols[c]);
            v.push((c, F::one()));
            v.sort_by_key(|e| e.0);
            rows.push(v);
        }
        Subspace::from_vectors(self.space, rows).expect("indices in range")
    }

    /// Basis in reduced echelon form for the reversed column order: each row has coefficient 1
    /// at its largest word and 0 at the largest words of the other rows. Ordered by that word.
    pub fn reverse_basis(&self) -> Vec<SparseVec<F>> {
        let n = self.space.dim();
        let flipped = self.rows.iter().map(|r| {
            let mut v: SparseVec<F> = r.iter().map(|(i, x)| (n - 1 - i, x.clone())).collect();
            v.reverse();
            v
        });
        let mut out: Vec<SparseVec<F>> = rref(flipped)
            .into_iter()
            .map(|r| {
                let mut v: SparseVec<F> = r.into_iter().map(|(i, x)| (n - 1 - i, x)).collect();
                v.reverse();
                v
            })
            .collect();
        out.sort_by_key(|r| r.last().unwrap().0);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational as Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn commutator() -> Subspace<Q> {
        let s = WordSpace::new(2, 2).unwrap();
        Subspace::from_vectors(s, vec![vec![(1, q(1)), (2, q(-1))]]).unwrap()
    }

    #[test]
    fn disjoint_lines_meet_in_zero() {
        let s = WordSpace::new(2, 1).unwrap();
        let a = Subspace::<Q>::from_vectors(s, vec![vec![(0, q(1))]]).unwrap();
        let b = Subspace::<Q>::from_vectors(s, vec![vec![(1, q(1))]]).unwrap();
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.sum(&a).unwrap().equals(&a).unwrap());
    }

    #[test]
    fn commutator_overlap_vanishes() {
        let r = commutator();
        let i = r.embed(1, 0).unwrap().intersect(&r.embed(0, 1).unwrap()).unwrap();
        assert_eq!(i.dim(), 0);
        assert_eq!(r.embed(1, 0).unwrap().dim(), 2);
        assert!(r.embed(0, 0).unwrap().equals(&r).unwrap());
    }

    #[test]
    fn commutator_annihilator() {
        let ann = commutator().annihilator();
        assert_eq!(ann.dim(), 3);
        let expected = Subspace::from_vectors(
            WordSpace::new(2, 2).unwrap(),
            vec![vec![(0, q(1))], vec![(3, q(1))], vec![(1, q(1)), (2, q(1))]],
        )
        .unwrap();
        assert!(ann.equals(&expected).unwrap());
        assert!(ann.annihilator().equals(&commutator()).unwrap());
    }

    #[test]
    fn reverse_basis_pivots_at_largest_word() {
        let rb = commutator().reverse_basis();
        assert_eq!(rb, vec![vec![(1, q(-1)), (2, q(1))]]);
    }

    #[test]
    fn mismatched_ambients_are_rejected() {
        let a = Subspace::<Q>::zero(WordSpace::new(2, 1).unwrap());
        let b = Subspace::<Q>::zero(WordSpace::new(2, 2).unwrap());
        assert!(matches!(a.sum(&b), Err(Error::Dimension(_))));
    }
}
