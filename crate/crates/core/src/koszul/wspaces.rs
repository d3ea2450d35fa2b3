//! The spaces `W_n = ⋂ V^{⊗i}⊗R⊗V^{⊗j}` (i+j+N = n) and the tensor bookkeeping on them.

use std::collections::HashMap;

use crate::algebra::Presentation;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{pow, SparseVec, Subspace};

/// `n(2q) = qN`, `n(2q+1) = qN + 1`.
pub fn jump(i: usize, big_n: usize) -> usize {
    (i / 2) * big_n + (i % 2)
}

/// Basis of `W_n` normalized at its largest words: row `l` has coefficient 1 at word `q_l`
/// and 0 at every other `q_{l'}`. Coordinates of `v ∈ W_n` are therefore `(v[q_l])_l`.
#[derive(Clone, Debug)]
pub struct TopBasis<F> {
    pub rows: Vec<SparseVec<F>>,
    pub pivots: Vec<usize>,
    inverted: HashMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> TopBasis<F> {
    fn new(rows: Vec<SparseVec<F>>) -> Self {
        let pivots = rows.iter().map(|r| r.last().unwrap().0).collect();
        let mut inverted: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
        for (l, r) in rows.iter().enumerate() {
            for (w, x) in r {
                inverted.entry(*w).or_default().push((l, x.clone()));
            }
        }
        TopBasis { rows, pivots, inverted }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `(w_l[word])_l`: the class of the form `x*_{word}` in `A^!_n ≅ W_n^*`.
    pub fn column(&self, word: usize) -> &[(usize, F)] {
        self.inverted.get(&word).map_or(&[], |v| v.as_slice())
    }

    pub fn position(&self, word: usize) -> Option<usize> {
        self.pivots.binary_search(&word).ok()
    }
}

/// One term `prefix ⊗ e_l ⊗ suffix` of a peeled basis vector.
#[derive(Clone, Debug)]
pub struct PeelTerm<F> {
    pub prefix: usize,
    pub index: usize,
    pub suffix: usize,
    pub coeff: F,
}

#[derive(Clone, Debug)]
pub struct WSpaces<F> {
    alphabet: usize,
    big_n: usize,
    spaces: Vec<Subspace<F>>,
    bases: Vec<TopBasis<F>>,
}

impl<F: Field> WSpaces<F> {
    pub fn new(pres: &Presentation<F>, up_to: usize) -> Result<Self> {
        let mut w = WSpaces { alphabet: pres.dim_v(), big_n: pres.degree(), spaces: Vec::new(), bases: Vec::new() };
        for n in 0..=up_to {
            let s = if n < w.big_n {
                Subspace::full(pres.word_space(n)?)
            } else if n == w.big_n {
                pres.relations().clone()
            } else {
                let prev = &w.spaces[n - 1];
                if prev.is_zero() {
                    Subspace::zero(pres.word_space(n)?)
                } else {
                    prev.embed(1, 0)?.intersect(&prev.embed(0, 1)?)?
                }
            };
            w.bases.push(TopBasis::new(s.reverse_basis()));
            w.spaces.push(s);
        }
        Ok(w)
    }

    pub fn computed_up_to(&self) -> usize {
        self.spaces.len() - 1
    }
    pub fn alphabet(&self) -> usize {
        self.alphabet
    }
    pub fn relation_degree(&self) -> usize {
        self.big_n
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim()
    }
    pub fn space(&self, n: usize) -> &Subspace<F> {
        &self.spaces[n]
    }
    pub fn basis(&self, n: usize) -> &TopBasis<F> {
        &self.bases[n]
    }

    /// Smallest m ≤ computed range with `W_m = 0`.
    pub fn first_vanishing(&self) -> Option<usize> {
        self.spaces.iter().position(|s| s.is_zero())
    }

    /// Splits basis vector `k` of `W_n` along `V^{⊗a} ⊗ W_{n−a−b} ⊗ V^{⊗b}`.
    pub fn peel(&self, n: usize, k: usize, a: usize, b: usize) -> Vec<PeelTerm<F>> {
        let d = self.alphabet;
        let m = n - a - b;
        let inner = &self.bases[m];
        let pb = pow(d, b);
        let pm = pow(d, m);
        let mut out = Vec::new();
        for (w, c) in &self.bases[n].rows[k] {
            let suffix = w % pb;
            let rest = w / pb;
            let mid = rest % pm;
            let prefix = rest / pm;
            if let Some(l) = inner.position(mid) {
                out.push(PeelTerm { prefix, index: l, suffix, coeff: c.clone() });
            }
        }
        out
    }
}

/// `W_n` straight from its definition as an intersection (independent of the recursion).
pub fn w_space_by_definition<F: Field>(pres: &Presentation<F>, n: usize) -> Result<Subspace<F>> {
    let big_n = pres.degree();
    let space = pres.word_space(n)?;
    if n < big_n {
        return Ok(Subspace::full(space));
    }
    let mut acc = Subspace::full(space);
    for i in 0..=n - big_n {
        acc = acc.intersect(&pres.relations().embed(i, n - big_n - i)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;

    #[test]
    fn jump_values() {
        assert_eq!((0..5).map(|i| jump(i, 3)).collect::<Vec<_>>(), vec![0, 1, 3, 4, 6]);
        assert!((0..10).all(|i| jump(i, 2) == i));
        assert_eq!(jump(3, 5), 6);
    }

    #[test]
    fn small_w_dimensions() {
        let w = WSpaces::new(&presets::polynomial::<Q>(2).unwrap(), 3).unwrap();
        assert_eq!((0..=3).map(|n| w.dim(n)).collect::<Vec<_>>(), vec![1, 2, 1, 0]);
        let p = presets::antisymmetrizer::<Q>(3, 4).unwrap();
        let w = WSpaces::new(&p, 6).unwrap();
        assert_eq!((3..=5).map(|n| w.dim(n)).collect::<Vec<_>>(), vec![4, 1, 0]);
        for n in 0..=6 {
            assert_eq!(w.space(n), &w_space_by_definition(&p, n).unwrap());
        }
    }

    #[test]
    fn peel_reassembles_vector() {
        let p = presets::antisymmetrizer::<Q>(3, 4).unwrap();
        let w = WSpaces::new(&p, 4).unwrap();
        // Left peel of one letter: Σ x_p ⊗ (Σ_l c e_l) must rebuild the top vector.
        let terms = w.peel(4, 0, 1, 0);
        let mut acc = crate::linalg::Accumulator::new();
        for t in &terms {
            for (word, x) in &w.basis(3).rows[t.index] {
                acc.add(t.prefix * 64 + word, x.mul(&t.coeff));
            }
        }
        assert_eq!(acc.finish(), w.basis(4).rows[0]);
    }
}
