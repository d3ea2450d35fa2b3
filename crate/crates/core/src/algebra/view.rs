//! Graded components of `A = Tens(V)/(R)`: normal-word bases, normal forms, products.
//!
//! Elements of `A_n` are sparse vectors indexed by the codes of normal words of length n.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::presentation::Presentation;
use super::rewriting::RewritingSystem;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{pow, Accumulator, SparseMatrix, SparseVec, Subspace, WordSpace};

pub type Element<F> = SparseVec<F>;

#[derive(Debug)]
pub struct GradedAlgebra<F> {
    pres: Presentation<F>,
    rules: RewritingSystem<F>,
    max_degree: usize,
    basis: Vec<Vec<usize>>,
    nf_cache: Mutex<Vec<HashMap<usize, Arc<SparseVec<F>>>>>,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn new(pres: Presentation<F>, max_degree: usize) -> Result<Self> {
        let d = pres.dim_v();
        let n = pres.degree();
        let rels: Vec<SparseVec<F>> = pres.relations().rows().to_vec();
        let rules = RewritingSystem::from_relations(d, n, &rels);
        let mut view = GradedAlgebra { pres, rules, max_degree: 0, basis: vec![vec![0]], nf_cache: Mutex::new(vec![HashMap::new()]) };
        view.extend_to(max_degree)?;
        Ok(view)
    }

    /// Extends the truncated completion and the bases up to degree `n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        let d = self.pres.dim_v();
        WordSpace::new(d, n)?;
        while self.max_degree < n {
            let m = self.max_degree + 1;
            if m > self.pres.degree() {
                self.rules.complete_degree(m);
            }
            let prev = &self.basis[m - 1];
            let mut next = Vec::with_capacity(prev.len() * d);
            for &w in prev {
                for x in 0..d {
                    let c = w * d + x;
                    if !self.rules.has_lead_suffix(c, m) {
                        next.push(c);
                    }
                }
            }
            self.basis.push(next);
            self.nf_cache.get_mut().unwrap().push(HashMap::new());
            self.max_degree = m;
        }
        Ok(())
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.pres
    }
    pub fn dim_v(&self) -> usize {
        self.pres.dim_v()
    }
    pub fn relation_degree(&self) -> usize {
        self.pres.degree()
    }
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }
    pub fn rewriting(&self) -> &RewritingSystem<F> {
        &self.rules
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::Truncation { requested: n, available: self.max_degree });
        }
        Ok(())
    }

    pub fn dim(&self, n: usize) -> Result<usize> {
        self.check(n)?;
        Ok(self.basis[n].len())
    }

    /// Normal words of length `n`, ascending.
    pub fn basis_words(&self, n: usize) -> Result<&[usize]> {
        self.check(n)?;
        Ok(&self.basis[n])
    }

    pub fn position(&self, n: usize, code: usize) -> Option<usize> {
        self.basis.get(n)?.binary_search(&code).ok()
    }

    pub fn hilbert(&self, up_to: usize) -> Result<Vec<usize>> {
        (0..=up_to).map(|n| self.dim(n)).collect()
    }

    /// Normal form of a single word of length `len`.
    pub fn nf_word(&self, len: usize, code: usize) -> Result<Arc<SparseVec<F>>> {
        self.check(len)?;
        if self.position(len, code).is_some() {
            return Ok(Arc::new(vec![(code, F::one())]));
        }
        if let Some(v) = self.nf_cache.lock().unwrap()[len].get(&code) {
            return Ok(v.clone());
        }
        let v = {
            let cache = self.nf_cache.lock().unwrap();
            let known = |w: usize| cache[len].get(&w).cloned();
            Arc::new(self.rules.reduce_with(len, &[(code, F::one())], known))
        };
        self.nf_cache.lock().unwrap()[len].insert(code, v.clone());
        Ok(v)
    }

    /// Normal form of an arbitrary combination of words of length `len`.
    pub fn nf(&self, len: usize, v: &[(usize, F)]) -> Result<Element<F>> {
        let mut acc = Accumulator::new();
        for (w, c) in v {
            acc.add_scaled(&self.nf_word(len, *w)?, c);
        }
        Ok(acc.finish())
    }

    /// Product of the classes of two words.
    pub fn mul_words(&self, a: usize, la: usize, b: usize, lb: usize) -> Result<Arc<SparseVec<F>>> {
        self.nf_word(la + lb, a * pow(self.dim_v(), lb) + b)
    }

    pub fn multiply(&self, m: usize, a: &[(usize, F)], n: usize, b: &[(usize, F)]) -> Result<Element<F>> {
        self.check(m + n)?;
        let mut acc = Accumulator::new();
        let shift = pow(self.dim_v(), n);
        for (x, cx) in a {
            for (y, cy) in b {
                acc.add_scaled(&self.nf_word(m + n, x * shift + y)?, &cx.mul(cy));
            }
        }
        Ok(acc.finish())
    }

    /// Projector `V^{⊗n} → A_n`, one column per word.
    pub fn projector(&self, n: usize) -> Result<SparseMatrix<F>> {
        self.check(n)?;
        let dim = pow(self.dim_v(), n);
        let cols = (0..dim).map(|w| self.nf_word(n, w).map(|v| (*v).clone())).collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix { nrows: dim, cols })
    }
}

/// `I_n = Σ V^{⊗i}⊗R⊗V^{⊗j}` by direct linear algebra (independent of the rewriting path).
pub fn ideal_component<F: Field>(pres: &Presentation<F>, n: usize) -> Result<Subspace<F>> {
    let space = pres.word_space(n)?;
    let big_n = pres.degree();
    if n < big_n {
        return Ok(Subspace::zero(space));
    }
    let mut rows = Vec::new();
    for i in 0..=n - big_n {
        rows.extend(pres.relations().embed(i, n - big_n - i)?.rows().iter().cloned());
    }
    Subspace::from_vectors(space, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;
    use crate::linalg::encode;

    #[test]
    fn chain_quadric_products_and_series() {
        let a = GradedAlgebra::new(presets::chain_quadric::<Q>(3).unwrap(), 8).unwrap();
        assert_eq!(a.hilbert(8).unwrap(), vec![1, 3, 8, 21, 55, 144, 377, 987, 2584]);
        let x3x1 = a.mul_words(2, 1, 0, 1).unwrap();
        let expected = vec![(encode(3, &[0, 1]), Q::one()), (encode(3, &[1, 2]), Q::one())];
        assert_eq!(*x3x1, expected);
    }

    #[test]
    fn rank_path_matches_word_count() {
        for p in [presets::chain_quadric::<Q>(3).unwrap(), presets::antisymmetrizer::<Q>(3, 4).unwrap(), presets::polynomial::<Q>(3).unwrap()] {
            let a = GradedAlgebra::new(p.clone(), 5).unwrap();
            for n in 0..=5 {
                let i = ideal_component(&p, n).unwrap();
                assert_eq!(a.dim(n).unwrap(), pow(p.dim_v(), n) - i.dim(), "degree {n}");
            }
        }
    }
}
