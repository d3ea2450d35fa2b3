//! Graded algebra endomorphisms of `A` determined by their degree-one component.

use super::view::{Element, GradedAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{letters, Accumulator, Matrix, SparseVec};

/// `images[n][k]` is the image of the k-th normal word of length n.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMap<F> {
    degree_one: Matrix<F>,
    images: Vec<Vec<Element<F>>>,
}

/// `φ^{⊗n}` applied to a vector of words of length n, with `m[i][j]` = coefficient of `x_i` in `φ(x_j)`.
pub fn tensor_power_apply<F: Field>(m: &Matrix<F>, len: usize, v: &[(usize, F)]) -> SparseVec<F> {
    let d = m.nrows();
    let mut acc = Accumulator::new();
    for (w, c) in v {
        let mut partial: Vec<(usize, F)> = vec![(0, c.clone())];
        for l in letters(d, *w, len) {
            let mut next = Vec::with_capacity(partial.len() * d);
            for (p, x) in &partial {
                for i in 0..d {
                    let e = m.get(i, l);
                    if !e.is_zero() {
                        next.push((p * d + i, x.mul(e)));
                    }
                }
            }
            partial = next;
        }
        for (p, x) in partial {
            acc.add(p, x);
        }
    }
    acc.finish()
}

impl<F: Field> GradedMap<F> {
    /// Extends a linear map on V multiplicatively; fails unless `φ₁^{⊗N}(R) ⊆ R` and φ₁ is invertible.
    pub fn from_degree_one(view: &GradedAlgebra<F>, m: Matrix<F>) -> Result<Self> {
        let d = view.dim_v();
        if m.nrows() != d || m.ncols() != d {
            return Err(Error::Dimension(format!("degree-one matrix must be {d}×{d}")));
        }
        if m.inverse().is_none() {
            return Err(Error::NotAutomorphism("degree-one component is singular".into()));
        }
        let pres = view.presentation();
        let big_n = pres.degree();
        for (k, r) in pres.relations().rows().iter().enumerate() {
            let image = tensor_power_apply(&m, big_n, r);
            if !pres.relations().contains_vector(&image) {
                return Err(Error::NotAutomorphism(format!("image of relation {k} leaves R: {}", pres.format_vector(&image, big_n))));
            }
        }
        let gens: Vec<Element<F>> = (0..d).map(|j| (0..d).filter(|&i| !m.get(i, j).is_zero()).map(|i| (i, m.get(i, j).clone())).collect()).collect();
        let mut images: Vec<Vec<Element<F>>> = vec![vec![vec![(0, F::one())]]];
        for n in 1..=view.max_degree() {
            let prev_words = view.basis_words(n - 1)?;
            let mut cur = Vec::with_capacity(view.dim(n)?);
            for &w in view.basis_words(n)? {
                let (prefix, last) = (w / d, w % d);
                let k = prev_words.binary_search(&prefix).expect("prefixes of normal words are normal");
                cur.push(view.multiply(n - 1, &images[n - 1][k], 1, &gens[last])?);
            }
            images.push(cur);
        }
        Ok(GradedMap { degree_one: m, images })
    }

    pub fn identity(view: &GradedAlgebra<F>) -> Result<Self> {
        Self::from_degree_one(view, Matrix::identity(view.dim_v()))
    }

    /// Multiplication by `(−1)^m` on `A_m`.
    pub fn epsilon(view: &GradedAlgebra<F>) -> Result<Self> {
        Self::from_degree_one(view, Matrix::scalar(view.dim_v(), F::one().neg()))
    }

    pub fn degree_one(&self) -> &Matrix<F> {
        &self.degree_one
    }

    pub fn max_degree(&self) -> usize {
        self.images.len() - 1
    }

    pub fn apply(&self, view: &GradedAlgebra<F>, n: usize, v: &[(usize, F)]) -> Result<Element<F>> {
        if n >= self.images.len() {
            return Err(Error::Truncation { requested: n, available: self.max_degree() });
        }
        let mut acc = Accumulator::new();
        for (w, c) in v {
            let k = view.position(n, *w).ok_or_else(|| Error::Consistency(format!("word {w} is not normal in degree {n}")))?;
            acc.add_scaled(&self.images[n][k], c);
        }
        Ok(acc.finish())
    }

    /// Image of the class of an arbitrary word.
    pub fn apply_word(&self, view: &GradedAlgebra<F>, len: usize, code: usize) -> Result<Element<F>> {
        let nf = view.nf_word(len, code)?;
        self.apply(view, len, &nf)
    }

    pub fn compose(&self, view: &GradedAlgebra<F>, inner: &GradedMap<F>) -> Result<Self> {
        let top = self.max_degree().min(inner.max_degree());
        let mut images = Vec::new();
        for n in 0..=top {
            images.push(inner.images[n].iter().map(|v| self.apply(view, n, v)).collect::<Result<Vec<_>>>()?);
        }
        Ok(GradedMap { degree_one: self.degree_one.mul(&inner.degree_one), images })
    }

    pub fn is_identity(&self, view: &GradedAlgebra<F>) -> Result<bool> {
        for n in 0..=self.max_degree() {
            for (k, &w) in view.basis_words(n)?.iter().enumerate() {
                if self.images[n][k] != vec![(w, F::one())] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Checks `φ(x·w) = φ(x)·φ(w)` for every generator x and normal word w up to `up_to`.
    pub fn check_multiplicative(&self, view: &GradedAlgebra<F>, up_to: usize) -> Result<bool> {
        let d = view.dim_v();
        for n in 1..=up_to.min(self.max_degree()) {
            for (k, &w) in view.basis_words(n - 1)?.iter().enumerate() {
                for x in 0..d {
                    let lhs = self.apply(view, n, &view.mul_words(x, 1, w, n - 1)?)?;
                    let gx = self.apply(view, 1, &[(x, F::one())])?;
                    let rhs = view.multiply(1, &gx, n - 1, &self.images[n - 1][k])?;
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;

    #[test]
    fn minus_identity_is_epsilon_on_polynomials() {
        let a = GradedAlgebra::new(presets::polynomial::<Q>(2).unwrap(), 5).unwrap();
        let e = GradedMap::epsilon(&a).unwrap();
        for n in 0..=5 {
            for &w in a.basis_words(n).unwrap() {
                let img = e.apply(&a, n, &[(w, Q::one())]).unwrap();
                assert_eq!(img, vec![(w, Q::sign(n))]);
            }
        }
        assert!(e.check_multiplicative(&a, 5).unwrap());
        assert!(e.compose(&a, &e).unwrap().is_identity(&a).unwrap());
    }

    #[test]
    fn non_preserving_map_is_rejected() {
        let a = GradedAlgebra::new(presets::monomial_cubic_x1::<Q>("").unwrap(), 4).unwrap();
        // x1 ↦ x2, x2 ↦ x1 sends x1³ to x2³ ∉ R.
        let swap = Matrix::from_rows(vec![vec![Q::zero(), Q::one()], vec![Q::one(), Q::zero()]]);
        assert!(matches!(GradedMap::from_degree_one(&a, swap), Err(Error::NotAutomorphism(_))));
    }
}
