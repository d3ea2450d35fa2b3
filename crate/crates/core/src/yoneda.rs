//! The Yoneda algebra `E(A)_i = A^!_{n(i)}` with its signed product.
//!
//! `A^!_m` is modelled as `W_m^*` in the basis dual to the top-normalized basis of `W_m`:
//! the class of a form `f` on `V^{⊗m}` has coordinates `(f(w_l))_l`, and the class of the
//! word form `x*_t` is the column `(w_l[t])_l`. Products of classes are read off `W_{m+n}`.

use crate::algebra::{dual_algebra, GradedAlgebra, Presentation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::koszul::{jump, WSpaces};
use crate::linalg::{pow, Accumulator, Matrix, SparseVec};

fn check_degree<F: Field>(w: &WSpaces<F>, m: usize) -> Result<bool> {
    if m <= w.computed_up_to() {
        return Ok(true);
    }
    match w.first_vanishing() {
        Some(_) => Ok(false),
        None => Err(Error::Truncation { requested: m, available: w.computed_up_to() }),
    }
}

pub fn dual_dim<F: Field>(w: &WSpaces<F>, m: usize) -> Result<usize> {
    Ok(if check_degree(w, m)? { w.dim(m) } else { 0 })
}

/// Class of `x*_word` in `A^!_m`.
pub fn class_of_word<F: Field>(w: &WSpaces<F>, m: usize, word: usize) -> Result<SparseVec<F>> {
    if !check_degree(w, m)? {
        return Ok(Vec::new());
    }
    Ok(w.basis(m).column(word).to_vec())
}

/// Class of an arbitrary form on `V^{⊗m}` (sparse over words): its restriction to `W_m`.
pub fn class_of_form<F: Field>(w: &WSpaces<F>, m: usize, form: &[(usize, F)]) -> Result<SparseVec<F>> {
    let mut acc = Accumulator::new();
    for (t, c) in form {
        acc.add_scaled(&class_of_word(w, m, *t)?, c);
    }
    Ok(acc.finish())
}

/// Product in `A^!` of classes of degrees m and n.
pub fn dual_product<F: Field>(w: &WSpaces<F>, m: usize, a: &[(usize, F)], n: usize, b: &[(usize, F)]) -> Result<SparseVec<F>> {
    if !check_degree(w, m + n)? || a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let shift = pow(w.alphabet(), n);
    let (qa, qb) = (&w.basis(m).pivots, &w.basis(n).pivots);
    let mut acc = Accumulator::new();
    for (i, x) in a {
        for (j, y) in b {
            acc.add_scaled(w.basis(m + n).column(qa[*i] * shift + qb[*j]), &x.mul(y));
        }
    }
    Ok(acc.finish())
}

#[derive(Clone, Debug)]
pub struct YonedaAlgebra<F> {
    w: WSpaces<F>,
    /// Largest homological degree with a materialized component.
    top: usize,
}

impl<F: Field> YonedaAlgebra<F> {
    /// Components `i` with `n(i)` inside the computed W range (or past a vanishing W).
    pub fn new(w: WSpaces<F>) -> Self {
        let big_n = w.relation_degree();
        let mut top = 0;
        while jump(top + 1, big_n) <= w.computed_up_to() && w.dim(jump(top + 1, big_n)) > 0 {
            top += 1;
        }
        YonedaAlgebra { w, top }
    }

    pub fn from_presentation(pres: &Presentation<F>, up_to: usize) -> Result<Self> {
        Ok(Self::new(WSpaces::new(pres, up_to)?))
    }

    pub fn w_spaces(&self) -> &WSpaces<F> {
        &self.w
    }

    /// Largest i with `E(A)_i ≠ 0` found.
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn degree_of(&self, i: usize) -> usize {
        jump(i, self.w.relation_degree())
    }

    pub fn dim(&self, i: usize) -> Result<usize> {
        dual_dim(&self.w, self.degree_of(i))
    }

    /// Basis words `x*_{q_l}` representing the stored basis of `E(A)_i`.
    pub fn component_words(&self, i: usize) -> Result<Vec<usize>> {
        let m = self.degree_of(i);
        Ok(if check_degree(&self.w, m)? { self.w.basis(m).pivots.clone() } else { Vec::new() })
    }

    /// `f • g = (−1)^{ij} fg`, and 0 when N > 2 with i, j both odd.
    pub fn product(&self, i: usize, f: &[(usize, F)], j: usize, g: &[(usize, F)]) -> Result<SparseVec<F>> {
        let big_n = self.w.relation_degree();
        if big_n > 2 && i % 2 == 1 && j % 2 == 1 {
            return Ok(Vec::new());
        }
        let plain = dual_product(&self.w, self.degree_of(i), f, self.degree_of(j), g)?;
        let sign = F::sign(i * j);
        Ok(plain.into_iter().map(|(k, x)| (k, x.mul(&sign))).collect())
    }

    pub fn basis_product(&self, i: usize, a: usize, j: usize, b: usize) -> Result<SparseVec<F>> {
        self.product(i, &[(a, F::one())], j, &[(b, F::one())])
    }

    /// `(f•g)•h = f•(g•h)` on all basis triples with `i+j+k ≤ top`.
    pub fn check_associative(&self) -> Result<bool> {
        let top = self.top;
        for i in 0..=top {
            for j in 0..=top - i {
                for k in 0..=top - i - j {
                    for a in 0..self.dim(i)? {
                        for b in 0..self.dim(j)? {
                            let fg = self.basis_product(i, a, j, b)?;
                            for c in 0..self.dim(k)? {
                                let h = [(c, F::one())];
                                let lhs = self.product(i + j, &fg, k, &h)?;
                                let gh = self.basis_product(j, b, k, c)?;
                                let rhs = self.product(i, &[(a, F::one())], j + k, &gh)?;
                                if lhs != rhs {
                                    return Ok(false);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// When N > 2 every nonzero `f • g` has `(−1)^{ij} = +1`.
    pub fn signs_trivial_on_nonzero_products(&self) -> Result<bool> {
        if self.w.relation_degree() == 2 {
            return Ok(true);
        }
        for i in 0..=self.top {
            for j in 0..=self.top - i {
                for a in 0..self.dim(i)? {
                    for b in 0..self.dim(j)? {
                        if !self.basis_product(i, a, j, b)?.is_empty() && (i * j) % 2 == 1 {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Products of basis elements `E(A)_i × E(A)_j`, row-major over (a, b).
    pub fn product_table(&self, i: usize, j: usize) -> Result<Vec<(usize, usize, SparseVec<F>)>> {
        let mut out = Vec::new();
        for a in 0..self.dim(i)? {
            for b in 0..self.dim(j)? {
                out.push((a, b, self.basis_product(i, a, j, b)?));
            }
        }
        Ok(out)
    }
}

/// Matrix of `A^!_m → W_m^*`, `ū ↦ u|_{W_m}`: columns are the normal words of the
/// presentation of `A^!` by `R^⊥`, rows the basis of `W_m^*` dual to the stored basis of `W_m`.
pub fn koszul_quillen_pairing<F: Field>(pres: &Presentation<F>, w: &WSpaces<F>, m: usize) -> Result<Matrix<F>> {
    let dual = GradedAlgebra::new(dual_algebra(pres)?, m)?;
    let words = dual.basis_words(m)?;
    let dim_w = dual_dim(w, m)?;
    let mut mat = Matrix::zero(dim_w, words.len());
    for (k, &t) in words.iter().enumerate() {
        for (l, x) in class_of_word(w, m, t)? {
            mat.set(l, k, x);
        }
    }
    Ok(mat)
}
