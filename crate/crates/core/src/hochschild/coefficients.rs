//! Hochschild (co)homology of A with coefficients in a twisted copy `_σA_τ` of A,
//! computed from `K'_{l−r}(A)`:
//! cochains `Hom(W_{n(i)}, M)`, `(δf)(x_p⊗w'⊗x_q) = σ(x_p)·f(w')·τ(x_q)`;
//! chains `M ⊗ W_{n(i)}`, `m ⊗ (x_p⊗w'⊗x_q) ↦ σ(x_q)·m·τ(x_p) ⊗ w'`.

use std::collections::HashMap;

use super::bimodule::arrow_terms;
use super::triple::pos;
use crate::algebra::{Element, GradedAlgebra, GradedMap};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::koszul::{jump, ComplexSlice, Direction, WSpaces};
use crate::linalg::{Accumulator, SparseMatrix};

/// The bimodule A with action `(a, b)·m = σ(a)·m·τ(b)`.
#[derive(Clone, Debug)]
pub struct TwistedBimodule<F> {
    pub left: GradedMap<F>,
    pub right: GradedMap<F>,
}

impl<F: Field> TwistedBimodule<F> {
    pub fn regular(view: &GradedAlgebra<F>) -> Result<Self> {
        let id = GradedMap::identity(view)?;
        Ok(TwistedBimodule { left: id.clone(), right: id })
    }

    pub fn left_twisted(view: &GradedAlgebra<F>, sigma: GradedMap<F>) -> Result<Self> {
        Ok(TwistedBimodule { left: sigma, right: GradedMap::identity(view)? })
    }

    pub fn is_multiplicative(&self, view: &GradedAlgebra<F>) -> Result<bool> {
        Ok(self.left.check_multiplicative(view, self.left.max_degree())? && self.right.check_multiplicative(view, self.right.max_degree())?)
    }
}

/// Memoized images of short words under a graded map.
struct WordImages<'a, F> {
    map: &'a GradedMap<F>,
    cache: HashMap<(usize, usize), Element<F>>,
}

impl<'a, F: Field> WordImages<'a, F> {
    fn new(map: &'a GradedMap<F>) -> Self {
        WordImages { map, cache: HashMap::new() }
    }
    fn get(&mut self, view: &GradedAlgebra<F>, len: usize, code: usize) -> Result<Element<F>> {
        if let Some(v) = self.cache.get(&(len, code)) {
            return Ok(v.clone());
        }
        let v = self.map.apply_word(view, len, code)?;
        self.cache.insert((len, code), v.clone());
        Ok(v)
    }
}

/// `left · m · right` with left in degree lp, m the normal word `m` of degree t, right in degree lq.
fn sandwich<F: Field>(view: &GradedAlgebra<F>, left: &Element<F>, lp: usize, m: usize, t: usize, right: &Element<F>, lq: usize) -> Result<Element<F>> {
    let lm = view.multiply(lp, left, t, &[(m, F::one())])?;
    view.multiply(lp + t, &lm, lq, right)
}

fn check_budget<F: Field>(view: &GradedAlgebra<F>, t: i64) -> Result<()> {
    if t > view.max_degree() as i64 {
        return Err(Error::Truncation { requested: t as usize, available: view.max_degree() });
    }
    Ok(())
}

fn cochain_dim<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, n: usize, s: i64) -> Result<usize> {
    let t = s + n as i64;
    if t < 0 || n > w.computed_up_to() {
        return Ok(0);
    }
    Ok(w.dim(n) * view.dim(t as usize)?)
}

/// Cochain slice of internal degree s (`f: W_n → A_{s+n}` has degree s), positions 0..=i_max.
pub fn hh_cochain_slice<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, m: &TwistedBimodule<F>, i_max: usize, s: i64) -> Result<ComplexSlice<F>> {
    let big_n = w.relation_degree();
    check_budget(view, s + jump(i_max, big_n) as i64)?;
    let dims = (0..=i_max).map(|i| cochain_dim(view, w, jump(i, big_n), s)).collect::<Result<Vec<_>>>()?;
    let mut sigma = WordImages::new(&m.left);
    let mut tau = WordImages::new(&m.right);
    let mut maps = Vec::new();
    for i in 0..i_max {
        let (lo, hi) = (jump(i, big_n), jump(i + 1, big_n));
        let (src, dst) = (dims[i], dims[i + 1]);
        if src == 0 {
            maps.push(SparseMatrix::zero(dst, 0));
            continue;
        }
        let t = (s + lo as i64) as usize;
        let step = hi - lo;
        let dim_t = view.dim(t)?;
        let dim_target = view.dim(t + step)?;
        let mut cols: Vec<Accumulator<F>> = (0..src).map(|_| Accumulator::new()).collect();
        if dst > 0 {
            for k in 0..w.dim(hi) {
                for (ca, cb, sign) in arrow_terms(i + 1, big_n) {
                    let sign = F::from_i64(sign);
                    for pt in w.peel(hi, k, ca, cb) {
                        let left = sigma.get(view, ca, pt.prefix)?;
                        let right = tau.get(view, cb, pt.suffix)?;
                        let c = pt.coeff.mul(&sign);
                        for (mi, &mc) in view.basis_words(t)?.iter().enumerate() {
                            let img = sandwich(view, &left, ca, mc, t, &right, cb)?;
                            let col = &mut cols[pt.index * dim_t + mi];
                            for (code, x) in img {
                                col.add(k * dim_target + pos(view, t + step, code)?, x.mul(&c));
                            }
                        }
                    }
                }
            }
        }
        maps.push(SparseMatrix { nrows: dst, cols: cols.into_iter().map(|a| a.finish()).collect() });
    }
    Ok(ComplexSlice::new(s, Direction::Cochain, dims, maps))
}

fn chain_dim<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, n: usize, j: usize) -> Result<usize> {
    if n > j || n > w.computed_up_to() {
        return Ok(0);
    }
    Ok(view.dim(j - n)? * w.dim(n))
}

/// Chain slice of total degree j (`m ⊗ w` with `deg m + n = j`), positions 0..=i_max.
pub fn hh_chain_slice<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, m: &TwistedBimodule<F>, i_max: usize, j: usize) -> Result<ComplexSlice<F>> {
    let big_n = w.relation_degree();
    check_budget(view, j as i64)?;
    let dims = (0..=i_max).map(|i| chain_dim(view, w, jump(i, big_n), j)).collect::<Result<Vec<_>>>()?;
    let mut sigma = WordImages::new(&m.left);
    let mut tau = WordImages::new(&m.right);
    let mut maps = Vec::new();
    for i in 1..=i_max {
        let (hi, lo) = (jump(i, big_n), jump(i - 1, big_n));
        let (src, dst) = (dims[i], dims[i - 1]);
        let mut cols = Vec::with_capacity(src);
        if src > 0 {
            let t = j - hi;
            let (dim_hi, dim_lo) = (w.dim(hi), w.dim(lo));
            let peels: Vec<Vec<_>> = (0..dim_hi).map(|k| arrow_terms(i, big_n).into_iter().map(|(ca, cb, s)| (ca, cb, F::from_i64(s), w.peel(hi, k, ca, cb))).collect()).collect();
            for &mc in view.basis_words(t)? {
                for peel in &peels {
                    let mut acc = Accumulator::new();
                    for (ca, cb, sign, terms) in peel {
                        for pt in terms {
                            let left = sigma.get(view, *cb, pt.suffix)?;
                            let right = tau.get(view, *ca, pt.prefix)?;
                            let img = sandwich(view, &left, *cb, mc, t, &right, *ca)?;
                            let c = pt.coeff.mul(sign);
                            for (code, x) in img {
                                acc.add(pos(view, j - lo, code)? * dim_lo + pt.index, x.mul(&c));
                            }
                        }
                    }
                    cols.push(acc.finish());
                }
            }
        }
        maps.push(SparseMatrix { nrows: dst, cols });
    }
    Ok(ComplexSlice::new(j as i64, Direction::Chain, dims, maps))
}

/// Positions 0..=top where `W_{n(top+1)} = 0` inside the computed range.
fn resolution_top<F: Field>(w: &WSpaces<F>) -> Result<usize> {
    let big_n = w.relation_degree();
    let mut top = 0;
    loop {
        let next = jump(top + 1, big_n);
        if next > w.computed_up_to() {
            return Err(Error::Truncation { requested: next, available: w.computed_up_to() });
        }
        if w.dim(next) == 0 {
            return Ok(top);
        }
        top += 1;
    }
}

/// `(s, [dim HH^i(A,M)_s for i = 0..=D])`.
pub fn hh_cohomology_dims<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, m: &TwistedBimodule<F>, s_min: i64, s_max: i64) -> Result<Vec<(i64, Vec<usize>)>> {
    let top = resolution_top(w)?;
    (s_min..=s_max).map(|s| Ok((s, hh_cochain_slice(view, w, m, top, s)?.homology()))).collect()
}

/// `(j, [dim HH_i(A,M)_j for i = 0..=D])`.
pub fn hh_homology_dims<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, m: &TwistedBimodule<F>, j_min: usize, j_max: usize) -> Result<Vec<(usize, Vec<usize>)>> {
    let top = resolution_top(w)?;
    (j_min..=j_max).map(|j| Ok((j, hh_chain_slice(view, w, m, top, j)?.homology()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;

    #[test]
    fn polynomial_center_and_abelianization() {
        let p = presets::polynomial::<Q>(2).unwrap();
        let a = GradedAlgebra::new(p.clone(), 7).unwrap();
        let w = WSpaces::new(&p, 3).unwrap();
        let m = TwistedBimodule::regular(&a).unwrap();
        for (s, h) in hh_cohomology_dims(&a, &w, &m, 0, 4).unwrap() {
            assert_eq!(h[0], s as usize + 1);
            assert!(hh_cochain_slice(&a, &w, &m, 2, s).unwrap().squares_to_zero());
        }
        for (j, h) in hh_homology_dims(&a, &w, &m, 0, 5).unwrap() {
            assert_eq!(h[0], j + 1);
            assert!(hh_chain_slice(&a, &w, &m, 2, j).unwrap().squares_to_zero());
        }
    }
}
