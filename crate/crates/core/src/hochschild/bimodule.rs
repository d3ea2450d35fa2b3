//! The bimodule Koszul complex `K'_{l−r}(A)`: `A⊗W_{n(i)}⊗A` with `d_l − d_r` and `Σ_{a+b=N−1} d_l^a d_r^b`
//! alternating, augmented by multiplication `μ: A⊗A → A`.

use super::triple::{pos, TripleIndex};
use crate::algebra::GradedAlgebra;
use crate::error::Result;
use crate::field::Field;
use crate::koszul::one_sided::koszul_slice;
use crate::koszul::{jump, ComplexSlice, Direction, GlobalDimension, WSpaces};
use crate::linalg::{Accumulator, SparseMatrix};

/// `(left letters, right letters, sign)`.
pub type Terms = Vec<(usize, usize, i64)>;

/// Terms of the arrow leaving homological position i (towards i − 1): single for i odd, grouped for i even.
pub fn arrow_terms(i: usize, big_n: usize) -> Terms {
    if i % 2 == 1 {
        vec![(1, 0, 1), (0, 1, -1)]
    } else {
        (0..big_n).map(|a| (a, big_n - 1 - a, 1)).collect()
    }
}

pub fn triple<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize, n: usize) -> Result<TripleIndex> {
    let e = w.dim(n);
    if n > j {
        return Ok(TripleIndex::empty(e));
    }
    TripleIndex::new(view, j - n, e)
}

/// `A⊗W_hi⊗A → A⊗W_lo⊗A` in internal degree j: `a ⊗ w ⊗ b ↦ Σ a·x_p ⊗ w' ⊗ x_q·b` over peels `w = x_p ⊗ w' ⊗ x_q`.
pub fn bimodule_map<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize, hi: usize, lo: usize, terms: &[(usize, usize, i64)]) -> Result<SparseMatrix<F>> {
    let src = triple(view, w, j, hi)?;
    let dst = triple(view, w, j, lo)?;
    let mut cols = Vec::with_capacity(src.len());
    if src.is_empty() {
        return Ok(SparseMatrix { nrows: dst.len(), cols });
    }
    let peels: Vec<Vec<_>> = (0..w.dim(hi)).map(|k| terms.iter().map(|&(ca, cb, s)| (ca, cb, F::from_i64(s), w.peel(hi, k, ca, cb))).collect()).collect();
    let t = j - hi;
    for (t1, a, k, b) in src.entries() {
        let t2 = t - t1;
        let a_code = view.basis_words(t1)?[a];
        let b_code = view.basis_words(t2)?[b];
        let mut acc = Accumulator::new();
        for (ca, cb, sign, terms) in &peels[k] {
            for pt in terms {
                let left = view.mul_words(a_code, t1, pt.prefix, *ca)?;
                let right = view.mul_words(pt.suffix, *cb, b_code, t2)?;
                let c = pt.coeff.mul(sign);
                for (lc, x) in left.iter() {
                    let la = pos(view, t1 + ca, *lc)?;
                    let cx = c.mul(x);
                    for (rc, y) in right.iter() {
                        acc.add(dst.index(t1 + ca, la, pt.index, pos(view, t2 + cb, *rc)?), cx.mul(y));
                    }
                }
            }
        }
        cols.push(acc.finish());
    }
    Ok(SparseMatrix { nrows: dst.len(), cols })
}

/// `μ: A⊗A → A`, `a ⊗ b ↦ ab`, in degree j.
pub fn multiplication_map<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize) -> Result<SparseMatrix<F>> {
    let src = triple(view, w, j, 0)?;
    let mut cols = Vec::with_capacity(src.len());
    for (t1, a, _, b) in src.entries() {
        let prod = view.mul_words(view.basis_words(t1)?[a], t1, view.basis_words(j - t1)?[b], j - t1)?;
        cols.push(prod.iter().map(|(c, x)| Ok((pos(view, j, *c)?, x.clone()))).collect::<Result<Vec<_>>>()?);
    }
    Ok(SparseMatrix { nrows: view.dim(j)?, cols })
}

fn top_position<F: Field>(w: &WSpaces<F>, j: usize) -> usize {
    let big_n = w.relation_degree();
    let mut top = 0;
    while jump(top + 1, big_n) <= j.min(w.computed_up_to()) && w.dim(jump(top + 1, big_n)) > 0 {
        top += 1;
    }
    top
}

/// Augmented slice `A_j ← (A⊗A)_j ← (A⊗V⊗A)_j ← ⋯`; position 0 is A, position i+1 is `K'_i`.
pub fn bimodule_slice<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize) -> Result<ComplexSlice<F>> {
    let big_n = w.relation_degree();
    let top = top_position(w, j);
    let mut dims = vec![view.dim(j)?];
    let mut maps = vec![multiplication_map(view, w, j)?];
    for i in 0..=top {
        dims.push(triple(view, w, j, jump(i, big_n))?.len());
        if i > 0 {
            maps.push(bimodule_map(view, w, j, jump(i, big_n), jump(i - 1, big_n), &arrow_terms(i, big_n))?);
        }
    }
    Ok(ComplexSlice::new(j as i64, Direction::Chain, dims, maps))
}

#[derive(Clone, Debug)]
pub struct BimoduleExactness {
    pub exact: bool,
    /// `(j, homology per position)`; position 0 is the augmentation target A.
    pub slices: Vec<(usize, Vec<usize>)>,
    /// First nonzero homology as (homological index i of `K'_i`, j, dim); i = −1 is the augmentation.
    pub witness: Option<(i64, usize, usize)>,
}

pub fn bimodule_exactness<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, max_j: usize) -> Result<BimoduleExactness> {
    let mut slices = Vec::new();
    let mut witness = None;
    for j in 0..=max_j {
        let h = bimodule_slice(view, w, j)?.homology();
        if witness.is_none() {
            if let Some(p) = h.iter().position(|&x| x != 0) {
                witness = Some((p as i64 - 1, j, h[p]));
            }
        }
        slices.push((j, h));
    }
    Ok(BimoduleExactness { exact: witness.is_none(), slices, witness })
}

/// Structural checks on one slice: `d_l d_r = d_r d_l` for every single step,
/// `μ∘(d_l − d_r) = 0`, and consecutive contracted arrows compose to zero.
pub fn bimodule_identities<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize) -> Result<bool> {
    let minus = F::one().neg();
    let top = j.min(w.computed_up_to());
    for n in 2..=top {
        if w.dim(n) == 0 {
            break;
        }
        let lr = bimodule_map(view, w, j, n - 1, n - 2, &[(1, 0, 1)])?.compose(&bimodule_map(view, w, j, n, n - 1, &[(0, 1, 1)])?);
        let rl = bimodule_map(view, w, j, n - 1, n - 2, &[(0, 1, 1)])?.compose(&bimodule_map(view, w, j, n, n - 1, &[(1, 0, 1)])?);
        if !lr.lin_comb(&minus, &rl).is_zero() {
            return Ok(false);
        }
    }
    Ok(bimodule_slice(view, w, j)?.squares_to_zero())
}

/// `K'_{l−r}(A) ⊗_A k`: keep only right factors of degree 0. Equals the one-sided slice matrix by matrix.
pub fn collapse_matches_one_sided<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize) -> Result<bool> {
    let big_n = w.relation_degree();
    let one_sided = koszul_slice(view, w, j)?;
    let bi = bimodule_slice(view, w, j)?;
    for (i, m) in one_sided.maps.iter().enumerate() {
        let (hi, lo) = (jump(i + 1, big_n), jump(i, big_n));
        let src = triple(view, w, j, hi)?;
        let dst = triple(view, w, j, lo)?;
        let block = |t: &TripleIndex, n: usize| if n > j { 0..0 } else { t.index(j - n, 0, 0, 0)..t.index(j - n, 0, 0, 0) + view.dim(j - n).unwrap_or(0) * w.dim(n) };
        let (sb, db) = (block(&src, hi), block(&dst, lo));
        let Some(big) = bi.maps.get(i + 1) else {
            if m.nnz() != 0 {
                return Ok(false);
            }
            continue;
        };
        let mut cols = Vec::new();
        for c in sb.clone() {
            cols.push(big.cols[c].iter().filter(|(r, _)| db.contains(r)).map(|(r, x)| (r - db.start, x.clone())).collect::<Vec<_>>());
        }
        let restricted = SparseMatrix { nrows: db.len(), cols };
        if restricted != *m {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Length of the bimodule resolution seen within degree `max_j`: the largest i with `K'_i` nonzero in some slice.
pub fn hochschild_dimension<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, max_j: usize) -> Result<GlobalDimension> {
    let mut len = 0;
    for j in 0..=max_j {
        let dims = bimodule_slice(view, w, j)?.dims;
        if let Some(p) = dims.iter().rposition(|&x| x > 0) {
            len = len.max(p.saturating_sub(1));
        }
    }
    Ok(match w.first_vanishing() {
        Some(m) if m <= max_j => GlobalDimension::Exact(len),
        _ => GlobalDimension::AtLeast(len),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;

    #[test]
    fn polynomial_resolution() {
        let p = presets::polynomial::<Q>(2).unwrap();
        let a = GradedAlgebra::new(p.clone(), 5).unwrap();
        let w = WSpaces::new(&p, 5).unwrap();
        let e = bimodule_exactness(&a, &w, 5).unwrap();
        assert!(e.exact, "{:?}", e.witness);
        for j in 0..=4 {
            assert!(bimodule_identities(&a, &w, j).unwrap());
            assert!(collapse_matches_one_sided(&a, &w, j).unwrap());
        }
        assert_eq!(hochschild_dimension(&a, &w, 5).unwrap(), GlobalDimension::Exact(2));
    }
}
