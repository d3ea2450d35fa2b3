//! `Ext_A(k,A)` as the cohomology of `L'_r(A)`: `A → V*⊗A → A^!_N⊗A → A^!_{N+1}⊗A → ⋯`
//! with arrows `ξ_r` and `ξ_r^{N−1}` alternating, `ξ_r^s(f⊗b) = Σ_{|p|=s} x*_p f ⊗ x_p b`.

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::koszul::{jump, ComplexSlice, Direction, WSpaces};
use crate::linalg::{pow, Accumulator, SparseMatrix};
use crate::yoneda::{class_of_word, dual_dim};

/// `A^!_n ⊗ A_t` with `t = s + n`, empty when t < 0.
fn component_dim<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, n: usize, s: i64) -> Result<usize> {
    let t = s + n as i64;
    if t < 0 {
        return Ok(0);
    }
    let e = dual_dim(w, n)?;
    if e == 0 {
        return Ok(0);
    }
    Ok(e * view.dim(t as usize)?)
}

fn xi_power<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, lo: usize, hi: usize, s: i64) -> Result<SparseMatrix<F>> {
    let nrows = component_dim(view, w, hi, s)?;
    let ncols = component_dim(view, w, lo, s)?;
    if ncols == 0 {
        return Ok(SparseMatrix::zero(nrows, 0));
    }
    let step = hi - lo;
    let d = view.dim_v();
    let t = (s + lo as i64) as usize;
    let target_dim = view.dim(t + step)?;
    let pivots = w.basis(lo).pivots.clone();
    let shift = pow(d, lo);
    let mut cols = Vec::with_capacity(ncols);
    for &q in &pivots {
        for &b in view.basis_words(t)? {
            let mut acc = Accumulator::new();
            for p in 0..pow(d, step) {
                let class = class_of_word(w, hi, p * shift + q)?;
                if class.is_empty() {
                    continue;
                }
                let prod = view.mul_words(p, step, b, t)?;
                for (l, x) in &class {
                    for (c, y) in prod.iter() {
                        let pos = view.position(t + step, *c).ok_or_else(|| Error::Consistency("non-normal word in product".into()))?;
                        acc.add(l * target_dim + pos, x.mul(y));
                    }
                }
            }
            cols.push(acc.finish());
        }
    }
    Ok(SparseMatrix { nrows, cols })
}

/// Slice of `L'_r(A)` of internal degree s (`A^!_n` sits in degree −n), positions i = 0..=i_max.
pub fn ext_slice<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, i_max: usize, s: i64) -> Result<ComplexSlice<F>> {
    let big_n = view.relation_degree();
    let top_t = s + jump(i_max, big_n) as i64;
    if top_t > view.max_degree() as i64 {
        return Err(Error::Truncation { requested: top_t.max(0) as usize, available: view.max_degree() });
    }
    let dims = (0..=i_max).map(|i| component_dim(view, w, jump(i, big_n), s)).collect::<Result<Vec<_>>>()?;
    let maps = (0..i_max).map(|i| xi_power(view, w, jump(i, big_n), jump(i + 1, big_n), s)).collect::<Result<Vec<_>>>()?;
    Ok(ComplexSlice::new(s, Direction::Cochain, dims, maps))
}

/// `(s, [dim Ext^i(k,A)_s for i ≤ i_max])` for s in `s_min..=s_max`.
///
/// The top position is a true cohomology only when `A^!_{n(i_max+1)} = 0`; otherwise it is
/// a kernel, and callers should ask for one extra position.
pub fn ext_k_a_dims<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, i_max: usize, s_min: i64, s_max: i64) -> Result<Vec<(i64, Vec<usize>)>> {
    let big_n = view.relation_degree();
    let beyond = dual_dim(w, jump(i_max + 1, big_n)).unwrap_or(1);
    let mut out = Vec::new();
    for s in s_min..=s_max {
        let slice = ext_slice(view, w, if beyond == 0 { i_max } else { i_max + 1 }, s)?;
        let mut h = slice.homology();
        h.truncate(i_max + 1);
        out.push((s, h));
    }
    Ok(out)
}
