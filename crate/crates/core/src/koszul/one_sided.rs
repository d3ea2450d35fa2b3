//! The one-sided Koszul complexes `A ⊗ W_{n}`: the uncontracted N-complex and its 2-complex contraction.

use super::complex::{ComplexSlice, Direction};
use super::wspaces::{jump, WSpaces};
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Accumulator, SparseMatrix};

fn pos<F: Field>(view: &GradedAlgebra<F>, n: usize, code: usize) -> Result<usize> {
    view.position(n, code).ok_or_else(|| Error::Consistency(format!("normal form produced a reducible word {code} in degree {n}")))
}

/// Dimension of `(A ⊗ W_n)_j = A_{j−n} ⊗ W_n`.
pub fn tensor_dim<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize, n: usize) -> Result<usize> {
    if n > j {
        return Ok(0);
    }
    Ok(view.dim(j - n)? * w.dim(n))
}

/// `A_{j−hi} ⊗ W_{hi} → A_{j−lo} ⊗ W_{lo}`, `a ⊗ w ↦ Σ a·p ⊗ w_p` peeling `hi − lo` letters off the left of w.
/// Basis index of `a ⊗ e_l` is `position(a) · dim W + l`.
pub fn peel_map<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize, hi: usize, lo: usize) -> Result<SparseMatrix<F>> {
    let s = hi - lo;
    let nrows = tensor_dim(view, w, j, lo)?;
    if hi > j {
        return Ok(SparseMatrix::zero(nrows, 0));
    }
    let m = j - hi;
    let (dim_hi, dim_lo) = (w.dim(hi), w.dim(lo));
    let peels: Vec<_> = (0..dim_hi).map(|k| w.peel(hi, k, s, 0)).collect();
    let mut cols = Vec::with_capacity(view.dim(m)? * dim_hi);
    for &a in view.basis_words(m)? {
        for peel in &peels {
            let mut acc = Accumulator::new();
            for t in peel {
                for (code, x) in view.mul_words(a, m, t.prefix, s)?.iter() {
                    acc.add(pos(view, j - lo, *code)? * dim_lo + t.index, x.mul(&t.coeff));
                }
            }
            cols.push(acc.finish());
        }
    }
    Ok(SparseMatrix { nrows, cols })
}

/// The contracted Koszul complex `K_i = A ⊗ W_{n(i)}` in internal degree j (chain direction).
pub fn koszul_slice<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize) -> Result<ComplexSlice<F>> {
    let big_n = view.relation_degree();
    let mut top = 0;
    while jump(top + 1, big_n) <= j {
        top += 1;
    }
    if j > w.computed_up_to() {
        return Err(Error::Truncation { requested: j, available: w.computed_up_to() });
    }
    let dims = (0..=top).map(|i| tensor_dim(view, w, j, jump(i, big_n))).collect::<Result<Vec<_>>>()?;
    let maps = (1..=top).map(|i| peel_map(view, w, j, jump(i, big_n), jump(i - 1, big_n))).collect::<Result<Vec<_>>>()?;
    Ok(ComplexSlice::new(j as i64, Direction::Chain, dims, maps))
}

/// Grouping of the N-complex: composite of `hi − lo` single-letter differentials.
pub fn composite_of_single_steps<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, j: usize, hi: usize, lo: usize) -> Result<SparseMatrix<F>> {
    let mut acc = peel_map(view, w, j, hi, hi - 1)?;
    for n in (lo..hi - 1).rev() {
        acc = peel_map(view, w, j, n + 1, n)?.compose(&acc);
    }
    Ok(acc)
}

/// Checks `d^N = 0` on `A ⊗ W_n → A ⊗ W_{n−N}` for all n ≤ j, every j ≤ `up_to`,
/// and reports whether some `d^2` is nonzero (expected exactly when N > 2 and R ≠ 0 matters).
pub struct NComplexCheck {
    pub nth_power_vanishes: bool,
    pub square_nonzero_somewhere: bool,
    pub grouped_composites_vanish: bool,
}

pub fn n_differential_check<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, up_to: usize) -> Result<NComplexCheck> {
    let big_n = view.relation_degree();
    let mut res = NComplexCheck { nth_power_vanishes: true, square_nonzero_somewhere: false, grouped_composites_vanish: true };
    for j in 0..=up_to {
        let singles: Vec<SparseMatrix<F>> = (1..=j).map(|n| peel_map(view, w, j, n, n - 1)).collect::<Result<_>>()?;
        for n in big_n..=j {
            let mut comp = singles[n - 1].clone();
            for k in 1..big_n {
                comp = singles[n - 1 - k].compose(&comp);
            }
            if !comp.is_zero() {
                res.nth_power_vanishes = false;
            }
            // d^{N−1}∘d and d∘d^{N−1}
            let grouped_hi = composite_of_single_steps(view, w, j, n - 1, n - big_n)?;
            let grouped_lo = composite_of_single_steps(view, w, j, n, n - big_n + 1)?;
            if !grouped_hi.compose(&singles[n - 1]).is_zero() || !singles[n - big_n].compose(&grouped_lo).is_zero() {
                res.grouped_composites_vanish = false;
            }
        }
        for n in 2..=j {
            if !singles[n - 2].compose(&singles[n - 1]).is_zero() {
                res.square_nonzero_somewhere = true;
            }
        }
    }
    Ok(res)
}
