//! `HH_*(A, A)` from the normalized Hochschild complex `A ⊗ Ā^{⊗i}`, independent of W and of the Koszul resolution.

use std::collections::HashMap;

use crate::algebra::GradedAlgebra;
use crate::error::Result;
use crate::field::Field;
use crate::koszul::{ComplexSlice, Direction};
use crate::linalg::{Accumulator, SparseMatrix};

/// A chain `a₀ ⊗ a₁ ⊗ ⋯ ⊗ a_i` as (degree, normal word) per factor.
type Chain = Vec<(usize, usize)>;

fn compositions(total: usize, parts: usize, first_may_be_zero: bool) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let min = if first_may_be_zero { 0 } else { 1 };
    let mut out = Vec::new();
    for first in min..=total {
        for mut rest in compositions(total - first, parts - 1, false) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn chains<F: Field>(view: &GradedAlgebra<F>, i: usize, j: usize) -> Result<Vec<Chain>> {
    let mut out = Vec::new();
    for parts in compositions(j, i + 1, true) {
        let mut acc: Vec<Chain> = vec![Vec::new()];
        for &p in &parts {
            let words = view.basis_words(p)?;
            acc = acc.into_iter().flat_map(|c| words.iter().map(move |&w| { let mut c = c.clone(); c.push((p, w)); c })).collect();
        }
        out.extend(acc);
    }
    Ok(out)
}

/// `b(a₀⊗⋯⊗a_i) = Σ_{k<i} (−1)^k a₀⊗⋯⊗a_k a_{k+1}⊗⋯ + (−1)^i a_i a₀ ⊗ a₁ ⊗ ⋯ ⊗ a_{i−1}`.
fn boundary<F: Field>(view: &GradedAlgebra<F>, src: &[Chain], dst: &HashMap<Chain, usize>, nrows: usize) -> Result<SparseMatrix<F>> {
    let mut cols = Vec::with_capacity(src.len());
    for c in src {
        let i = c.len() - 1;
        let mut acc = Accumulator::new();
        let mut push = |merged: (usize, usize, usize, usize), pre: &[(usize, usize)], post: &[(usize, usize)], front: bool, sign: F| -> Result<()> {
            let (la, a, lb, b) = merged;
            for (code, x) in view.mul_words(a, la, b, lb)?.iter() {
                let mut key: Chain = Vec::with_capacity(i);
                if front {
                    key.push((la + lb, *code));
                    key.extend_from_slice(post);
                } else {
                    key.extend_from_slice(pre);
                    key.push((la + lb, *code));
                    key.extend_from_slice(post);
                }
                acc.add(dst[&key], x.mul(&sign));
            }
            Ok(())
        };
        for k in 0..i {
            let m = (c[k].0, c[k].1, c[k + 1].0, c[k + 1].1);
            push(m, &c[..k], &c[k + 2..], false, F::sign(k))?;
        }
        if i > 0 {
            let m = (c[i].0, c[i].1, c[0].0, c[0].1);
            push(m, &[], &c[1..i], true, F::sign(i))?;
        }
        cols.push(acc.finish());
    }
    Ok(SparseMatrix { nrows, cols })
}

/// `table[i][j] = dim HH_i(A,A)_j` for i ≤ i_max, j ≤ j_max.
pub fn hochschild_bar_homology<F: Field>(view: &GradedAlgebra<F>, i_max: usize, j_max: usize) -> Result<Vec<Vec<usize>>> {
    let mut table = vec![vec![0; j_max + 1]; i_max + 1];
    for j in 0..=j_max {
        let spaces: Vec<Vec<Chain>> = (0..=i_max + 1).map(|i| chains(view, i, j)).collect::<Result<_>>()?;
        let indices: Vec<HashMap<Chain, usize>> = spaces.iter().map(|s| s.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect()).collect();
        let maps = (1..=i_max + 1).map(|i| boundary(view, &spaces[i], &indices[i - 1], spaces[i - 1].len())).collect::<Result<Vec<_>>>()?;
        let slice = ComplexSlice::new(j as i64, Direction::Chain, spaces.iter().map(|s| s.len()).collect(), maps);
        let h = slice.homology();
        for i in 0..=i_max {
            table[i][j] = h[i];
        }
    }
    Ok(table)
}
