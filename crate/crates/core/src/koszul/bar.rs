//! `Tor^A(k,k)` from the normalized bar complex `(A_{≥1})^{⊗i}`, one internal degree at a time.
//!
//! A bar element `a₁|⋯|a_i` of internal degree j is stored as the concatenated word of its
//! normal-word factors together with the set of cut positions.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::complex::{ComplexSlice, Direction};
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{content, pow, Accumulator, SparseMatrix};

/// Cut sets of compositions of j into `parts` positive pieces (bit c−1 set = cut after letter c).
fn compositions(j: usize, parts: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if parts == 0 {
        if j == 0 {
            out.push(0);
        }
        return out;
    }
    if j == 0 {
        return out;
    }
    for mask in 0u64..(1u64 << (j - 1)) {
        if mask.count_ones() as usize == parts - 1 {
            out.push(mask);
        }
    }
    out
}

fn pieces(j: usize, mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut last = 0;
    for c in 1..j {
        if mask >> (c - 1) & 1 == 1 {
            out.push(c - last);
            last = c;
        }
    }
    out.push(j - last);
    out
}

/// Concatenated words whose factors (given by `parts`) are all normal.
fn bar_words<F: Field>(view: &GradedAlgebra<F>, parts: &[usize]) -> Result<Vec<usize>> {
    let d = view.dim_v();
    let mut acc = vec![0usize];
    for &p in parts {
        let basis = view.basis_words(p)?;
        let shift = pow(d, p);
        let mut next = Vec::with_capacity(acc.len() * basis.len());
        for &w in &acc {
            for &b in basis {
                next.push(w * shift + b);
            }
        }
        acc = next;
    }
    Ok(acc)
}

pub fn bar_dim<F: Field>(view: &GradedAlgebra<F>, i: usize, j: usize) -> Result<usize> {
    let mut total = 0;
    for mask in compositions(j, i) {
        total += pieces(j, mask).iter().map(|&p| view.dim(p)).collect::<Result<Vec<_>>>()?.iter().product::<usize>();
    }
    Ok(total)
}

/// Basis of `B_i` in degree j as (cut mask, concatenated word), in the order used for columns.
fn bar_elements<F: Field>(view: &GradedAlgebra<F>, i: usize, j: usize) -> Result<Vec<(u64, usize)>> {
    let mut out = Vec::new();
    for mask in compositions(j, i) {
        for word in bar_words(view, &pieces(j, mask))? {
            out.push((mask, word));
        }
    }
    Ok(out)
}

fn row_key(mask: u64, word: usize, dj: usize) -> usize {
    mask as usize * dj + word
}

/// Image of one basis element under `d`, keyed by [`row_key`].
fn bar_column<F: Field>(view: &GradedAlgebra<F>, i: usize, j: usize, mask: u64, word: usize) -> Result<Vec<(usize, F)>> {
    if i <= 1 {
        // B_1 → B_0 = k vanishes in positive degree.
        return Ok(Vec::new());
    }
    let d = view.dim_v();
    let dj = pow(d, j);
    let parts = pieces(j, mask);
    let cuts: Vec<usize> = (1..j).filter(|c| mask >> (c - 1) & 1 == 1).collect();
    let mut acc = Accumulator::new();
    let mut start = 0;
    for k in 0..i - 1 {
        let len = parts[k] + parts[k + 1];
        let tail = pow(d, j - start - len);
        let middle = (word / tail) % pow(d, len);
        let base = word - middle * tail;
        let new_mask = mask & !(1u64 << (cuts[k] - 1));
        let sign = F::sign(k + 1);
        for (c, x) in view.nf_word(len, middle)?.iter() {
            acc.add(row_key(new_mask, base + c * tail, dj), x.mul(&sign));
        }
        start += parts[k];
    }
    Ok(acc.finish())
}

/// `d: B_i → B_{i−1}` in internal degree j. Rows are indexed by `mask · d^j + word`.
pub fn bar_differential<F: Field>(view: &GradedAlgebra<F>, i: usize, j: usize) -> Result<SparseMatrix<F>> {
    let dj = pow(view.dim_v(), j);
    let nrows = if j == 0 { 1 } else { (1usize << (j - 1)) * dj };
    let cols = bar_elements(view, i, j)?.into_iter().map(|(mask, word)| bar_column(view, i, j, mask, word)).collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix { nrows, cols })
}

/// Bar complex slice `B_0 ← B_1 ← ⋯ ← B_{i_max+1}` in internal degree j.
pub fn bar_slice<F: Field>(view: &GradedAlgebra<F>, i_max: usize, j: usize) -> Result<ComplexSlice<F>> {
    if j > view.max_degree() {
        return Err(Error::Truncation { requested: j, available: view.max_degree() });
    }
    let top = i_max + 1;
    let dims = (0..=top).map(|i| bar_dim(view, i, j)).collect::<Result<Vec<_>>>()?;
    let maps = (1..=top).map(|i| bar_differential(view, i, j)).collect::<Result<Vec<_>>>()?;
    Ok(ComplexSlice::new(j as i64, Direction::Chain, dims, maps))
}

/// Every relation is supported on words of a single letter content, so normal forms and the bar
/// differential preserve content.
pub fn content_homogeneous<F: Field>(view: &GradedAlgebra<F>) -> bool {
    let p = view.presentation();
    let (d, n) = (p.dim_v(), p.degree());
    p.relations().rows().iter().all(|r| r.iter().all(|(w, _)| content(d, *w, n) == content(d, r[0].0, n)))
}

fn by_content(d: usize, j: usize, elements: Vec<(u64, usize)>) -> BTreeMap<Vec<u32>, Vec<(u64, usize)>> {
    let mut out: BTreeMap<Vec<u32>, Vec<(u64, usize)>> = BTreeMap::new();
    for (mask, word) in elements {
        out.entry(content(d, word, j)).or_default().push((mask, word));
    }
    out
}

/// Size of the largest block the oracle factors `B_i` into in degree j.
pub fn bar_block_dim<F: Field>(view: &GradedAlgebra<F>, i: usize, j: usize) -> Result<usize> {
    if !content_homogeneous(view) {
        return bar_dim(view, i, j);
    }
    Ok(by_content(view.dim_v(), j, bar_elements(view, i, j)?).values().map(Vec::len).max().unwrap_or(0))
}

/// `dim Tor_i(k,k)_j` for i ≤ i_max, summed over letter contents.
fn homology_by_content<F: Field>(view: &GradedAlgebra<F>, i_max: usize, j: usize) -> Result<Vec<usize>> {
    let (d, dj) = (view.dim_v(), pow(view.dim_v(), j));
    let top = i_max + 1;
    let blocks = (0..=top).map(|i| Ok(by_content(d, j, bar_elements(view, i, j)?))).collect::<Result<Vec<_>>>()?;
    let mut total = vec![0; i_max + 1];
    let empty = Vec::new();
    for key in blocks.iter().flat_map(|b| b.keys()).collect::<BTreeSet<_>>() {
        let members: Vec<&Vec<(u64, usize)>> = blocks.iter().map(|b| b.get(key).unwrap_or(&empty)).collect();
        let mut maps = Vec::with_capacity(top);
        for i in 1..=top {
            let rows: HashMap<usize, usize> = members[i - 1].iter().enumerate().map(|(k, &(m, w))| (row_key(m, w, dj), k)).collect();
            let mut cols = Vec::with_capacity(members[i].len());
            for &(mask, word) in members[i] {
                let col = bar_column(view, i, j, mask, word)?;
                let mut local = Vec::with_capacity(col.len());
                for (r, x) in col {
                    let k = *rows.get(&r).ok_or_else(|| Error::Consistency("bar differential left its content block".into()))?;
                    local.push((k, x));
                }
                local.sort_by_key(|e| e.0);
                cols.push(local);
            }
            maps.push(SparseMatrix { nrows: members[i - 1].len(), cols });
        }
        let slice = ComplexSlice::new(j as i64, Direction::Chain, members.iter().map(|m| m.len()).collect(), maps);
        for (t, h) in total.iter_mut().zip(slice.homology()) {
            *t += h;
        }
    }
    Ok(total)
}

/// `table[i][j] = dim Tor_i(k,k)_j` for i ≤ i_max, j ≤ j_max.
pub fn bar_tor_dims<F: Field>(view: &GradedAlgebra<F>, i_max: usize, j_max: usize) -> Result<Vec<Vec<usize>>> {
    if j_max > view.max_degree() {
        return Err(Error::Truncation { requested: j_max, available: view.max_degree() });
    }
    let split = content_homogeneous(view);
    let mut table = vec![vec![0; j_max + 1]; i_max + 1];
    for j in 0..=j_max {
        let h = if split && j > 0 { homology_by_content(view, i_max, j)? } else { bar_slice(view, i_max, j)?.homology() };
        for i in 0..=i_max {
            table[i][j] = h[i];
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2).len(), 3);
        assert_eq!(pieces(5, 0b0101), vec![1, 2, 2]);
        assert_eq!(compositions(0, 0), vec![0]);
    }

    #[test]
    fn polynomial_tor_is_exterior() {
        let a = GradedAlgebra::new(presets::polynomial::<Q>(2).unwrap(), 4).unwrap();
        let t = bar_tor_dims(&a, 3, 4).unwrap();
        assert_eq!(t[0], vec![1, 0, 0, 0, 0]);
        assert_eq!(t[1], vec![0, 2, 0, 0, 0]);
        assert_eq!(t[2], vec![0, 0, 1, 0, 0]);
        assert_eq!(t[3], vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn content_blocks_agree_with_the_whole_slice() {
        let a = GradedAlgebra::new(presets::antisymmetrizer::<Q>(3, 4).unwrap(), 5).unwrap();
        assert!(content_homogeneous(&a));
        for j in 1..=5 {
            assert_eq!(homology_by_content(&a, 3, j).unwrap(), bar_slice(&a, 3, j).unwrap().homology()[..4].to_vec());
        }
        let e = GradedAlgebra::new(presets::chain_quadric::<Q>(3).unwrap(), 3).unwrap();
        assert!(!content_homogeneous(&e));
    }
}
