//! Built-in families of presentations.

use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{encode, SparseVec};

fn names(n: usize, suffix: &str) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}{suffix}")).collect()
}

fn term<F: Field>(n: usize, word: &[usize], c: i64) -> (usize, F) {
    (encode(n, word), F::from_i64(c))
}

/// Commutative polynomial ring in `n` variables.
pub fn polynomial<F: Field>(n: usize) -> Result<Presentation<F>> {
    if n == 0 {
        return Err(Error::InvalidParams("polynomial ring needs n ≥ 1".into()));
    }
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rels.push(vec![term(n, &[i, j], 1), term(n, &[j, i], -1)]);
        }
    }
    Presentation::new(names(n, ""), 2, rels)
}

/// Free algebra on `n` generators, declared N-homogeneous with no relations.
pub fn free<F: Field>(n: usize, degree: usize) -> Result<Presentation<F>> {
    if n == 0 {
        return Err(Error::InvalidParams("free algebra needs n ≥ 1".into()));
    }
    Presentation::new(names(n, ""), degree, Vec::new())
}

/// One quadratic relation `x1x2 + x2x3 + ⋯ + x_{n−1}x_n − x_n x1`.
pub fn chain_quadric<F: Field>(n: usize) -> Result<Presentation<F>> {
    if n < 2 {
        return Err(Error::InvalidParams("chain_quadric needs n ≥ 2".into()));
    }
    let mut rel: Vec<(usize, F)> = (0..n - 1).map(|i| term(n, &[i, i + 1], 1)).collect();
    rel.push(term(n, &[n - 1, 0], -1));
    Presentation::new(names(n, ""), 2, vec![crate::linalg::from_entries(rel)])
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    // Heap-free recursive enumeration with parity tracking.
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if rest.is_empty() {
            out.push((prefix.clone(), odd));
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, odd ^ (i % 2 == 1), out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..k).collect(), false, &mut out);
    out
}

/// All signed sums over `S_k` of the letters `idx`, as a vector in `V^{⊗k}`.
pub fn antisymmetrizer_vector<F: Field>(dim_v: usize, idx: &[usize]) -> SparseVec<F> {
    let entries = permutations(idx.len())
        .into_iter()
        .map(|(p, odd)| {
            let word: Vec<usize> = p.iter().map(|&k| idx[k]).collect();
            term(dim_v, &word, if odd { -1 } else { 1 })
        })
        .collect();
    crate::linalg::from_entries(entries)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The antisymmetrizers of degree `degree` on `n` generators, one per `degree`-subset.
pub fn antisymmetrizer<F: Field>(degree: usize, n: usize) -> Result<Presentation<F>> {
    if degree < 2 || n < degree {
        return Err(Error::InvalidParams(format!("antisymmetrizer needs 2 ≤ N ≤ n, got N={degree}, n={n}")));
    }
    let rels = subsets(n, degree).iter().map(|s| antisymmetrizer_vector(n, s)).collect();
    Presentation::new(names(n, ""), degree, rels)
}

/// Two generators, one cubic monomial relation `x1³`.
pub fn monomial_cubic_x1<F: Field>(suffix: &str) -> Result<Presentation<F>> {
    Presentation::new(names(2, suffix), 3, vec![vec![term(2, &[0, 0, 0], 1)]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational as Q;

    #[test]
    fn permutation_parities() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().filter(|p| p.1).count(), 3);
        assert!(perms.contains(&(vec![1, 0, 2], true)));
        assert!(perms.contains(&(vec![1, 2, 0], false)));
    }

    #[test]
    fn antisymmetrizer_shape() {
        let p = antisymmetrizer::<Q>(3, 4).unwrap();
        assert_eq!(p.relations().dim(), 4);
        assert!(p.original_relations().iter().all(|r| r.len() == 6 && r.iter().all(|(_, c)| *c == Q::one() || *c == Q::one().neg())));
        assert_eq!(antisymmetrizer::<Q>(2, 3).unwrap().relations(), polynomial::<Q>(3).unwrap().relations());
        assert!(antisymmetrizer::<Q>(4, 3).is_err());
    }

    #[test]
    fn chain_quadric_two_is_commutative() {
        assert_eq!(chain_quadric::<Q>(2).unwrap().relations(), polynomial::<Q>(2).unwrap().relations());
    }
}
