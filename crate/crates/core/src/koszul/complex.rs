//! Finite complexes of finite-dimensional spaces, one internal degree at a time.

use crate::field::Field;
use crate::linalg::SparseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `maps[i]: C_{i+1} → C_i`
    Chain,
    /// `maps[i]: C^i → C^{i+1}`
    Cochain,
}

#[derive(Clone, Debug)]
pub struct ComplexSlice<F> {
    /// Internal degree label of the slice.
    pub degree: i64,
    pub direction: Direction,
    pub dims: Vec<usize>,
    pub maps: Vec<SparseMatrix<F>>,
}

impl<F: Field> ComplexSlice<F> {
    pub fn new(degree: i64, direction: Direction, dims: Vec<usize>, maps: Vec<SparseMatrix<F>>) -> Self {
        assert_eq!(maps.len() + 1, dims.len().max(1), "one map between consecutive spaces");
        for (i, m) in maps.iter().enumerate() {
            let (src, _) = match direction {
                Direction::Chain => (dims[i + 1], dims[i]),
                Direction::Cochain => (dims[i], dims[i + 1]),
            };
            assert_eq!(m.ncols(), src, "map {i} has the wrong number of columns");
        }
        ComplexSlice { degree, direction, dims, maps }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(|m| m.rank()).collect()
    }

    /// (Co)homology dimension at every position.
    pub fn homology(&self) -> Vec<usize> {
        let ranks = self.ranks();
        self.homology_from_ranks(&ranks)
    }

    pub fn homology_from_ranks(&self, ranks: &[usize]) -> Vec<usize> {
        (0..self.dims.len())
            .map(|i| {
                // Maps touching position i: maps[i-1] and maps[i].
                let below = if i > 0 { ranks[i - 1] } else { 0 };
                let above = if i < ranks.len() { ranks[i] } else { 0 };
                let (incoming, outgoing) = match self.direction {
                    Direction::Chain => (above, below),
                    Direction::Cochain => (below, above),
                };
                self.dims[i] - incoming - outgoing
            })
            .collect()
    }

    /// Every composite of consecutive maps is zero.
    pub fn squares_to_zero(&self) -> bool {
        self.maps.windows(2).all(|w| match self.direction {
            Direction::Chain => w[0].compose(&w[1]).is_zero(),
            Direction::Cochain => w[1].compose(&w[0]).is_zero(),
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational as Q;

    #[test]
    fn short_exact_sequence() {
        // 0 → k --(1,1)--> k² --(1,-1)--> k → 0, as a chain complex C_2 → C_1 → C_0.
        let one = Q::one();
        let d2 = SparseMatrix { nrows: 2, cols: vec![vec![(0, one.clone()), (1, one.clone())]] };
        let d1 = SparseMatrix { nrows: 1, cols: vec![vec![(0, one.clone())], vec![(0, one.neg())]] };
        let c = ComplexSlice::new(0, Direction::Chain, vec![1, 2, 1], vec![d1, d2]);
        assert!(c.squares_to_zero());
        assert_eq!(c.homology(), vec![0, 0, 0]);
        assert_eq!(c.euler_characteristic(), 0);
    }
}
