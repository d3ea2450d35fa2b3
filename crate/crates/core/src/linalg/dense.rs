//! Small dense matrices for pairings, automorphism components and certificates.

use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    nrows: usize,
    ncols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.nrows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.data[i * self.ncols..(i + 1) * self.ncols].iter().map(|x| format!("{x:?}")).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix { nrows, ncols, data: vec![F::zero(); nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix { nrows, ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(nrows: usize, ncols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                data.push(f(i, j));
            }
        }
        Matrix { nrows, ncols, data }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }
    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.ncols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.ncols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }
    pub fn rows(&self) -> Vec<Vec<F>> {
        (0..self.nrows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.nrows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ncols, self.nrows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows, "shape mismatch");
        let mut out = Self::zero(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.ncols + j;
                        out.data[idx].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { nrows: self.nrows, ncols: self.ncols, data: self.data.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ncols);
        (0..self.nrows)
            .map(|i| {
                let mut s = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    s.add_mul(a, b);
                }
                s
            })
            .collect()
    }

    fn row_reduce(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let Some(p) = (r..m.nrows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            for j in 0..m.ncols {
                m.data.swap(r * m.ncols + j, p * m.ncols + j);
            }
            let inv = m.get(r, c).inv();
            for j in 0..m.ncols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.nrows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.ncols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.nrows;
        let aug = Self::from_fn(n, 2 * n, |i, j| if j < n { self.get(i, j).clone() } else if j - n == i { F::one() } else { F::zero() });
        let (red, pivots) = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar_multiple_of_identity(&F::one())
    }

    pub fn is_scalar_multiple_of_identity(&self, c: &F) -> bool {
        self.is_square()
            && (0..self.nrows).all(|i| (0..self.ncols).all(|j| if i == j { self.get(i, j) == c } else { self.get(i, j).is_zero() }))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Entries as strings, row by row; used by reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.nrows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational as Q;

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![vec![Q::from_i64(2), Q::from_i64(1)], vec![Q::from_i64(1), Q::from_i64(1)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = Matrix::from_rows(vec![vec![Q::from_i64(1), Q::from_i64(2)], vec![Q::from_i64(2), Q::from_i64(4)]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.rank(), 1);
    }
}
