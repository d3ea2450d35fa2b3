//! The bijectivity criterion: `Φ̄_{n(i)}: A^!_{n(D−i)} → A^!*_{n(i)}`, `f ↦ f.u*`.

use crate::error::Result;
use crate::field::Field;
use crate::koszul::{global_dimension, jump, GlobalDimension};
use crate::linalg::{Matrix, SparseVec};
use crate::yoneda::{dual_product, YonedaAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinFailure {
    /// No vanishing W found within the computed range.
    UnboundedGlobalDimension { at_least: usize },
    /// N > 2 forces D odd.
    EvenDimension { global_dimension: usize },
    TopDimension { dim: usize },
    NotBijective { i: usize, rank: usize, rows: usize, cols: usize },
}

#[derive(Clone, Debug)]
pub struct GorensteinCertificate<F> {
    pub verdict: bool,
    pub failure: Option<GorensteinFailure>,
    pub global_dimension: Option<usize>,
    pub relation_degree: usize,
    /// `n(D)`.
    pub top_degree: usize,
    pub top_dim: usize,
    /// D odd or N = 2.
    pub parity_ok: bool,
    /// `n(i) + n(D−i) = n(D)` for all i.
    pub additivity: bool,
    /// `phi_bar[i]` has rows indexed by the basis of `A^!_{n(i)}`, columns by `A^!_{n(D−i)}`:
    /// entry = coefficient of u in the product `h·f`.
    pub phi_bar: Vec<Matrix<F>>,
    pub phi_bar_bijective: Vec<bool>,
    /// `Φ̄_0`, `Φ̄_{n(D)}` bijective and `Φ̄_1` surjective.
    pub remark_checks: bool,
    /// u is the class of `x*_q` for this top word q of `W_{n(D)}`.
    pub u_word: Option<usize>,
    /// The element of `W_{n(D)}` with `⟨u, w⟩ = 1`.
    pub w: Option<SparseVec<F>>,
    pub yoneda: YonedaAlgebra<F>,
}

impl<F: Field> GorensteinCertificate<F> {
    pub fn dimension(&self) -> usize {
        self.global_dimension.unwrap_or(0)
    }
}

pub fn gorenstein_verdict<F: Field>(yoneda: YonedaAlgebra<F>) -> Result<GorensteinCertificate<F>> {
    let w = yoneda.w_spaces();
    let big_n = w.relation_degree();
    let mut cert = GorensteinCertificate {
        verdict: false,
        failure: None,
        global_dimension: None,
        relation_degree: big_n,
        top_degree: 0,
        top_dim: 0,
        parity_ok: false,
        additivity: false,
        phi_bar: Vec::new(),
        phi_bar_bijective: Vec::new(),
        remark_checks: false,
        u_word: None,
        w: None,
        yoneda: yoneda.clone(),
    };
    let d = match global_dimension(w) {
        GlobalDimension::Exact(d) => d,
        GlobalDimension::AtLeast(b) => {
            cert.failure = Some(GorensteinFailure::UnboundedGlobalDimension { at_least: b });
            return Ok(cert);
        }
    };
    cert.global_dimension = Some(d);
    let top = jump(d, big_n);
    cert.top_degree = top;
    cert.top_dim = w.dim(top);
    cert.parity_ok = big_n == 2 || d % 2 == 1;
    cert.additivity = (0..=d).all(|i| jump(i, big_n) + jump(d - i, big_n) == top);
    if !cert.parity_ok {
        cert.failure = Some(GorensteinFailure::EvenDimension { global_dimension: d });
        return Ok(cert);
    }
    if cert.top_dim != 1 {
        cert.failure = Some(GorensteinFailure::TopDimension { dim: cert.top_dim });
        return Ok(cert);
    }
    cert.u_word = Some(w.basis(top).pivots[0]);
    cert.w = Some(w.basis(top).rows[0].clone());
    for i in 0..=d {
        let (lo, hi) = (jump(i, big_n), jump(d - i, big_n));
        let (rows, cols) = (w.dim(lo), w.dim(hi));
        let mut m = Matrix::zero(rows, cols);
        for h in 0..rows {
            for f in 0..cols {
                let prod = dual_product(w, lo, &[(h, F::one())], hi, &[(f, F::one())])?;
                if let Some((_, x)) = prod.first() {
                    m.set(h, f, x.clone());
                }
            }
        }
        let rank = m.rank();
        let bij = rows == cols && rank == rows;
        if !bij && cert.failure.is_none() {
            cert.failure = Some(GorensteinFailure::NotBijective { i, rank, rows, cols });
        }
        cert.phi_bar_bijective.push(bij);
        cert.phi_bar.push(m);
    }
    let surj_one = d >= 1 && cert.phi_bar[1].rank() == cert.phi_bar[1].nrows();
    cert.remark_checks = cert.phi_bar_bijective[0] && cert.phi_bar_bijective[d] && (d == 0 || surj_one);
    cert.verdict = cert.failure.is_none();
    Ok(cert)
}

/// The Frobenius-bridge formulation: all pairings `E(A)_i × E(A)_{D−i} → k`,
/// `(x, y) = ⟨x • y, u*⟩`, are non-degenerate.
pub fn pairings_nondegenerate<F: Field>(cert: &GorensteinCertificate<F>) -> Result<bool> {
    let Some(d) = cert.global_dimension else { return Ok(false) };
    if cert.top_dim != 1 || !cert.parity_ok {
        return Ok(false);
    }
    let y = &cert.yoneda;
    for i in 0..=d {
        let (r, c) = (y.dim(i)?, y.dim(d - i)?);
        if r != c {
            return Ok(false);
        }
        let m = Matrix::from_fn(r, c, |a, b| {
            y.basis_product(i, a, d - i, b).ok().and_then(|v| v.first().map(|(_, x)| x.clone())).unwrap_or_else(F::zero)
        });
        if m.rank() != r {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;

    fn verdict(p: crate::algebra::Presentation<Q>, up_to: usize) -> GorensteinCertificate<Q> {
        gorenstein_verdict(YonedaAlgebra::from_presentation(&p, up_to).unwrap()).unwrap()
    }

    #[test]
    fn antisymmetrizer_family() {
        let c = verdict(presets::antisymmetrizer(3, 4).unwrap(), 6);
        assert!(c.verdict && c.global_dimension == Some(3) && c.remark_checks);
        let c = verdict(presets::antisymmetrizer(3, 5).unwrap(), 7);
        assert!(!c.verdict);
        assert_eq!(c.failure, Some(GorensteinFailure::TopDimension { dim: 5 }));
        let c = verdict(presets::polynomial(3).unwrap(), 4);
        assert!(c.verdict && c.global_dimension == Some(3));
        assert!(pairings_nondegenerate(&c).unwrap());
    }

    #[test]
    fn single_generator_edge() {
        // N = 3, dim V = 1, R = 0: A^!_2 ≠ 0 above n(D) = 1, still Gorenstein.
        let c = verdict(presets::free(1, 3).unwrap(), 4);
        assert_eq!(c.global_dimension, Some(1));
        assert!(c.verdict);
        assert_eq!(c.yoneda.w_spaces().dim(2), 1);
    }
}
