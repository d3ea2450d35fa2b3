//! Cubic algebras on two generators with D = 3: `w = x f₁ + y f₂ = g₁ x + g₂ y`, `(g₁ g₂) = (f₁ f₂) Qᵗ`.

use super::criterion::GorensteinCertificate;
use super::frobenius::FrobeniusData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{get, Matrix};

#[derive(Clone, Debug)]
pub struct CubicQ<F> {
    pub q: Matrix<F>,
    /// `f₁, f₂` as vectors on the 8 words of length 3.
    pub left_factors: [Vec<F>; 2],
    /// `ν₁(X*) = Q^{−1} X*`.
    pub nu_one_matches: bool,
    /// `ν₂(F*) = Qᵗ F*` in the basis dual to `f₁, f₂`.
    pub nu_two_matches: bool,
    /// `φ₁(X) = (Q^{−1})ᵗ X`.
    pub phi_one_matches: bool,
    /// `(x*, f₁*) = (y*, f₂*) = 1`, `(x*, f₂*) = (y*, f₁*) = 0`.
    pub pairing_is_identity: bool,
    /// Computable stand-in for type A: E(A) symmetric.
    pub type_a_proxy: bool,
}

pub fn q_matrix_cubic<F: Field>(cert: &GorensteinCertificate<F>, data: &FrobeniusData<F>) -> Result<CubicQ<F>> {
    let w3 = cert.yoneda.w_spaces();
    if cert.relation_degree != 3 || w3.alphabet() != 2 || cert.global_dimension != Some(3) || !cert.verdict {
        return Err(Error::Precondition("Q-matrix needs N = 3, two generators, D = 3 and a Gorenstein verdict".into()));
    }
    let w = cert.w.as_ref().expect("verdict carries w");
    let at = |code: usize| get(w, code).cloned().unwrap_or_else(F::zero);
    // x = letter 0, y = letter 1; words of length 4 are coded base 2 with the first letter most significant.
    let f: [Vec<F>; 2] = [(0..8).map(|t| at(t)).collect(), (0..8).map(|t| at(8 + t)).collect()];
    let g: [Vec<F>; 2] = [(0..8).map(|t| at(2 * t)).collect(), (0..8).map(|t| at(2 * t + 1)).collect()];
    // Columns where the 2×8 matrix of f is invertible.
    let mut minor = None;
    'search: for c1 in 0..8 {
        for c2 in c1 + 1..8 {
            let m = Matrix::from_rows(vec![vec![f[0][c1].clone(), f[1][c1].clone()], vec![f[0][c2].clone(), f[1][c2].clone()]]);
            if m.inverse().is_some() {
                minor = Some((c1, c2, m));
                break 'search;
            }
        }
    }
    let Some((c1, c2, fm)) = minor else {
        return Err(Error::Consistency(format!("w = x f₁ + y f₂ with f₁, f₂ dependent: f₁ = {:?}, f₂ = {:?}", f[0], f[1])));
    };
    // g_i = Σ_k Q[i][k] f_k  ⇔  (g_i[c1], g_i[c2]) = Q[i] · fmᵀ.
    let gm = Matrix::from_rows(vec![vec![g[0][c1].clone(), g[1][c1].clone()], vec![g[0][c2].clone(), g[1][c2].clone()]]);
    let q = fm.inverse().unwrap().mul(&gm).transpose();
    for i in 0..2 {
        for t in 0..8 {
            let mut s = F::zero();
            for k in 0..2 {
                s.add_mul(q.get(i, k), &f[k][t]);
            }
            if s != g[i][t] {
                return Err(Error::Consistency(format!("g{} is not in the span of f₁, f₂", i + 1)));
            }
        }
    }
    let q_inv = q.inverse().ok_or_else(|| Error::Consistency("Q is singular".into()))?;
    // Coordinates of f_k in the stored basis of W_3: values at the pivot words.
    let pivots = &w3.basis(3).pivots;
    let b = Matrix::from_fn(pivots.len(), 2, |l, k| f[k][pivots[l]].clone());
    let bt_inv = b.transpose().inverse().ok_or_else(|| Error::Consistency("f₁, f₂ do not form a basis of R".into()))?;
    let nu_two_f = b.transpose().mul(&data.nu[2]).mul(&bt_inv);
    let pairing_f = data.pairings[1].mul(&bt_inv);
    Ok(CubicQ {
        nu_one_matches: data.nu[1] == q_inv.transpose(),
        nu_two_matches: nu_two_f == q,
        phi_one_matches: data.phi_one() == q_inv,
        pairing_is_identity: pairing_f.is_identity(),
        type_a_proxy: data.symmetry == super::frobenius::SymmetryClass::Symmetric,
        left_factors: f,
        q,
    })
}
