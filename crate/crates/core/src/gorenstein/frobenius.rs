//! The Frobenius pairing on `E(A)`, its Nakayama-type automorphism ν, the dual automorphism φ of A,
//! and the twist `ε^{D+1}φ`.

use super::criterion::GorensteinCertificate;
use crate::algebra::automorphism::tensor_power_apply;
use crate::algebra::{GradedAlgebra, GradedMap, Presentation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{concat, get, Echelon, Matrix, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryClass {
    Symmetric,
    GradedSymmetric,
    Neither,
}

impl SymmetryClass {
    pub fn label(self) -> &'static str {
        match self {
            SymmetryClass::Symmetric => "symmetric",
            SymmetryClass::GradedSymmetric => "graded_symmetric",
            SymmetryClass::Neither => "neither",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FrobeniusData<F> {
    pub global_dimension: usize,
    /// `pairings[i][a][b] = (e_a, e_b)` for `e_a ∈ E(A)_i`, `e_b ∈ E(A)_{D−i}`.
    pub pairings: Vec<Matrix<F>>,
    /// `nu[i]` has the coordinates of `ν(e_a)` in column a.
    pub nu: Vec<Matrix<F>>,
    pub symmetry: SymmetryClass,
    pub nu_multiplicative: bool,
    /// `E(A)` is generated by `E(A)_1` and `E(A)_2`, so ν is determined by `ν₁`, `ν₂`.
    pub generated_in_low_degrees: bool,
    /// `ν₁^{⊗N}(R^⊥) ⊆ R^⊥`.
    pub preserves_dual_relations: bool,
    /// The pairing read from w agrees with `⟨x • y, u*⟩`.
    pub pairing_matches_product: bool,
}

impl<F: Field> FrobeniusData<F> {
    pub fn nu_one(&self) -> &Matrix<F> {
        &self.nu[1]
    }
    /// Matrix of `φ₁` on V (column j = image of `x_j`): the transpose of `ν₁`.
    pub fn phi_one(&self) -> Matrix<F> {
        self.nu[1].transpose()
    }
}

fn require_verdict<F: Field>(cert: &GorensteinCertificate<F>) -> Result<(usize, &SparseVec<F>)> {
    match (cert.verdict, cert.global_dimension, &cert.w) {
        (true, Some(d), Some(w)) => Ok((d, w)),
        _ => Err(Error::Precondition("Frobenius data needs a positive Gorenstein verdict".into())),
    }
}

/// `(x, y) = (−1)^{i(D−i)} ⟨f⊗g, w⟩` for forms f on `V^{⊗n(i)}`, g on `V^{⊗n(D−i)}` representing x and y.
pub fn pairing_of_forms<F: Field>(cert: &GorensteinCertificate<F>, i: usize, f: &[(usize, F)], g: &[(usize, F)]) -> Result<F> {
    let (d, w) = require_verdict(cert)?;
    if i > d {
        return Ok(F::zero());
    }
    let y = &cert.yoneda;
    let mj = y.degree_of(d - i);
    let alphabet = y.w_spaces().alphabet();
    let mut s = F::zero();
    for (a, x) in f {
        for (b, z) in g {
            if let Some(c) = get(w, concat(alphabet, *a, *b, mj)) {
                s.add_mul(&x.mul(z), c);
            }
        }
    }
    Ok(s.mul(&F::sign(i * (d - i))))
}

/// Pairing of basis elements of `E(A)_i` and `E(A)_j` (zero unless i + j = D).
pub fn frobenius_pairing<F: Field>(cert: &GorensteinCertificate<F>, i: usize, a: usize, j: usize, b: usize) -> Result<F> {
    let (d, _) = require_verdict(cert)?;
    if i + j != d {
        return Ok(F::zero());
    }
    let y = &cert.yoneda;
    let qa = y.component_words(i)?[a];
    let qb = y.component_words(j)?[b];
    pairing_of_forms(cert, i, &[(qa, F::one())], &[(qb, F::one())])
}

fn coords<F: Field>(v: &[(usize, F)], dim: usize) -> Vec<F> {
    let mut out = vec![F::zero(); dim];
    for (k, x) in v {
        out[*k] = x.clone();
    }
    out
}

fn apply<F: Field>(m: &Matrix<F>, v: &[(usize, F)]) -> SparseVec<F> {
    let dense = m.apply(&coords(v, m.ncols()));
    dense.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

/// ν solved per component: `ν_i = P_{D−i}^{−1} P_iᵀ`, from `(x, y) = (y, ν(x))`.
pub fn nu_automorphism<F: Field>(pres: &Presentation<F>, cert: &GorensteinCertificate<F>) -> Result<FrobeniusData<F>> {
    let (d, _) = require_verdict(cert)?;
    let y = &cert.yoneda;
    let mut pairings = Vec::new();
    let mut pairing_matches_product = true;
    for i in 0..=d {
        let (r, c) = (y.dim(i)?, y.dim(d - i)?);
        let mut m = Matrix::zero(r, c);
        for a in 0..r {
            for b in 0..c {
                let v = frobenius_pairing(cert, i, a, d - i, b)?;
                let via_product = y.basis_product(i, a, d - i, b)?.first().map_or_else(F::zero, |(_, x)| x.clone());
                if via_product != v {
                    pairing_matches_product = false;
                }
                m.set(a, b, v);
            }
        }
        pairings.push(m);
    }
    let mut nu = Vec::new();
    for i in 0..=d {
        let inv = pairings[d - i].inverse().ok_or_else(|| Error::Consistency(format!("pairing matrix in degree {} is singular", d - i)))?;
        nu.push(inv.mul(&pairings[i].transpose()));
    }
    let symmetry = if nu.iter().all(|m| m.is_identity()) {
        SymmetryClass::Symmetric
    } else if nu.iter().enumerate().all(|(i, m)| m.is_scalar_multiple_of_identity(&F::sign(i * (d - i)))) {
        SymmetryClass::GradedSymmetric
    } else {
        SymmetryClass::Neither
    };
    let mut nu_multiplicative = true;
    'outer: for i in 0..=d {
        for j in 0..=d - i {
            for a in 0..y.dim(i)? {
                for b in 0..y.dim(j)? {
                    let lhs = apply(&nu[i + j], &y.basis_product(i, a, j, b)?);
                    let na = apply(&nu[i], &[(a, F::one())]);
                    let nb = apply(&nu[j], &[(b, F::one())]);
                    if lhs != y.product(i, &na, j, &nb)? {
                        nu_multiplicative = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    let mut generated_in_low_degrees = true;
    for k in 3..=d {
        let mut span = Echelon::new();
        for (lo, hi) in [(1, k - 1), (2, k - 2)] {
            for a in 0..y.dim(lo)? {
                for b in 0..y.dim(hi)? {
                    span.insert(y.basis_product(lo, a, hi, b)?);
                }
            }
        }
        if span.rank() != y.dim(k)? {
            generated_in_low_degrees = false;
        }
    }
    let big_n = pres.degree();
    let dual_rel = pres.relations().annihilator();
    let preserves_dual_relations = dual_rel.rows().iter().all(|r| dual_rel.contains_vector(&tensor_power_apply(&nu[1], big_n, r)));
    Ok(FrobeniusData {
        global_dimension: d,
        pairings,
        nu,
        symmetry,
        nu_multiplicative,
        generated_in_low_degrees,
        preserves_dual_relations,
        pairing_matches_product,
    })
}

/// `φ = Tens(ν₁ᵀ)` on A; its R-preservation gate is the dual form of `ν₁^{⊗N}(R^⊥) ⊆ R^⊥`.
pub fn phi_automorphism<F: Field>(view: &GradedAlgebra<F>, data: &FrobeniusData<F>) -> Result<GradedMap<F>> {
    GradedMap::from_degree_one(view, data.phi_one()).map_err(|e| match e {
        Error::NotAutomorphism(m) => Error::Consistency(format!("transpose of ν₁ does not extend: {m}")),
        other => other,
    })
}

#[derive(Clone, Debug)]
pub struct TwistVerdict<F> {
    /// `ν₁ = (−1)^{D+1}·id`, i.e. `ε^{D+1}φ = 1_A`.
    pub trivial: bool,
    pub phi: GradedMap<F>,
    /// `ε^{D+1}φ`.
    pub composite: GradedMap<F>,
    pub composite_is_epsilon: bool,
    pub composite_is_identity: bool,
}

pub fn twist_verdict<F: Field>(view: &GradedAlgebra<F>, data: &FrobeniusData<F>) -> Result<TwistVerdict<F>> {
    let d = data.global_dimension;
    let trivial = data.nu_one().is_scalar_multiple_of_identity(&F::sign(d + 1));
    let phi = phi_automorphism(view, data)?;
    let composite = if (d + 1) % 2 == 1 { GradedMap::epsilon(view)?.compose(view, &phi)? } else { phi.clone() };
    let eps = GradedMap::epsilon(view)?;
    Ok(TwistVerdict {
        trivial,
        composite_is_identity: composite.is_identity(view)?,
        composite_is_epsilon: composite == eps,
        phi,
        composite,
    })
}

/// `E(A) → E(A)*(−D)` assembled from `φ_m = (−1)^{m(D−m)} Φ̄_{n(D−m)}` is a left `E(A)`-module map:
/// `φ(f•g)(x) = φ(g)(x•f)` on all basis triples.
pub fn frobenius_ea_check<F: Field>(cert: &GorensteinCertificate<F>) -> Result<bool> {
    let (d, _) = require_verdict(cert)?;
    let y = &cert.yoneda;
    // phi[m] has rows E_{D−m}, columns E_m.
    let phi: Vec<Matrix<F>> = (0..=d).map(|m| cert.phi_bar[d - m].scale(&F::sign(m * (d - m)))).collect();
    let eval = |m: usize, x: usize, v: &[(usize, F)]| -> F {
        let mut s = F::zero();
        for (c, z) in v {
            s.add_mul(z, phi[m].get(x, *c));
        }
        s
    };
    for i in 0..=d {
        for j in 0..=d - i {
            for f in 0..y.dim(i)? {
                for g in 0..y.dim(j)? {
                    let fg = y.basis_product(i, f, j, g)?;
                    for x in 0..y.dim(d - i - j)? {
                        let lhs = eval(i + j, x, &fg);
                        let xf = y.basis_product(d - i - j, x, i, f)?;
                        let mut rhs = F::zero();
                        for (c, z) in &xf {
                            rhs.add_mul(z, phi[j].get(*c, g));
                        }
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::criterion::gorenstein_verdict;
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;
    use crate::yoneda::YonedaAlgebra;

    #[test]
    fn polynomial_nu_is_minus_one_in_degree_one() {
        let p = presets::polynomial::<Q>(2).unwrap();
        let cert = gorenstein_verdict(YonedaAlgebra::from_presentation(&p, 3).unwrap()).unwrap();
        let data = nu_automorphism(&p, &cert).unwrap();
        assert!(data.nu_one().is_scalar_multiple_of_identity(&Q::from_i64(-1)));
        assert_eq!(data.symmetry, SymmetryClass::GradedSymmetric);
        assert!(data.nu_multiplicative && data.pairing_matches_product && data.preserves_dual_relations);
        let view = GradedAlgebra::new(p, 5).unwrap();
        let t = twist_verdict(&view, &data).unwrap();
        assert!(t.trivial && t.composite_is_identity);
        assert_eq!(t.phi, GradedMap::epsilon(&view).unwrap());
        assert!(frobenius_ea_check(&cert).unwrap());
    }

    #[test]
    fn antisymmetrizer_three_four() {
        let p = presets::antisymmetrizer::<Q>(3, 4).unwrap();
        let cert = gorenstein_verdict(YonedaAlgebra::from_presentation(&p, 5).unwrap()).unwrap();
        let data = nu_automorphism(&p, &cert).unwrap();
        let signs = [1, -1, -1, 1];
        for (i, s) in signs.iter().enumerate() {
            assert!(data.nu[i].is_scalar_multiple_of_identity(&Q::from_i64(*s)), "i = {i}");
        }
        assert_eq!(data.symmetry, SymmetryClass::Neither);
        assert!(data.nu_multiplicative && data.generated_in_low_degrees);
        let view = GradedAlgebra::new(p, 4).unwrap();
        let t = twist_verdict(&view, &data).unwrap();
        assert!(!t.trivial && t.composite_is_epsilon);
        assert!(frobenius_ea_check(&cert).unwrap());
    }
}
