//! The dual algebra `A^!` and the Manin products `∘`, `•`.

use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{encode, letters, pow, SparseVec};

/// Generators `x*` on `V*`, relations `R^⊥` (forms paired letter by letter).
pub fn dual_algebra<F: Field>(p: &Presentation<F>) -> Result<Presentation<F>> {
    let names = p.generators().iter().map(|g| format!("{g}*")).collect();
    Presentation::new(names, p.degree(), p.relations().annihilator().rows().to_vec())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ManinKind {
    Circle,
    Bullet,
}

/// Sends `(v₁…v_N, v'₁…v'_N)` to `(v₁v'₁, …, v_Nv'_N)` in the alphabet of pairs.
fn interleave(d: usize, d2: usize, n: usize, w: usize, w2: usize) -> usize {
    let a = letters(d, w, n);
    let b = letters(d2, w2, n);
    let pairs: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x * d2 + y).collect();
    encode(d * d2, &pairs)
}

pub fn manin_product<F: Field>(p: &Presentation<F>, q: &Presentation<F>, kind: ManinKind) -> Result<Presentation<F>> {
    let n = p.degree();
    if q.degree() != n {
        return Err(Error::InvalidParams(format!("Manin product needs equal degrees, got {} and {}", n, q.degree())));
    }
    let (d, d2) = (p.dim_v(), q.dim_v());
    let mut names = Vec::with_capacity(d * d2);
    for a in p.generators() {
        for b in q.generators() {
            names.push(format!("{a}⊗{b}"));
        }
    }
    let mut rels: Vec<SparseVec<F>> = Vec::new();
    let combine = |r: &[(usize, F)], s: &[(usize, F)]| {
        let mut entries = Vec::with_capacity(r.len() * s.len());
        for (w, x) in r {
            for (w2, y) in s {
                entries.push((interleave(d, d2, n, *w, *w2), x.mul(y)));
            }
        }
        crate::linalg::from_entries(entries)
    };
    match kind {
        ManinKind::Bullet => {
            for r in p.relations().rows() {
                for s in q.relations().rows() {
                    rels.push(combine(r, s));
                }
            }
        }
        ManinKind::Circle => {
            for r in p.relations().rows() {
                for w2 in 0..pow(d2, n) {
                    rels.push(combine(r, &[(w2, F::one())]));
                }
            }
            for w in 0..pow(d, n) {
                for s in q.relations().rows() {
                    rels.push(combine(&[(w, F::one())], s));
                }
            }
        }
    }
    Presentation::new(names, n, rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;

    #[test]
    fn commutative_dual_is_exterior_type() {
        let d = dual_algebra(&presets::polynomial::<Q>(2).unwrap()).unwrap();
        assert_eq!(d.relations().dim(), 3);
        assert_eq!(d.generators(), &["x1*".to_string(), "x2*".to_string()]);
    }

    #[test]
    fn monomial_cubic_products() {
        let a = presets::monomial_cubic_x1::<Q>("").unwrap();
        let b = presets::monomial_cubic_x1::<Q>("'").unwrap();
        // x1³⊗V'^3 and V^3⊗x1'³ share the word x1³⊗x1'³.
        assert_eq!(manin_product(&a, &b, ManinKind::Circle).unwrap().relations().dim(), 15);
        assert_eq!(manin_product(&a, &b, ManinKind::Bullet).unwrap().relations().dim(), 1);
        let free = presets::free::<Q>(2, 3).unwrap();
        assert_eq!(manin_product(&a, &free, ManinKind::Bullet).unwrap().relations().dim(), 0);
    }
}
