use nkoszul::algebra::{dual_algebra, presets, GradedAlgebra, Presentation};
use nkoszul::koszul::WSpaces;
use nkoszul::linalg::{Matrix, SparseVec};
use nkoszul::yoneda::{dual_product, koszul_quillen_pairing, YonedaAlgebra};
use nkoszul::{Field, Rational as Q};

fn column(m: &Matrix<Q>, k: usize) -> SparseVec<Q> {
    m.column(k).into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

fn cases() -> Vec<Presentation<Q>> {
    vec![presets::polynomial(3).unwrap(), presets::chain_quadric(3).unwrap(), presets::antisymmetrizer(3, 4).unwrap(), presets::free(2, 3).unwrap()]
}

#[test]
fn restriction_to_w_is_an_algebra_isomorphism() {
    for p in cases() {
        let top = 4;
        let w = WSpaces::new(&p, top).unwrap();
        let dual = GradedAlgebra::new(dual_algebra(&p).unwrap(), top).unwrap();
        let pairing: Vec<Matrix<Q>> = (0..=top).map(|m| koszul_quillen_pairing(&p, &w, m).unwrap()).collect();
        for (m, mat) in pairing.iter().enumerate() {
            assert!(mat.is_square() && mat.rank() == mat.nrows(), "degree {m}");
        }
        for m in 1..top {
            for n in 1..=top - m {
                let (wm, wn) = (dual.basis_words(m).unwrap(), dual.basis_words(n).unwrap());
                for (ka, &u) in wm.iter().enumerate() {
                    for (kb, &v) in wn.iter().enumerate() {
                        let nf = dual.mul_words(u, m, v, n).unwrap();
                        let coords: Vec<Q> = {
                            let mut c = vec![Q::zero(); dual.dim(m + n).unwrap()];
                            for (code, x) in nf.iter() {
                                c[dual.position(m + n, *code).unwrap()] = x.clone();
                            }
                            c
                        };
                        let image: SparseVec<Q> = pairing[m + n].apply(&coords).into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                        let product = dual_product(&w, m, &column(&pairing[m], ka), n, &column(&pairing[n], kb)).unwrap();
                        assert_eq!(image, product, "degrees {m}, {n}");
                    }
                }
            }
        }
    }
}

#[test]
fn odd_products_vanish_for_cubic_relations() {
    let p = presets::antisymmetrizer::<Q>(3, 4).unwrap();
    let w = WSpaces::new(&p, 6).unwrap();
    let y = YonedaAlgebra::new(w.clone());
    let mut dual_nonzero = false;
    for a in 0..4 {
        for b in 0..4 {
            assert!(y.basis_product(1, a, 1, b).unwrap().is_empty());
            dual_nonzero |= !dual_product(&w, 1, &[(a, Q::one())], 1, &[(b, Q::one())]).unwrap().is_empty();
        }
    }
    assert!(dual_nonzero);
    assert!(y.check_associative().unwrap());
    assert!(y.signs_trivial_on_nonzero_products().unwrap());
}

#[test]
fn quadratic_yoneda_algebra_is_graded_commutative_exterior() {
    // E(k[x,y,z]) is the exterior algebra: f•g = (−1)^(ij) g•f, and generators square to zero.
    let y = YonedaAlgebra::from_presentation(&presets::polynomial::<Q>(3).unwrap(), 4).unwrap();
    assert_eq!((0..=3).map(|i| y.dim(i).unwrap()).collect::<Vec<_>>(), vec![1, 3, 3, 1]);
    for a in 0..3 {
        assert!(y.basis_product(1, a, 1, a).unwrap().is_empty());
        for b in 0..3 {
            let ab = y.basis_product(1, a, 1, b).unwrap();
            let ba: SparseVec<Q> = y.basis_product(1, b, 1, a).unwrap().into_iter().map(|(k, x)| (k, x.neg())).collect();
            assert_eq!(ab, ba);
        }
    }
    assert!(y.check_associative().unwrap());
}

#[test]
fn associativity_across_fixtures() {
    for p in cases() {
        assert!(YonedaAlgebra::from_presentation(&p, 6).unwrap().check_associative().unwrap());
    }
}
