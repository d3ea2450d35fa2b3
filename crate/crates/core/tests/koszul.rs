mod common;

use common::relations_of;
use nkoszul::algebra::{manin_product, presets, GradedAlgebra, ManinKind, Presentation};
use nkoszul::koszul::bar::bar_tor_dims;
use nkoszul::koszul::one_sided::n_differential_check;
use nkoszul::koszul::{global_dimension, jump, koszulity_verdict, GlobalDimension, KoszulStatus, WSpaces};
use nkoszul::Rational as Q;

fn setup(p: &Presentation<Q>, j: usize) -> (GradedAlgebra<Q>, WSpaces<Q>) {
    (GradedAlgebra::new(p.clone(), j).unwrap(), WSpaces::new(p, j).unwrap())
}

fn monomial_pair() -> (Presentation<Q>, Presentation<Q>) {
    (presets::monomial_cubic_x1("").unwrap(), presets::monomial_cubic_x1("'").unwrap())
}

#[test]
fn koszul_euler_identity_on_oracle_dimensions() {
    // For a Koszul algebra Σ_i (−1)^i dim A_(j−n(i)) dim W_(n(i)) = 0 for every j ≥ 1.
    let cases = [presets::polynomial::<Q>(2).unwrap(), presets::chain_quadric(3).unwrap(), presets::antisymmetrizer(3, 4).unwrap()];
    for p in cases {
        let rel = relations_of(&p);
        let (a, w) = (rel.hilbert(6), rel.dual().hilbert(6));
        for j in 1..=6 {
            let mut sum = 0i64;
            for i in 0.. {
                let n = jump(i, p.degree());
                if n > j {
                    break;
                }
                let term = (a[j - n] * w[n]) as i64;
                sum += if i % 2 == 0 { term } else { -term };
            }
            assert_eq!(sum, 0, "j = {j}");
        }
        let (view, ws) = setup(&p, 6);
        assert!(koszulity_verdict(&view, &ws, 6).unwrap().is_positive());
    }
}

#[test]
fn verdict_agrees_with_bar_oracle() {
    let cases = [
        (presets::polynomial::<Q>(2).unwrap(), true),
        (presets::chain_quadric(3).unwrap(), true),
        (presets::free(2, 3).unwrap(), true),
        (manin_product(&monomial_pair().0, &monomial_pair().1, ManinKind::Circle).unwrap(), false),
    ];
    for (p, koszul) in cases {
        let (view, w) = setup(&p, 6);
        let verdict = koszulity_verdict(&view, &w, 6).unwrap();
        assert_eq!(verdict.is_positive(), koszul);
        let tor = bar_tor_dims(&view, 3, 6).unwrap();
        let concentrated = tor.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, &h)| h == if j == jump(i, p.degree()) { w.dim(j) } else { 0 })
        });
        assert_eq!(concentrated, koszul);
        assert_eq!(tor[0][0], 1);
        assert_eq!(tor[1][1], p.dim_v());
        assert_eq!(tor[2][p.degree()], p.relations().dim());
    }
}

#[test]
fn circle_product_of_monomial_cubics_is_not_koszul() {
    let (a, b) = monomial_pair();
    let p = manin_product(&a, &b, ManinKind::Circle).unwrap();
    // R⊗V'^3 + V^3⊗R' with one-dimensional R, R' in eight-dimensional cubes: 8 + 8 − 1.
    assert_eq!(p.relations().dim(), 15);
    let (view, w) = setup(&p, 6);
    match koszulity_verdict(&view, &w, 6).unwrap().status {
        KoszulStatus::NotKoszul { i, j, dim } => {
            assert_eq!((i, j, dim), (2, 5, 8));
        }
        other => panic!("expected a witness, got {other:?}"),
    }
}

#[test]
fn bullet_product_of_monomial_cubics_is_koszul_with_unbounded_dimension() {
    let (a, b) = monomial_pair();
    let p = manin_product(&a, &b, ManinKind::Bullet).unwrap();
    assert_eq!(p.relations().dim(), 1);
    let (view, w) = setup(&p, 8);
    assert!(koszulity_verdict(&view, &w, 8).unwrap().is_positive());
    assert!(matches!(global_dimension(&w), GlobalDimension::AtLeast(_)));
}

#[test]
fn n_complex_identities_hold() {
    let cases = [presets::polynomial::<Q>(2).unwrap(), presets::free(2, 3).unwrap(), presets::antisymmetrizer(3, 4).unwrap(), presets::monomial_cubic_x1("").unwrap()];
    for p in cases {
        let (view, w) = setup(&p, 6);
        let c = n_differential_check(&view, &w, 6).unwrap();
        assert!(c.nth_power_vanishes && c.grouped_composites_vanish);
        assert_eq!(c.square_nonzero_somewhere, p.degree() > 2, "d² ≠ 0 is expected exactly when N > 2");
    }
}

#[test]
fn global_dimensions() {
    let cases: [(Presentation<Q>, usize); 4] = [
        (presets::polynomial(3).unwrap(), 3),
        (presets::chain_quadric(3).unwrap(), 2),
        (presets::antisymmetrizer(3, 4).unwrap(), 3),
        (presets::free(2, 3).unwrap(), 1),
    ];
    for (p, d) in cases {
        let w = WSpaces::new(&p, 7).unwrap();
        assert_eq!(global_dimension(&w), GlobalDimension::Exact(d));
    }
}
