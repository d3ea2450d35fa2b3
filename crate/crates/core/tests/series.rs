mod common;

use common::{antisymmetrizer_relations, relations_of, Relations};
use nkoszul::algebra::{dual_algebra, presets, GradedAlgebra, Presentation};
use nkoszul::koszul::WSpaces;
use nkoszul::Rational as Q;

fn library_hilbert(p: &Presentation<Q>, up_to: usize) -> Vec<usize> {
    GradedAlgebra::new(p.clone(), up_to).unwrap().hilbert(up_to).unwrap()
}

fn fixtures() -> Vec<(&'static str, Presentation<Q>, usize)> {
    vec![
        ("polynomial(2)", presets::polynomial(2).unwrap(), 8),
        ("polynomial(3)", presets::polynomial(3).unwrap(), 6),
        ("chain_quadric(3)", presets::chain_quadric(3).unwrap(), 6),
        ("antisymmetrizer(3,4)", presets::antisymmetrizer(3, 4).unwrap(), 5),
        ("free(2) cubic", presets::free(2, 3).unwrap(), 7),
        ("monomial cubic", presets::monomial_cubic_x1("").unwrap(), 7),
    ]
}

#[test]
fn hilbert_series_against_dense_oracle() {
    for (name, p, up_to) in fixtures() {
        assert_eq!(library_hilbert(&p, up_to), relations_of(&p).hilbert(up_to), "{name}");
    }
}

#[test]
fn w_dimensions_are_dual_hilbert_series() {
    for (name, p, up_to) in fixtures() {
        let w = WSpaces::new(&p, up_to).unwrap();
        let dims: Vec<usize> = (0..=up_to).map(|n| w.dim(n)).collect();
        assert_eq!(dims, relations_of(&p).dual().hilbert(up_to), "{name}");
        assert_eq!(dims, library_hilbert(&dual_algebra(&p).unwrap(), up_to), "{name}");
    }
}

#[test]
fn chain_quadric_series_follows_recurrence() {
    let h = library_hilbert(&presets::chain_quadric(3).unwrap(), 8);
    assert_eq!(h, vec![1, 3, 8, 21, 55, 144, 377, 987, 2584]);
    for m in 2..h.len() {
        assert_eq!(h[m], 3 * h[m - 1] - h[m - 2]);
    }
}

#[test]
fn antisymmetrizer_preset_spans_signed_sums() {
    for (degree, n) in [(2, 3), (3, 4), (3, 5), (4, 5)] {
        let p = presets::antisymmetrizer::<Q>(degree, n).unwrap();
        let ours = relations_of(&p);
        let oracle = antisymmetrizer_relations(degree, n);
        let both = Relations { alphabet: n, degree, rows: ours.rows.iter().chain(&oracle.rows).cloned().collect() };
        let r = common::rank(ours.rows.clone());
        assert_eq!(r, common::rank(oracle.rows.clone()));
        assert_eq!(r, common::rank(both.rows));
    }
}

#[test]
fn polynomial_series_is_binomial() {
    let h = library_hilbert(&presets::polynomial(3).unwrap(), 7);
    let expected: Vec<usize> = (0..=7).map(|m| (m + 1) * (m + 2) / 2).collect();
    assert_eq!(h, expected);
}
