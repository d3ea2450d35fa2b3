//! Dimension-table form of `HH^i(A,M) ≅ HH_{D−i}(A, _θM)`, θ = `ε^{D+1}φ`, for M = A.
//!
//! `HH^i` is graded by cochain degree s (`f: W_n → A_{s+n}`), `HH_*` by total degree j (`m ⊗ w`, `deg m + n`).
//! The comparison is `HH^i_s ↔ HH_{D−i, s+shift}` with one global shift.

use super::coefficients::{hh_cohomology_dims, hh_homology_dims, TwistedBimodule};
use crate::algebra::{GradedAlgebra, GradedMap};
use crate::error::Result;
use crate::field::Field;
use crate::koszul::WSpaces;

/// Orientation of the internal shift, fixed once by calibration on the polynomial algebra in two variables:
/// cochain degree s matches total chain degree `s + n(D)`.
pub const SHIFT_ORIENTATION: i64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRow {
    pub i: usize,
    pub s: i64,
    pub cohomology: usize,
    pub homology: usize,
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub global_dimension: usize,
    pub shift: i64,
    pub rows: Vec<DualityRow>,
    pub all_match: bool,
}

pub struct DualityTables {
    /// `(s, HH^*(A,A)_s)`.
    pub cohomology: Vec<(i64, Vec<usize>)>,
    /// `(j, HH_*(A, M)_j)`.
    pub homology: Vec<(usize, Vec<usize>)>,
}

pub fn duality_tables<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, twist: &GradedMap<F>, top_degree: usize, s_max: i64) -> Result<DualityTables> {
    let regular = TwistedBimodule::regular(view)?;
    let twisted = TwistedBimodule::left_twisted(view, twist.clone())?;
    let cohomology = hh_cohomology_dims(view, w, &regular, -(top_degree as i64), s_max)?;
    let homology = hh_homology_dims(view, w, &twisted, 0, (s_max + top_degree as i64).max(0) as usize)?;
    Ok(DualityTables { cohomology, homology })
}

fn compare(tables: &DualityTables, d: usize, shift: i64) -> (Vec<DualityRow>, bool) {
    let mut rows = Vec::new();
    let mut ok = true;
    for (s, coh) in &tables.cohomology {
        for i in 0..=d {
            let j = s + shift;
            let hom = if j < 0 {
                Some(0)
            } else {
                tables.homology.iter().find(|(jj, _)| *jj as i64 == j).map(|(_, h)| h.get(d - i).copied().unwrap_or(0))
            };
            let Some(hom) = hom else { continue };
            let c = coh.get(i).copied().unwrap_or(0);
            ok &= c == hom;
            rows.push(DualityRow { i, s: *s, cohomology: c, homology: hom });
        }
    }
    (rows, ok)
}

/// Smallest |shift| (ties towards positive) under which the tables agree on every compared entry.
pub fn calibrate_shift(tables: &DualityTables, d: usize, top_degree: usize) -> Option<i64> {
    let span = 2 * top_degree as i64 + 2;
    let mut candidates: Vec<i64> = (-span..=span).collect();
    candidates.sort_by_key(|c| (c.abs(), -c));
    candidates.into_iter().find(|&c| {
        let (rows, ok) = compare(tables, d, c);
        ok && rows.iter().any(|r| r.cohomology > 0)
    })
}

pub fn duality_check<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, d: usize, top_degree: usize, twist: &GradedMap<F>, s_max: i64) -> Result<DualityReport> {
    let tables = duality_tables(view, w, twist, top_degree, s_max)?;
    let shift = SHIFT_ORIENTATION * top_degree as i64;
    let (rows, all_match) = compare(&tables, d, shift);
    Ok(DualityReport { global_dimension: d, shift, rows, all_match })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presets;
    use crate::field::Rational as Q;

    #[test]
    fn calibration_on_two_variables() {
        let p = presets::polynomial::<Q>(2).unwrap();
        let a = GradedAlgebra::new(p.clone(), 8).unwrap();
        let w = WSpaces::new(&p, 3).unwrap();
        let id = GradedMap::identity(&a).unwrap();
        let tables = duality_tables(&a, &w, &id, 2, 6).unwrap();
        assert_eq!(calibrate_shift(&tables, 2, 2), Some(SHIFT_ORIENTATION * 2));
        let rep = duality_check(&a, &w, 2, 2, &id, 6).unwrap();
        assert!(rep.all_match);
    }
}
