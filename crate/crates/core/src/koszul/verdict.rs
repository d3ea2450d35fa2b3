//! Two-tier Koszulity decision: exact certificate or truncated exactness with witness.

use super::checks::{confluence_check, extra_condition, Confluence, ExtraCondition};
use super::one_sided::koszul_slice;
use super::wspaces::WSpaces;
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KoszulStatus {
    Certified,
    UpTo(usize),
    NotKoszul { i: usize, j: usize, dim: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KoszulMethod {
    ConfluenceExtra,
    TruncatedExactness,
    BarOracle,
}

#[derive(Clone, Debug)]
pub struct SliceSummary {
    pub j: usize,
    pub dims: Vec<usize>,
    pub homology: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct KoszulVerdict {
    pub status: KoszulStatus,
    pub method: KoszulMethod,
    pub confluence: Confluence,
    pub extra: ExtraCondition,
    pub slices: Vec<SliceSummary>,
}

impl KoszulVerdict {
    pub fn is_positive(&self) -> bool {
        !matches!(self.status, KoszulStatus::NotKoszul { .. })
    }
}

/// Homology of the Koszul complex slices j = 0..=max_j.
pub fn koszul_homology<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, max_j: usize) -> Result<Vec<SliceSummary>> {
    (0..=max_j)
        .map(|j| {
            let s = koszul_slice(view, w, j)?;
            Ok(SliceSummary { j, homology: s.homology(), dims: s.dims })
        })
        .collect()
}

/// First nonzero homology outside (i, j) = (0, 0).
pub fn first_defect(slices: &[SliceSummary]) -> Option<(usize, usize, usize)> {
    for s in slices {
        for (i, &h) in s.homology.iter().enumerate() {
            if h != 0 && !(i == 0 && s.j == 0) {
                return Some((i, s.j, h));
            }
        }
    }
    None
}

pub fn koszulity_verdict<F: Field>(view: &GradedAlgebra<F>, w: &WSpaces<F>, max_j: usize) -> Result<KoszulVerdict> {
    let pres = view.presentation();
    let confluence = confluence_check(pres);
    let extra = extra_condition(pres, w)?;
    let slices = koszul_homology(view, w, max_j)?;
    let defect = first_defect(&slices);
    let certified = confluence.confluent && extra.holds;
    let (status, method) = match (certified, defect) {
        (true, None) => (KoszulStatus::Certified, KoszulMethod::ConfluenceExtra),
        (true, Some((i, j, dim))) => {
            return Err(Error::Consistency(format!("certified Koszul algebra has homology {dim} at (i={i}, j={j})")));
        }
        (false, Some((i, j, dim))) => (KoszulStatus::NotKoszul { i, j, dim }, KoszulMethod::TruncatedExactness),
        (false, None) => (KoszulStatus::UpTo(max_j), KoszulMethod::TruncatedExactness),
    };
    Ok(KoszulVerdict { status, method, confluence, extra, slices })
}
