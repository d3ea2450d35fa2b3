//! Exact structural checks on R: extra condition, confluence, distributivity, global dimension.

use std::collections::HashMap;

use super::wspaces::{jump, WSpaces};
use crate::algebra::rewriting::RewritingSystem;
use crate::algebra::Presentation;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtraCondition {
    pub holds: bool,
    pub failing_m: Option<usize>,
}

/// `(V^{⊗m}⊗R) ∩ (R⊗V^{⊗m}) = W_{N+m}` for m = 1..N−1.
pub fn extra_condition<F: Field>(pres: &Presentation<F>, w: &WSpaces<F>) -> Result<ExtraCondition> {
    let big_n = pres.degree();
    for m in 1..big_n {
        let lhs = pres.relations().embed(m, 0)?.intersect(&pres.relations().embed(0, m)?)?;
        let target = if big_n + m <= w.computed_up_to() { w.space(big_n + m).clone() } else { super::wspaces::w_space_by_definition(pres, big_n + m)? };
        if !lhs.equals(&target)? {
            return Ok(ExtraCondition { holds: false, failing_m: Some(m) });
        }
    }
    Ok(ExtraCondition { holds: true, failing_m: None })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Confluence {
    pub confluent: bool,
    pub ambiguities_checked: usize,
    /// Overlap word (code, length) whose two rewrites do not reduce to a common form.
    pub witness: Option<(usize, usize)>,
}

/// All overlap ambiguities of the reduced rewriting system of R (deglex order) resolve.
pub fn confluence_check<F: Field>(pres: &Presentation<F>) -> Confluence {
    let big_n = pres.degree();
    let rels = pres.relations().rows().to_vec();
    let sys = RewritingSystem::from_relations(pres.dim_v(), big_n, &rels);
    let mut checked = 0;
    for len in big_n + 1..2 * big_n {
        for amb in sys.ambiguities_of_length(len) {
            checked += 1;
            let s = sys.s_polynomial(&amb);
            if !sys.reduce(len, &s).is_empty() {
                return Confluence { confluent: false, ambiguities_checked: checked, witness: Some((amb.word, len)) };
            }
        }
    }
    Confluence { confluent: true, ambiguities_checked: checked, witness: None }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distributivity {
    Distributive { lattice_size: usize },
    /// Indices into the closure of a triple violating `x∧(y∨z) = (x∧y)∨(x∧z)`.
    Violation { lattice_size: usize, triple: (usize, usize, usize) },
    BudgetExceeded { budget: usize },
}

/// Closes `{V^{⊗i}⊗R⊗V^{⊗j} : i+j+N = n}` under ∩ and + and checks the distributive law on all triples.
pub fn distributivity_check<F: Field>(pres: &Presentation<F>, n: usize, budget: usize) -> Result<Distributivity> {
    let big_n = pres.degree();
    assert!(n >= big_n);
    let mut elems: Vec<Subspace<F>> = Vec::new();
    let mut index: HashMap<Vec<crate::linalg::SparseVec<F>>, usize> = HashMap::new();
    let mut add = |s: Subspace<F>, elems: &mut Vec<Subspace<F>>| -> usize {
        if let Some(&k) = index.get(s.rows()) {
            return k;
        }
        index.insert(s.rows().to_vec(), elems.len());
        elems.push(s);
        elems.len() - 1
    };
    for i in 0..=n - big_n {
        let s = pres.relations().embed(i, n - big_n - i)?;
        add(s, &mut elems);
    }
    // meet/join tables grow with the closure.
    let mut meet: Vec<Vec<usize>> = Vec::new();
    let mut join: Vec<Vec<usize>> = Vec::new();
    let mut done = 0;
    while done < elems.len() {
        let k = done;
        meet.push(Vec::new());
        join.push(Vec::new());
        for other in 0..=k {
            let m = elems[k].intersect(&elems[other])?;
            let j = elems[k].sum(&elems[other])?;
            let mi = add(m, &mut elems);
            let ji = add(j, &mut elems);
            meet[k].push(mi);
            join[k].push(ji);
            if elems.len() > budget {
                return Ok(Distributivity::BudgetExceeded { budget });
            }
        }
        done += 1;
    }
    let op = |t: &Vec<Vec<usize>>, a: usize, b: usize| if a >= b { t[a][b] } else { t[b][a] };
    let size = elems.len();
    for x in 0..size {
        for y in 0..size {
            for z in y..size {
                let lhs = op(&meet, x, op(&join, y, z));
                let rhs = op(&join, op(&meet, x, y), op(&meet, x, z));
                if lhs != rhs {
                    return Ok(Distributivity::Violation { lattice_size: size, triple: (x, y, z) });
                }
            }
        }
    }
    Ok(Distributivity::Distributive { lattice_size: size })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    Exact(usize),
    /// No vanishing `W_m` found up to the computed degree.
    AtLeast(usize),
}

/// `sup {i : W_{n(i)} ≠ 0}` using monotone vanishing of the W spaces.
pub fn global_dimension<F: Field>(w: &WSpaces<F>) -> GlobalDimension {
    let big_n = w.relation_degree();
    match w.first_vanishing() {
        Some(m) => {
            let mut i = 0;
            while jump(i + 1, big_n) < m {
                i += 1;
            }
            GlobalDimension::Exact(i)
        }
        None => {
            let mut i = 0;
            while jump(i + 1, big_n) <= w.computed_up_to() {
                i += 1;
            }
            GlobalDimension::AtLeast(i)
        }
    }
}
