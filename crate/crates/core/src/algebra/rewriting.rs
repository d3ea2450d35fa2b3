//! Homogeneous rewriting systems for degree-lexicographic order: each rule replaces its
//! leading word by a combination of smaller words of the same length.

use std::collections::{BTreeMap, HashMap};

use crate::field::Field;
use crate::linalg::{factor, pow, rref, split, SparseVec};

#[derive(Clone, Debug)]
pub struct Rule<F> {
    pub len: usize,
    pub lead: usize,
    /// `lead ≡ Σ c·t` modulo the ideal.
    pub replacement: SparseVec<F>,
}

#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub word: usize,
    pub len: usize,
    pub left_rule: usize,
    pub right_rule: usize,
}

#[derive(Clone, Debug)]
pub struct RewritingSystem<F> {
    alphabet: usize,
    rules: Vec<Rule<F>>,
    by_len: BTreeMap<usize, HashMap<usize, usize>>,
}

/// Reduced echelon basis for reversed order, turned into rules `lead → −tail`.
fn rules_from_span<F: Field>(len: usize, dim: usize, vectors: Vec<SparseVec<F>>) -> Vec<Rule<F>> {
    let flipped = vectors.into_iter().map(|v| {
        let mut f: SparseVec<F> = v.into_iter().map(|(i, x)| (dim - 1 - i, x)).collect();
        f.reverse();
        f
    });
    rref(flipped)
        .into_iter()
        .map(|r| {
            let lead = dim - 1 - r[0].0;
            let mut replacement: SparseVec<F> = r[1..].iter().map(|(i, x)| (dim - 1 - i, x.neg())).collect();
            replacement.reverse();
            Rule { len, lead, replacement }
        })
        .collect()
}

impl<F: Field> RewritingSystem<F> {
    /// Rules from a spanning set of homogeneous relations of length `len`.
    pub fn from_relations(alphabet: usize, len: usize, relations: &[SparseVec<F>]) -> Self {
        let mut s = RewritingSystem { alphabet, rules: Vec::new(), by_len: BTreeMap::new() };
        for r in rules_from_span(len, pow(alphabet, len), relations.to_vec()) {
            s.push(r);
        }
        s
    }

    fn push(&mut self, r: Rule<F>) {
        self.by_len.entry(r.len).or_default().insert(r.lead, self.rules.len());
        self.rules.push(r);
    }

    pub fn rules(&self) -> &[Rule<F>] {
        &self.rules
    }

    pub fn max_rule_len(&self) -> usize {
        self.by_len.keys().next_back().copied().unwrap_or(0)
    }

    /// Leftmost occurrence of a leading word: (rule index, start position).
    pub fn find(&self, code: usize, len: usize) -> Option<(usize, usize)> {
        for pos in 0..len {
            for (&l, map) in &self.by_len {
                if pos + l > len {
                    break;
                }
                if let Some(&r) = map.get(&factor(self.alphabet, code, len, pos, l)) {
                    return Some((r, pos));
                }
            }
        }
        None
    }

    /// True if some leading word ends at the last letter (enough for extending normal words).
    pub fn has_lead_suffix(&self, code: usize, len: usize) -> bool {
        self.by_len.iter().any(|(&l, map)| l <= len && map.contains_key(&(code % pow(self.alphabet, l))))
    }

    pub fn is_normal(&self, code: usize, len: usize) -> bool {
        self.find(code, len).is_none()
    }

    /// Full reduction of a homogeneous polynomial of length `len` (keys are word codes).
    /// `known` may supply normal forms of words, given over normal-word codes.
    pub fn reduce_with(&self, len: usize, poly: &[(usize, F)], known: impl Fn(usize) -> Option<std::sync::Arc<SparseVec<F>>>) -> SparseVec<F> {
        let d = self.alphabet;
        let mut work: BTreeMap<usize, F> = poly.iter().cloned().collect();
        let mut out: Vec<(usize, F)> = Vec::new();
        while let Some((w, c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find(w, len) {
                None => out.push((w, c)),
                Some((r, pos)) => {
                    if let Some(nf) = known(w) {
                        out.extend(nf.iter().map(|(t, x)| (*t, x.mul(&c))));
                        continue;
                    }
                    let rule = &self.rules[r];
                    let (left, rest) = split(d, w, len, pos);
                    let right = rest % pow(d, len - pos - rule.len);
                    let lp = pow(d, len - pos);
                    let rp = pow(d, len - pos - rule.len);
                    for (t, x) in &rule.replacement {
                        let word = left * lp + t * rp + right;
                        let e = work.entry(word).or_insert_with(F::zero);
                        e.add_mul(&c, x);
                    }
                }
            }
        }
        crate::linalg::from_entries(out)
    }

    pub fn reduce(&self, len: usize, poly: &[(usize, F)]) -> SparseVec<F> {
        self.reduce_with(len, poly, |_| None)
    }

    /// All overlap ambiguities (proper suffix of one lead = proper prefix of another)
    /// whose overlap word has length `len`.
    pub fn ambiguities_of_length(&self, len: usize) -> Vec<Ambiguity> {
        let d = self.alphabet;
        let mut out = Vec::new();
        for (i, a) in self.rules.iter().enumerate() {
            for (j, b) in self.rules.iter().enumerate() {
                if a.len + b.len <= len {
                    continue;
                }
                let k = a.len + b.len - len;
                if k == 0 || k >= a.len.min(b.len) {
                    continue;
                }
                let a_suffix = a.lead % pow(d, k);
                let b_prefix = b.lead / pow(d, b.len - k);
                if a_suffix == b_prefix {
                    let word = a.lead * pow(d, b.len - k) + b.lead % pow(d, b.len - k);
                    out.push(Ambiguity { word, len, left_rule: i, right_rule: j });
                }
            }
        }
        out.sort_by_key(|a| (a.word, a.left_rule, a.right_rule));
        out
    }

    /// The difference of the two one-step rewrites of an overlap word.
    pub fn s_polynomial(&self, amb: &Ambiguity) -> SparseVec<F> {
        let d = self.alphabet;
        let a = &self.rules[amb.left_rule];
        let b = &self.rules[amb.right_rule];
        let tail_len = amb.len - a.len;
        let tail = amb.word % pow(d, tail_len);
        let head = amb.word / pow(d, b.len);
        let mut entries = Vec::new();
        for (t, x) in &a.replacement {
            entries.push((t * pow(d, tail_len) + tail, x.clone()));
        }
        for (t, x) in &b.replacement {
            entries.push((head * pow(d, b.len) + t, x.neg()));
        }
        crate::linalg::from_entries(entries)
    }

    /// Adds all reduced overlap consequences in length `len` (one truncated completion step).
    /// Returns the number of new rules.
    pub fn complete_degree(&mut self, len: usize) -> usize {
        let ambs = self.ambiguities_of_length(len);
        let mut new = Vec::new();
        for amb in &ambs {
            let s = self.s_polynomial(amb);
            let r = self.reduce(len, &s);
            if !r.is_empty() {
                new.push(r);
            }
        }
        if new.is_empty() {
            return 0;
        }
        let rules = rules_from_span(len, pow(self.alphabet, len), new);
        let count = rules.len();
        for r in rules {
            self.push(r);
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational as Q;
    use crate::linalg::encode;

    #[test]
    fn commutator_rule_and_overlap() {
        // xy - yx with x < y: lead yx → xy.
        let rel = vec![(encode(2, &[0, 1]), Q::one()), (encode(2, &[1, 0]), Q::one().neg())];
        let s = RewritingSystem::from_relations(2, 2, &[rel]);
        assert_eq!(s.rules()[0].lead, encode(2, &[1, 0]));
        assert_eq!(s.rules()[0].replacement, vec![(encode(2, &[0, 1]), Q::one())]);
        // yxx reduces to xxy
        let nf = s.reduce(3, &[(encode(2, &[1, 0, 0]), Q::one())]);
        assert_eq!(nf, vec![(encode(2, &[0, 0, 1]), Q::one())]);
        // The lead yx has no self-overlap.
        assert!(s.ambiguities_of_length(3).is_empty());
    }
}
