use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{letters, SparseVec, Subspace, WordSpace};

/// An N-homogeneous algebra `Tens(V)/(R)` with `R ⊆ V^{⊗N}`.
#[derive(Clone, Debug)]
pub struct Presentation<F> {
    generators: Vec<String>,
    degree: usize,
    relations: Subspace<F>,
    original: Vec<SparseVec<F>>,
}

impl<F: Field> Presentation<F> {
    pub fn new(generators: Vec<String>, degree: usize, relations: Vec<SparseVec<F>>) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidParams(format!("degree must be at least 2, got {degree}")));
        }
        if generators.is_empty() {
            return Err(Error::InvalidParams("at least one generator is required".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for g in &generators {
            if !seen.insert(g) {
                return Err(Error::InvalidParams(format!("duplicate generator name {g:?}")));
            }
        }
        let space = WordSpace::new(generators.len(), degree)?;
        let r = Subspace::from_vectors(space, relations.iter().cloned())?;
        Ok(Presentation { generators, degree, relations: r, original: relations })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }
    pub fn dim_v(&self) -> usize {
        self.generators.len()
    }
    /// The relation degree N.
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn relations(&self) -> &Subspace<F> {
        &self.relations
    }
    pub fn original_relations(&self) -> &[SparseVec<F>] {
        &self.original
    }
    pub fn word_space(&self, n: usize) -> Result<WordSpace> {
        WordSpace::new(self.dim_v(), n)
    }

    pub fn format_word(&self, code: usize, len: usize) -> String {
        if len == 0 {
            return "1".into();
        }
        letters(self.dim_v(), code, len).iter().map(|&l| self.generators[l].as_str()).collect::<Vec<_>>().join("·")
    }

    pub fn format_vector(&self, v: &[(usize, F)], len: usize) -> String {
        if v.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (code, c)) in v.iter().enumerate() {
            let w = self.format_word(*code, len);
            let cs = c.to_string();
            if k > 0 {
                if let Some(rest) = cs.strip_prefix('-') {
                    s.push_str(" - ");
                    if rest != "1" {
                        s.push_str(rest);
                        s.push('·');
                    }
                    s.push_str(&w);
                    continue;
                }
                s.push_str(" + ");
            } else if cs == "-1" {
                s.push('-');
                s.push_str(&w);
                continue;
            }
            if cs != "1" {
                s.push_str(&cs);
                s.push('·');
            }
            s.push_str(&w);
        }
        s
    }

    /// Same presentation over another field (coefficients mapped through the rationals).
    pub fn convert<G: Field>(&self, map: impl Fn(&F) -> Option<G>) -> Result<Presentation<G>> {
        let rels = self
            .original
            .iter()
            .enumerate()
            .map(|(k, v)| {
                v.iter()
                    .map(|(i, x)| map(x).map(|y| (*i, y)).ok_or_else(|| Error::InvalidParams(format!("coefficient {x} of relation {k} is undefined in the target field"))))
                    .collect::<Result<SparseVec<G>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(self.generators.clone(), self.degree, rels.into_iter().map(|v| v.into_iter().filter(|(_, x)| !x.is_zero()).collect()).collect())
    }
}
