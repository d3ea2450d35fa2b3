//! The JSON input document: a field, generators, degree N and relations, or a preset.

use nkoszul::algebra::{presets, Presentation};
use nkoszul::field::{is_prime, Field, Rational};
use nkoszul::linalg::{encode, from_entries};
use nkoszul::{Error, Result};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    /// `q` or `fp:P`, as accepted by `--field`.
    pub fn parse_flag(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldSpec::Rational);
        }
        let Some(p) = lower.strip_prefix("fp:") else {
            return Err(Error::parse("--field", format!("expected q or fp:P, got {s:?}")));
        };
        let p: u64 = p.parse().map_err(|_| Error::parse("--field", format!("not a prime: {p:?}")))?;
        Self::prime("--field", p)
    }

    fn prime(position: &str, p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::parse(position, format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn to_json(self) -> Value {
        match self {
            FieldSpec::Rational => serde_json::json!({"type": "Q"}),
            FieldSpec::Prime(p) => serde_json::json!({"type": "Fp", "p": p}),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Preset { name: String, params: Map<String, Value> },
    Explicit { generators: Vec<String>, degree: usize, relations: Vec<Vec<(Vec<String>, Rational)>> },
}

/// A validated input document, still field-agnostic.
#[derive(Clone, Debug, PartialEq)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub source: Source,
}

fn location(e: &serde_json::Error) -> String {
    format!("line {}, column {}", e.line(), e.column())
}

fn expect_object<'a>(v: &'a Value, at: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::parse(at, "expected an object"))
}

fn expect_usize(v: &Value, at: &str) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| Error::parse(at, "expected a non-negative integer"))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], at: &str) -> Result<()> {
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            let path = if at.is_empty() { k.clone() } else { format!("{at}.{k}") };
            return Err(Error::parse(path, "unknown key"));
        }
    }
    Ok(())
}

fn parse_field(v: Option<&Value>) -> Result<FieldSpec> {
    let Some(v) = v else { return Ok(FieldSpec::Rational) };
    let obj = expect_object(v, "field")?;
    reject_unknown(obj, &["type", "p"], "field")?;
    match obj.get("type").and_then(Value::as_str) {
        Some("Q") => {
            if obj.contains_key("p") {
                return Err(Error::parse("field.p", "a prime is only allowed with type Fp"));
            }
            Ok(FieldSpec::Rational)
        }
        Some("Fp") => {
            let p = obj.get("p").and_then(Value::as_u64).ok_or_else(|| Error::parse("field.p", "expected a prime"))?;
            FieldSpec::prime("field.p", p)
        }
        _ => Err(Error::parse("field.type", "expected \"Q\" or \"Fp\"")),
    }
}

fn parse_coeff(v: &Value, at: &str) -> Result<Rational> {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() => n.to_string(),
        _ => return Err(Error::parse(at, "coefficient must be a rational string such as \"-3/2\"")),
    };
    s.parse::<Rational>().map_err(|m| Error::parse(at, m))
}

fn parse_explicit(obj: &Map<String, Value>) -> Result<Source> {
    let gens = obj.get("generators").ok_or_else(|| Error::parse("generators", "missing"))?;
    let gens = gens.as_array().ok_or_else(|| Error::parse("generators", "expected a list of names"))?;
    let mut generators = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        let name = g.as_str().ok_or_else(|| Error::parse(format!("generators[{k}]"), "expected a string"))?;
        if name.is_empty() || generators.iter().any(|x: &String| x == name) {
            return Err(Error::parse(format!("generators[{k}]"), format!("empty or duplicate name {name:?}")));
        }
        generators.push(name.to_string());
    }
    if generators.is_empty() {
        return Err(Error::parse("generators", "at least one generator is required"));
    }
    let degree = expect_usize(obj.get("degree").ok_or_else(|| Error::parse("degree", "missing"))?, "degree")?;
    if degree < 2 {
        return Err(Error::parse("degree", "N must be at least 2"));
    }
    let rels = match obj.get("relations") {
        None => Vec::new(),
        Some(r) => r.as_array().ok_or_else(|| Error::parse("relations", "expected a list of term lists"))?.clone(),
    };
    let mut relations = Vec::with_capacity(rels.len());
    for (r, rel) in rels.iter().enumerate() {
        let terms = rel.as_array().ok_or_else(|| Error::parse(format!("relations[{r}]"), "expected a list of terms"))?;
        let mut out = Vec::with_capacity(terms.len());
        for (t, term) in terms.iter().enumerate() {
            let at = format!("relations[{r}][{t}]");
            let term = expect_object(term, &at)?;
            reject_unknown(term, &["word", "coeff"], &at)?;
            let word = term.get("word").and_then(Value::as_array).ok_or_else(|| Error::parse(format!("{at}.word"), "expected a list of generator names"))?;
            if word.len() != degree {
                return Err(Error::parse(format!("{at}.word"), format!("relation {r} has a word of length {}, expected N = {degree}", word.len())));
            }
            let mut letters = Vec::with_capacity(degree);
            for (l, x) in word.iter().enumerate() {
                let name = x.as_str().ok_or_else(|| Error::parse(format!("{at}.word[{l}]"), "expected a string"))?;
                if !generators.iter().any(|g| g == name) {
                    return Err(Error::parse(format!("{at}.word[{l}]"), format!("unknown generator {name:?} in relation {r}")));
                }
                letters.push(name.to_string());
            }
            let coeff = parse_coeff(term.get("coeff").ok_or_else(|| Error::parse(format!("{at}.coeff"), "missing"))?, &format!("{at}.coeff"))?;
            out.push((letters, coeff));
        }
        relations.push(out);
    }
    Ok(Source::Explicit { generators, degree, relations })
}

pub fn parse_input(text: &str) -> Result<InputDocument> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::parse(location(&e), e.to_string()))?;
    parse_value(&value)
}

pub fn parse_value(value: &Value) -> Result<InputDocument> {
    let obj = expect_object(value, "document")?;
    reject_unknown(obj, &["field", "generators", "degree", "relations", "preset"], "")?;
    let field = parse_field(obj.get("field"))?;
    let source = match obj.get("preset") {
        Some(p) => {
            for key in ["generators", "degree", "relations"] {
                if obj.contains_key(key) {
                    return Err(Error::parse(key, "preset and explicit presentation are mutually exclusive"));
                }
            }
            let p = expect_object(p, "preset")?;
            reject_unknown(p, &["name", "params"], "preset")?;
            let name = p.get("name").and_then(Value::as_str).ok_or_else(|| Error::parse("preset.name", "expected a string"))?;
            let params = match p.get("params") {
                None => Map::new(),
                Some(v) => expect_object(v, "preset.params")?.clone(),
            };
            Source::Preset { name: name.to_string(), params }
        }
        None => parse_explicit(obj)?,
    };
    let doc = InputDocument { field, source };
    // Surface preset parameter errors at parse time.
    doc.presentation::<Rational>()?;
    Ok(doc)
}

fn param(params: &Map<String, Value>, key: &str) -> Result<usize> {
    let v = params.get(key).ok_or_else(|| Error::parse(format!("preset.params.{key}"), "missing"))?;
    expect_usize(v, &format!("preset.params.{key}"))
}

impl InputDocument {
    pub fn presentation<F: Field>(&self) -> Result<Presentation<F>> {
        match &self.source {
            Source::Preset { name, params } => {
                let allowed: &[&str] = match name.as_str() {
                    "polynomial" | "chain_quadric" | "example59" => &["n"],
                    "free" | "antisymmetrizer" => &["N", "n"],
                    "monomial_cubic_x1" => &["suffix"],
                    other => return Err(Error::parse("preset.name", format!("unknown preset {other:?}"))),
                };
                reject_unknown(params, allowed, "preset.params")?;
                let wrap = |e: Error| match e {
                    Error::InvalidParams(m) => Error::parse("preset.params", m),
                    other => other,
                };
                match name.as_str() {
                    "polynomial" => presets::polynomial(param(params, "n")?).map_err(wrap),
                    "chain_quadric" | "example59" => presets::chain_quadric(param(params, "n")?).map_err(wrap),
                    "free" => presets::free(param(params, "n")?, param(params, "N")?).map_err(wrap),
                    "antisymmetrizer" => presets::antisymmetrizer(param(params, "N")?, param(params, "n")?).map_err(wrap),
                    _ => {
                        let suffix = match params.get("suffix") {
                            None => "",
                            Some(v) => v.as_str().ok_or_else(|| Error::parse("preset.params.suffix", "expected a string"))?,
                        };
                        presets::monomial_cubic_x1(suffix).map_err(wrap)
                    }
                }
            }
            Source::Explicit { generators, degree, relations } => {
                let d = generators.len();
                let mut vecs = Vec::with_capacity(relations.len());
                for (r, terms) in relations.iter().enumerate() {
                    let mut entries = Vec::with_capacity(terms.len());
                    for (t, (word, c)) in terms.iter().enumerate() {
                        let letters: Vec<usize> = word.iter().map(|x| generators.iter().position(|g| g == x).expect("validated")).collect();
                        let c = F::from_rational(c).ok_or_else(|| Error::parse(format!("relations[{r}][{t}].coeff"), format!("{c} is undefined in the field {}", F::label())))?;
                        entries.push((encode(d, &letters), c));
                    }
                    vecs.push(from_entries(entries));
                }
                Presentation::new(generators.clone(), *degree, vecs)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("field".into(), self.field.to_json());
        match &self.source {
            Source::Preset { name, params } => {
                m.insert("preset".into(), serde_json::json!({"name": name, "params": params}));
            }
            Source::Explicit { generators, degree, relations } => {
                m.insert("generators".into(), serde_json::json!(generators));
                m.insert("degree".into(), serde_json::json!(degree));
                let rels: Vec<Value> = relations
                    .iter()
                    .map(|terms| Value::Array(terms.iter().map(|(w, c)| serde_json::json!({"word": w, "coeff": c.to_string()})).collect()))
                    .collect();
                m.insert("relations".into(), Value::Array(rels));
            }
        }
        Value::Object(m)
    }
}

/// An explicit document for a presentation; coefficients go through their decimal form.
pub fn document_of<F: Field>(p: &Presentation<F>, field: FieldSpec) -> InputDocument {
    let d = p.dim_v();
    let n = p.degree();
    let relations = p
        .original_relations()
        .iter()
        .map(|v| {
            v.iter()
                .map(|(code, c)| {
                    let word = nkoszul::linalg::letters(d, *code, n).into_iter().map(|l| p.generators()[l].clone()).collect();
                    (word, c.to_string().parse::<Rational>().expect("field elements print as rationals"))
                })
                .collect()
        })
        .collect();
    InputDocument { field, source: Source::Explicit { generators: p.generators().to_vec(), degree: n, relations } }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_plane() {
        let doc = parse_input(r#"{"field":{"type":"Q"},"generators":["x","y"],"degree":2,"relations":[[{"word":["x","y"],"coeff":"1"},{"word":["y","x"],"coeff":"-1"}]]}"#).unwrap();
        let p = doc.presentation::<Rational>().unwrap();
        assert_eq!(p.relations(), presets::polynomial::<Rational>(2).unwrap().relations());
    }

    #[test]
    fn errors_are_positioned() {
        let bad_len = r#"{"generators":["x","y"],"degree":2,"relations":[[{"word":["x","y"],"coeff":"1"}],[{"word":["x"],"coeff":"1"}]]}"#;
        match parse_input(bad_len) {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, "relations[1][0].word");
                assert!(message.contains("relation 1"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_input("{\"generators\": [\"x\",}"), Err(Error::Parse { position, .. }) if position.starts_with("line 1")));
        assert!(matches!(parse_input(r#"{"field":{"type":"Fp","p":12},"generators":["x"],"degree":2}"#), Err(Error::Parse { position, .. }) if position == "field.p"));
        assert!(matches!(parse_input(r#"{"generators":["x"],"degree":2,"relations":[[{"word":["x","z"],"coeff":"1"}]]}"#), Err(Error::Parse { position, .. }) if position == "relations[0][0].word[1]"));
    }

    #[test]
    fn rational_coefficients_and_presets() {
        let doc = parse_input(r#"{"generators":["x","y"],"degree":2,"relations":[[{"word":["x","y"],"coeff":"-3/2"}]]}"#).unwrap();
        let p = doc.presentation::<Rational>().unwrap();
        assert_eq!(p.original_relations()[0][0].1, Rational::new(-3, 2));
        let pre = parse_input(r#"{"preset":{"name":"antisymmetrizer","params":{"N":3,"n":4}},"field":{"type":"Q"}}"#).unwrap();
        assert_eq!(pre.presentation::<Rational>().unwrap().relations().dim(), 4);
        assert!(parse_input(r#"{"preset":{"name":"antisymmetrizer","params":{"N":5,"n":4}}}"#).is_err());
        assert!(parse_input(r#"{"preset":{"name":"polynomial","params":{"n":2}},"degree":2}"#).is_err());
    }
}
