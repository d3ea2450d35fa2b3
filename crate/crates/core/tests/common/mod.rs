//! Independent dense arithmetic modulo a large prime. Shares no code with the library: relations are
//! read back through their printed coefficients.

#![allow(dead_code)]

use nkoszul::algebra::Presentation;
use nkoszul::Rational;

pub const P: u64 = 1_000_000_007;

pub fn inv(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % P, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % P;
        }
        base = base * base % P;
        e >>= 1;
    }
    acc
}

pub fn from_i128(v: i128) -> u64 {
    v.rem_euclid(P as i128) as u64
}

pub fn from_rational(r: &Rational) -> u64 {
    let s = r.to_string();
    let (n, d) = s.split_once('/').unwrap_or((&s, "1"));
    from_i128(n.parse().unwrap()) * inv(from_i128(d.parse().unwrap())) % P
}

/// Row-reduced basis kept in echelon form; `pivots[k]` is the leading column of `rows[k]`.
#[derive(Clone, Default)]
pub struct Span {
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
}

impl Span {
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + P - c * y % P) % P;
                }
            }
        }
        v
    }

    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|&x| x != 0) else { return false };
        let c = inv(v[p]);
        let v: Vec<u64> = v.into_iter().map(|x| x * c % P).collect();
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            let c = row[p];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = (*x + P - c * y % P) % P;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

pub fn rank(rows: impl IntoIterator<Item = Vec<u64>>) -> usize {
    let mut s = Span::default();
    for r in rows {
        s.insert(r);
    }
    s.dim()
}

/// Orthogonal complement under the standard word pairing.
pub fn annihilator(span: &Span, len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for free in (0..len).filter(|c| !span.pivots.contains(c)) {
        let mut v = vec![0; len];
        v[free] = 1;
        for (row, &p) in span.rows.iter().zip(&span.pivots) {
            v[p] = (P - row[free]) % P;
        }
        out.push(v);
    }
    out
}

pub struct Relations {
    pub alphabet: usize,
    pub degree: usize,
    pub rows: Vec<Vec<u64>>,
}

pub fn relations_of(p: &Presentation<Rational>) -> Relations {
    let len = p.dim_v().pow(p.degree() as u32);
    let rows = p
        .original_relations()
        .iter()
        .map(|r| {
            let mut v = vec![0; len];
            for (w, c) in r {
                v[*w] = from_rational(c);
            }
            v
        })
        .collect();
    Relations { alphabet: p.dim_v(), degree: p.degree(), rows }
}

impl Relations {
    pub fn dual(&self) -> Relations {
        let len = self.alphabet.pow(self.degree as u32);
        let mut s = Span::default();
        for r in &self.rows {
            s.insert(r.clone());
        }
        Relations { alphabet: self.alphabet, degree: self.degree, rows: annihilator(&s, len) }
    }

    /// `dim T(V)_m / I_m` for `m ≤ up_to`, with `I_m = V·I_(m−1) + R·V^(m−N)`.
    pub fn hilbert(&self, up_to: usize) -> Vec<usize> {
        let d = self.alphabet;
        let mut out = Vec::new();
        let mut ideal: Vec<Vec<u64>> = Vec::new();
        for m in 0..=up_to {
            let len = d.pow(m as u32);
            let mut span = Span::default();
            if m > self.degree {
                for a in 0..d {
                    for v in &ideal {
                        let mut x = vec![0; len];
                        let shift = a * len / d;
                        x[shift..shift + len / d].copy_from_slice(v);
                        span.insert(x);
                    }
                }
            }
            if m >= self.degree {
                let tail = d.pow((m - self.degree) as u32);
                for r in &self.rows {
                    for t in 0..tail {
                        let mut x = vec![0; len];
                        for (w, c) in r.iter().enumerate() {
                            if *c != 0 {
                                x[w * tail + t] = *c;
                            }
                        }
                        span.insert(x);
                    }
                }
            }
            out.push(len - span.dim());
            ideal = span.rows;
        }
        out
    }
}

fn parity(perm: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            odd ^= perm[i] > perm[j];
        }
    }
    odd
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// `Σ_σ sgn(σ) x_σ(1)…x_σ(k)` over the letters `subset`, as a dense vector on words of length k.
pub fn signed_sum(alphabet: usize, subset: &[usize]) -> Vec<u64> {
    let k = subset.len();
    let mut v = vec![0; alphabet.pow(k as u32)];
    for perm in permutations(&(0..k).collect::<Vec<_>>()) {
        let code = perm.iter().fold(0, |acc, &i| acc * alphabet + subset[i]);
        v[code] = if parity(&perm) { P - 1 } else { 1 };
    }
    v
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

pub fn antisymmetrizer_relations(degree: usize, n: usize) -> Relations {
    Relations { alphabet: n, degree, rows: subsets(n, degree).iter().map(|s| signed_sum(n, s)).collect() }
}

pub fn dense<F: nkoszul::Field + ToString>(v: &[(usize, F)], len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for (w, c) in v {
        let s = c.to_string();
        let (n, d) = s.split_once('/').unwrap_or((&s, "1"));
        out[*w] = from_i128(n.parse().unwrap()) * inv(from_i128(d.parse().unwrap())) % P;
    }
    out
}
