//! Positional word encoding: a word of length n over an alphabet of size d is the integer
//! with base-d digits equal to its letters, leftmost letter most significant.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WordSpace {
    pub alphabet: usize,
    pub degree: usize,
}

impl WordSpace {
    pub fn new(alphabet: usize, degree: usize) -> Result<Self> {
        checked_pow(alphabet, degree)?;
        Ok(WordSpace { alphabet, degree })
    }

    pub fn dim(&self) -> usize {
        pow(self.alphabet, self.degree)
    }
}

fn checked_pow(d: usize, n: usize) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..n {
        acc = acc
            .checked_mul(d)
            .filter(|&v| v < (1usize << 62))
            .ok_or_else(|| Error::Budget(format!("word space of {d} letters in degree {n} exceeds the index range")))?;
    }
    Ok(acc)
}

pub fn pow(d: usize, n: usize) -> usize {
    checked_pow(d, n).expect("word space too large")
}

/// Code of the concatenation `a·b` where `b` has length `len_b`.
pub fn concat(d: usize, a: usize, b: usize, len_b: usize) -> usize {
    a * pow(d, len_b) + b
}

pub fn letters(d: usize, mut code: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = code % d;
        code /= d;
    }
    out
}

pub fn encode(d: usize, letters: &[usize]) -> usize {
    letters.iter().fold(0, |acc, &l| acc * d + l)
}

/// Splits a word of length `len` into its first `k` letters and the rest.
pub fn split(d: usize, code: usize, len: usize, k: usize) -> (usize, usize) {
    let p = pow(d, len - k);
    (code / p, code % p)
}

/// The factor of length `flen` starting at position `pos`.
pub fn factor(d: usize, code: usize, len: usize, pos: usize, flen: usize) -> usize {
    (code / pow(d, len - pos - flen)) % pow(d, flen)
}

/// Letter counts of a word.
pub fn content(d: usize, code: usize, len: usize) -> Vec<u32> {
    let mut c = vec![0u32; d];
    let mut x = code;
    for _ in 0..len {
        c[x % d] += 1;
        x /= d;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_is_consistent() {
        let d = 3;
        let a = encode(d, &[2, 0]);
        let b = encode(d, &[1, 1, 2]);
        assert_eq!(concat(d, a, b, 3), encode(d, &[2, 0, 1, 1, 2]));
        assert_eq!(split(d, concat(d, a, b, 3), 5, 2), (a, b));
        assert_eq!(letters(d, a, 2), vec![2, 0]);
        assert_eq!(factor(d, encode(d, &[2, 0, 1, 1, 2]), 5, 1, 3), encode(d, &[0, 1, 1]));
    }
}
