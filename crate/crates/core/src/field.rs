//! Exact scalars: rationals with a machine-word fast path, and prime fields.

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero; callers only invert pivots.
    fn inv(&self) -> Self;
    /// Human-readable field label used in reports.
    fn label() -> String;
    /// Parses a rational literal such as `-3/2`; fails if the denominator vanishes in the field.
    fn from_rational(r: &Rational) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }
    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }
    fn sign(parity: usize) -> Self {
        if parity % 2 == 0 {
            Self::one()
        } else {
            Self::one().neg()
        }
    }
}

#[derive(Clone)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

/// Exact rational. Small values stay in machine words (denominator > 0, reduced).
#[derive(Clone)]
pub struct Rational(Repr);

impl Rational {
    fn small(n: i128, d: i128) -> Rational {
        debug_assert!(d != 0);
        let (mut n, mut d) = (n, d);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d))))),
        }
    }

    fn from_big(r: BigRational) -> Rational {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(Box::new(r)))
    }

    pub fn new(n: i64, d: i64) -> Rational {
        assert!(d != 0, "zero denominator");
        Rational::small(n as i128, d as i128)
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer_denom(&self) -> (BigInt, BigInt) {
        let b = self.to_big();
        (b.numer().clone(), b.denom().clone())
    }

    fn binop(
        &self,
        other: &Rational,
        small: impl Fn(i128, i128, i128, i128) -> Option<(i128, i128)>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &other.0) {
            if let Some((n, m)) = small(*a as i128, *b as i128, *c as i128, *d as i128) {
                return Rational::small(n, m);
            }
        }
        Rational::from_big(big(self.to_big(), other.to_big()))
    }
}

impl FromStr for Rational {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, String> {
            t.trim().parse::<BigInt>().map_err(|_| format!("not a rational literal: {s:?}"))
        };
        let r = if let Some((n, d)) = s.split_once('/') {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            BigRational::new(parse_int(n)?, d)
        } else if let Some((ip, fp)) = s.split_once('.') {
            if fp.chars().any(|c| !c.is_ascii_digit()) || fp.is_empty() {
                return Err(format!("not a rational literal: {s:?}"));
            }
            let neg = ip.trim_start().starts_with('-');
            let whole = if ip.trim() == "-" || ip.trim().is_empty() { BigInt::zero() } else { parse_int(ip)? };
            let scale = num_traits::pow(BigInt::from(10), fp.len());
            let frac = parse_int(fp)?;
            let num = whole.abs() * &scale + frac;
            BigRational::new(if neg { -num } else { num }, scale)
        } else {
            BigRational::from_integer(parse_int(s)?)
        };
        Ok(Rational::from_big(r))
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            _ => self.to_big() == other.to_big(),
        }
    }
}
impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Small values are canonical, so hashing the big form keeps Eq/Hash consistent.
        match &self.0 {
            Repr::Small(a, b) => {
                a.hash(state);
                b.hash(state);
            }
            Repr::Big(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_big().cmp(&other.to_big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
    fn from_i64(v: i64) -> Self {
        Rational::small(v as i128, 1)
    }
    fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(r) => r.is_zero(),
        }
    }
    fn add(&self, o: &Self) -> Self {
        self.binop(
            o,
            |a, b, c, d| {
                if b == d {
                    Some((a + c, b))
                } else {
                    Some((a.checked_mul(d)?.checked_add(c.checked_mul(b)?)?, b.checked_mul(d)?))
                }
            },
            |x, y| x + y,
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        self.binop(o, |a, b, c, d| Some((a.checked_mul(c)?, b.checked_mul(d)?)), |x, y| x * y)
    }
    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(r) => Rational::from_big(-(**r).clone()),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match &self.0 {
            Repr::Small(n, d) => Rational::small(*d as i128, *n as i128),
            Repr::Big(r) => Rational::from_big(r.recip()),
        }
    }
    fn label() -> String {
        "Q".to_string()
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }
}

thread_local! {
    static MODULUS: Cell<u32> = const { Cell::new(0) };
}

/// Residue modulo the prime installed by [`with_modulus`] on the current thread.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(pub u32);

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Runs `f` with arithmetic in `Fp` taken modulo `p`; restores the previous modulus afterwards.
pub fn with_modulus<T>(p: u32, f: impl FnOnce() -> T) -> T {
    assert!(is_prime(p as u64) && p < (1 << 31), "modulus must be a prime below 2^31");
    let prev = MODULUS.with(|m| m.replace(p));
    struct Restore(u32);
    impl Drop for Restore {
        fn drop(&mut self) {
            MODULUS.with(|m| m.set(self.0));
        }
    }
    let _guard = Restore(prev);
    f()
}

pub fn modulus() -> u32 {
    let p = MODULUS.with(|m| m.get());
    assert!(p != 0, "Fp arithmetic used outside with_modulus");
    p
}

impl Fp {
    fn reduce_i128(v: i128) -> Fp {
        let p = modulus() as i128;
        Fp(v.rem_euclid(p) as u32)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        Fp::reduce_i128(v as i128)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        let p = modulus() as u64;
        Fp(((self.0 as u64 + o.0 as u64) % p) as u32)
    }
    fn sub(&self, o: &Self) -> Self {
        let p = modulus() as u64;
        Fp(((self.0 as u64 + p - o.0 as u64) % p) as u32)
    }
    fn mul(&self, o: &Self) -> Self {
        let p = modulus() as u64;
        Fp(((self.0 as u64 * o.0 as u64) % p) as u32)
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(modulus() - self.0)
        }
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        let p = modulus() as u64;
        let (mut base, mut e, mut acc) = (self.0 as u64, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u32)
    }
    fn label() -> String {
        format!("modular, char {}", modulus())
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        let (n, d) = r.numer_denom();
        let p = BigInt::from(modulus());
        let dm = d.mod_floor(&p);
        if dm.is_zero() {
            return None;
        }
        let nm = n.mod_floor(&p).to_u32().unwrap();
        Some(Fp(nm).mul(&Fp(dm.to_u32().unwrap()).inv()))
    }
}
