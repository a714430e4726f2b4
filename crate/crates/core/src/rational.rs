//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rational`], which is
//! `num_rational::BigRational` (always reduced, positive denominator).
//! This module adds the textual `"p/q"` form used by the JSON encodings
//! and a few constructors and combinatorial helpers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"p/q"` (optionally signed, surrounding whitespace ignored).
pub fn parse(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn rising_factorial(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Falling factorial `a (a-1) ... (a-n+1)`.
pub fn falling_factorial(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

/// Generalized binomial coefficient `C(a, j)` for a rational upper argument.
pub fn binomial(a: &Rational, j: usize) -> Rational {
    falling_factorial(a, j) / factorial(j)
}

/// Ordinary binomial coefficient; zero when `k > n`.
pub fn binomial_usize(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    binomial(&int(n as i64), k)
}

pub(crate) fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Serde adapter for a single rational stored as a JSON string.
pub mod serde_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = RationalText::deserialize(d)?;
        text.into_rational().map_err(de::Error::custom)
    }

    /// Accepts `"p/q"` strings and, for convenience, bare JSON integers.
    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RationalText {
        Str(String),
        Int(i64),
    }

    impl RationalText {
        pub(crate) fn into_rational(self) -> Result<Rational, crate::Error> {
            match self {
                RationalText::Str(s) => super::parse(&s),
                RationalText::Int(n) => Ok(super::int(n)),
            }
        }
    }
}
