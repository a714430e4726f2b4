//! Square-free decomposition, Sturm chains and multiplicity-aware zero counts.
//!
//! Everything here is exact. Real zeros are counted with Sturm's theorem on
//! each square-free factor, then weighted by the factor's multiplicity; the
//! non-real count is whatever is left of the degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};

/// Yun's square-free decomposition.
///
/// Returns monic, square-free, pairwise coprime factors with their
/// multiplicities, ordered by increasing multiplicity, such that
/// `p = lc(p) * Π factor^mult`. A nonzero constant decomposes to the empty list.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.degree() == Some(0) {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = exact(p, &a0);
    let mut c = exact(&dp, &a0);
    let mut d = &c - &b.derivative();
    let mut mult = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = b.gcd(&d);
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a.clone(), mult));
        }
        b = exact(&b, &a);
        c = exact(&d, &a);
        d = &c - &b.derivative();
        mult += 1;
    }
    Ok(out)
}

fn exact(a: &Poly, b: &Poly) -> Poly {
    a.exact_div(b)
        .expect("nonzero divisor")
        .expect("gcd divides exactly")
}

/// One end of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rational),
    PosInf,
}

/// A half-open interval `(lo, hi]`. Infinite ends are open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn whole_line() -> Self {
        Interval {
            lo: Bound::NegInf,
            hi: Bound::PosInf,
        }
    }

    /// `(a, b]`; requires `a < b`.
    pub fn half_open(a: Rational, b: Rational) -> Result<Self> {
        if a >= b {
            return Err(Error::EmptyInterval);
        }
        Ok(Interval {
            lo: Bound::At(a),
            hi: Bound::At(b),
        })
    }

    /// `(-∞, b]`.
    pub fn up_to(b: Rational) -> Self {
        Interval {
            lo: Bound::NegInf,
            hi: Bound::At(b),
        }
    }

    /// `(a, +∞)`.
    pub fn above(a: Rational) -> Self {
        Interval {
            lo: Bound::At(a),
            hi: Bound::PosInf,
        }
    }
}

/// The signed remainder sequence `f, f', -rem(f, f'), ...` of the square-free
/// part `f = p / gcd(p, p')`, so roots sitting exactly on an interval end are
/// handled by the plain half-open rule.
///
/// Each member is rescaled by a positive constant, which leaves every sign
/// variation count unchanged.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::IndeterminateCount);
        }
        let dp = p.derivative();
        let f = exact(p, &p.gcd(&dp));
        let mut chain = vec![f.primitive_positive()];
        let mut next = f.derivative().primitive_positive();
        while !next.is_zero() {
            let prev = chain.last().expect("chain is nonempty");
            let (_, r) = prev.div_rem(&next)?;
            chain.push(next);
            next = (-&r).primitive_positive();
        }
        Ok(SturmChain { chain })
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations_at(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().map(|q| match at {
            Bound::NegInf => q.sign_at_neg_inf(),
            Bound::PosInf => q.sign_at_pos_inf(),
            Bound::At(x) => rational::sign(&q.eval(x)),
        });
        let mut count = 0;
        let mut last = 0i8;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the interval.
    pub fn count(&self, interval: &Interval) -> usize {
        let lo = self.variations_at(&interval.lo);
        let hi = self.variations_at(&interval.hi);
        lo.saturating_sub(hi)
    }
}

/// Number of distinct real roots of `p` in `interval`.
pub fn count_real_roots(p: &Poly, interval: &Interval) -> Result<usize> {
    if let (Bound::At(a), Bound::At(b)) = (&interval.lo, &interval.hi) {
        if a >= b {
            return Err(Error::EmptyInterval);
        }
    }
    Ok(SturmChain::new(p)?.count(interval))
}

/// Real zeros of `p` in `interval`, counted with multiplicity.
pub fn count_real_roots_with_multiplicity(p: &Poly, interval: &Interval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::IndeterminateCount);
    }
    let mut total = 0;
    for (factor, mult) in squarefree_decomposition(p)? {
        total += mult * count_real_roots(&factor, interval)?;
    }
    Ok(total)
}

/// Degree marker that keeps the zero polynomial distinct from every
/// numeric degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    ZeroPoly,
    Finite(usize),
}

impl Serialize for Degree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::ZeroPoly => s.serialize_str("zero-poly"),
            Degree::Finite(d) => s.serialize_u64(*d as u64),
        }
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(usize),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Degree::Finite(n)),
            Raw::S(s) if s == "zero-poly" => Ok(Degree::ZeroPoly),
            Raw::S(s) => Err(serde::de::Error::custom(format!("invalid degree {s:?}"))),
        }
    }
}

/// Real and non-real zero counts, with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZeroCount {
    pub degree: Degree,
    pub real: usize,
    pub nonreal: usize,
}

impl ZeroCount {
    pub const ZERO_POLY: ZeroCount = ZeroCount {
        degree: Degree::ZeroPoly,
        real: 0,
        nonreal: 0,
    };
}

impl fmt::Display for ZeroCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Degree::ZeroPoly => write!(f, "(zero-poly, Z_R=0, Z_C=0)"),
            Degree::Finite(d) => write!(f, "(deg {d}, Z_R={}, Z_C={})", self.real, self.nonreal),
        }
    }
}

/// `(degree, Z_R, Z_C)` of `p`; the zero polynomial has both counts zero.
pub fn zero_counts(p: &Poly) -> ZeroCount {
    let Some(degree) = p.degree() else {
        return ZeroCount::ZERO_POLY;
    };
    let real =
        count_real_roots_with_multiplicity(p, &Interval::whole_line()).expect("nonzero polynomial");
    ZeroCount {
        degree: Degree::Finite(degree),
        real,
        nonreal: degree - real,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x+2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert_eq!(
            squarefree_decomposition(&f).unwrap(),
            vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]
        );
        assert_eq!(
            squarefree_decomposition(&p(&[1, 0, 1])).unwrap(),
            vec![(p(&[1, 0, 1]), 1)]
        );
        assert_eq!(
            squarefree_decomposition(&p(&[0, 0, 0, 1])).unwrap(),
            vec![(p(&[0, 1]), 3)]
        );
        assert!(squarefree_decomposition(&p(&[-4])).unwrap().is_empty());
        assert_eq!(
            squarefree_decomposition(&Poly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn squarefree_recombines_with_leading_coefficient() {
        let f = &(&p(&[3, 1]).pow(3) * &p(&[1, 0, 1]).pow(2)) * &p(&[0, -5]);
        let parts = squarefree_decomposition(&f).unwrap();
        let rebuilt = parts.iter().fold(
            Poly::constant(f.leading_coeff().unwrap().clone()),
            |acc, (g, m)| &acc * &g.pow(*m as u32),
        );
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn sturm_examples() {
        let whole = Interval::whole_line();
        assert_eq!(count_real_roots(&p(&[-1, 0, 1]), &whole).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[1, 0, 1]), &whole).unwrap(), 0);
        let cubic = Poly::from_roots(&[int(0), int(1), int(2)]);
        let iv = Interval::half_open(ratio(1, 2), int(3)).unwrap();
        assert_eq!(count_real_roots(&cubic, &iv).unwrap(), 2);
        assert_eq!(
            count_real_roots(&Poly::zero(), &whole),
            Err(Error::IndeterminateCount)
        );
    }

    #[test]
    fn half_open_endpoint_convention() {
        let cubic = Poly::from_roots(&[int(0), int(1), int(2)]);
        // root at the right end counts, root at the left end does not
        assert_eq!(
            count_real_roots(&cubic, &Interval::half_open(int(0), int(1)).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            count_real_roots(&cubic, &Interval::half_open(int(1), int(2)).unwrap()).unwrap(),
            1
        );
        assert_eq!(
            count_real_roots(&cubic, &Interval::up_to(int(0))).unwrap(),
            1
        );
        assert_eq!(
            count_real_roots(&cubic, &Interval::above(int(0))).unwrap(),
            2
        );
        assert_eq!(
            Interval::half_open(int(1), int(1)),
            Err(Error::EmptyInterval)
        );
    }

    #[test]
    fn sturm_on_repeated_roots_counts_distinct() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2);
        assert_eq!(count_real_roots(&f, &Interval::whole_line()).unwrap(), 2);
        assert_eq!(
            count_real_roots(&f, &Interval::half_open(int(-2), int(1)).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn zero_count_examples() {
        let c = zero_counts(&p(&[1, 0, 1]));
        assert_eq!(
            c,
            ZeroCount {
                degree: Degree::Finite(2),
                real: 0,
                nonreal: 2
            }
        );
        let f = &p(&[1, 0, 1]).pow(2) * &p(&[-2, 1]);
        assert_eq!(
            zero_counts(&f),
            ZeroCount {
                degree: Degree::Finite(5),
                real: 1,
                nonreal: 4
            }
        );
        assert_eq!(zero_counts(&Poly::zero()), ZeroCount::ZERO_POLY);
        assert_eq!(
            zero_counts(&p(&[7])),
            ZeroCount {
                degree: Degree::Finite(0),
                real: 0,
                nonreal: 0
            }
        );
    }

    #[test]
    fn zero_count_json() {
        let c = zero_counts(&p(&[1, 0, 1]));
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"degree":2,"real":0,"nonreal":2}"#
        );
        assert_eq!(
            serde_json::to_string(&ZeroCount::ZERO_POLY).unwrap(),
            r#"{"degree":"zero-poly","real":0,"nonreal":0}"#
        );
    }
}
