//! Deciding whether `{h(k)}` is a CZDS for the standard basis.
//!
//! `{h(k)}` is a standard-basis CZDS iff either
//! 1. `h(0) ≠ 0` and every zero of `h` is real and negative, or
//! 2. `h(0) = 0` and `h = x (x-1) ... (x-m+1) Π (x - b_k)` with `m ≥ 1` and
//!    every `b_k` real and `< m`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{int, Rational};
use crate::zeros::{count_real_roots_with_multiplicity, Interval};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "case")]
pub enum Certificate {
    /// `h(0) ≠ 0` and all zeros are real and negative.
    NegativeRealZeros,
    /// `h = x(x-1)...(x-m+1) · residual`, residual real-rooted with zeros `< m`.
    FallingFactorial { m: usize, residual: Poly },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "reason")]
pub enum Failure {
    /// `h(0) ≠ 0` but some zero is non-real or non-negative.
    ZeroNotNegative { real_negative: usize, degree: usize },
    /// After removing `x(x-1)...(x-m+1)`, some zero of the residual is
    /// non-real or `≥ m`.
    ResidualZeroTooLarge {
        m: usize,
        residual: Poly,
        below_m: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Verdict {
    Czds { certificate: Certificate },
    NotCzds { failure: Failure },
}

impl Verdict {
    pub fn is_czds(&self) -> bool {
        matches!(self, Verdict::Czds { .. })
    }
}

/// Real zeros of `p` in `(-∞, bound)`, with multiplicity.
fn zeros_below(p: &Poly, bound: &Rational) -> Result<usize> {
    let closed = count_real_roots_with_multiplicity(p, &Interval::up_to(bound.clone()))?;
    if p.eval(bound).is_zero() {
        // a zero at the bound itself is not below it
        let mut q = p.clone();
        let lin = Poly::linear(int(1), -bound.clone());
        let mut at_bound = 0;
        while let Some(next) = q.exact_div(&lin)? {
            q = next;
            at_bound += 1;
        }
        return Ok(closed - at_bound);
    }
    Ok(closed)
}

pub fn characterize_standard_czds(h: &Poly) -> Result<Verdict> {
    let degree = h.degree().ok_or(Error::ZeroPolynomial)?;
    let zero = Rational::zero();
    if !h.eval(&zero).is_zero() {
        let real_negative = zeros_below(h, &zero)?;
        return Ok(if real_negative == degree {
            Verdict::Czds {
                certificate: Certificate::NegativeRealZeros,
            }
        } else {
            Verdict::NotCzds {
                failure: Failure::ZeroNotNegative {
                    real_negative,
                    degree,
                },
            }
        });
    }
    // Strip x, x-1, x-2, ... while the division stays exact.
    let mut residual = h.clone();
    let mut m = 0usize;
    while let Some(q) = residual.exact_div(&Poly::linear(int(1), -int(m as i64)))? {
        residual = q;
        m += 1;
    }
    let bound = int(m as i64);
    let rdeg = residual.degree().expect("nonzero quotient");
    let below_m = zeros_below(&residual, &bound)?;
    Ok(if below_m == rdeg {
        Verdict::Czds {
            certificate: Certificate::FallingFactorial { m, residual },
        }
    } else {
        Verdict::NotCzds {
            failure: Failure::ResidualZeroTooLarge {
                m,
                residual,
                below_m,
            },
        }
    })
}
