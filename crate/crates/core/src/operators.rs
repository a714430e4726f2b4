//! Linear differential operators with polynomial coefficients.
//!
//! A [`DiffOp`] is kept in normal form `Σ g_k(x) D^k`: coefficients sit to the
//! left of every derivative symbol and no zero coefficient is stored, so two
//! operators are equal exactly when their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{binomial_usize, int, Rational};

/// Anything that maps real polynomials to real polynomials linearly.
pub trait PolyMap: Sync {
    fn apply(&self, p: &Poly) -> Poly;
}

impl<F: Fn(&Poly) -> Poly + Sync> PolyMap for F {
    fn apply(&self, p: &Poly) -> Poly {
        self(p)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DiffOp {
    terms: BTreeMap<usize, Poly>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        Self::term(0, Poly::one())
    }

    /// `D`.
    pub fn d() -> Self {
        Self::d_pow(1)
    }

    /// `D^n`.
    pub fn d_pow(n: usize) -> Self {
        Self::term(n, Poly::one())
    }

    /// Multiplication by `g`.
    pub fn mul_by(g: Poly) -> Self {
        Self::term(0, g)
    }

    pub fn scalar(c: Rational) -> Self {
        Self::term(0, Poly::constant(c))
    }

    /// `g D^k`.
    pub fn term(k: usize, g: Poly) -> Self {
        let mut terms = BTreeMap::new();
        if !g.is_zero() {
            terms.insert(k, g);
        }
        DiffOp { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Poly)>) -> Self {
        let mut op = DiffOp::zero();
        for (k, g) in terms {
            op.add_term(k, &g);
        }
        op
    }

    fn add_term(&mut self, k: usize, g: &Poly) {
        if g.is_zero() {
            return;
        }
        let sum = match self.terms.get(&k) {
            Some(existing) => existing + g,
            None => g.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<usize, Poly> {
        &self.terms
    }

    /// Coefficient of `D^k` (zero when absent).
    pub fn coeff(&self, k: usize) -> Poly {
        self.terms.get(&k).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order; `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// `Σ g_k p^(k)`.
    pub fn apply(&self, p: &Poly) -> Poly {
        self.terms
            .iter()
            .map(|(&k, g)| g * &p.nth_derivative(k))
            .sum()
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (&k, g) in &other.terms {
            out.add_term(k, g);
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        DiffOp::from_terms(self.terms.iter().map(|(&k, g)| (k, g.scale(c))))
    }

    /// `g ∘ self`, left multiplication by a polynomial.
    fn left_mul_poly(&self, g: &Poly) -> DiffOp {
        DiffOp::from_terms(self.terms.iter().map(|(&k, h)| (k, g * h)))
    }

    /// `D ∘ self`, moving the new `D` past each coefficient with
    /// `D g = g D + g'`.
    fn left_mul_d(&self) -> DiffOp {
        let mut out = DiffOp::zero();
        for (&k, g) in &self.terms {
            out.add_term(k + 1, g);
            out.add_term(k, &g.derivative());
        }
        out
    }

    /// Normal form of `self ∘ other`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let Some(top) = self.order() else {
            return DiffOp::zero();
        };
        let mut out = DiffOp::zero();
        let mut d_then_other = other.clone(); // D^j ∘ other
        for j in 0..=top {
            if let Some(g) = self.terms.get(&j) {
                out = out.add(&d_then_other.left_mul_poly(g));
            }
            if j < top {
                d_then_other = d_then_other.left_mul_d();
            }
        }
        out
    }

    /// `self^n` under composition; `self^0` is the identity.
    pub fn pow(&self, n: usize) -> DiffOp {
        (0..n).fold(DiffOp::identity(), |acc, _| acc.compose(self))
    }

    /// Composes `ops[0] ∘ ops[1] ∘ ...`; the empty product is the identity.
    pub fn product<'a>(ops: impl IntoIterator<Item = &'a DiffOp>) -> DiffOp {
        ops.into_iter()
            .fold(DiffOp::identity(), |acc, op| acc.compose(op))
    }
}

impl PolyMap for DiffOp {
    fn apply(&self, p: &Poly) -> Poly {
        DiffOp::apply(self, p)
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp({self})")
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&k, g)| match k {
                0 => format!("({g})I"),
                1 => format!("({g})D"),
                _ => format!("({g})D^{k}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    order: usize,
    coeff: Poly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiffOpJson {
    terms: Vec<TermJson>,
}

impl Serialize for DiffOp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiffOpJson {
            terms: self
                .terms
                .iter()
                .map(|(&order, coeff)| TermJson {
                    order,
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiffOp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DiffOpJson::deserialize(d)?;
        Ok(DiffOp::from_terms(
            raw.terms.into_iter().map(|t| (t.order, t.coeff)),
        ))
    }
}

/// `R` with `D^n ∘ L = R ∘ D^n`, where `R_j = Σ_{k≥j} C(n, k-j) g_k^(k-j)`.
///
/// Requires `deg g_k ≤ k` for every term of `L`.
pub fn shift_past_derivative(n: usize, op: &DiffOp) -> Result<DiffOp> {
    for (&k, g) in op.terms() {
        let degree = g.degree().expect("stored coefficients are nonzero");
        if degree > k {
            return Err(Error::DegreeHypothesis { order: k, degree });
        }
    }
    let Some(top) = op.order() else {
        return Ok(DiffOp::zero());
    };
    let terms = (0..=top).map(|j| {
        let r_j: Poly = (j..=top)
            .map(|k| {
                op.coeff(k)
                    .nth_derivative(k - j)
                    .scale(&binomial_usize(n, k - j))
            })
            .sum();
        (j, r_j)
    });
    Ok(DiffOp::from_terms(terms))
}

/// `Φ_a = (x² - 1) D + 2(1 + a) x I`.
pub fn phi(a: &Rational) -> DiffOp {
    let two_one_plus_a = (a + Rational::one()) * int(2);
    DiffOp::from_terms([
        (1, Poly::from_ints(&[-1, 0, 1])),
        (0, Poly::monomial(two_one_plus_a, 1)),
    ])
}

/// `Ψ_a = -x D + (x - (a + 1)) I`.
pub fn psi(a: &Rational) -> DiffOp {
    DiffOp::from_terms([
        (1, Poly::from_ints(&[0, -1])),
        (0, Poly::linear(Rational::one(), -(a + Rational::one()))),
    ])
}

/// `-β D² + (c x + d) D + α I`.
pub fn hermite_op(beta: &Rational, c: &Rational, d: &Rational, alpha: &Rational) -> DiffOp {
    DiffOp::from_terms([
        (2, Poly::constant(-beta.clone())),
        (1, Poly::linear(c.clone(), d.clone())),
        (0, Poly::constant(alpha.clone())),
    ])
}

/// `((x² - 1) D + [(2 + α + β) x + α - β] I) D`, which has eigenvalue
/// `n (n + 1 + α + β)` on the Jacobi polynomial `P_n^(α,β)`.
pub fn jacobi_op(alpha: &Rational, beta: &Rational) -> DiffOp {
    let first = DiffOp::from_terms([
        (1, Poly::from_ints(&[-1, 0, 1])),
        (0, Poly::linear(alpha + beta + int(2), alpha - beta)),
    ]);
    first.compose(&DiffOp::d())
}

/// `p ↦ q p' + α q' p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaguerreOp {
    pub q: Poly,
    pub alpha: Rational,
}

pub fn laguerre_op(q: Poly, alpha: Rational) -> LaguerreOp {
    LaguerreOp { q, alpha }
}

impl LaguerreOp {
    pub fn apply(&self, p: &Poly) -> Poly {
        &(&self.q * &p.derivative()) + &(&self.q.derivative() * p).scale(&self.alpha)
    }

    pub fn to_diffop(&self) -> DiffOp {
        DiffOp::from_terms([
            (1, self.q.clone()),
            (0, self.q.derivative().scale(&self.alpha)),
        ])
    }
}

impl PolyMap for LaguerreOp {
    fn apply(&self, p: &Poly) -> Poly {
        LaguerreOp::apply(self, p)
    }
}

/// `p ↦ (c x + d) p - β p'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMultiplierOp {
    pub c: Rational,
    pub d: Rational,
    pub beta: Rational,
}

pub fn lmgen_op(c: Rational, d: Rational, beta: Rational) -> LinearMultiplierOp {
    LinearMultiplierOp { c, d, beta }
}

impl LinearMultiplierOp {
    pub fn apply(&self, p: &Poly) -> Poly {
        let mult = Poly::linear(self.c.clone(), self.d.clone());
        &(&mult * p) - &p.derivative().scale(&self.beta)
    }

    pub fn to_diffop(&self) -> DiffOp {
        DiffOp::from_terms([
            (1, Poly::constant(-self.beta.clone())),
            (0, Poly::linear(self.c.clone(), self.d.clone())),
        ])
    }
}

impl PolyMap for LinearMultiplierOp {
    fn apply(&self, p: &Poly) -> Poly {
        LinearMultiplierOp::apply(self, p)
    }
}

/// `p q r' + α p' q r + β p q' r`.
pub fn three_factor_op(p: &Poly, q: &Poly, r: &Poly, alpha: &Rational, beta: &Rational) -> Poly {
    let pq = p * q;
    let a = &pq * &r.derivative();
    let b = (&(&p.derivative() * q) * r).scale(alpha);
    let c = (&(p * &q.derivative()) * r).scale(beta);
    &(&a + &b) + &c
}

/// `h(E) = Σ h_j E^j` for a polynomial `h` and an operator `E`.
pub fn poly_of_operator(h: &Poly, e: &DiffOp) -> DiffOp {
    // Horner in the operator algebra.
    h.coeffs().iter().rev().fold(DiffOp::zero(), |acc, c| {
        let shifted = acc.compose(e);
        if c.is_zero() {
            shifted
        } else {
            shifted.add(&DiffOp::scalar(c.clone()))
        }
    })
}

/// The Euler operator `x D`.
pub fn euler() -> DiffOp {
    DiffOp::term(1, Poly::x())
}
