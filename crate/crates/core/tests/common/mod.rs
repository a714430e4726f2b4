#![allow(dead_code)]

use czds::operators::DiffOp;
use czds::rational::{int, ratio};
use czds::{Poly, Rational};
use proptest::prelude::*;

pub fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub fn rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| *r != int(0))
}

/// Polynomials of degree at most `max_degree` (possibly zero).
pub fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..=max_degree + 1).prop_map(Poly::new)
}

pub fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

/// Operators of order at most `max_order` with coefficient degrees at most
/// `max_coeff_degree`.
pub fn diffop(max_order: usize, max_coeff_degree: usize) -> impl Strategy<Value = DiffOp> {
    prop::collection::vec(poly(max_coeff_degree), 0..=max_order + 1)
        .prop_map(|gs| DiffOp::from_terms(gs.into_iter().enumerate()))
}

/// Operators with `deg g_k ≤ k` for every `k ≤ max_order`.
pub fn graded_diffop(max_order: usize) -> impl Strategy<Value = DiffOp> {
    (0..=max_order)
        .map(poly)
        .collect::<Vec<_>>()
        .prop_map(|gs| DiffOp::from_terms(gs.into_iter().enumerate()))
}

/// `(x - a)² + b²` with `b ≠ 0`: two non-real zeros.
pub fn irreducible_quadratic(a: &Rational, b: &Rational) -> Poly {
    Poly::new(vec![a * a + b * b, -(a * int(2)), int(1)])
}

/// Every nonzero polynomial of degree at most `max_degree` with
/// coefficients in `{-1, 0, 1}`.
pub fn exhaustive_corpus(max_degree: usize) -> Vec<Poly> {
    let len = max_degree + 1;
    let total = 3usize.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let coeffs = (0..len)
                .map(|_| {
                    let c = (code % 3) as i64 - 1;
                    code /= 3;
                    c
                })
                .collect::<Vec<_>>();
            Poly::from_ints(&coeffs)
        })
        .filter(|q| !q.is_zero())
        .collect()
}

/// First corpus member whose non-real zero count grows under
/// `Σ a_k x^k ↦ Σ h(k) a_k x^k`.
pub fn brute_force_violation(h: &Poly, corpus: &[Poly]) -> Option<Poly> {
    use czds::zero_counts;
    corpus
        .iter()
        .find(|q| {
            let image = Poly::new(
                q.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, a)| a * h.eval(&int(k as i64)))
                    .collect(),
            );
            zero_counts(&image).nonreal > zero_counts(q).nonreal
        })
        .cloned()
}
