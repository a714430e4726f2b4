//! Simple sets solving `γ_n b_n = q b_n^(r) + α q' b_n^(r-1)`.
//!
//! For `q` of degree `r ≥ 1` with only real zeros and `α ≥ 0`, any simple
//! set solving this equation has `{γ_n}` as a CZDS. The solver reports, for
//! each `n`, the whole polynomial solution space in degree `≤ n`, and
//! whether a solution of exact degree `n` exists.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::null_space;
use crate::poly::Poly;
use crate::rational::{self, factorial, int, Rational};
use crate::zeros::zero_counts;

/// The eigenvalue `γ_n` forced by the equation:
/// `0` for `n < r-1`, `α r! c_r` for `n = r-1`, and
/// `c_r n! (n + (α-1) r + 1) / (n-r+1)!` otherwise.
pub fn de_gamma(q: &Poly, alpha: &Rational, n: usize) -> Result<Rational> {
    let r = match q.degree() {
        Some(r) if r >= 1 => r,
        _ => return Err(Error::ConstantQ),
    };
    let c_r = q.leading_coeff().expect("nonconstant").clone();
    Ok(if n + 1 < r {
        Rational::zero()
    } else if n + 1 == r {
        alpha * factorial(r) * c_r
    } else {
        let nn = int(n as i64);
        let rr = int(r as i64);
        c_r * factorial(n) * (nn + (alpha - int(1)) * rr + int(1)) / factorial(n + 1 - r)
    })
}

/// The operator `b ↦ q b^(r) + α q' b^(r-1)`.
pub fn de_operator(q: &Poly, alpha: &Rational, b: &Poly) -> Poly {
    let r = q.degree().unwrap_or(0);
    let main = q * &b.nth_derivative(r);
    if r == 0 {
        return main;
    }
    &main + &(&q.derivative() * &b.nth_derivative(r - 1)).scale(alpha)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeSolution {
    pub n: usize,
    #[serde(with = "rational::serde_str")]
    pub gamma_n: Rational,
    pub solution_dim: usize,
    pub basis_of_solutions: Vec<Poly>,
    /// Some solution has degree exactly `n`.
    pub has_degree_n: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeReport {
    pub q: Poly,
    #[serde(with = "rational::serde_str")]
    pub alpha: Rational,
    pub solutions: Vec<DeSolution>,
    /// A degree-`n` solution exists for every `n ≤ n_max`.
    pub simple_set: bool,
}

pub fn basis_from_de(q: &Poly, alpha: &Rational, n_max: usize) -> Result<DeReport> {
    match q.degree() {
        Some(r) if r >= 1 => {}
        _ => return Err(Error::ConstantQ),
    }
    if alpha.is_negative() {
        return Err(Error::NegativeAlpha);
    }
    if zero_counts(q).nonreal != 0 {
        return Err(Error::QNotRealRooted);
    }
    let solutions = (0..=n_max)
        .map(|n| solve_one(q, alpha, n))
        .collect::<Result<Vec<_>>>()?;
    let simple_set = solutions.iter().all(|s| s.has_degree_n);
    Ok(DeReport {
        q: q.clone(),
        alpha: alpha.clone(),
        solutions,
        simple_set,
    })
}

fn solve_one(q: &Poly, alpha: &Rational, n: usize) -> Result<DeSolution> {
    let gamma_n = de_gamma(q, alpha, n)?;
    // Column j holds the image of x^j under b ↦ q b^(r) + α q' b^(r-1) - γ_n b,
    // which maps polynomials of degree ≤ n into themselves.
    let columns: Vec<Poly> = (0..=n)
        .map(|j| {
            let xj = Poly::monomial(Rational::one(), j);
            &de_operator(q, alpha, &xj) - &xj.scale(&gamma_n)
        })
        .collect();
    let rows: Vec<Vec<Rational>> = (0..=n)
        .map(|i| columns.iter().map(|c| c.coeff(i)).collect())
        .collect();
    let basis_of_solutions: Vec<Poly> = null_space(&rows, n + 1)
        .into_iter()
        .map(|v| Poly::new(v).monic())
        .collect();
    let has_degree_n = basis_of_solutions.iter().any(|b| b.degree() == Some(n));
    Ok(DeSolution {
        n,
        gamma_n,
        solution_dim: basis_of_solutions.len(),
        basis_of_solutions,
        has_degree_n,
    })
}
