//! Classical polynomial bases, generated exactly, and change of basis.
//!
//! Jacobi polynomials come from the finite double-binomial sum
//! `Σ_k C(n+α, n-k) C(n+β, k) ((x-1)/2)^(n-k) ((x+1)/2)^k`, which is a
//! polynomial identity for every rational `α, β`. Ultraspherical and Legendre
//! polynomials are Jacobi polynomials with equal parameters; Chebyshev `T_n`
//! and `U_n` are fixed rescalings of the `λ = ∓1/2` ultraspherical ones.
//! Hermite polynomials use `H_{n+1} = 2x H_n - 2n H_{n-1}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, binomial, factorial, int, ratio, rising_factorial, Rational};

/// A simple set of polynomials `{b_n}` with `deg b_n = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BasisFamily {
    Standard,
    Hermite,
    Jacobi {
        #[serde(with = "rational::serde_str")]
        alpha: Rational,
        #[serde(with = "rational::serde_str")]
        beta: Rational,
    },
    Ultraspherical {
        #[serde(with = "rational::serde_str")]
        lambda: Rational,
    },
    Legendre,
    ChebyshevT,
    ChebyshevU,
    GenLaguerre {
        #[serde(with = "rational::serde_str")]
        alpha: Rational,
    },
    Custom {
        polys: Vec<Poly>,
    },
}

impl BasisFamily {
    pub fn jacobi(alpha: Rational, beta: Rational) -> Self {
        BasisFamily::Jacobi { alpha, beta }
    }

    pub fn ultraspherical(lambda: Rational) -> Self {
        BasisFamily::Ultraspherical { lambda }
    }

    pub fn gen_laguerre(alpha: Rational) -> Self {
        BasisFamily::GenLaguerre { alpha }
    }

    /// Checks parameter domains (`> -1`) and the simple-set property of
    /// custom lists.
    pub fn validate(&self) -> Result<()> {
        let minus_one = int(-1);
        let check = |name: &str, v: &Rational| {
            if *v > minus_one {
                Ok(())
            } else {
                Err(Error::ParameterOutOfDomain(format!(
                    "{name} = {} must exceed -1",
                    rational::to_string(v)
                )))
            }
        };
        match self {
            BasisFamily::Jacobi { alpha, beta } => {
                check("alpha", alpha)?;
                check("beta", beta)
            }
            BasisFamily::Ultraspherical { lambda } => check("lambda", lambda),
            BasisFamily::GenLaguerre { alpha } => check("alpha", alpha),
            BasisFamily::Custom { polys } => {
                for (k, b) in polys.iter().enumerate() {
                    if b.degree() != Some(k) {
                        return Err(Error::NotSimpleSet(format!(
                            "element {k} has degree {}",
                            b.degree().map_or("zero-poly".into(), |d| d.to_string())
                        )));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// `(α, β)` when the family is a (rescaled) Jacobi family.
    pub fn jacobi_params(&self) -> Option<(Rational, Rational)> {
        match self {
            BasisFamily::Jacobi { alpha, beta } => Some((alpha.clone(), beta.clone())),
            BasisFamily::Ultraspherical { lambda } => Some((lambda.clone(), lambda.clone())),
            BasisFamily::Legendre => Some((Rational::zero(), Rational::zero())),
            BasisFamily::ChebyshevT => Some((ratio(-1, 2), ratio(-1, 2))),
            BasisFamily::ChebyshevU => Some((ratio(1, 2), ratio(1, 2))),
            _ => None,
        }
    }

    /// Short name used in JSON and on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            BasisFamily::Standard => "standard",
            BasisFamily::Hermite => "hermite",
            BasisFamily::Jacobi { .. } => "jacobi",
            BasisFamily::Ultraspherical { .. } => "ultraspherical",
            BasisFamily::Legendre => "legendre",
            BasisFamily::ChebyshevT => "chebyshev-t",
            BasisFamily::ChebyshevU => "chebyshev-u",
            BasisFamily::GenLaguerre { .. } => "gen-laguerre",
            BasisFamily::Custom { .. } => "custom",
        }
    }
}

impl fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = rational::to_string;
        match self {
            BasisFamily::Jacobi { alpha, beta } => write!(f, "jacobi({}, {})", r(alpha), r(beta)),
            BasisFamily::Ultraspherical { lambda } => write!(f, "ultraspherical({})", r(lambda)),
            BasisFamily::GenLaguerre { alpha } => write!(f, "gen-laguerre({})", r(alpha)),
            BasisFamily::Custom { polys } => write!(f, "custom[{}]", polys.len()),
            other => f.write_str(other.name()),
        }
    }
}

type Memo = RwLock<HashMap<(BasisFamily, usize), Poly>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// The `n`-th element of `family` in the standard basis.
pub fn basis_poly(family: &BasisFamily, n: usize) -> Result<Poly> {
    family.validate()?;
    if let BasisFamily::Custom { polys } = family {
        return polys.get(n).cloned().ok_or_else(|| {
            Error::NotSimpleSet(format!("no element of degree {n} among {}", polys.len()))
        });
    }
    let key = (family.clone(), n);
    if let Some(p) = memo().read().expect("memo lock").get(&key) {
        return Ok(p.clone());
    }
    let p = generate(family, n);
    memo().write().expect("memo lock").insert(key, p.clone());
    Ok(p)
}

/// Uncached generation; `family` is already validated and not custom.
fn generate(family: &BasisFamily, n: usize) -> Poly {
    match family {
        BasisFamily::Standard => Poly::monomial(Rational::one(), n),
        BasisFamily::Hermite => hermite(n),
        BasisFamily::Jacobi { alpha, beta } => jacobi(alpha, beta, n),
        BasisFamily::Ultraspherical { lambda } => jacobi(lambda, lambda, n),
        BasisFamily::Legendre => jacobi(&Rational::zero(), &Rational::zero(), n),
        BasisFamily::ChebyshevT => {
            let half = ratio(-1, 2);
            let scale = factorial(n) / rising_factorial(&ratio(1, 2), n);
            jacobi(&half, &half, n).scale(&scale)
        }
        BasisFamily::ChebyshevU => {
            let half = ratio(1, 2);
            let scale = factorial(n + 1) / rising_factorial(&ratio(3, 2), n);
            jacobi(&half, &half, n).scale(&scale)
        }
        BasisFamily::GenLaguerre { alpha } => gen_laguerre(alpha, n),
        BasisFamily::Custom { .. } => unreachable!("custom families are not generated"),
    }
}

fn jacobi(alpha: &Rational, beta: &Rational, n: usize) -> Poly {
    let half = ratio(1, 2);
    let minus = Poly::linear(half.clone(), -half.clone()); // (x-1)/2
    let plus = Poly::linear(half.clone(), half); // (x+1)/2
    let top_a = alpha + int(n as i64);
    let top_b = beta + int(n as i64);
    (0..=n)
        .map(|k| {
            let c = binomial(&top_a, n - k) * binomial(&top_b, k);
            (&minus.pow(k as u32) * &plus.pow((n - k) as u32)).scale(&c)
        })
        .sum()
}

fn hermite(n: usize) -> Poly {
    let two_x = Poly::monomial(int(2), 1);
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for k in 1..n {
        let next = &(&two_x * &cur) - &prev.scale(&int(2 * k as i64));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn gen_laguerre(alpha: &Rational, n: usize) -> Poly {
    let top = alpha + int(n as i64);
    let coeffs = (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            binomial(&top, n - k) * sign / factorial(k)
        })
        .collect();
    Poly::new(coeffs)
}

/// Coordinates `d_0..d_m` of `p` in `family`, so that `p = Σ d_k b_k`.
///
/// Back-substitution on the triangular change-of-basis system, from the top
/// degree down. The zero polynomial has no coordinates.
pub fn expand_in_basis(p: &Poly, family: &BasisFamily) -> Result<Vec<Rational>> {
    let Some(deg) = p.degree() else {
        family.validate()?;
        return Ok(Vec::new());
    };
    let mut rest = p.clone();
    let mut out = vec![Rational::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let c = rest.coeff(k);
        if c.is_zero() {
            continue;
        }
        let b = basis_poly(family, k)?;
        let d = c / b.leading_coeff().expect("basis element is nonzero");
        rest = &rest - &b.scale(&d);
        out[k] = d;
    }
    debug_assert!(rest.is_zero());
    Ok(out)
}

/// Inverse of [`expand_in_basis`]: `Σ d_k b_k`.
pub fn combine(coords: &[Rational], family: &BasisFamily) -> Result<Poly> {
    let mut acc = Poly::zero();
    for (k, d) in coords.iter().enumerate() {
        if !d.is_zero() {
            acc = &acc + &basis_poly(family, k)?.scale(d);
        }
    }
    Ok(acc)
}
