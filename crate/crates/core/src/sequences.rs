//! CZDS sequence families, their diagonal action in a basis, and the
//! differential operators that realize them.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bases::{combine, expand_in_basis, BasisFamily};
use crate::error::{Error, Result};
use crate::operators::{euler, hermite_op, jacobi_op, phi, poly_of_operator, psi, DiffOp};
use crate::poly::Poly;
use crate::rational::{self, int, ratio, Rational};

/// A symbolic sequence `{γ_n}`, evaluable at any index.
///
/// The product variants take exponents `m = [m_0, .., m_{w-1}]`, all `≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SequenceSpec {
    /// `γ_n = n + α`.
    AffineShift {
        #[serde(with = "rational::serde_str")]
        alpha: Rational,
    },
    /// `γ_n = h(n)`.
    PolynomialInterp { h: Poly },
    /// `γ_n = n (n + 1 + α + β)`.
    JacobiEigen {
        #[serde(with = "rational::serde_str")]
        alpha: Rational,
        #[serde(with = "rational::serde_str")]
        beta: Rational,
    },
    /// `γ_n = Π_k (n(n+1+2λ) - k(k+1+2λ))^{m_k}`.
    UltraProduct {
        #[serde(with = "rational::serde_str")]
        lambda: Rational,
        m: Vec<u32>,
    },
    /// `γ_n = Π_k ((n+k+1)(n-k))^{m_k}`.
    LegendreProduct { m: Vec<u32> },
    /// `γ_n = Π_k (n² - k²)^{m_k}`.
    ChebyTProduct { m: Vec<u32> },
    /// `γ_n = Π_k (n(n+2) - k(k+2))^{m_k}`.
    ChebyUProduct { m: Vec<u32> },
    /// `γ_n = Π_k (n - k)^{m_k}`.
    LaguerreProduct { m: Vec<u32> },
}

impl SequenceSpec {
    pub fn validate(&self) -> Result<()> {
        let check_m = |m: &[u32]| {
            if m.is_empty() {
                Err(Error::InvalidSequence(
                    "exponent list m must be nonempty".into(),
                ))
            } else if m.contains(&0) {
                Err(Error::InvalidSequence(
                    "exponents m_k must be at least 1".into(),
                ))
            } else {
                Ok(())
            }
        };
        let above_minus_one = |name: &str, v: &Rational| {
            if *v > int(-1) {
                Ok(())
            } else {
                Err(Error::ParameterOutOfDomain(format!(
                    "{name} = {} must exceed -1",
                    rational::to_string(v)
                )))
            }
        };
        match self {
            SequenceSpec::AffineShift { .. } | SequenceSpec::PolynomialInterp { .. } => Ok(()),
            SequenceSpec::JacobiEigen { alpha, beta } => {
                above_minus_one("alpha", alpha)?;
                above_minus_one("beta", beta)
            }
            SequenceSpec::UltraProduct { lambda, m } => {
                above_minus_one("lambda", lambda)?;
                check_m(m)
            }
            SequenceSpec::LegendreProduct { m }
            | SequenceSpec::ChebyTProduct { m }
            | SequenceSpec::ChebyUProduct { m }
            | SequenceSpec::LaguerreProduct { m } => check_m(m),
        }
    }

    /// `λ` of the ultraspherical family the variant is built on, if any.
    fn ultra_lambda(&self) -> Option<Rational> {
        match self {
            SequenceSpec::UltraProduct { lambda, .. } => Some(lambda.clone()),
            SequenceSpec::LegendreProduct { .. } => Some(Rational::zero()),
            SequenceSpec::ChebyTProduct { .. } => Some(ratio(-1, 2)),
            SequenceSpec::ChebyUProduct { .. } => Some(ratio(1, 2)),
            _ => None,
        }
    }

    fn exponents(&self) -> Option<&[u32]> {
        match self {
            SequenceSpec::UltraProduct { m, .. }
            | SequenceSpec::LegendreProduct { m }
            | SequenceSpec::ChebyTProduct { m }
            | SequenceSpec::ChebyUProduct { m }
            | SequenceSpec::LaguerreProduct { m } => Some(m),
            _ => None,
        }
    }

    /// The basis the sequence is stated for, when it has a canonical one.
    pub fn natural_basis(&self) -> Option<BasisFamily> {
        match self {
            SequenceSpec::JacobiEigen { alpha, beta } => {
                Some(BasisFamily::jacobi(alpha.clone(), beta.clone()))
            }
            SequenceSpec::UltraProduct { lambda, .. } => {
                Some(BasisFamily::ultraspherical(lambda.clone()))
            }
            SequenceSpec::LegendreProduct { .. } => Some(BasisFamily::Legendre),
            SequenceSpec::ChebyTProduct { .. } => Some(BasisFamily::ChebyshevT),
            SequenceSpec::ChebyUProduct { .. } => Some(BasisFamily::ChebyshevU),
            _ => None,
        }
    }

    /// Command-line name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            SequenceSpec::AffineShift { .. } => "affine-shift",
            SequenceSpec::PolynomialInterp { .. } => "polynomial-interp",
            SequenceSpec::JacobiEigen { .. } => "jacobi-eigen",
            SequenceSpec::UltraProduct { .. } => "ultra-product",
            SequenceSpec::LegendreProduct { .. } => "legendre-product",
            SequenceSpec::ChebyTProduct { .. } => "cheby-t-product",
            SequenceSpec::ChebyUProduct { .. } => "cheby-u-product",
            SequenceSpec::LaguerreProduct { .. } => "laguerre-product",
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = rational::to_string;
        match self {
            SequenceSpec::AffineShift { alpha } => write!(f, "affine-shift({})", r(alpha)),
            SequenceSpec::PolynomialInterp { h } => write!(f, "polynomial-interp({h})"),
            SequenceSpec::JacobiEigen { alpha, beta } => {
                write!(f, "jacobi-eigen({}, {})", r(alpha), r(beta))
            }
            SequenceSpec::UltraProduct { lambda, m } => {
                write!(f, "ultra-product({}, {m:?})", r(lambda))
            }
            other => write!(
                f,
                "{}({:?})",
                other.kind(),
                other.exponents().unwrap_or_default()
            ),
        }
    }
}

/// The value `γ_n`.
///
/// Product variants vanish for `n < w`, because the `k = n` factor is zero.
pub fn gamma(spec: &SequenceSpec, n: usize) -> Rational {
    let nn = int(n as i64);
    match spec {
        SequenceSpec::AffineShift { alpha } => &nn + alpha,
        SequenceSpec::PolynomialInterp { h } => h.eval(&nn),
        SequenceSpec::JacobiEigen { alpha, beta } => &nn * (&nn + int(1) + alpha + beta),
        SequenceSpec::LaguerreProduct { m } => product(m, |k| &nn - int(k as i64)),
        _ => {
            let lambda = spec.ultra_lambda().expect("ultraspherical product variant");
            let m = spec.exponents().expect("product variant");
            let eig = |j: &Rational| j * (j + int(1) + &lambda * int(2));
            let top = eig(&nn);
            product(m, |k| &top - eig(&int(k as i64)))
        }
    }
}

fn product(m: &[u32], factor: impl Fn(usize) -> Rational) -> Rational {
    m.iter().enumerate().fold(Rational::one(), |acc, (k, &mk)| {
        let f = factor(k);
        (0..mk).fold(acc, |a, _| a * &f)
    })
}

/// The operator diagonal in `family` with eigenvalues `γ_k`, applied to `p`.
///
/// Works for any simple-set family, whether or not the sequence is a CZDS
/// for it.
pub fn diagonal_apply(spec: &SequenceSpec, family: &BasisFamily, p: &Poly) -> Result<Poly> {
    spec.validate()?;
    let mut coords = expand_in_basis(p, family)?;
    for (k, d) in coords.iter_mut().enumerate() {
        if !d.is_zero() {
            *d *= gamma(spec, k);
        }
    }
    combine(&coords, family)
}

/// `Π_k (Φ_λ D - k(k+1+2λ) I)^{m_k}`, the unfactored ultraspherical product.
pub fn ultra_product_expanded(lambda: &Rational, m: &[u32]) -> DiffOp {
    let e = phi(lambda).compose(&DiffOp::d());
    let factors: Vec<DiffOp> = m
        .iter()
        .enumerate()
        .map(|(k, &mk)| {
            let kk = int(k as i64);
            let shift = &kk * (&kk + int(1) + lambda * int(2));
            e.sub(&DiffOp::scalar(shift)).pow(mk as usize)
        })
        .collect();
    DiffOp::product(&factors)
}

/// `[Π_k (Φ_{λ+k} D)^{m_k - 1} Φ_{λ+k}] D^w`.
pub fn ultra_product_factored(lambda: &Rational, m: &[u32]) -> DiffOp {
    factored(m, |k| phi(&(lambda + int(k as i64))))
}

/// `Π_k (Ψ_α D - k I)^{m_k}`.
pub fn laguerre_product_expanded(alpha: &Rational, m: &[u32]) -> DiffOp {
    let e = psi(alpha).compose(&DiffOp::d());
    let factors: Vec<DiffOp> = m
        .iter()
        .enumerate()
        .map(|(k, &mk)| e.sub(&DiffOp::scalar(int(k as i64))).pow(mk as usize))
        .collect();
    DiffOp::product(&factors)
}

/// `[Π_k (Ψ_{α+k} D)^{m_k - 1} Ψ_{α+k}] D^w`.
pub fn laguerre_product_factored(alpha: &Rational, m: &[u32]) -> DiffOp {
    factored(m, |k| psi(&(alpha + int(k as i64))))
}

fn factored(m: &[u32], first_order: impl Fn(usize) -> DiffOp) -> DiffOp {
    let d = DiffOp::d();
    let mut parts = Vec::new();
    for (k, &mk) in m.iter().enumerate() {
        let f = first_order(k);
        let fd = f.compose(&d);
        parts.push(fd.pow(mk as usize - 1).compose(&f));
    }
    parts.push(DiffOp::d_pow(m.len()));
    DiffOp::product(&parts)
}

/// A differential operator `T` with `T(b_k) = γ_k b_k` for every element of
/// `family`, built from the known factorizations.
pub fn operator_form(spec: &SequenceSpec, family: &BasisFamily) -> Result<DiffOp> {
    spec.validate()?;
    family.validate()?;
    let unsupported = || Error::NoOperatorForm(format!("{spec} on {family}"));
    match spec {
        SequenceSpec::AffineShift { alpha } => {
            if *family == BasisFamily::Standard {
                return Ok(euler().add(&DiffOp::scalar(alpha.clone())));
            }
            let h = Poly::linear(Rational::one(), alpha.clone());
            Ok(poly_of_operator(
                &h,
                &counting_operator(family).ok_or_else(unsupported)?,
            ))
        }
        SequenceSpec::PolynomialInterp { h } => Ok(poly_of_operator(
            h,
            &counting_operator(family).ok_or_else(unsupported)?,
        )),
        SequenceSpec::JacobiEigen { alpha, beta } => match family.jacobi_params() {
            Some((a, b)) if a == *alpha && b == *beta => Ok(jacobi_op(alpha, beta)),
            _ => Err(unsupported()),
        },
        SequenceSpec::LaguerreProduct { m } => match family {
            BasisFamily::GenLaguerre { alpha } => Ok(laguerre_product_factored(alpha, m)),
            _ => Err(unsupported()),
        },
        _ => {
            let lambda = spec.ultra_lambda().expect("ultraspherical product variant");
            let m = spec.exponents().expect("product variant");
            match family.jacobi_params() {
                Some((a, b)) if a == lambda && b == lambda => {
                    Ok(ultra_product_factored(&lambda, m))
                }
                _ => Err(unsupported()),
            }
        }
    }
}

/// An operator with eigenvalue exactly `n` on the `n`-th element of
/// `family`, for the families that have one.
fn counting_operator(family: &BasisFamily) -> Option<DiffOp> {
    match family {
        BasisFamily::Standard => Some(euler()),
        BasisFamily::Hermite => Some(hermite_op(&ratio(1, 2), &int(1), &int(0), &int(0))),
        BasisFamily::GenLaguerre { alpha } => Some(psi(alpha).compose(&DiffOp::d())),
        _ => None,
    }
}
