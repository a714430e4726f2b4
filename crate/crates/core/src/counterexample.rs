//! The family showing the real-zero lower bound for `q p' + α q' p` fails
//! for every negative `α`.
//!
//! With `p = x^n (x² + α)`, `q = x` and `n` the largest non-negative integer
//! with `α + n < 0`, the image `f = x^n ((α+n+2) x² + α(α+n))` has only `n`
//! real zeros while `Z_R(p) + Z_R(q) - 1 = n + 2`.

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::laguerre_op;
use crate::poly::Poly;
use crate::rational::{self, int, Rational};
use crate::zeros::zero_counts;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(with = "rational::serde_str")]
    pub alpha: Rational,
    pub n: usize,
    pub p: Poly,
    pub q: Poly,
    pub f: Poly,
    pub zr_p: usize,
    pub zr_q: usize,
    pub zr_f: usize,
    /// `Z_R(p) + Z_R(q) - 1`.
    pub bound: usize,
    /// `zr_f < bound`.
    pub strict_failure: bool,
}

pub fn sharpness_counterexample(alpha: &Rational) -> Result<Counterexample> {
    if !alpha.is_negative() {
        return Err(Error::NonNegativeAlpha);
    }
    // largest integer strictly below -α
    let neg = -alpha;
    let ceil = neg.ceil().to_integer();
    let n = (ceil - num_bigint::BigInt::from(1))
        .to_usize()
        .ok_or_else(|| Error::ParameterOutOfDomain("alpha is too large in magnitude".into()))?;
    let xn = Poly::monomial(int(1), n);
    let p = &xn * &Poly::new(vec![alpha.clone(), Rational::zero(), int(1)]);
    let q = Poly::x();
    let f = laguerre_op(q.clone(), alpha.clone()).apply(&p);
    let displayed = &xn
        * &Poly::new(vec![
            alpha * (alpha + int(n as i64)),
            Rational::zero(),
            alpha + int(n as i64 + 2),
        ]);
    debug_assert_eq!(f, displayed);
    let zr_p = zero_counts(&p).real;
    let zr_q = zero_counts(&q).real;
    let zr_f = zero_counts(&f).real;
    let bound = zr_p + zr_q - 1;
    Ok(Counterexample {
        alpha: alpha.clone(),
        n,
        p,
        q,
        f,
        zr_p,
        zr_q,
        zr_f,
        bound,
        strict_failure: zr_f < bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn worked_values() {
        let c = sharpness_counterexample(&ratio(-1, 2)).unwrap();
        assert_eq!(c.n, 0);
        assert_eq!(c.f, Poly::new(vec![ratio(1, 4), int(0), ratio(3, 2)]));
        assert_eq!((c.zr_f, c.bound), (0, 2));
        assert!(c.strict_failure);

        let c = sharpness_counterexample(&ratio(-3, 2)).unwrap();
        assert_eq!(c.n, 1);
        assert_eq!(
            c.f,
            Poly::new(vec![int(0), ratio(3, 4), int(0), ratio(3, 2)])
        );
        assert_eq!((c.zr_f, c.bound), (1, 3));

        let c = sharpness_counterexample(&ratio(-5, 2)).unwrap();
        assert_eq!((c.n, c.zr_f, c.bound), (2, 2, 4));
    }

    #[test]
    fn integer_alpha_boundary() {
        // α = -1: the largest n with n - 1 < 0 is 0
        let c = sharpness_counterexample(&int(-1)).unwrap();
        assert_eq!(c.n, 0);
        assert!(c.strict_failure);
    }

    #[test]
    fn rejects_non_negative_alpha() {
        assert_eq!(
            sharpness_counterexample(&int(0)),
            Err(Error::NonNegativeAlpha)
        );
        assert_eq!(
            sharpness_counterexample(&ratio(1, 3)),
            Err(Error::NonNegativeAlpha)
        );
    }
}
