mod common;

use common::{nonzero_poly, nonzero_rat, p, poly, rat};
use czds::rational::{self, int, ratio};
use czds::Poly;
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_laws(a in poly(6), b in poly(6), c in poly(6)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn eval_is_a_ring_homomorphism(a in poly(6), b in poly(6), x in rat()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn division_with_remainder(a in poly(8), b in nonzero_poly(4)) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_and_contains_common_factor(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let ac = &a * &c;
        let bc = &b * &c;
        let g = ac.gcd(&bc);
        prop_assert!(ac.exact_div(&g).unwrap().is_some());
        prop_assert!(bc.exact_div(&g).unwrap().is_some());
        prop_assert!(g.exact_div(&c).unwrap().is_some());
        prop_assert_eq!(g.leading_coeff().cloned(), Some(int(1)));
    }

    #[test]
    fn leibniz_rule(a in poly(6), b in poly(6)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn affine_substitution(a in poly(6), s in nonzero_rat(), t in rat(), x in rat()) {
        let sub = a.affine_substitute(&s, &t).unwrap();
        prop_assert_eq!(sub.eval(&x), a.eval(&(&s * &x + &t)));
    }

    #[test]
    fn json_roundtrip(a in poly(8)) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), a);
    }

    #[test]
    fn rational_text_roundtrip(r in rat()) {
        prop_assert_eq!(rational::parse(&rational::to_string(&r)).unwrap(), r);
    }
}

#[test]
fn json_shape() {
    let q = Poly::new(vec![ratio(1, 2), int(0), int(-3)]);
    assert_eq!(
        serde_json::to_string(&q).unwrap(),
        r#"{"coeffs":["1/2","0","-3"]}"#
    );
    assert_eq!(
        serde_json::from_str::<Poly>(r#"{"coeffs":[1,0,1]}"#).unwrap(),
        p(&[1, 0, 1])
    );
    assert_eq!(
        serde_json::to_string(&Poly::zero()).unwrap(),
        r#"{"coeffs":[]}"#
    );
    assert!(serde_json::from_str::<Poly>(r#"{"coeffs":["1/0"]}"#).is_err());
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(p(&[1, 1]).div_rem(&Poly::zero()).is_err());
    assert!(p(&[1, 1]).affine_substitute(&int(0), &int(1)).is_err());
}
