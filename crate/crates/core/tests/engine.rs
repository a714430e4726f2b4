mod common;

use common::{brute_force_violation, exhaustive_corpus, nonzero_rat, p, poly, rat};
use czds::characterize::{Certificate, Failure};
use czds::de::{basis_from_de, de_gamma, de_operator};
use czds::rational::{int, ratio};
use czds::verify::verify_sequence;
use czds::{
    basis_poly, characterize_standard_czds, diagonal_apply, gamma, operator_form,
    sharpness_counterexample, zero_counts, BasisFamily, CorpusSpec, Error, Poly, SequenceSpec,
    Verdict,
};
use proptest::prelude::*;

/// Every `(spec, family)` pair with a differential realization.
fn supported_pairs() -> Vec<(SequenceSpec, BasisFamily)> {
    let h = p(&[2, 3, 1]);
    let mut pairs = Vec::new();
    for fam in [
        BasisFamily::Standard,
        BasisFamily::Hermite,
        BasisFamily::gen_laguerre(ratio(1, 2)),
    ] {
        pairs.push((
            SequenceSpec::AffineShift { alpha: ratio(7, 3) },
            fam.clone(),
        ));
        pairs.push((SequenceSpec::PolynomialInterp { h: h.clone() }, fam));
    }
    for (a, b) in [
        (int(0), int(0)),
        (ratio(1, 2), ratio(-1, 2)),
        (int(2), int(3)),
    ] {
        pairs.push((
            SequenceSpec::JacobiEigen {
                alpha: a.clone(),
                beta: b.clone(),
            },
            BasisFamily::jacobi(a, b),
        ));
    }
    pairs.push((
        SequenceSpec::JacobiEigen {
            alpha: int(0),
            beta: int(0),
        },
        BasisFamily::Legendre,
    ));
    for lambda in [int(0), ratio(1, 2), ratio(-1, 2), int(2)] {
        pairs.push((
            SequenceSpec::UltraProduct {
                lambda: lambda.clone(),
                m: vec![1, 2],
            },
            BasisFamily::ultraspherical(lambda),
        ));
    }
    pairs.push((
        SequenceSpec::LegendreProduct { m: vec![2, 1] },
        BasisFamily::Legendre,
    ));
    pairs.push((
        SequenceSpec::ChebyTProduct { m: vec![1, 1] },
        BasisFamily::ChebyshevT,
    ));
    pairs.push((
        SequenceSpec::ChebyUProduct { m: vec![1, 1, 1] },
        BasisFamily::ChebyshevU,
    ));
    for alpha in [int(0), ratio(1, 2), int(2)] {
        pairs.push((
            SequenceSpec::LaguerreProduct { m: vec![2, 1] },
            BasisFamily::gen_laguerre(alpha),
        ));
    }
    pairs
}

#[test]
fn diagonality() {
    for (spec, family) in supported_pairs() {
        let op = operator_form(&spec, &family).unwrap();
        for k in 0..=10 {
            let bk = basis_poly(&family, k).unwrap();
            assert_eq!(
                op.apply(&bk),
                bk.scale(&gamma(&spec, k)),
                "{spec} on {family}, k = {k}"
            );
            assert_eq!(
                diagonal_apply(&spec, &family, &bk).unwrap(),
                bk.scale(&gamma(&spec, k))
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn diagonal_apply_equals_operator_form(q in poly(10)) {
        for (spec, family) in supported_pairs() {
            let op = operator_form(&spec, &family).unwrap();
            prop_assert_eq!(op.apply(&q), diagonal_apply(&spec, &family, &q).unwrap(), "{} on {}", spec, family);
        }
    }

    #[test]
    fn counterexample_is_strict(num in 1i64..40, den in 1i64..7) {
        let alpha = ratio(-num, den);
        let ce = sharpness_counterexample(&alpha).unwrap();
        prop_assert_eq!(ce.zr_f, ce.n);
        prop_assert_eq!(ce.bound, ce.n + 2);
        prop_assert!(ce.strict_failure);
        prop_assert!(&alpha + int(ce.n as i64) < int(0));
        prop_assert!(&alpha + int(ce.n as i64 + 1) >= int(0));
    }

    #[test]
    fn de_solutions_satisfy_the_equation(
        roots in prop::collection::vec(rat(), 1..4),
        lead in nonzero_rat(),
        alpha in (0i64..8, 1i64..4).prop_map(|(a, b)| ratio(a, b)),
    ) {
        let q = Poly::from_roots(&roots).scale(&lead);
        let report = basis_from_de(&q, &alpha, 7).unwrap();
        for s in &report.solutions {
            prop_assert_eq!(&s.gamma_n, &de_gamma(&q, &alpha, s.n).unwrap());
            prop_assert_eq!(s.solution_dim, s.basis_of_solutions.len());
            for b in &s.basis_of_solutions {
                prop_assert!(b.degree().unwrap() <= s.n);
                prop_assert_eq!(de_operator(&q, &alpha, b), b.scale(&s.gamma_n));
            }
        }
    }
}

#[test]
fn small_worked_examples() {
    let legendre = BasisFamily::Legendre;
    let p2 = basis_poly(&legendre, 2).unwrap();
    let jac = SequenceSpec::JacobiEigen {
        alpha: int(0),
        beta: int(0),
    };
    assert_eq!(
        diagonal_apply(&jac, &legendre, &p2).unwrap(),
        p2.scale(&int(6))
    );
    let q = p(&[3, -1, 4, 1, -5]);
    let shift0 = SequenceSpec::AffineShift { alpha: int(0) };
    assert_eq!(
        diagonal_apply(&shift0, &BasisFamily::Standard, &q).unwrap(),
        &Poly::x() * &q.derivative()
    );
    let ultra = SequenceSpec::UltraProduct {
        lambda: ratio(1, 3),
        m: vec![1],
    };
    let phi_d = czds::operators::phi(&ratio(1, 3)).compose(&czds::DiffOp::d());
    assert_eq!(
        operator_form(&ultra, &BasisFamily::ultraspherical(ratio(1, 3))).unwrap(),
        phi_d
    );
}

#[test]
fn no_operator_form_for_mismatched_pairs() {
    let interp = SequenceSpec::PolynomialInterp { h: p(&[1, 1]) };
    assert!(matches!(
        operator_form(&interp, &BasisFamily::Legendre),
        Err(Error::NoOperatorForm(_))
    ));
    let lag = SequenceSpec::LaguerreProduct { m: vec![1] };
    assert!(matches!(
        operator_form(&lag, &BasisFamily::Hermite),
        Err(Error::NoOperatorForm(_))
    ));
    let jac = SequenceSpec::JacobiEigen {
        alpha: int(1),
        beta: int(0),
    };
    assert!(matches!(
        operator_form(&jac, &BasisFamily::Legendre),
        Err(Error::NoOperatorForm(_))
    ));
}

#[test]
fn legendre_identity() {
    for n in 0..=30i64 {
        for k in 0..=30i64 {
            assert_eq!(n * (n + 1) - k * (k + 1), (n + k + 1) * (n - k));
            let spec = SequenceSpec::LegendreProduct {
                m: vec![1; k as usize + 1],
            };
            let ultra = SequenceSpec::UltraProduct {
                lambda: int(0),
                m: vec![1; k as usize + 1],
            };
            assert_eq!(gamma(&spec, n as usize), gamma(&ultra, n as usize));
        }
    }
}

/// Curated polynomials: both cases of the criterion, near misses, and
/// plainly failing inputs.
fn curated_h() -> Vec<Poly> {
    let r = |v: &[Rational]| Poly::from_roots(v);
    use czds::Rational;
    let mut hs = vec![
        p(&[1]),
        p(&[-2]),
        p(&[1, 1]),
        p(&[3, 1]),
        p(&[-2, 1]),
        p(&[0, 1]),
        p(&[1, 2, 1]),
        p(&[2, 3, 1]),
        p(&[6, 11, 6, 1]),
        p(&[1, 0, 1]),
        p(&[1, 1, 1]),
        p(&[0, 0, 1]),
        p(&[0, -1, 1]),
        p(&[0, 2, -3, 1]),
        p(&[0, -1, 0, 1]),
        p(&[0, 1, 0, 1]),
        p(&[-1, 0, 1]),
        p(&[1, -3, 1]),
        p(&[5, 5, 1]),
        p(&[0, 0, 0, 1]),
    ];
    let falling = |m: i64, extra: &[Rational]| {
        let mut roots: Vec<Rational> = (0..m).map(int).collect();
        roots.extend_from_slice(extra);
        r(&roots)
    };
    hs.push(falling(2, &[ratio(1, 2)]));
    hs.push(falling(2, &[int(1)]));
    hs.push(falling(2, &[ratio(3, 2)]));
    hs.push(falling(2, &[int(2)]));
    hs.push(falling(2, &[int(3)]));
    hs.push(falling(3, &[ratio(5, 2)]));
    hs.push(falling(3, &[int(-4)]));
    hs.push(falling(1, &[ratio(-1, 3), ratio(1, 2)]));
    hs.push(falling(1, &[ratio(3, 2)]));
    hs.push(falling(4, &[]));
    hs.push(&falling(1, &[]) * &p(&[1, 0, 1]));
    hs.push(&falling(2, &[]) * &p(&[2, 2, 1]));
    hs.push(r(&[int(-1), int(-2), int(-3), int(-4)]));
    hs.push(r(&[ratio(-1, 2), ratio(-1, 2)]));
    hs.push(r(&[int(-1), int(2)]));
    hs.push(r(&[int(-1), int(1)]));
    hs.push(r(&[ratio(1, 2)]));
    hs.push(r(&[int(-3), int(-3), int(-3)]));
    hs.push(&r(&[int(-1)]) * &p(&[1, 0, 1]));
    hs.push(p(&[4, 4, 1]).scale(&int(-3)));
    hs.push(falling(2, &[ratio(-7, 2), int(1)]));
    hs.push(falling(1, &[int(0), int(0)]));
    hs.push(falling(1, &[int(1)]));
    hs.push(falling(3, &[int(3)]));
    hs.push(r(&[int(0), int(2)]));
    hs.push(r(&[int(0), int(-1), int(1)]));
    hs.push(r(&[int(1), int(2)]));
    hs.push(r(&[int(0), int(1), int(3)]));
    hs.push(p(&[0, 3, 0, 0, 1]));
    hs.push(p(&[1, 4, 6, 4, 1]));
    hs
}

#[test]
fn characterization_worked_examples() {
    assert_eq!(
        characterize_standard_czds(&p(&[1, 1])).unwrap(),
        Verdict::Czds {
            certificate: Certificate::NegativeRealZeros
        }
    );
    assert!(matches!(
        characterize_standard_czds(&p(&[-2, 1])).unwrap(),
        Verdict::NotCzds {
            failure: Failure::ZeroNotNegative { .. }
        }
    ));
    let h = Poly::from_roots(&[int(0), int(1), ratio(1, 2)]);
    match characterize_standard_czds(&h).unwrap() {
        Verdict::Czds {
            certificate: Certificate::FallingFactorial { m, residual },
        } => {
            assert_eq!(m, 2);
            assert_eq!(residual, Poly::linear(int(1), ratio(-1, 2)));
        }
        other => panic!("unexpected {other:?}"),
    }
}

// One-sided: brute force can only refute a "true" verdict.
#[test]
fn characterization_agrees_with_brute_force() {
    let corpus = exhaustive_corpus(5);
    let hs = curated_h();
    assert!(hs.len() >= 50);
    let mut classified_true = 0;
    let mut refuted_false = 0;
    for h in &hs {
        let verdict = characterize_standard_czds(h).unwrap();
        let witness = brute_force_violation(h, &corpus);
        if verdict.is_czds() {
            classified_true += 1;
            assert_eq!(witness, None, "h = {h} classified CZDS but refuted");
        } else if witness.is_some() {
            refuted_false += 1;
        }
    }
    assert!(classified_true >= 20);
    // The checker is not vacuous: most rejected h really fail.
    assert!(refuted_false >= 10, "{refuted_false}");
}

#[test]
fn de_reproduction() {
    let q = p(&[1, 3, 3, 1]);
    let report = basis_from_de(&q, &int(1), 8).unwrap();
    let dims: Vec<usize> = report.solutions.iter().map(|s| s.solution_dim).collect();
    assert_eq!(dims, vec![1, 2, 1, 1, 1, 1, 1, 1, 1]);
    for s in &report.solutions[2..] {
        assert_eq!(s.basis_of_solutions[0], p(&[1, 1]).pow(s.n as u32));
    }
    for n in 0..=8i64 {
        assert_eq!(
            de_gamma(&q, &int(1), n as usize).unwrap(),
            int((n + 1) * n * (n - 1))
        );
    }
    assert!(report.simple_set);
}

#[test]
fn sequence_campaign_is_deterministic() {
    let spec = SequenceSpec::ChebyTProduct { m: vec![1] };
    let corpus = CorpusSpec::new(40, 8, 21).unwrap();
    let a = verify_sequence(&spec, &BasisFamily::ChebyshevT, &corpus).unwrap();
    let b = verify_sequence(&spec, &BasisFamily::ChebyshevT, &corpus).unwrap();
    assert!(a.passed());
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn wrong_basis_campaign_reports_violations() {
    // {k + α} with α inside (-n, 0) is not a CZDS: Laguerre's hypothesis fails.
    let spec = SequenceSpec::AffineShift {
        alpha: ratio(-5, 2),
    };
    let corpus = CorpusSpec::new(60, 6, 1).unwrap();
    let report = verify_sequence(&spec, &BasisFamily::Standard, &corpus).unwrap();
    assert!(!report.passed());
    for v in &report.violations {
        assert_eq!(zero_counts(&v.output), v.after);
        assert!(v.after.nonreal > v.before.nonreal);
    }
}
