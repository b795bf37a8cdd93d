//! Regression tests for the discrepancies recorded in FINDINGS.md.

use qfib::{
    binom, ClosedForm, FibonomialReading, Monomial, Poly, SignedMonomial, Status, Verifier,
};

#[test]
fn theorem2_printed_exponent_is_off_by_a_q_power() {
    let v = Verifier::new();
    for k in 1..=3 {
        for ell in 1..=2 {
            for (n, m) in [(-1, 1), (0, 2), (2, 1)] {
                let r = v.verify_theorem2(n, m, ell, k, ClosedForm::Printed);
                let delta = -6 * binom(k + 2, 4) * binom(ell, 2);
                if delta == 0 {
                    assert_eq!(r.status, Status::Zero, "{r:?}");
                } else {
                    assert_eq!(r.residual, format!("q^{delta}"), "{r:?}");
                }
                assert!(v
                    .verify_theorem2(n, m, ell, k, ClosedForm::Derived)
                    .is_zero());
            }
        }
    }
}

#[test]
fn second_d_relation_needs_the_binomial_exponent() {
    let v = Verifier::new();
    for m in 1..=2 {
        for k in 1..=3 {
            for j in 1..=k {
                let printed = v.verify_d_relations(m, k, j, ClosedForm::Printed);
                assert_eq!(printed.is_zero(), k == 2, "{printed:?}");
                if !printed.is_zero() {
                    // lhs / rhs = (-s)^(m binom(k, 2) - m)
                    let e = m * binom(k, 2) - m;
                    let expected =
                        Poly::from(SignedMonomial::with_parity(e, Monomial::sq(e as i32, 0)));
                    assert_eq!(printed.residual.parse::<Poly>().unwrap(), expected);
                }
                assert!(v.verify_d_relations(m, k, j, ClosedForm::Derived).is_zero());
            }
            assert!(v.verify_d_relations(m, k, 0, ClosedForm::Printed).is_zero());
        }
    }
}

#[test]
fn literal_unshifted_coefficients_fail() {
    let v = Verifier::new();
    assert!(v.corollary1_literal_relation(1, 2).unwrap().is_zero());
    assert!(!v.corollary1_literal_relation(4, 1).unwrap().is_zero());
    assert!(!v.corollary1_literal_relation(5, 2).unwrap().is_zero());
    assert!(v.corollary1_relation(5, 2).unwrap().is_zero());
}

#[test]
fn only_the_fixed_shift_reading_works() {
    let v = Verifier::new();
    for (n, k, ell) in [(5, 2, 1), (6, 1, 2), (6, 2, 2), (8, 2, 3)] {
        assert!(v
            .verify_theorem3(n, k, ell, FibonomialReading::FixedShift)
            .is_zero());
        assert_eq!(
            v.verify_theorem3(n, k, ell, FibonomialReading::VaryingShift)
                .status,
            Status::Residual
        );
    }
}

#[test]
fn q_fibonomials_need_not_be_polynomials() {
    let v = Verifier::new();
    assert!(v
        .seq
        .qfibonomial(4, 1, 1, FibonomialReading::FixedShift)
        .is_err());
    assert!(v
        .seq
        .qfibonomial(3, 1, 1, FibonomialReading::FixedShift)
        .is_ok());
    assert!(v.verify_theorem1(6, 3).is_zero());
}
