//! Randomized ring-axiom checks shared by the property tests and the
//! acceptance runner.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use qfib::{Monomial, Poly, Poly128, QSubst};

pub fn poly(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..4, -3i32..4, -3i32..4), -20i64..21), 0..max_terms).prop_map(
        |terms| {
            Poly::from_terms(
                terms
                    .into_iter()
                    .map(|((ex, es, eq), c)| (Monomial::new(ex, es, eq), BigInt::from(c))),
            )
        },
    )
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    (prop_oneof![-7i64..0, 1i64..8], 1i64..6)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn check(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

type Case = (
    Poly,
    Poly,
    Poly,
    (i32, i32),
    (BigRational, BigRational, BigRational),
);

fn case() -> impl Strategy<Value = Case> {
    (
        poly(6),
        poly(6),
        poly(6),
        (-4i32..5, -4i32..5),
        (nonzero_rational(), nonzero_rational(), nonzero_rational()),
    )
}

fn one_case((a, b, c, (k1, k2), (x, s, q)): Case) -> Result<(), TestCaseError> {
    let zero = Poly::zero();
    let one = Poly::one();
    check(&a + &b == &b + &a, "addition commutes")?;
    check((&a + &b) + &c == &a + (&b + &c), "addition associates")?;
    check(&a * &b == &b * &a, "multiplication commutes")?;
    check(
        (&a * &b) * &c == &a * (&b * &c),
        "multiplication associates",
    )?;
    check(&a * (&b + &c) == &a * &b + &a * &c, "distributivity")?;
    check(&a + &zero == a && &a * &one == a, "identities")?;
    check(
        (&a + &(-&a)).is_zero() && (&a - &b) + &b == a,
        "additive inverse",
    )?;
    check(a.pow(3) == &a * &a * &a, "powers")?;
    if !b.is_zero() {
        check(
            (&a * &b).exact_div(&b).ok() == Some(a.clone()),
            "exact_div inverts multiplication",
        )?;
    }
    check(
        a.subst_s_scale(k1).subst_s_scale(k2) == a.subst_s_scale(k1 + k2),
        "s-scalings compose",
    )?;
    check(
        (&a * &b).subst_s_scale(k1) == a.subst_s_scale(k1) * b.subst_s_scale(k1),
        "s-scaling is multiplicative",
    )?;
    check(
        a.subst_q_value(QSubst::Inverse)
            .subst_q_value(QSubst::Inverse)
            == a,
        "q -> 1/q is an involution",
    )?;
    check(
        (&a * &b).subst_q_value(QSubst::Inverse)
            == a.subst_q_value(QSubst::Inverse) * b.subst_q_value(QSubst::Inverse),
        "q -> 1/q is multiplicative",
    )?;
    check(
        (&a * &b).subst_q_value(QSubst::One)
            == a.subst_q_value(QSubst::One) * b.subst_q_value(QSubst::One),
        "q -> 1 is multiplicative",
    )?;
    let ev = |p: &Poly| p.eval_rational(&x, &s, &q).unwrap();
    check(
        ev(&(&a * &b)) == ev(&a) * ev(&b) && ev(&(&a + &b)) == ev(&a) + ev(&b),
        "evaluation is a homomorphism",
    )?;
    check(
        ev(&a.subst_s_scale(k1)) == a.eval_rational(&x, &(&s * pow(&q, k1)), &q).unwrap(),
        "s-scaling evaluates",
    )?;
    let text = a.to_string();
    check(
        text.parse::<Poly>().ok() == Some(a.clone()),
        "text parses back",
    )?;
    check((text == b.to_string()) == (a == b), "text is injective")?;
    let (a128, b128): (Poly128, Poly128) = (a.convert().unwrap(), b.convert().unwrap());
    check(
        (a128 * b128).convert::<BigInt>() == Some(&a * &b),
        "i128 arithmetic agrees",
    )?;
    Ok(())
}

fn pow(q: &BigRational, k: i32) -> BigRational {
    if k >= 0 {
        num_traits::pow(q.clone(), k as usize)
    } else {
        num_traits::pow(q.recip(), k.unsigned_abs() as usize)
    }
}

/// Runs `cases` random cases, each checking every property above.
pub fn ring_properties(cases: u32) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&case(), one_case).map_err(|e| e.to_string())
}
