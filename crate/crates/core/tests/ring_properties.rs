mod common;

#[test]
fn ring_axioms_hold_on_random_polynomials() {
    common::ring_properties(1000).unwrap();
}
