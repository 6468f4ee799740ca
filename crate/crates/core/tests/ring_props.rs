mod common;

use common::*;
use knotsum::ring::{equal_up_to_unit, ExpVector, IntPoly, Integer, LaurentPoly, UnitMatch, Vars};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn uxd_ring_axioms(a in uxd_poly(), b in uxd_poly(), c in uxd_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, IntPoly::zero(Vars::uxd()));
        prop_assert_eq!(&a * &IntPoly::one(Vars::uxd()), a.clone());
    }

    #[test]
    fn cyclotomic_reduction_is_a_homomorphism(a in zeta_poly(), b in zeta_poly(), order in 2u32..=12) {
        let sv = |v| LaurentPoly::constant(Vars::s(), v);
        prop_assert_eq!(
            &sv(reduce(&a, order)) * &sv(reduce(&b, order)),
            sv(reduce(&poly_mul_plain(&a, &b), order))
        );
        prop_assert_eq!(
            &sv(reduce(&a, order)) + &sv(reduce(&b, order)),
            sv(reduce(&poly_add_plain(&a, &b), order))
        );
    }

    #[test]
    fn cyclotomic_polys_commute(a in cyc_poly(6), b in cyc_poly(6)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn json_roundtrip(a in uxd_poly(), c in cyc_poly(5)) {
        prop_assert_eq!(IntPoly::from_json_str(&a.to_json_string()).unwrap(), a);
        prop_assert_eq!(LaurentPoly::from_json_str(&c.to_json_string()).unwrap(), c);
    }

    #[test]
    fn unit_witness_maps_first_to_second(a in uxd_poly(), shift in prop::array::uniform3(-4i32..=4), neg in any::<bool>()) {
        let unit = if neg { Integer::from(-1) } else { Integer::ONE };
        let b = a.mul_monomial(&shift, &unit);
        match equal_up_to_unit(&a, &b) {
            UnitMatch::BothZero => prop_assert!(a.is_zero()),
            UnitMatch::Equal(w) => prop_assert_eq!(a.mul_monomial(&w.shift, &w.unit), b),
            UnitMatch::NotEqual => prop_assert!(false, "missed unit multiple"),
        }
    }

    #[test]
    fn non_units_are_rejected(a in uxd_poly()) {
        prop_assume!(!a.is_zero());
        let twice = a.scale(&Integer::from(2));
        prop_assert!(!equal_up_to_unit(&a, &twice).is_equal());
    }
}

#[test]
fn big_coefficients_do_not_overflow() {
    let x = IntPoly::from_terms(
        Vars::q(),
        [(ExpVector::from_slice(&[1]), Integer::from(i64::MAX))],
    );
    let sq = &x * &x;
    let c = sq.coeff(&[2]).unwrap();
    assert_eq!(c.as_i64(), None);
    assert_eq!(c.to_string(), "85070591730234615847396907784232501249");
}

#[test]
fn mixed_rings_are_rejected() {
    let a = IntPoly::one(Vars::q());
    let b = IntPoly::one(Vars::t());
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_mul(&b).is_err());
}
