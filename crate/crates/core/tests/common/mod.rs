#![allow(dead_code)]

use knotsum::ring::{CycPoly, CyclotomicInt, ExpVector, IntPoly, Integer, LaurentPoly, Vars};
use proptest::prelude::*;

/// Polynomials in (u, x, d) with at most 8 terms and exponents in [-5, 5].
pub fn uxd_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((prop::array::uniform3(-5i32..=5), -20i64..=20), 0..=8).prop_map(
        |terms| {
            LaurentPoly::from_terms(
                Vars::uxd(),
                terms
                    .into_iter()
                    .map(|(e, c)| (ExpVector::from_slice(&e), Integer::from(c))),
            )
        },
    )
}

/// Polynomials in `s` over ℤ[ζ_order].
pub fn cyc_poly(order: u32) -> impl Strategy<Value = CycPoly> {
    let phi = knotsum::ring::modulus(order).unwrap().degree();
    prop::collection::vec((-5i32..=5, prop::collection::vec(-9i64..=9, phi)), 0..=6).prop_map(
        move |terms| {
            LaurentPoly::from_terms(
                Vars::s(),
                terms.into_iter().map(|(e, cs)| {
                    let cs: Vec<Integer> = cs.into_iter().map(Integer::from).collect();
                    (
                        ExpVector::from_slice(&[e]),
                        knotsum::ring::cyclotomic_reduce(&cs, order).unwrap(),
                    )
                }),
            )
        },
    )
}

/// Plain integer polynomial in ζ (unreduced), as a coefficient list.
pub fn zeta_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-30i64..=30, 0..=14)
}

pub fn poly_mul_plain(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_add_plain(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

pub fn reduce(v: &[i64], order: u32) -> CyclotomicInt {
    let v: Vec<Integer> = v.iter().map(|&c| Integer::from(c)).collect();
    knotsum::ring::cyclotomic_reduce(&v, order).unwrap()
}

pub fn q_poly(terms: &[(i32, i64)]) -> IntPoly {
    LaurentPoly::from_terms(
        Vars::q(),
        terms
            .iter()
            .map(|&(e, c)| (ExpVector::from_slice(&[e]), Integer::from(c))),
    )
}
