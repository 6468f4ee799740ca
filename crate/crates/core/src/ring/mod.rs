//! Exact coefficient rings and Laurent polynomials.

mod coeff;
mod cyclotomic;
mod integer;
pub mod json;
mod poly;
mod specialize;
mod unit;

pub use coeff::{Coeff, RingId};
pub use cyclotomic::{cyclotomic_reduce, modulus, CyclotomicInt, CyclotomicModulus};
pub use integer::Integer;
pub use poly::{ExpVector, IntPoly, LaurentPoly, Vars};
pub use specialize::{
    specialize, specialize_ado, specialize_jones, LambdaTarget, QTarget, SpecializationSpec,
    Specialized,
};
pub use unit::{equal_up_to_unit, UnitMatch, UnitWitness};

/// Polynomials over ℤ[ζ_{2N}].
pub type CycPoly = LaurentPoly<CyclotomicInt>;
