use super::{Coeff, ExpVector, LaurentPoly};

/// `b = unit · m · a` where `m` is the monomial with exponents `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitWitness<R: Coeff> {
    pub unit: R,
    pub shift: ExpVector,
}

/// Outcome of [`equal_up_to_unit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitMatch<R: Coeff> {
    NotEqual,
    /// Both inputs are zero; the witness is the trivial unit `1 · 1`.
    BothZero,
    Equal(UnitWitness<R>),
}

impl<R: Coeff> UnitMatch<R> {
    pub fn is_equal(&self) -> bool {
        !matches!(self, UnitMatch::NotEqual)
    }
}

/// Decides whether `a` and `b` agree up to a torsion unit times a monomial.
/// The witness maps `a` to `b`.
pub fn equal_up_to_unit<R: Coeff>(a: &LaurentPoly<R>, b: &LaurentPoly<R>) -> UnitMatch<R> {
    if a.vars() != b.vars() || a.len() != b.len() {
        return UnitMatch::NotEqual;
    }
    let (la, lb) = match (a.leading_term(), b.leading_term()) {
        (None, None) => return UnitMatch::BothZero,
        (Some(la), Some(lb)) => (la, lb),
        _ => return UnitMatch::NotEqual,
    };
    if la.1.ring_id() != lb.1.ring_id() {
        return UnitMatch::NotEqual;
    }
    let shift: ExpVector = lb.0.iter().zip(&la.0).map(|(y, x)| y - x).collect();
    for unit in la.1.torsion_units() {
        if la.1.mul(&unit) != lb.1 {
            continue;
        }
        if a.mul_monomial(&shift, &unit) == *b {
            return UnitMatch::Equal(UnitWitness { unit, shift });
        }
    }
    UnitMatch::NotEqual
}
