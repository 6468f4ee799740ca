use std::fmt::Debug;

use super::Integer;
use crate::Error;

/// Identifies the coefficient ring of a value, for mismatch detection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingId {
    Integers,
    /// ℤ[ζ_order]
    Cyclotomic(u32),
}

/// Exact commutative coefficient ring used by [`LaurentPoly`](super::LaurentPoly).
pub trait Coeff: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    fn ring_id(&self) -> RingId;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn add_assign(&mut self, other: &Self) {
        *self = Coeff::add(self, other);
    }

    fn sub(&self, other: &Self) -> Self {
        Coeff::add(self, &other.neg())
    }

    /// The finite group of roots of unity in the ring: `{±1}` for ℤ and
    /// `{ζ^j}` for cyclotomic integers of even order.
    fn torsion_units(&self) -> Vec<Self>;

    /// Text form used inside the polynomial JSON `"c"` field.
    fn to_text(&self) -> String;
    fn from_text(s: &str) -> Result<Self, Error>;

    /// Human-readable coefficient for polynomial rendering.
    fn display_coeff(&self, _latex: bool) -> String {
        self.to_text()
    }

    /// Whether the value needs parentheses when printed as a factor.
    fn is_compound(&self) -> bool {
        false
    }
}

impl Coeff for Integer {
    fn ring_id(&self) -> RingId {
        RingId::Integers
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Integer::is_one(self)
    }
    fn zero_like(&self) -> Self {
        Integer::ZERO
    }
    fn one_like(&self) -> Self {
        Integer::ONE
    }
    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_ref(other)
    }
    fn neg(&self) -> Self {
        self.neg_ref()
    }
    fn add_assign(&mut self, other: &Self) {
        self.add_assign_ref(other)
    }
    fn torsion_units(&self) -> Vec<Self> {
        vec![Integer::ONE, Integer::from(-1)]
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn from_text(s: &str) -> Result<Self, Error> {
        s.parse::<Integer>()
            .map_err(|_| Error::Parse(format!("invalid integer coefficient {s:?}")))
    }
}
