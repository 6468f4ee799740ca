//! A three-variable knot polynomial computed as a state sum of intersection
//! pairings in Lawrence representations, together with its coloured Jones and
//! ADO (coloured Alexander) specializations and independent quantum-side
//! oracles used to cross-check them.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: exact Laurent polynomials over ℤ and ℤ[ζ_{2N}], specializations.
//! * [`braid`]: braid words, writhe, Markov moves.
//! * [`lawrence`]: the Lawrence representation in the code-sequence basis.
//! * [`invariant`]: the state-sum pipeline and its specializations.
//! * [`pairing`]: a combinatorial intersection-pairing evaluator.
//! * [`oracles`]: Kauffman bracket, Burau/Alexander and R-matrix oracles.

pub mod braid;
pub mod conventions;
pub mod invariant;
pub mod lawrence;
pub mod oracles;
pub mod pairing;
pub mod par;
pub mod ring;

pub use braid::BraidWord;
pub use invariant::InvariantResult;
pub use ring::{CycPoly, CyclotomicInt, IntPoly, Integer, LaurentPoly, Vars};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid specialization: {0}")]
    InvalidSpec(String),
    #[error("invalid cyclotomic order {0} (must be at least 2)")]
    InvalidOrder(u32),
    #[error("exponent overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("braid syntax error: {0}")]
    BraidSyntax(String),
    #[error("braid letter {letter} out of range for {strands} strands")]
    BraidOutOfRange { letter: i32, strands: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("braid closure has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
