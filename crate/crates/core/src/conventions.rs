//! Frozen calibration constants.
//!
//! Every computed result depends on these choices; they are hashed into cache
//! keys so that changing one invalidates stored results.

use serde::Serialize;

/// A positive braid letter σ_i is a right-handed crossing.
pub const SIGMA_SIGN: i32 = 1;

/// Jones normalization: reduced, unknot = 1, Kauffman variable A with
/// `A^{-4} = q^{-2}` mapped into the `q` of the Jones specialization.
pub const NORMALIZATION: &str = "reduced;unknot=1;kauffman_t=q^-2";

/// Alexander variable of the Burau oracle in terms of the ADO variable.
pub const ALEXANDER_T_AS_S_POWER: i32 = 2;

/// At one configuration point, Lawrence generator matrices equal unreduced
/// Burau with `t = x^{BURAU_T_AS_X_POWER}`.
pub const BURAU_T_AS_X_POWER: i32 = -1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ledger {
    pub sigma_sign: i32,
    pub normalization: &'static str,
}

pub fn ledger() -> Ledger {
    Ledger {
        sigma_sign: SIGMA_SIGN,
        normalization: NORMALIZATION,
    }
}

/// Stable text form of every frozen constant, used as a hash input.
pub fn canonical_string() -> String {
    format!(
        "sigma_sign={SIGMA_SIGN};normalization={NORMALIZATION};alexander_t=s^{ALEXANDER_T_AS_S_POWER};burau_t=x^{BURAU_T_AS_X_POWER}"
    )
}
