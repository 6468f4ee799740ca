//! Independent reference computations.
//!
//! Nothing here touches the Lawrence representation; only the shared
//! polynomial types are reused.

mod ado;
mod burau;
mod kauffman;
mod qalg;
mod rmatrix;

pub use ado::{ado_direct, ado_direct_with};
pub use burau::{alexander_as_s_poly, alexander_burau, reduced_burau};
pub use kauffman::{jones_kauffman, jones_kauffman_with, kauffman_bracket, MAX_CROSSINGS};
pub use rmatrix::{coloured_jones_rmatrix, coloured_jones_rmatrix_with, MAX_TENSOR_DIM};

use crate::braid::BraidWord;
use crate::Error;

fn tensor_budget(b: &BraidWord, colour: u32) -> Result<(), Error> {
    let dim = (colour as u128).checked_pow(b.strands() as u32);
    match dim {
        Some(d) if d <= MAX_TENSOR_DIM as u128 => Ok(()),
        _ => Err(Error::Budget(format!(
            "tensor space of dimension {colour}^{} exceeds {MAX_TENSOR_DIM}",
            b.strands()
        ))),
    }
}
