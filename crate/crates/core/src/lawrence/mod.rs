//! The Lawrence representation `B_n → Aut(H_{n,m})` over ℤ[x^±1, d^±1].
//!
//! Vectors are expanded in the code-sequence basis `E_{n,m}`. Braid letters
//! act locally on adjacent slot pairs through the rule in [`local`].

mod code;
pub mod local;
mod matrix;
mod vector;

pub use code::{binomial, dimension, enumerate_basis, CodeSequence, LawrenceSpace};
pub use matrix::{
    generator, generator_matrix, matrix_of_word, MatrixDump, MatrixEntry, SparseMatrix,
};
pub use vector::{apply_braid, SparseVector};
