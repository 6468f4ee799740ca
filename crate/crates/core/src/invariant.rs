//! The state-sum pipeline.
//!
//! For `β ∈ B_n` and colour `N`, the start class `ℰ` lives in
//! `H_{2n-1,(n-1)(N-1)}`. The extended braid `β ∪ 𝕀_{n-1}` acts on it, and
//! pairing with the dual class `𝒢` keeps exactly the symmetric coefficients.
//! Writhe and strand corrections give the three-variable polynomial
//! `Λ_N(β) = u^{n-1-w} · I_N(β)`.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::conventions::{self, Ledger};
use crate::lawrence::{apply_braid, dimension, CodeSequence, SparseVector};
use crate::par::{self, Exec};
use crate::ring::json::PolyJson;
use crate::ring::{specialize_ado, specialize_jones, CycPoly, IntPoly, Integer, LaurentPoly, Vars};
use crate::Error;

/// Number of configuration points used for `(n, N)`.
pub fn points(n: usize, colour: u32) -> u32 {
    (n as u32 - 1) * (colour - 1)
}

/// Dimension of the Lawrence space the pipeline works in,
/// `binomial((n-1)(N-1) + 2n-2, 2n-2)`.
pub fn basis_dimension(n: usize, colour: u32) -> u128 {
    dimension(2 * n - 1, points(n, colour))
}

fn check_colour(colour: u32) -> Result<(), Error> {
    if colour == 0 {
        return Err(Error::InvalidArgument("colour N must be at least 1".into()));
    }
    Ok(())
}

/// `E^{N,symm}`: indices `(0, j_1, ..., j_{2n-2})` with `j_i = N-1-j_{2n-1-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricIndexSet {
    n: usize,
    colour: u32,
    members: Vec<CodeSequence>,
}

impl SymmetricIndexSet {
    pub fn new(n: usize, colour: u32) -> Self {
        let members = colour_indices(n, colour)
            .map(|idx| symmetric_sequence(&idx, colour))
            .collect();
        SymmetricIndexSet { n, colour, members }
    }

    pub fn members(&self) -> &[CodeSequence] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &CodeSequence) -> bool {
        is_symmetric(e.entries(), self.n, self.colour)
    }
}

pub(crate) fn is_symmetric(j: &[u32], n: usize, colour: u32) -> bool {
    j.len() == 2 * n - 1 && j[0] == 0 && (1..n).all(|i| j[i] + j[2 * n - 1 - i] == colour - 1)
}

/// All `(i_1, ..., i_{n-1}) ∈ {0..N-1}^{n-1}`, last index fastest.
fn colour_indices(n: usize, colour: u32) -> impl Iterator<Item = Vec<u32>> {
    let k = n - 1;
    let total = (colour as usize).pow(k as u32);
    (0..total).map(move |mut t| {
        let mut idx = vec![0u32; k];
        for slot in idx.iter_mut().rev() {
            *slot = (t % colour as usize) as u32;
            t /= colour as usize;
        }
        idx
    })
}

fn symmetric_sequence(idx: &[u32], colour: u32) -> CodeSequence {
    let mut e = Vec::with_capacity(2 * idx.len() + 1);
    e.push(0);
    e.extend_from_slice(idx);
    e.extend(idx.iter().rev().map(|i| colour - 1 - i));
    CodeSequence::from(e)
}

/// `ℰ_n^N = Σ_i d^{Σ i_k} · 𝒰_{(0, i_1..i_{n-1}, N-1-i_{n-1}..N-1-i_1)}`.
pub fn class_e(n: usize, colour: u32) -> Result<SparseVector, Error> {
    check_colour(colour)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    SparseVector::from_entries(
        2 * n - 1,
        points(n, colour),
        colour_indices(n, colour).map(|idx| {
            let weight: u32 = idx.iter().sum();
            let c = IntPoly::mono(Vars::xd(), &[0, weight as i32], 1);
            (symmetric_sequence(&idx, colour), c)
        }),
    )
}

/// Pairing with `𝒢_n^N`: the sum of the coefficients of `v` at symmetric
/// indices.
pub fn pair_with_g(v: &SparseVector, n: usize, colour: u32) -> Result<IntPoly, Error> {
    check_colour(colour)?;
    if v.n() != 2 * n - 1 || v.m() != points(n, colour) {
        return Err(Error::SpaceMismatch(format!(
            "pairing for n={n}, N={colour} expects H_{{{},{}}}, got H_{{{},{}}}",
            2 * n - 1,
            points(n, colour),
            v.n(),
            v.m()
        )));
    }
    let mut acc = IntPoly::zero(Vars::xd());
    for (e, p) in v.iter() {
        if is_symmetric(e.entries(), n, colour) {
            acc.add_assign(p);
        }
    }
    Ok(acc)
}

/// `I_N(β) = ⟨(β ∪ 𝕀_{n-1}) ℰ_n^N, 𝒢_n^N⟩`.
pub fn intersection_i(b: &BraidWord, colour: u32) -> Result<IntPoly, Error> {
    intersection_i_with(b, colour, Exec::default())
}

/// As [`intersection_i`], with an explicit execution mode. In parallel mode
/// the support of `ℰ` is split across workers and the partial pairings are
/// summed.
pub fn intersection_i_with(b: &BraidWord, colour: u32, exec: Exec) -> Result<IntPoly, Error> {
    let n = b.strands();
    let start = class_e(n, colour)?;
    let extended = b.extend_by_identity(n as i64 - 1)?;
    // Finer chunks than workers so that uneven pieces balance out.
    let pieces = start.split(par::workers(exec) * 4);
    par::map_reduce(
        exec,
        &pieces,
        || Ok(IntPoly::zero(Vars::xd())),
        |piece| pair_with_g(&apply_braid(&extended, piece)?, n, colour),
        |a, b| {
            let (mut a, b) = (a?, b?);
            a.add_assign_owned(b);
            Ok(a)
        },
    )
}

/// `𝒮_N(β) = x^n · I_N(β)`.
pub fn state_sum_s(b: &BraidWord, colour: u32) -> Result<IntPoly, Error> {
    let i = intersection_i(b, colour)?;
    Ok(i.mul_monomial(&[b.strands() as i32, 0], &Integer::ONE))
}

/// Lifts `p(x, d)` to `u^{k} p(x, d)` in ℤ[u^±1, x^±1, d^±1].
fn lift_with_u(p: &IntPoly, k: i32) -> IntPoly {
    LaurentPoly::from_terms(
        Vars::uxd(),
        p.terms()
            .iter()
            .map(|(e, c)| (smallvec::smallvec![k, e[0], e[1]], c.clone())),
    )
}

/// `Λ_N(β) = u^{-w} u^{n-1} x^{-n} 𝒮_N(β)`.
pub fn lambda_invariant(b: &BraidWord, colour: u32) -> Result<IntPoly, Error> {
    lambda_invariant_with(b, colour, Exec::default())
}

pub fn lambda_invariant_with(b: &BraidWord, colour: u32, exec: Exec) -> Result<IntPoly, Error> {
    let i = intersection_i_with(b, colour, exec)?;
    let k = b.strands() as i64 - 1 - b.writhe();
    let k = i32::try_from(k).map_err(|_| Error::Overflow("u exponent"))?;
    Ok(lift_with_u(&i, k))
}

fn jones_from_lambda(lambda: &IntPoly, colour: u32) -> Result<IntPoly, Error> {
    specialize_jones(lambda, 1, colour as i64 - 1)
}

fn ado_from_lambda(lambda: &IntPoly, colour: u32) -> Result<CycPoly, Error> {
    if colour < 2 {
        return Err(Error::InvalidArgument(
            "the ADO invariant needs N ≥ 2".into(),
        ));
    }
    specialize_ado(lambda, 1 - colour as i64, colour)
}

/// `J_N` of the closure, in `q`.
pub fn coloured_jones(b: &BraidWord, colour: u32) -> Result<IntPoly, Error> {
    b.require_knot()?;
    check_colour(colour)?;
    jones_from_lambda(&lambda_invariant(b, colour)?, colour)
}

/// The ADO invariant `Φ_N` of the closure, in `s` over ℤ[ζ_{2N}].
pub fn coloured_alexander(b: &BraidWord, colour: u32) -> Result<CycPoly, Error> {
    b.require_knot()?;
    if colour < 2 {
        return Err(Error::InvalidArgument(
            "the ADO invariant needs N ≥ 2".into(),
        ));
    }
    ado_from_lambda(&lambda_invariant(b, colour)?, colour)
}

/// Which specializations to attach to a result.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Request {
    pub jones: bool,
    pub ado: bool,
    pub exec: Exec,
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub braid: BraidWord,
    pub colour: u32,
    pub lambda: IntPoly,
    pub jones: Option<IntPoly>,
    pub ado: Option<CycPoly>,
    pub basis_dim: u128,
    pub ms: Option<u64>,
}

/// Runs the pipeline once and derives the requested specializations from the
/// same `Λ_N`.
pub fn compute(b: &BraidWord, colour: u32, req: Request) -> Result<InvariantResult, Error> {
    check_colour(colour)?;
    if req.jones || req.ado {
        b.require_knot()?;
    }
    let started = Instant::now();
    let lambda = lambda_invariant_with(b, colour, req.exec)?;
    let jones = if req.jones {
        Some(jones_from_lambda(&lambda, colour)?)
    } else {
        None
    };
    let ado = if req.ado {
        Some(ado_from_lambda(&lambda, colour)?)
    } else {
        None
    };
    Ok(InvariantResult {
        braid: b.clone(),
        colour,
        lambda,
        jones,
        ado,
        basis_dim: basis_dimension(b.strands(), colour),
        ms: req.timing.then(|| started.elapsed().as_millis() as u64),
    })
}

#[derive(Serialize)]
struct BraidJson<'a> {
    strands: usize,
    word: &'a [i32],
}

#[derive(Serialize)]
struct DimsJson {
    basis: u128,
}

/// Field order here is the output key order.
#[derive(Serialize)]
struct ResultJson<'a> {
    braid: BraidJson<'a>,
    #[serde(rename = "N")]
    colour: u32,
    lambda: PolyJson,
    jones: Option<PolyJson>,
    ado: Option<PolyJson>,
    conventions: Ledger,
    dims: DimsJson,
    ms: Option<u64>,
}

#[derive(Deserialize)]
struct ResultIn {
    braid: BraidIn,
    #[serde(rename = "N")]
    colour: u32,
    lambda: PolyJson,
    jones: Option<PolyJson>,
    ado: Option<PolyJson>,
    conventions: serde_json::Value,
    dims: DimsIn,
    ms: Option<u64>,
}

#[derive(Deserialize)]
struct BraidIn {
    strands: usize,
    word: Vec<i32>,
}

#[derive(Deserialize)]
struct DimsIn {
    basis: u128,
}

impl InvariantResult {
    /// Compact single-line JSON with a fixed key order.
    pub fn to_json_string(&self) -> String {
        let j = ResultJson {
            braid: BraidJson {
                strands: self.braid.strands(),
                word: self.braid.letters(),
            },
            colour: self.colour,
            lambda: self.lambda.to_json(),
            jones: self.jones.as_ref().map(LaurentPoly::to_json),
            ado: self.ado.as_ref().map(LaurentPoly::to_json),
            conventions: conventions::ledger(),
            dims: DimsJson {
                basis: self.basis_dim,
            },
            ms: self.ms,
        };
        serde_json::to_string(&j).expect("result serialization cannot fail")
    }

    /// Reads a result written by [`InvariantResult::to_json_string`]. Results
    /// produced under a different convention ledger are rejected.
    pub fn from_json_str(s: &str) -> Result<Self, Error> {
        let r: ResultIn = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let ours = serde_json::to_value(conventions::ledger()).expect("ledger serializes");
        if r.conventions != ours {
            return Err(Error::Parse(format!(
                "foreign conventions {}",
                r.conventions
            )));
        }
        let out = InvariantResult {
            braid: BraidWord::new(r.braid.strands, r.braid.word)?,
            colour: r.colour,
            lambda: IntPoly::from_json(&r.lambda)?,
            jones: r.jones.as_ref().map(IntPoly::from_json).transpose()?,
            ado: r.ado.as_ref().map(CycPoly::from_json).transpose()?,
            basis_dim: r.dims.basis,
            ms: r.ms,
        };
        if !out.is_consistent() {
            return Err(Error::Parse("specializations do not match lambda".into()));
        }
        Ok(out)
    }

    /// Checks that the stored specializations are those of `lambda`.
    pub fn is_consistent(&self) -> bool {
        let jones_ok = match &self.jones {
            Some(j) => jones_from_lambda(&self.lambda, self.colour).ok().as_ref() == Some(j),
            None => true,
        };
        let ado_ok = match &self.ado {
            Some(a) => ado_from_lambda(&self.lambda, self.colour).ok().as_ref() == Some(a),
            None => true,
        };
        jones_ok && ado_ok
    }
}
