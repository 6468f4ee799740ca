use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A composition `(e_1, ..., e_n)` of `m`: `e_i` configuration points sit on
/// the segment ending at puncture `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CodeSequence(SmallVec<[u32; 8]>);

impl CodeSequence {
    pub fn new(entries: &[u32]) -> Self {
        CodeSequence(entries.iter().copied().collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub(crate) fn with_pair(&self, i: usize, a: u32, b: u32) -> Self {
        let mut out = self.clone();
        out.0[i] = a;
        out.0[i + 1] = b;
        out
    }

    /// Appends `k` zero slots.
    pub fn padded(&self, k: usize) -> Self {
        let mut out = self.clone();
        out.0.extend(std::iter::repeat_n(0, k));
        out
    }
}

impl From<Vec<u32>> for CodeSequence {
    fn from(v: Vec<u32>) -> Self {
        CodeSequence(v.into())
    }
}

impl fmt::Debug for CodeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CodeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The module `H_{n,m}` with its code-sequence basis.
///
/// The basis is listed in descending lexicographic order, so for `m = 1` the
/// basis vector with the point on the first segment comes first.
#[derive(Clone, Debug)]
pub struct LawrenceSpace {
    n: usize,
    m: u32,
    basis: Arc<Vec<CodeSequence>>,
    index: Arc<HashMap<CodeSequence, usize>>,
}

impl PartialEq for LawrenceSpace {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.m == other.m
    }
}

impl Eq for LawrenceSpace {}

fn compositions(n: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<CodeSequence>) {
    if prefix.len() + 1 == n {
        prefix.push(m);
        out.push(CodeSequence::new(prefix));
        prefix.pop();
        return;
    }
    for a in (0..=m).rev() {
        prefix.push(a);
        compositions(n, m - a, prefix, out);
        prefix.pop();
    }
}

/// Enumerates `E_{n,m}`, all compositions of `m` into `n` parts.
pub fn enumerate_basis(n: usize, m: u32) -> LawrenceSpace {
    assert!(n >= 1, "a Lawrence space needs at least one puncture");
    let mut basis = Vec::new();
    compositions(n, m, &mut Vec::with_capacity(n), &mut basis);
    let index = basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    LawrenceSpace {
        n,
        m,
        basis: Arc::new(basis),
        index: Arc::new(index),
    }
}

impl LawrenceSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CodeSequence] {
        &self.basis
    }

    pub fn index_of(&self, e: &CodeSequence) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &CodeSequence) -> bool {
        e.len() == self.n && e.total() == self.m
    }
}

/// `binomial(m + n - 1, n - 1)`, saturating at `u128::MAX`.
pub fn dimension(n: usize, m: u32) -> u128 {
    if n == 0 {
        return 0;
    }
    binomial(m as u128 + n as u128 - 1, n as u128 - 1)
}

pub fn binomial(top: u128, k: u128) -> u128 {
    if k > top {
        return 0;
    }
    let k = k.min(top - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(top - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}
