use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::code::{enumerate_basis, LawrenceSpace};
use super::vector::{apply_braid, SparseVector};
use crate::braid::BraidWord;
use crate::ring::json::PolyJson;
use crate::ring::{IntPoly, Vars};
use crate::Error;

/// Column-major sparse matrix over ℤ[x^±1, d^±1] in a fixed basis.
///
/// Column `j` holds the image of basis vector `j` as `(row, entry)` pairs
/// sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    space: LawrenceSpace,
    cols: Vec<Vec<(usize, IntPoly)>>,
}

impl SparseMatrix {
    pub fn identity(space: &LawrenceSpace) -> Self {
        SparseMatrix {
            space: space.clone(),
            cols: (0..space.dim())
                .map(|j| vec![(j, IntPoly::one(Vars::xd()))])
                .collect(),
        }
    }

    pub fn space(&self) -> &LawrenceSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, IntPoly)] {
        &self.cols[j]
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&IntPoly> {
        let c = &self.cols[col];
        c.binary_search_by_key(&row, |(r, _)| *r)
            .ok()
            .map(|k| &c[k].1)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    fn from_images(space: &LawrenceSpace, images: Vec<SparseVector>) -> Self {
        let cols = images
            .into_iter()
            .map(|v| {
                let mut col: Vec<(usize, IntPoly)> = v
                    .iter()
                    .map(|(e, p)| {
                        (
                            space.index_of(e).expect("image stays in the space"),
                            p.clone(),
                        )
                    })
                    .collect();
                col.sort_by_key(|(r, _)| *r);
                col
            })
            .collect();
        SparseMatrix {
            space: space.clone(),
            cols,
        }
    }

    /// Applies the matrix to `v` by gathering columns.
    pub fn apply(&self, v: &SparseVector) -> Result<SparseVector, Error> {
        if v.n() != self.space.n() || v.m() != self.space.m() {
            return Err(Error::SpaceMismatch(
                "vector and matrix spaces differ".into(),
            ));
        }
        let mut out = SparseVector::zero(v.n(), v.m());
        for (e, p) in v.iter() {
            let j = self
                .space
                .index_of(e)
                .expect("vector entry is in the space");
            for (r, c) in &self.cols[j] {
                out.add_term(self.space.basis()[*r].clone(), c * p)?;
            }
        }
        Ok(out)
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, Error> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch("matrix spaces differ".into()));
        }
        let images = (0..other.dim())
            .map(|j| {
                let col = SparseVector::from_entries(
                    self.space.n(),
                    self.space.m(),
                    other.cols[j]
                        .iter()
                        .map(|(r, p)| (self.space.basis()[*r].clone(), p.clone())),
                )?;
                self.apply(&col)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(SparseMatrix::from_images(&self.space, images))
    }

    pub fn is_identity(&self) -> bool {
        *self == SparseMatrix::identity(&self.space)
    }

    pub fn dump(&self) -> MatrixDump {
        MatrixDump {
            n: self.space.n(),
            m: self.space.m(),
            basis: self
                .space
                .basis()
                .iter()
                .map(|e| e.entries().to_vec())
                .collect(),
            entries: self
                .cols
                .iter()
                .enumerate()
                .flat_map(|(col, c)| {
                    c.iter().map(move |(row, p)| MatrixEntry {
                        row: *row,
                        col,
                        poly: p.to_json(),
                    })
                })
                .collect(),
        }
    }
}

/// Debugging dump: basis list and `(row, col, polynomial)` triplets.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixDump {
    pub n: usize,
    pub m: u32,
    pub basis: Vec<Vec<u32>>,
    pub entries: Vec<MatrixEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub poly: PolyJson,
}

type MatrixCache = Mutex<HashMap<(usize, u32, usize, bool), Arc<SparseMatrix>>>;

/// Matrix of σ_i (or σ_i^{-1}), `1 ≤ i ≤ n-1`, memoized per `(n, m, i, sign)`.
pub fn generator_matrix(
    space: &LawrenceSpace,
    i: usize,
    inverse: bool,
) -> Result<Arc<SparseMatrix>, Error> {
    let n = space.n();
    if i == 0 || i >= n {
        return Err(Error::InvalidArgument(format!(
            "generator index {i} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    let key = (n, space.m(), i, inverse);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let images = space
        .basis()
        .iter()
        .map(|e| SparseVector::basis(e.clone()).apply_generator(i - 1, inverse))
        .collect();
    let m = Arc::new(SparseMatrix::from_images(space, images));
    Ok(cache.lock().unwrap().entry(key).or_insert(m).clone())
}

type WordCache = Mutex<HashMap<(usize, Vec<i32>, u32), Arc<SparseMatrix>>>;

/// Matrix of the whole word, i.e. the product of generator matrices with the
/// first letter rightmost. Memoized per `(word, m)`.
pub fn matrix_of_word(b: &BraidWord, space: &LawrenceSpace) -> Result<Arc<SparseMatrix>, Error> {
    if b.strands() != space.n() {
        return Err(Error::SpaceMismatch(format!(
            "braid on {} strands, space with {} punctures",
            b.strands(),
            space.n()
        )));
    }
    static CACHE: OnceLock<WordCache> = OnceLock::new();
    let key = (b.strands(), b.letters().to_vec(), space.m());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let images = space
        .basis()
        .iter()
        .map(|e| apply_braid(b, &SparseVector::basis(e.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let m = Arc::new(SparseMatrix::from_images(space, images));
    Ok(cache.lock().unwrap().entry(key).or_insert(m).clone())
}

/// Convenience: the matrix of σ_i^{±1} on `H_{n,m}`.
pub fn generator(n: usize, m: u32, i: usize, inverse: bool) -> Result<Arc<SparseMatrix>, Error> {
    generator_matrix(&enumerate_basis(n, m), i, inverse)
}
