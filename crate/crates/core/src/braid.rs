//! Braid words in the Artin generators and Markov moves on them.
//!
//! Letter `k > 0` stands for σ_k and `-k` for σ_k^{-1}, acting on strands `k`
//! and `k + 1` (1-based).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, Error> {
        for &l in &letters {
            if l == 0 {
                return Err(Error::BraidSyntax("zero is not a braid generator".into()));
            }
            if l.unsigned_abs() as usize >= strands.max(1) {
                return Err(Error::BraidOutOfRange { letter: l, strands });
            }
        }
        if strands == 0 {
            return Err(Error::InvalidArgument(
                "a braid needs at least one strand".into(),
            ));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Same word on `strands + k` strands; the new strands are never touched.
    pub fn extend_by_identity(&self, k: i64) -> Result<Self, Error> {
        if k < 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot extend by {k} strands"
            )));
        }
        Ok(BraidWord {
            strands: self.strands + k as usize,
            letters: self.letters.clone(),
        })
    }

    /// `perm[i]` is the bottom position reached by the strand starting at top
    /// position `i` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            for p in at.iter_mut() {
                if *p == i {
                    *p = i + 1;
                } else if *p == i + 1 {
                    *p = i;
                }
            }
        }
        at
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    pub fn require_knot(&self) -> Result<(), Error> {
        match self.closure_components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Canonical text form: letters separated by single spaces.
    pub fn to_text(&self) -> String {
        self.letters
            .iter()
            .map(i32::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, self.to_text())
    }
}

/// Parses whitespace-separated signed integers, e.g. `"1 -2 1 -2"`.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord, Error> {
    let letters = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i32>()
                .map_err(|_| Error::BraidSyntax(format!("malformed token {tok:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(strands, letters)
}

pub fn writhe(b: &BraidWord) -> i64 {
    b.writhe()
}

pub fn extend_by_identity(b: &BraidWord, k: i64) -> Result<BraidWord, Error> {
    b.extend_by_identity(k)
}

/// One line of a knot table: `{"name":"3_1","strands":2,"word":[1,1,1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotEntry {
    pub name: String,
    pub strands: usize,
    pub word: Vec<i32>,
}

impl KnotEntry {
    pub fn braid(&self) -> Result<BraidWord, Error> {
        BraidWord::new(self.strands, self.word.clone())
    }
}

/// The small census used throughout the tests.
pub fn census() -> Vec<(&'static str, BraidWord)> {
    [
        ("3_1", 2, vec![1, 1, 1]),
        ("4_1", 3, vec![1, -2, 1, -2]),
        ("5_1", 2, vec![1, 1, 1, 1, 1]),
        ("5_2", 3, vec![1, 1, 1, 2, -1, 2]),
    ]
    .into_iter()
    .map(|(name, n, w)| (name, BraidWord::new(n, w).expect("census braids are valid")))
    .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarkovMove {
    /// `w ↦ g^{-1} w g`, followed by free reduction.
    Conjugate(i32),
    /// Append σ_n and add a strand.
    StabilizePositive,
    /// Append σ_n^{-1} and add a strand.
    StabilizeNegative,
    FreeReduce,
    /// `σ_i σ_j σ_i ↦ σ_j σ_i σ_j` for `|i - j| = 1` at the given offset.
    BraidRelation(usize),
    /// Swap commuting neighbours at the given offset.
    FarCommute(usize),
}

/// How far generated variants may grow beyond the source braid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MarkovBounds {
    pub extra_strands: usize,
    pub extra_letters: usize,
}

impl Default for MarkovBounds {
    fn default() -> Self {
        MarkovBounds {
            extra_strands: 3,
            extra_letters: 8,
        }
    }
}

/// Applies a single move; `None` when the move does not apply at that spot.
pub fn apply_move(b: &BraidWord, mv: MarkovMove) -> Option<BraidWord> {
    let n = b.strands;
    match mv {
        MarkovMove::Conjugate(g) => {
            if g == 0 || g.unsigned_abs() as usize >= n {
                return None;
            }
            let mut letters = Vec::with_capacity(b.len() + 2);
            letters.push(-g);
            letters.extend_from_slice(&b.letters);
            letters.push(g);
            Some(
                BraidWord {
                    strands: n,
                    letters,
                }
                .free_reduce(),
            )
        }
        MarkovMove::StabilizePositive | MarkovMove::StabilizeNegative => {
            let sign = if mv == MarkovMove::StabilizePositive {
                1
            } else {
                -1
            };
            let mut letters = b.letters.clone();
            letters.push(sign * n as i32);
            Some(BraidWord {
                strands: n + 1,
                letters,
            })
        }
        MarkovMove::FreeReduce => Some(b.free_reduce()),
        MarkovMove::BraidRelation(p) => {
            let w = b.letters.get(p..p + 3)?;
            let (a, c, e) = (w[0], w[1], w[2]);
            let same_sign = a.signum() == c.signum() && c.signum() == e.signum();
            if a != e || !same_sign || a.unsigned_abs().abs_diff(c.unsigned_abs()) != 1 {
                return None;
            }
            let mut letters = b.letters.clone();
            letters[p..p + 3].copy_from_slice(&[c, a, c]);
            Some(BraidWord {
                strands: n,
                letters,
            })
        }
        MarkovMove::FarCommute(p) => {
            let w = b.letters.get(p..p + 2)?;
            if w[0].unsigned_abs().abs_diff(w[1].unsigned_abs()) < 2 {
                return None;
            }
            let mut letters = b.letters.clone();
            letters.swap(p, p + 1);
            Some(BraidWord {
                strands: n,
                letters,
            })
        }
    }
}

fn random_move(rng: &mut ChaCha8Rng, b: &BraidWord) -> MarkovMove {
    let n = b.strands as i32;
    match rng.random_range(0..6) {
        0 | 1 if n >= 2 => {
            let g = rng.random_range(1..n);
            MarkovMove::Conjugate(if rng.random_bool(0.5) { g } else { -g })
        }
        2 => MarkovMove::StabilizePositive,
        3 => MarkovMove::StabilizeNegative,
        4 => {
            let spots: Vec<usize> = (0..b.len().saturating_sub(2))
                .filter(|&p| apply_move(b, MarkovMove::BraidRelation(p)).is_some())
                .collect();
            if spots.is_empty() {
                MarkovMove::FreeReduce
            } else {
                MarkovMove::BraidRelation(spots[rng.random_range(0..spots.len())])
            }
        }
        _ => {
            let spots: Vec<usize> = (0..b.len().saturating_sub(1))
                .filter(|&p| apply_move(b, MarkovMove::FarCommute(p)).is_some())
                .collect();
            if spots.is_empty() {
                MarkovMove::FreeReduce
            } else {
                MarkovMove::FarCommute(spots[rng.random_range(0..spots.len())])
            }
        }
    }
}

/// Deterministic braids with the same closure as `b`, using default bounds.
pub fn markov_variants(b: &BraidWord, count: usize, seed: u64) -> Vec<BraidWord> {
    markov_variants_with(b, count, seed, MarkovBounds::default())
}

/// Deterministic braids with the same closure as `b`.
///
/// Each variant is a random walk of one to six moves from `b`; moves that
/// would exceed `bounds` are skipped.
pub fn markov_variants_with(
    b: &BraidWord,
    count: usize,
    seed: u64,
    bounds: MarkovBounds,
) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_strands = b.strands + bounds.extra_strands;
    let max_len = b.len() + bounds.extra_letters;
    (0..count)
        .map(|_| {
            let steps = rng.random_range(1..=6);
            let mut w = b.clone();
            for _ in 0..steps {
                let mv = random_move(&mut rng, &w);
                if let Some(next) = apply_move(&w, mv) {
                    if next.strands <= max_strands && next.len() <= max_len {
                        w = next;
                    }
                }
            }
            w
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_trefoil() {
        let b = parse_braid("1 1 1", 2).unwrap();
        assert_eq!(b.letters(), &[1, 1, 1]);
        assert_eq!(b.strands(), 2);
    }

    #[test]
    fn parses_figure_eight() {
        let b = parse_braid("1 -2 1 -2", 3).unwrap();
        assert_eq!(b.letters(), &[1, -2, 1, -2]);
        assert!(b.is_knot());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_braid("3 1", 3),
            Err(Error::BraidOutOfRange {
                letter: 3,
                strands: 3
            })
        ));
        assert!(matches!(parse_braid("1 0", 3), Err(Error::BraidSyntax(_))));
        assert!(matches!(parse_braid("1 x", 3), Err(Error::BraidSyntax(_))));
        assert!(matches!(
            parse_braid("1", 1),
            Err(Error::BraidOutOfRange { .. })
        ));
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(parse_braid("1 1 1", 2).unwrap().writhe(), 3);
        assert_eq!(parse_braid("1 -2 1 -2", 3).unwrap().writhe(), 0);
        assert_eq!(BraidWord::identity(1).writhe(), 0);
    }

    #[test]
    fn extension() {
        let b = parse_braid("1 1 1", 2).unwrap();
        let e = b.extend_by_identity(1).unwrap();
        assert_eq!(e.strands(), 3);
        assert_eq!(e.letters(), b.letters());
        assert_eq!(b.extend_by_identity(0).unwrap(), b);
        assert_eq!(
            BraidWord::identity(1).extend_by_identity(2).unwrap(),
            BraidWord::identity(3)
        );
        assert!(b.extend_by_identity(-1).is_err());
    }

    #[test]
    fn closure_components() {
        assert_eq!(BraidWord::identity(3).closure_components(), 3);
        assert_eq!(parse_braid("1 1", 2).unwrap().closure_components(), 2);
        assert_eq!(
            parse_braid("1 1 1 2 -1 2", 3).unwrap().closure_components(),
            1
        );
    }

    #[test]
    fn conjugation_of_trefoil_reduces() {
        let b = parse_braid("1 1 1", 2).unwrap();
        let c = apply_move(&b, MarkovMove::Conjugate(1)).unwrap();
        assert_eq!(c, b);
    }

    #[test]
    fn positive_stabilization() {
        let b = parse_braid("1 1 1", 2).unwrap();
        let s = apply_move(&b, MarkovMove::StabilizePositive).unwrap();
        assert_eq!(s, BraidWord::new(3, vec![1, 1, 1, 2]).unwrap());
    }

    #[test]
    fn braid_relation() {
        let b = parse_braid("1 2 1", 3).unwrap();
        let r = apply_move(&b, MarkovMove::BraidRelation(0)).unwrap();
        assert_eq!(r.letters(), &[2, 1, 2]);
        assert!(apply_move(
            &parse_braid("1 -2 1", 3).unwrap(),
            MarkovMove::BraidRelation(0)
        )
        .is_none());
    }

    #[test]
    fn variants_are_deterministic_and_bounded() {
        let b = parse_braid("1 -2 1 -2", 3).unwrap();
        let v1 = markov_variants(&b, 20, 7);
        let v2 = markov_variants(&b, 20, 7);
        assert_eq!(v1, v2);
        for v in &v1 {
            assert!(v.strands() <= 6 && v.len() <= 12);
            assert!(v.is_knot());
            // Stabilizations shift the writhe by ±1 and add one strand each.
            let dn = (v.strands() - b.strands()) as i64;
            assert!((v.writhe() - b.writhe()).abs() <= dn);
            assert_eq!((v.writhe() - b.writhe() - dn).rem_euclid(2), 0);
        }
    }

    #[test]
    fn text_roundtrip() {
        let b = parse_braid("  1   -2 1\t-2 ", 3).unwrap();
        assert_eq!(b.to_text(), "1 -2 1 -2");
        assert_eq!(parse_braid(&b.to_text(), 3).unwrap(), b);
    }
}
