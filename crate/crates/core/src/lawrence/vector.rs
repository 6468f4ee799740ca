use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use super::code::CodeSequence;
use super::local::local_image;
use crate::braid::BraidWord;
use crate::ring::{IntPoly, Integer, Vars};
use crate::Error;

/// A class in `H_{n,m}` expanded in the code-sequence basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVector {
    n: usize,
    m: u32,
    entries: BTreeMap<CodeSequence, IntPoly>,
}

impl SparseVector {
    pub fn zero(n: usize, m: u32) -> Self {
        SparseVector {
            n,
            m,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(e: CodeSequence) -> Self {
        Self::from_entries(e.len(), e.total(), [(e, IntPoly::one(Vars::xd()))])
            .expect("a code sequence lies in its own space")
    }

    /// Builds a vector, summing repeated keys and dropping zero entries.
    pub fn from_entries<I>(n: usize, m: u32, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (CodeSequence, IntPoly)>,
    {
        let mut v = SparseVector::zero(n, m);
        for (e, p) in entries {
            v.add_term(e, p)?;
        }
        Ok(v)
    }

    pub fn add_term(&mut self, e: CodeSequence, p: IntPoly) -> Result<(), Error> {
        if e.len() != self.n || e.total() != self.m {
            return Err(Error::SpaceMismatch(format!(
                "{e:?} is not in E_{{{},{}}}",
                self.n, self.m
            )));
        }
        if p.vars() != &Vars::xd() {
            return Err(Error::RingMismatch(format!(
                "Lawrence coefficients live in (x,d), got {:?}",
                p.vars()
            )));
        }
        if p.is_zero() {
            return Ok(());
        }
        match self.entries.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                slot.get_mut().add_assign_owned(p);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, e: &CodeSequence) -> Option<&IntPoly> {
        self.entries.get(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CodeSequence, &IntPoly)> {
        self.entries.iter()
    }

    /// Deck transformation: multiplication by `x^a d^b`.
    pub fn deck(&self, a: i32, b: i32) -> Self {
        SparseVector {
            n: self.n,
            m: self.m,
            entries: self
                .entries
                .iter()
                .map(|(e, p)| (e.clone(), p.mul_monomial(&[a, b], &Integer::ONE)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &IntPoly) -> Self {
        let mut out = SparseVector::zero(self.n, self.m);
        for (e, p) in &self.entries {
            let prod = p * c;
            if !prod.is_zero() {
                out.entries.insert(e.clone(), prod);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        let mut out = self.clone();
        for (e, p) in &other.entries {
            out.add_term(e.clone(), p.clone())?;
        }
        Ok(out)
    }

    /// Splits into at most `parts` vectors with disjoint supports.
    pub fn split(&self, parts: usize) -> Vec<SparseVector> {
        let items: Vec<_> = self.entries.iter().collect();
        crate::par::chunks(&items, parts)
            .into_iter()
            .map(|chunk| SparseVector {
                n: self.n,
                m: self.m,
                entries: chunk
                    .iter()
                    .map(|(e, p)| ((*e).clone(), (*p).clone()))
                    .collect(),
            })
            .collect()
    }

    /// Applies σ_{i+1}^{±1} (`i` is the 0-based left slot).
    pub(crate) fn apply_generator(&self, i: usize, inverse: bool) -> Self {
        let mut acc: HashMap<CodeSequence, IntPoly> = HashMap::new();
        for (e, p) in &self.entries {
            let s = e.entries();
            let img = local_image(s[i], s[i + 1], inverse);
            for ((a, b), c) in img.iter() {
                let term = p * c;
                match acc.entry(e.with_pair(i, *a, *b)) {
                    Entry::Vacant(slot) => {
                        slot.insert(term);
                    }
                    Entry::Occupied(mut slot) => slot.get_mut().add_assign_owned(term),
                }
            }
        }
        let entries = acc.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        SparseVector {
            n: self.n,
            m: self.m,
            entries,
        }
    }
}

/// Applies the letters of `b` to `v`, first letter first.
pub fn apply_braid(b: &BraidWord, v: &SparseVector) -> Result<SparseVector, Error> {
    if b.strands() != v.n {
        return Err(Error::SpaceMismatch(format!(
            "braid on {} strands applied to a space with {} punctures",
            b.strands(),
            v.n
        )));
    }
    let mut cur = v.clone();
    for &l in b.letters() {
        cur = cur.apply_generator(l.unsigned_abs() as usize - 1, l < 0);
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn e(v: &[u32]) -> CodeSequence {
        CodeSequence::new(v)
    }

    #[test]
    fn empty_word_is_identity() {
        let v = SparseVector::basis(e(&[1, 0, 1]));
        assert_eq!(apply_braid(&BraidWord::identity(3), &v).unwrap(), v);
    }

    #[test]
    fn generator_then_inverse() {
        let v = SparseVector::from_entries(
            3,
            2,
            [
                (e(&[1, 1, 0]), IntPoly::mono(Vars::xd(), &[1, -2], 3)),
                (e(&[0, 0, 2]), IntPoly::mono(Vars::xd(), &[0, 1], -1)),
            ],
        )
        .unwrap();
        let b = parse_braid("-1 1 2 -2", 3).unwrap();
        assert_eq!(apply_braid(&b, &v).unwrap(), v);
    }

    #[test]
    fn deck_equivariance() {
        let v = SparseVector::basis(e(&[2, 0, 1]));
        let b = parse_braid("1 -2 1", 3).unwrap();
        let lhs = apply_braid(&b, &v.deck(2, -1)).unwrap();
        let rhs = apply_braid(&b, &v).unwrap().deck(2, -1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn strand_mismatch() {
        let v = SparseVector::basis(e(&[1, 0]));
        let b = parse_braid("1 2", 3).unwrap();
        assert!(matches!(apply_braid(&b, &v), Err(Error::SpaceMismatch(_))));
    }

    #[test]
    fn entries_outside_the_space_are_rejected() {
        let mut v = SparseVector::zero(3, 2);
        assert!(v.add_term(e(&[1, 0, 0]), IntPoly::one(Vars::xd())).is_err());
        assert!(v.add_term(e(&[1, 1]), IntPoly::one(Vars::xd())).is_err());
        assert!(v.add_term(e(&[1, 1, 0]), IntPoly::one(Vars::t())).is_err());
    }

    #[test]
    fn cancelling_terms_leave_nothing() {
        let mut v = SparseVector::basis(e(&[0, 1]));
        v.add_term(e(&[0, 1]), IntPoly::int_constant(Vars::xd(), -1))
            .unwrap();
        assert!(v.is_empty());
    }
}
