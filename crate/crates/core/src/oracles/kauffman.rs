use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::par::{self, Exec};
use crate::ring::{IntPoly, Integer, LaurentPoly, Vars};
use crate::Error;

/// Largest diagram the exhaustive state sum accepts.
pub const MAX_CROSSINGS: usize = 24;

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

/// Edges of the closed braid diagram: crossing `c` has incoming edges
/// `ins[c]` and outgoing edges `outs[c]` (left strand first).
struct Diagram {
    edges: usize,
    ins: Vec<(usize, usize)>,
    outs: Vec<(usize, usize)>,
    positive: Vec<bool>,
    closure: Vec<(usize, usize)>,
}

fn diagram(b: &BraidWord) -> Diagram {
    let n = b.strands();
    let mut at: Vec<usize> = (0..n).collect();
    let mut edges = n;
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    let mut positive = Vec::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        ins.push((at[i], at[i + 1]));
        outs.push((edges, edges + 1));
        at[i] = edges;
        at[i + 1] = edges + 1;
        edges += 2;
        positive.push(l > 0);
    }
    let closure = (0..n).map(|p| (at[p], p)).collect();
    Diagram {
        edges,
        ins,
        outs,
        positive,
        closure,
    }
}

/// Loop count of the state whose bit `c` is set when crossing `c` takes its
/// A-smoothing.
fn loops(d: &Diagram, state: u64, parent: &mut Vec<usize>) -> usize {
    parent.clear();
    parent.extend(0..d.edges);
    for &(a, b) in &d.closure {
        union(parent, a, b);
    }
    for c in 0..d.ins.len() {
        let a_smoothing = state >> c & 1 == 1;
        let (i0, i1) = d.ins[c];
        let (o0, o1) = d.outs[c];
        // A-smoothing of a positive crossing follows the strands.
        if a_smoothing == d.positive[c] {
            union(parent, i0, o0);
            union(parent, i1, o1);
        } else {
            union(parent, i0, i1);
            union(parent, o0, o1);
        }
    }
    (0..d.edges).filter(|&e| find(parent, e) == e).count()
}

/// `(#A - #B, loops) ↦ number of states`.
type StateCounts = HashMap<(i32, usize), u64>;

fn count_states(d: &Diagram, range: std::ops::Range<u64>) -> StateCounts {
    let c = d.ins.len() as i32;
    let mut counts = StateCounts::new();
    let mut parent = Vec::with_capacity(d.edges);
    for state in range {
        let a = state.count_ones() as i32;
        *counts
            .entry((2 * a - c, loops(d, state, &mut parent)))
            .or_default() += 1;
    }
    counts
}

fn merge(mut a: StateCounts, b: StateCounts) -> StateCounts {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// Kauffman bracket `⟨D⟩ ∈ ℤ[A^±1]` of the closure diagram, `⟨O⟩ = 1`.
pub fn kauffman_bracket(b: &BraidWord) -> Result<IntPoly, Error> {
    kauffman_bracket_with(b, Exec::default())
}

fn kauffman_bracket_with(b: &BraidWord, exec: Exec) -> Result<IntPoly, Error> {
    let c = b.len();
    if c > MAX_CROSSINGS {
        return Err(Error::Budget(format!(
            "{c} crossings exceed the exhaustive limit of {MAX_CROSSINGS}"
        )));
    }
    let d = diagram(b);
    let total = 1u64 << c;
    let parts = (par::workers(exec) as u64 * 4).min(total).max(1);
    let ranges: Vec<_> = (0..parts)
        .map(|p| (total * p / parts)..(total * (p + 1) / parts))
        .collect();
    let counts = par::map_reduce(
        exec,
        &ranges,
        StateCounts::new,
        |r| count_states(&d, r.clone()),
        merge,
    );

    let vars = Vars::new(&["A"]);
    let delta = IntPoly::from_ints(vars.clone(), &[(&[2], -1), (&[-2], -1)]);
    let mut out = IntPoly::zero(vars.clone());
    let mut keys: Vec<_> = counts.into_iter().collect();
    keys.sort();
    for ((shift, loops), k) in keys {
        let term = delta
            .pow(loops as u32 - 1)
            .mul_monomial(&[shift], &Integer::from(k as i64));
        out.add_assign_owned(term);
    }
    Ok(out)
}

/// Jones polynomial of the closure in `q`, via
/// `V = (-A^3)^{-w} ⟨D⟩` and `A^{-4} = q^{-2}`.
pub fn jones_kauffman(b: &BraidWord) -> Result<IntPoly, Error> {
    jones_kauffman_with(b, Exec::default())
}

pub fn jones_kauffman_with(b: &BraidWord, exec: Exec) -> Result<IntPoly, Error> {
    b.require_knot()?;
    let bracket = kauffman_bracket_with(b, exec)?;
    let w = b.writhe() as i32;
    let sign: i64 = if w % 2 == 0 { 1 } else { -1 };
    let terms = bracket
        .terms()
        .iter()
        .map(|(e, c)| {
            let a = e[0] - 3 * w;
            if a % 2 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "odd A-exponent {a} in a knot bracket"
                )));
            }
            Ok((smallvec::smallvec![a / 2], c.mul_ref(&Integer::from(sign))))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(LaurentPoly::from_terms(Vars::q(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn q(terms: &[(i32, i64)]) -> IntPoly {
        LaurentPoly::from_terms(
            Vars::q(),
            terms
                .iter()
                .map(|&(e, c)| (smallvec::smallvec![e], Integer::from(c))),
        )
    }

    #[test]
    fn unknots() {
        assert_eq!(
            jones_kauffman(&BraidWord::identity(1)).unwrap(),
            q(&[(0, 1)])
        );
        assert_eq!(
            jones_kauffman(&parse_braid("1", 2).unwrap()).unwrap(),
            q(&[(0, 1)])
        );
        assert_eq!(
            jones_kauffman(&parse_braid("-1 2", 3).unwrap()).unwrap(),
            q(&[(0, 1)])
        );
    }

    #[test]
    fn trefoil_by_hand() {
        // Eight states of σ1³: one with all A (2 loops), three with two A
        // (1 loop), three with one A (2 loops), one with none (3 loops).
        let b = parse_braid("1 1 1", 2).unwrap();
        let bracket = kauffman_bracket(&b).unwrap();
        let vars = Vars::new(&["A"]);
        let expected = IntPoly::from_ints(vars, &[(&[5], -1), (&[-3], -1), (&[-7], 1)]);
        assert_eq!(bracket, expected);
        assert_eq!(
            jones_kauffman(&b).unwrap(),
            q(&[(-8, -1), (-6, 1), (-2, 1)])
        );
    }

    #[test]
    fn figure_eight_is_palindromic() {
        let b = parse_braid("1 -2 1 -2", 3).unwrap();
        assert_eq!(
            jones_kauffman(&b).unwrap(),
            q(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)])
        );
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let b = parse_braid("1 1 1 2 -1 2", 3).unwrap();
        assert_eq!(
            jones_kauffman_with(&b, Exec::Sequential).unwrap(),
            jones_kauffman_with(&b, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn guards() {
        assert!(matches!(
            jones_kauffman(&parse_braid("1 1", 2).unwrap()),
            Err(Error::NotAKnot { .. })
        ));
        let long = BraidWord::new(2, vec![1; MAX_CROSSINGS + 1]).unwrap();
        assert!(matches!(kauffman_bracket(&long), Err(Error::Budget(_))));
    }
}
