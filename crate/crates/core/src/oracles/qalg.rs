//! Small helpers for polynomials in a single variable `q`.

use crate::ring::{IntPoly, Integer, LaurentPoly, Vars};

pub(crate) fn q_mono(e: i32, c: i64) -> IntPoly {
    LaurentPoly::monomial(Vars::q(), smallvec::smallvec![e], Integer::from(c))
}

/// `q^e - q^{-e}`.
pub(crate) fn q_diff(e: i32) -> IntPoly {
    &q_mono(e, 1) + &q_mono(-e, -1)
}

/// Symmetric quantum binomial `[n choose k]` in `q`.
pub(crate) fn q_binomial(n: u32, k: u32) -> IntPoly {
    if k > n {
        return IntPoly::zero(Vars::q());
    }
    // Row-by-row: [n, k] = q^k [n-1, k] + q^{k-n} [n-1, k-1].
    let mut row = vec![q_mono(0, 1)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let mut p = IntPoly::zero(Vars::q());
            if j < m {
                p.add_assign_owned(row[j as usize].mul_monomial(&[j as i32], &Integer::ONE));
            }
            if j > 0 {
                p.add_assign_owned(
                    row[j as usize - 1].mul_monomial(&[j as i32 - m as i32], &Integer::ONE),
                );
            }
            next.push(p);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}
