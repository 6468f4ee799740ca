use crate::braid::BraidWord;
use crate::ring::{CycPoly, CyclotomicInt, IntPoly, LaurentPoly, Vars};
use crate::Error;

type Matrix = Vec<Vec<IntPoly>>;

fn t(e: i32, c: i64) -> IntPoly {
    IntPoly::mono(Vars::t(), &[e], c)
}

fn zero() -> IntPoly {
    IntPoly::zero(Vars::t())
}

fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { t(0, 1) } else { zero() })
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of one letter, acting on `n - 1` dimensions.
fn generator(n: usize, letter: i32) -> Matrix {
    let k = n - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let mut m = identity(k);
    if k == 1 {
        m[0][0] = if letter > 0 { t(1, -1) } else { t(-1, -1) };
        return m;
    }
    if letter > 0 {
        m[i][i] = t(1, -1);
        if i > 0 {
            m[i][i - 1] = t(1, 1);
        }
        if i + 1 < k {
            m[i][i + 1] = t(0, 1);
        }
    } else {
        m[i][i] = t(-1, -1);
        if i > 0 {
            m[i][i - 1] = t(0, 1);
        }
        if i + 1 < k {
            m[i][i + 1] = t(-1, 1);
        }
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = a.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let mut acc = zero();
                    for (l, bl) in b.iter().enumerate() {
                        if !a[i][l].is_zero() && !bl[j].is_zero() {
                            acc.add_assign_owned(&a[i][l] * &bl[j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of the word, letters multiplied left to right.
pub fn reduced_burau(b: &BraidWord) -> Vec<Vec<IntPoly>> {
    let k = b.strands().saturating_sub(1);
    b.letters().iter().fold(identity(k), |acc, &l| {
        mat_mul(&acc, &generator(b.strands(), l))
    })
}

/// Laplace expansion along the first row.
fn det(m: &Matrix) -> IntPoly {
    match m.len() {
        0 => t(0, 1),
        1 => m[0][0].clone(),
        k => {
            let mut acc = zero();
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Matrix = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det(&minor);
                acc.add_assign_owned(if j % 2 == 0 { term } else { term.neg() });
            }
            acc
        }
    }
}

/// Exact division of univariate Laurent polynomials; `None` if inexact.
fn divide(num: &IntPoly, den: &IntPoly) -> Option<IntPoly> {
    let (lead_e, lead_c) = den.leading_term()?.clone();
    let mut rem = num.clone();
    let mut quot = zero();
    let low = den.terms().first()?.0[0];
    while let Some((e, c)) = rem.leading_term().cloned() {
        if e[0] - lead_e[0] < rem.terms()[0].0[0] - low {
            return None;
        }
        let qc = c.div_exact(&lead_c)?;
        let shift = e[0] - lead_e[0];
        let step = den.mul_monomial(&[shift], &qc);
        quot.add_assign_owned(LaurentPoly::monomial(
            Vars::t(),
            smallvec::smallvec![shift],
            qc,
        ));
        rem = &rem - &step;
    }
    Some(quot)
}

/// Alexander polynomial of the closure, up to units ±t^k:
/// `det(I - B) · (1 - t) / (1 - t^n)`.
pub fn alexander_burau(b: &BraidWord) -> Result<IntPoly, Error> {
    b.require_knot()?;
    let n = b.strands();
    let burau = reduced_burau(b);
    let k = n - 1;
    let shifted: Matrix = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let id = if i == j { t(0, 1) } else { zero() };
                    &id - &burau[i][j]
                })
                .collect()
        })
        .collect();
    let d = det(&shifted);
    let mut den = zero();
    for e in 0..n as i32 {
        den.add_assign_owned(t(e, 1));
    }
    divide(&d, &den).ok_or_else(|| Error::InvalidArgument(format!("{d} is not divisible by {den}")))
}

/// Rewrites a polynomial in `t` as one in `s` over ℤ[ζ_order] via `t = s^e`.
pub fn alexander_as_s_poly(p: &IntPoly, e: i32, order: u32) -> Result<CycPoly, Error> {
    if *p.vars() != Vars::t() {
        return Err(Error::RingMismatch(format!(
            "expected t, got {:?}",
            p.vars()
        )));
    }
    let terms = p
        .terms()
        .iter()
        .map(|(x, c)| {
            Ok((
                smallvec::smallvec![x[0] * e],
                CyclotomicInt::from_integer(c.clone(), order)?,
            ))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(LaurentPoly::from_terms(Vars::s(), terms))
}
