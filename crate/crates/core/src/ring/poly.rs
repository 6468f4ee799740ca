use std::fmt;
use std::sync::{Arc, OnceLock};

use smallvec::SmallVec;

use super::coeff::Coeff;
use super::Integer;
use crate::Error;

/// Exponents of a monomial, one per variable of the ambient [`Vars`].
pub type ExpVector = SmallVec<[i32; 4]>;

/// Ordered set of formal variable names, e.g. `(u, x, d)`.
#[derive(Clone)]
pub struct Vars(Arc<[String]>);

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(","))
    }
}

macro_rules! shared_vars {
    ($name:ident, [$($v:literal),*]) => {
        pub fn $name() -> Vars {
            static V: OnceLock<Vars> = OnceLock::new();
            V.get_or_init(|| Vars::new(&[$($v),*])).clone()
        }
    };
}

impl Vars {
    pub fn new(names: &[&str]) -> Vars {
        Vars(names.iter().map(|s| s.to_string()).collect())
    }

    shared_vars!(uxd, ["u", "x", "d"]);
    shared_vars!(xd, ["x", "d"]);
    shared_vars!(q, ["q"]);
    shared_vars!(s, ["s"]);
    shared_vars!(t, ["t"]);

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

/// Exact multivariate Laurent polynomial in canonical form.
///
/// Terms are kept sorted by exponent vector in ascending lexicographic order
/// and no stored coefficient is zero, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<R: Coeff> {
    vars: Vars,
    terms: Vec<(ExpVector, R)>,
}

pub type IntPoly = LaurentPoly<Integer>;

fn merge_terms<R: Coeff>(a: Vec<(ExpVector, R)>, b: Vec<(ExpVector, R)>) -> Vec<(ExpVector, R)> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (Some((ea, _)), Some((eb, _))) => match ea.cmp(eb) {
                std::cmp::Ordering::Less => out.push(ia.next().unwrap()),
                std::cmp::Ordering::Greater => out.push(ib.next().unwrap()),
                std::cmp::Ordering::Equal => {
                    let (e, mut ca) = ia.next().unwrap();
                    let (_, cb) = ib.next().unwrap();
                    ca.add_assign(&cb);
                    if !ca.is_zero() {
                        out.push((e, ca));
                    }
                }
            },
            (Some(_), None) => {
                out.extend(ia);
                break;
            }
            (None, Some(_)) => {
                out.extend(ib);
                break;
            }
            (None, None) => break,
        }
    }
    out
}

fn add_exps(a: &[i32], b: &[i32]) -> ExpVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl<R: Coeff> LaurentPoly<R> {
    pub fn zero(vars: Vars) -> Self {
        LaurentPoly {
            vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: Vars, c: R) -> Self {
        let e: ExpVector = SmallVec::from_elem(0, vars.len());
        Self::monomial(vars, e, c)
    }

    pub fn monomial(vars: Vars, exps: ExpVector, c: R) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity mismatch");
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(exps, c)]
        };
        LaurentPoly { vars, terms }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated,
    /// unsorted, zero) terms.
    pub fn from_terms<I>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExpVector, R)>,
    {
        let mut v: Vec<(ExpVector, R)> = terms.into_iter().collect();
        for (e, _) in &v {
            assert_eq!(e.len(), vars.len(), "exponent arity mismatch");
        }
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(ExpVector, R)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => lc.add_assign(&c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LaurentPoly { vars, terms: out }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &[(ExpVector, R)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(ExpVector, R)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, exps: &[i32]) -> Option<&R> {
        self.terms
            .binary_search_by(|(e, _)| e.as_slice().cmp(exps))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Term with the lexicographically largest exponent vector.
    pub fn leading_term(&self) -> Option<&(ExpVector, R)> {
        self.terms.last()
    }

    fn compatible(&self, other: &Self) -> Result<(), Error> {
        if self.vars != other.vars {
            return Err(Error::RingMismatch(format!(
                "variables {:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        if let (Some((_, a)), Some((_, b))) = (self.terms.first(), other.terms.first()) {
            if a.ring_id() != b.ring_id() {
                return Err(Error::RingMismatch(format!(
                    "coefficients {:?} vs {:?}",
                    a.ring_id(),
                    b.ring_id()
                )));
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.compatible(other)?;
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: merge_terms(self.terms.clone(), other.terms.clone()),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// In-place `self += other`.
    pub fn add_assign(&mut self, other: &Self) {
        self.compatible(other).expect("polynomial addition");
        let mine = std::mem::take(&mut self.terms);
        self.terms = merge_terms(mine, other.terms.clone());
    }

    /// In-place `self += other`, consuming `other`.
    pub fn add_assign_owned(&mut self, other: Self) {
        self.compatible(&other).expect("polynomial addition");
        let mine = std::mem::take(&mut self.terms);
        self.terms = merge_terms(mine, other.terms);
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(e, x)| {
                    let p = x.mul(c);
                    (!p.is_zero()).then(|| (e.clone(), p))
                })
                .collect(),
        }
    }

    /// Multiplies by `c · m` where `m` is the monomial with exponents `shift`.
    /// Shifting preserves lexicographic order, so no re-sort is needed.
    pub fn mul_monomial(&self, shift: &[i32], c: &R) -> Self {
        assert_eq!(shift.len(), self.vars.len(), "exponent arity mismatch");
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        let one = c.is_one();
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(e, x)| {
                    let p = if one { x.clone() } else { x.mul(c) };
                    (!p.is_zero()).then(|| (add_exps(e, shift), p))
                })
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut parts: Vec<Vec<(ExpVector, R)>> = small
            .terms
            .iter()
            .map(|(e, c)| large.mul_monomial(e, c).terms)
            .collect();
        while parts.len() > 1 {
            let mut next = Vec::with_capacity(parts.len().div_ceil(2));
            let mut it = parts.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(merge_terms(a, b)),
                    None => next.push(a),
                }
            }
            parts = next;
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: parts.pop().unwrap_or_default(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = match self.terms.first() {
            Some((_, c)) => Self::constant(self.vars.clone(), c.one_like()),
            None => {
                assert!(
                    k > 0,
                    "zero polynomial to the power 0 has no coefficient ring"
                );
                return self.clone();
            }
        };
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Applies `f` to every coefficient, producing a polynomial over another ring.
    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_terms(
            self.vars.clone(),
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }

    /// Renders using `*` and `^` (text) or juxtaposition and `^{}` (LaTeX).
    pub fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Highest degree first reads more naturally.
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.names())
                .filter(|(k, _)| **k != 0)
                .map(|(k, v)| match (*k, latex) {
                    (1, _) => v.clone(),
                    (k, true) => format!("{v}^{{{k}}}"),
                    (k, false) => format!("{v}^{k}"),
                })
                .collect();
            let sep = if latex { " " } else { "*" };
            let mono = mono.join(sep);
            let text = c.display_coeff(latex);
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !c.is_compound() => (true, rest.to_string()),
                _ => (false, text),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = if c.is_compound() {
                format!("({body})")
            } else {
                body
            };
            if mono.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&body);
                out.push_str(sep);
                out.push_str(&mono);
            }
        }
        out
    }
}

impl<R: Coeff> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

impl<R: Coeff> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

impl IntPoly {
    pub fn int_constant(vars: Vars, c: i64) -> Self {
        Self::constant(vars, Integer::from(c))
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, Integer::ONE)
    }

    /// `c · Π vars^exps` with integer coefficient.
    pub fn mono(vars: Vars, exps: &[i32], c: i64) -> Self {
        Self::monomial(vars, exps.iter().copied().collect(), Integer::from(c))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_ints(vars: Vars, terms: &[(&[i32], i64)]) -> Self {
        Self::from_terms(
            vars,
            terms
                .iter()
                .map(|(e, c)| (e.iter().copied().collect(), Integer::from(*c))),
        )
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $impl:ident) => {
        impl<R: Coeff> std::ops::$tr<&LaurentPoly<R>> for &LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
                self.$impl(rhs).expect("incompatible polynomials")
            }
        }
        impl<R: Coeff> std::ops::$tr<LaurentPoly<R>> for LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: LaurentPoly<R>) -> LaurentPoly<R> {
                (&self).$impl(&rhs).expect("incompatible polynomials")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Mul, mul, checked_mul);

impl<R: Coeff> std::ops::Sub<&LaurentPoly<R>> for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
        self.checked_add(&rhs.neg())
            .expect("incompatible polynomials")
    }
}

impl<R: Coeff> std::ops::Sub<LaurentPoly<R>> for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: LaurentPoly<R>) -> LaurentPoly<R> {
        &self - &rhs
    }
}

impl<R: Coeff> std::ops::Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly::neg(&self)
    }
}
