use super::{CycPoly, CyclotomicInt, ExpVector, IntPoly, LaurentPoly, Vars};
use crate::Error;

/// Where the quantum parameter `q` is sent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QTarget {
    /// `q` stays a formal variable.
    Formal,
    /// `q = ζ_{2N}`, a primitive root of unity of order `2N`.
    RootOfUnity(u32),
}

/// Where the weight `λ` is sent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaTarget {
    Integer(i64),
    /// `λ` stays formal; `q^λ` is written as the variable `s`.
    Formal,
}

/// The coefficient morphism `u ↦ q^{cλ}, x ↦ q^{2λ}, d ↦ q^{-2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecializationSpec {
    pub c: i64,
    pub q: QTarget,
    pub lambda: LambdaTarget,
}

impl SpecializationSpec {
    /// Coloured Jones: `c = 1`, `q` formal, `λ = N - 1`.
    pub fn jones(colour: u32) -> Self {
        SpecializationSpec {
            c: 1,
            q: QTarget::Formal,
            lambda: LambdaTarget::Integer(colour as i64 - 1),
        }
    }

    /// ADO: `c = 1 - N`, `q = ζ_{2N}`, `λ` formal.
    pub fn ado(colour: u32) -> Self {
        SpecializationSpec {
            c: 1 - colour as i64,
            q: QTarget::RootOfUnity(colour),
            lambda: LambdaTarget::Formal,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        match (self.q, self.lambda) {
            (QTarget::Formal, LambdaTarget::Integer(_)) => Ok(()),
            (QTarget::RootOfUnity(n), LambdaTarget::Formal) if n >= 1 => Ok(()),
            _ => Err(Error::InvalidSpec(format!("{self:?}"))),
        }
    }
}

/// Result of [`specialize`]: a polynomial in `q` or in `s` over ℤ[ζ_{2N}].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Jones(IntPoly),
    Ado(CycPoly),
}

fn require_uxd(p: &IntPoly) -> Result<(), Error> {
    if *p.vars() != Vars::uxd() {
        return Err(Error::RingMismatch(format!(
            "specialization expects (u,x,d), got {:?}",
            p.vars()
        )));
    }
    Ok(())
}

/// `u ↦ q^{cλ}`, `x ↦ q^{2λ}`, `d ↦ q^{-2}` with integer `λ`.
pub fn specialize_jones(p: &IntPoly, c: i64, lambda: i64) -> Result<IntPoly, Error> {
    require_uxd(p)?;
    let terms = p.terms().iter().map(|(e, k)| {
        let q = c * lambda * e[0] as i64 + 2 * lambda * e[1] as i64 - 2 * e[2] as i64;
        let q = i32::try_from(q).map_err(|_| Error::Overflow("q exponent"))?;
        Ok((ExpVector::from_slice(&[q]), k.clone()))
    });
    let terms: Result<Vec<_>, Error> = terms.collect();
    Ok(LaurentPoly::from_terms(Vars::q(), terms?))
}

/// `u ↦ s^c`, `x ↦ s^2`, `d ↦ ζ_{2N}^{-2}` where `s` stands for `q^λ`.
pub fn specialize_ado(p: &IntPoly, c: i64, colour: u32) -> Result<CycPoly, Error> {
    require_uxd(p)?;
    let order = 2 * colour;
    let mut terms = Vec::with_capacity(p.len());
    for (e, k) in p.terms() {
        let s = c * e[0] as i64 + 2 * e[1] as i64;
        let s = i32::try_from(s).map_err(|_| Error::Overflow("s exponent"))?;
        let z = CyclotomicInt::zeta_pow(order, -2 * e[2] as i64)?.scale(k);
        terms.push((ExpVector::from_slice(&[s]), z));
    }
    Ok(LaurentPoly::from_terms(Vars::s(), terms))
}

/// Applies the ring morphism described by `spec` to `p ∈ ℤ[u^±1, x^±1, d^±1]`.
pub fn specialize(p: &IntPoly, spec: &SpecializationSpec) -> Result<Specialized, Error> {
    spec.validate()?;
    match (spec.q, spec.lambda) {
        (QTarget::Formal, LambdaTarget::Integer(l)) => {
            specialize_jones(p, spec.c, l).map(Specialized::Jones)
        }
        (QTarget::RootOfUnity(n), LambdaTarget::Formal) => {
            specialize_ado(p, spec.c, n).map(Specialized::Ado)
        }
        _ => unreachable!("validated above"),
    }
}
