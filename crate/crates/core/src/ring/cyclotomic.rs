//! Cyclotomic integers ℤ[ζ] for ζ a primitive root of unity of order `2N`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(M)-1}` and kept
//! reduced modulo the `M`-th cyclotomic polynomial Φ_M. Φ_M itself is built
//! from `x^M - 1 = ∏_{d | M} Φ_d` by exact division and cached per order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::coeff::{Coeff, RingId};
use super::Integer;
use crate::Error;

#[derive(Debug)]
pub struct CyclotomicModulus {
    order: u32,
    /// Monic Φ_order, lowest degree first.
    phi: Vec<i64>,
}

impl CyclotomicModulus {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of Φ_order, i.e. Euler's totient of the order.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn polynomial(&self) -> &[i64] {
        &self.phi
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<CyclotomicModulus>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicModulus>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact division of integer polynomials by a monic divisor.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

fn cyclotomic_polynomial(order: u32) -> Vec<i64> {
    let mut num = vec![0i64; order as usize + 1];
    num[0] = -1;
    num[order as usize] = 1;
    for d in 1..order {
        if order.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Returns the (cached) modulus for ℤ[ζ_order].
pub fn modulus(order: u32) -> Result<Arc<CyclotomicModulus>, Error> {
    if order < 2 {
        return Err(Error::InvalidOrder(order));
    }
    let mut map = cache().lock().expect("cyclotomic cache poisoned");
    Ok(map
        .entry(order)
        .or_insert_with(|| {
            Arc::new(CyclotomicModulus {
                order,
                phi: cyclotomic_polynomial(order),
            })
        })
        .clone())
}

/// An element of ℤ[ζ_M] in reduced power-basis form.
#[derive(Clone)]
pub struct CyclotomicInt {
    modulus: Arc<CyclotomicModulus>,
    coeffs: Vec<Integer>,
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.modulus.order == other.modulus.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicInt {}

/// Reduces an integer polynomial in ζ (lowest power first) modulo Φ_order.
pub fn cyclotomic_reduce(coeffs: &[Integer], order: u32) -> Result<CyclotomicInt, Error> {
    let m = modulus(order)?;
    Ok(CyclotomicInt::reduce_with(m, coeffs.to_vec()))
}

impl CyclotomicInt {
    fn reduce_with(modulus: Arc<CyclotomicModulus>, mut c: Vec<Integer>) -> CyclotomicInt {
        let deg = modulus.degree();
        if c.len() > deg {
            for i in (deg..c.len()).rev() {
                let lead = std::mem::take(&mut c[i]);
                if lead.is_zero() {
                    continue;
                }
                for (j, pj) in modulus.phi[..deg].iter().enumerate() {
                    if *pj != 0 {
                        let t = lead.mul_ref(&Integer::from(*pj));
                        c[i - deg + j] = c[i - deg + j].sub_ref(&t);
                    }
                }
            }
        }
        c.resize(deg, Integer::ZERO);
        CyclotomicInt { modulus, coeffs: c }
    }

    pub fn zero(order: u32) -> Result<CyclotomicInt, Error> {
        cyclotomic_reduce(&[], order)
    }

    pub fn one(order: u32) -> Result<CyclotomicInt, Error> {
        cyclotomic_reduce(&[Integer::ONE], order)
    }

    pub fn from_integer(v: Integer, order: u32) -> Result<CyclotomicInt, Error> {
        cyclotomic_reduce(&[v], order)
    }

    /// ζ^k for any integer `k` (negative powers wrap modulo the order).
    pub fn zeta_pow(order: u32, k: i64) -> Result<CyclotomicInt, Error> {
        let m = modulus(order)?;
        let e = k.rem_euclid(order as i64) as usize;
        let mut c = vec![Integer::ZERO; e + 1];
        c[e] = Integer::ONE;
        Ok(CyclotomicInt::reduce_with(m, c))
    }

    pub fn order(&self) -> u32 {
        self.modulus.order
    }

    pub fn coefficients(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn scale(&self, k: &Integer) -> CyclotomicInt {
        CyclotomicInt {
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(|c| c.mul_ref(k)).collect(),
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.modulus.order, other.modulus.order,
            "cyclotomic order mismatch"
        );
    }

    /// Human-readable form in the generator `z`, e.g. `1 - z + 2z^2`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let abs = if neg { c.neg_ref() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Coeff for CyclotomicInt {
    fn ring_id(&self) -> RingId {
        RingId::Cyclotomic(self.modulus.order)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Integer::is_zero)
    }

    fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    fn zero_like(&self) -> Self {
        CyclotomicInt {
            modulus: self.modulus.clone(),
            coeffs: vec![Integer::ZERO; self.coeffs.len()],
        }
    }

    fn one_like(&self) -> Self {
        let mut z = self.zero_like();
        z.coeffs[0] = Integer::ONE;
        z
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        CyclotomicInt {
            modulus: self.modulus.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len();
        let mut prod = vec![Integer::ZERO; 2 * n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        CyclotomicInt::reduce_with(self.modulus.clone(), prod)
    }

    fn neg(&self) -> Self {
        CyclotomicInt {
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(Integer::neg_ref).collect(),
        }
    }

    fn torsion_units(&self) -> Vec<Self> {
        let order = self.modulus.order;
        let mut units: Vec<Self> = (0..order as i64)
            .map(|k| CyclotomicInt::zeta_pow(order, k).expect("valid order"))
            .collect();
        // Odd orders do not contain -1 among their powers of ζ.
        if order % 2 == 1 {
            let negs: Vec<Self> = units.iter().map(Coeff::neg).collect();
            units.extend(negs);
        }
        units
    }

    fn to_text(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(Integer::to_string).collect();
        format!("zeta{}:[{}]", self.modulus.order, body.join(","))
    }

    fn from_text(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid cyclotomic coefficient {s:?}"));
        let rest = s.strip_prefix("zeta").ok_or_else(bad)?;
        let (order, list) = rest.split_once(':').ok_or_else(bad)?;
        let order: u32 = order.parse().map_err(|_| bad())?;
        let list = list
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(bad)?;
        let coeffs = if list.trim().is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|t| t.trim().parse::<Integer>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        };
        cyclotomic_reduce(&coeffs, order)
    }

    fn display_coeff(&self, latex: bool) -> String {
        let p = self.pretty();
        if latex {
            p.replace('z', "\\zeta")
        } else {
            p
        }
    }

    fn is_compound(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() > 1
    }
}
