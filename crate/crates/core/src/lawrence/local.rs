//! The two-slot braiding rule.
//!
//! σ_i only sees the slot pair `(e_i, e_{i+1}) = (a, b)`:
//!
//! ```text
//! σ      : (a, b) ↦ Σ_{k=0..a} x^{-(b+k)} d^{-(a-k)(b+k) - k(k-1)/2} [b+k, k] Π_{t=1..k} (x d^{a-t} - 1) · (b+k, a-k)
//! σ^{-1} : (a, b) ↦ Σ_{k=0..b} (-1)^k x^{a} d^{ab} [a+k, k] Π_{t=1..k} (x d^{b-t} - 1) · (b-k, a+k)
//! ```
//!
//! where `[n, k]` is the Gaussian binomial in `d^{-1}`. This is the Verma
//! module braiding of U_q(sl2) at generic highest weight, rescaled diagonally
//! so that only integral powers of `x` and `d` appear.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::ring::{IntPoly, Integer, Vars};

/// Images of one slot pair: `((a', b'), coefficient)`.
pub type LocalImage = Arc<Vec<((u32, u32), IntPoly)>>;

fn xd(ex: i32, ed: i32, c: i64) -> IntPoly {
    IntPoly::mono(Vars::xd(), &[ex, ed], c)
}

/// Gaussian binomial `[n, k]` in `z = d^{-1}`.
pub fn gaussian_binomial(n: u32, k: u32) -> IntPoly {
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32), IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&(n, k)) {
        return p.clone();
    }
    let p = if k > n {
        IntPoly::zero(Vars::xd())
    } else if k == 0 || k == n {
        IntPoly::one(Vars::xd())
    } else {
        // [n, k] = [n-1, k-1] + z^k [n-1, k]
        let mut p = gaussian_binomial(n - 1, k).mul_monomial(&[0, -(k as i32)], &Integer::ONE);
        p.add_assign_owned(gaussian_binomial(n - 1, k - 1));
        p
    };
    cache.write().unwrap().insert((n, k), p.clone());
    p
}

/// `Π_{t=1..k} (x d^{top-t} - 1)`.
fn falling(top: u32, k: u32) -> IntPoly {
    let mut acc = IntPoly::one(Vars::xd());
    for t in 1..=k {
        let f = xd(1, top as i32 - t as i32, 1) + xd(0, 0, -1);
        acc = &acc * &f;
    }
    acc
}

fn compute(a: u32, b: u32, inverse: bool) -> Vec<((u32, u32), IntPoly)> {
    let (ai, bi) = (a as i32, b as i32);
    if !inverse {
        (0..=a)
            .map(|k| {
                let ki = k as i32;
                let c = xd(-(bi + ki), -(ai - ki) * (bi + ki) - ki * (ki - 1) / 2, 1);
                let c = &(&c * &gaussian_binomial(b + k, k)) * &falling(a, k);
                ((b + k, a - k), c)
            })
            .collect()
    } else {
        (0..=b)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let c = xd(ai, ai * bi, sign);
                let c = &(&c * &gaussian_binomial(a + k, k)) * &falling(b, k);
                ((b - k, a + k), c)
            })
            .collect()
    }
}

type ImageCache = RwLock<HashMap<(u32, u32, bool), LocalImage>>;

/// The memoized image of the slot pair `(a, b)` under σ or σ^{-1}.
pub fn local_image(a: u32, b: u32, inverse: bool) -> LocalImage {
    static CACHE: OnceLock<ImageCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(img) = cache.read().unwrap().get(&(a, b, inverse)) {
        return img.clone();
    }
    let img = Arc::new(compute(a, b, inverse));
    cache
        .write()
        .unwrap()
        .entry((a, b, inverse))
        .or_insert(img)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert!(gaussian_binomial(4, 0).coeff(&[0, 0]).unwrap().is_one());
        // [2,1] = 1 + z
        assert_eq!(
            gaussian_binomial(2, 1),
            IntPoly::from_ints(Vars::xd(), &[(&[0, 0], 1), (&[0, -1], 1)])
        );
        // [4,2] = 1 + z + 2z^2 + z^3 + z^4
        assert_eq!(
            gaussian_binomial(4, 2),
            IntPoly::from_ints(
                Vars::xd(),
                &[
                    (&[0, 0], 1),
                    (&[0, -1], 1),
                    (&[0, -2], 2),
                    (&[0, -3], 1),
                    (&[0, -4], 1)
                ]
            )
        );
        assert!(gaussian_binomial(2, 3).is_zero());
    }

    #[test]
    fn one_sided_transfer() {
        for a in 0..4 {
            for b in 0..4 {
                let fwd = local_image(a, b, false);
                assert_eq!(fwd.len() as u32, a + 1);
                for ((p, q), _) in fwd.iter() {
                    assert!(*p >= b && p + q == a + b);
                }
                let inv = local_image(a, b, true);
                assert_eq!(inv.len() as u32, b + 1);
                for ((p, q), _) in inv.iter() {
                    assert!(*q >= a && p + q == a + b);
                }
            }
        }
    }

    #[test]
    fn empty_pair_is_fixed() {
        let img = local_image(0, 0, false);
        assert_eq!(img.len(), 1);
        assert_eq!(img[0].0, (0, 0));
        assert_eq!(img[0].1, IntPoly::one(Vars::xd()));
    }
}
