use crate::error::{Error, Result};

use super::{factorize, BaseRing, Element, RingSpec};

/// Minimal `m >= 1` with `x^m = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct NilpotencyWitness {
    pub index: u32,
}

/// `B` such that `x` is nilpotent iff `x^B = 0`.
///
/// Modulo its nilradical `Z/n` is a product of fields, over which a nilpotent
/// `k×k` matrix satisfies `x^k = 0`. So `x^k` has entries in the nilradical
/// and its `e`-th power vanishes, `e` being the largest prime exponent of `n`.
pub fn nilpotency_bound(ring: &RingSpec) -> u32 {
    let k = ring.dim() as u32;
    match ring.base() {
        BaseRing::Integers if ring.is_matrix() => k,
        BaseRing::Integers => 1,
        BaseRing::Modular(n) => {
            let e = factorize(n.get())
                .expect("modulus is at least 2")
                .max_exponent();
            k * e
        }
    }
}

/// Returns the nilpotency index of `x` when `x` is nilpotent.
pub fn is_nilpotent(x: &Element) -> Option<NilpotencyWitness> {
    let bound = nilpotency_bound(&x.ring());
    let mut power = x.clone();
    for m in 1..=bound {
        if power.is_zero() {
            return Some(NilpotencyWitness { index: m });
        }
        if m < bound {
            power = &power * x;
        }
    }
    None
}

/// Inverse of `u = 1 + w` for nilpotent `w` as `1 - w + w^2 - ... ± w^(m-1)`.
///
/// `w_witness` is the nilpotency witness of `u - 1`; a wrong witness is caught by
/// the final check `u · u⁻¹ = u⁻¹ · u = 1`.
pub fn inverse_of_unipotent(u: &Element, w_witness: NilpotencyWitness) -> Result<Element> {
    let ring = u.ring();
    let one = ring.one();
    let minus_w = &one - u;
    let mut term = one.clone();
    let mut sum = ring.zero();
    for _ in 0..w_witness.index {
        sum = &sum + &term;
        term = &term * &minus_w;
    }
    if !(u * &sum).is_one() || !(&sum * u).is_one() {
        return Err(Error::Verification(format!(
            "{u} is not 1 + w with w nilpotent of index {}",
            w_witness.index
        )));
    }
    Ok(sum)
}
