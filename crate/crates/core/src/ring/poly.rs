use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{Element, RingSpec};

/// Dense polynomial with integer coefficients, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn identity() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Horner evaluation at a ring element.
    pub fn eval(&self, x: &Element) -> Element {
        let ring = x.ring();
        let mut acc = ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &ring.from_bigint(c);
        }
        acc
    }

    /// Coefficients reduced into `[0, n)`.
    pub fn reduce_mod(&self, n: u64) -> IntPoly {
        let n = BigInt::from(n);
        IntPoly::new(self.coeffs.iter().map(|c| c.mod_floor(&n)).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(tI - x)` of a matrix element.
///
/// Faddeev–LeVerrier over the integers on the entries of `x` (lifted into
/// `[0, n)` for modular bases); every division in the recurrence is exact in `Z`.
/// Coefficients are then reduced in the base ring.
pub fn char_poly(x: &Element) -> Result<IntPoly> {
    let ring = x.ring();
    if !ring.is_matrix() {
        return Err(Error::NotMatrix(ring));
    }
    let k = ring.dim();
    let zring = RingSpec::matrix(RingSpec::integers(), k)?;
    let a = zring.element_from_entries(&x.entries())?;
    let trace = |m: &Element| -> BigInt { (0..k).map(|i| m.entry(i, i)).sum() };

    // coeffs[j] is the coefficient of t^j.
    let mut coeffs = vec![BigInt::zero(); k + 1];
    coeffs[k] = BigInt::one();
    let mut m = zring.zero();
    for i in 1..=k {
        m = &(&a * &m) + &zring.from_bigint(&coeffs[k - i + 1]);
        let am = &a * &m;
        let (q, r) = (-trace(&am)).div_rem(&BigInt::from(i));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division is exact over Z");
        coeffs[k - i] = q;
    }
    let poly = IntPoly::new(coeffs);
    Ok(match ring.modulus() {
        Some(n) => poly.reduce_mod(n),
        None => poly,
    })
}
